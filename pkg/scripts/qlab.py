#!/usr/bin/env python3

"""
Script
------

    qlab.py

Description
-----------

    This script is the driver for the quantization laboratory
    experiments: weight sweeps of semi-commutator, product and Hankel
    norms, Berezin convergence, BMO semi-norms, the counterexample,
    the inequality audits and the block decomposition check.

    The results are written to a CSV-formatted file (`--out`) and an
    optional JSON-formatted mirror (`--json`).

Usage
-----

    user@host:$ python -m scripts.qlab <experiment> --f <id> [--g <id>] \
        [--symbols <id>,<id>] [--lambda 8:128:5g] [--degree 48] \
        [--inner 64] [--grid beta:6:0.25:32] [--seed 7] \
        [--out results.csv] [--json results.json] [--config sweep.yaml]

Exit Codes
----------

    0: all asserted trends passed.

    2: a trend assertion failed.

    3: the configuration is invalid.

Author(s)
---------

    Henry R. Winterbottom; 02 March 2024

History
-------

    2024-03-02: Henry Winterbottom -- Initial implementation.

"""

# ----

import os
import sys
from types import SimpleNamespace
from typing import List

from experiments import sweep_interface
from experiments.config_interface import build_config
from tools import parser_interface
from utils.decorator_interface import cli_wrapper, script_wrapper
from utils.exceptions_interface import CLIInterfaceError, ConfigInterfaceError
from utils.logger_interface import Logger

# ----

# Define the script attributes.
SCRIPT_NAME = "qlab"
CLI_SCHEMA = os.path.join(
    os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
    "experiments",
    "schema",
    "qlab.cli.yaml",
)
DESCRIPTION = "Berezin-Toeplitz quantization laboratory."

EXIT_OK = 0
EXIT_TREND = 2
EXIT_CONFIG = 3

logger = Logger(caller_name=__name__)

# ----


@cli_wrapper(description=DESCRIPTION, schema_file=CLI_SCHEMA, script_name=SCRIPT_NAME)
@script_wrapper(script_name=SCRIPT_NAME)
def main(options_obj: SimpleNamespace) -> int:
    """
    Description
    -----------

    This function runs the experiment defined by the command-line
    arguments.

    Parameters
    ----------

    options_obj: ``SimpleNamespace``

        A Python SimpleNamespace object containing the command-line
        arguments.

    Returns
    -------

    status: ``int``

        A Python integer specifying the exit status.

    """

    # Build the configuration.
    try:
        cfg = build_config(
            options_dict=parser_interface.object_todict(object_in=options_obj)
        )
    except ConfigInterfaceError:
        return EXIT_CONFIG

    # Run the experiment and write the results.
    result = sweep_interface.run(cfg=cfg)
    if cfg.out is not None:
        result.write_csv(path=cfg.out)
    if cfg.json is not None:
        result.write_json(path=cfg.json)
    if not result.passed:
        msg = "One or more trend assertions failed."
        logger.warn(msg=msg)
        return EXIT_TREND

    return EXIT_OK


# ----


def cli(argv: List[str] = None) -> int:
    """
    Description
    -----------

    This function is the command-line entry point; argument parsing
    errors are configuration errors.

    Keywords
    --------

    argv: ``List[str]``, optional

        A Python list of command-line argument strings; if NoneType
        upon entry, `sys.argv` is parsed.

    Returns
    -------

    status: ``int``

        A Python integer specifying the exit status.

    """

    # Run the driver; proceed accordingly.
    try:
        return main(argv=argv)
    except CLIInterfaceError:
        return EXIT_CONFIG
    except SystemExit as errmsg:
        if errmsg.code in (0, None):
            return EXIT_OK
        return EXIT_CONFIG


# ----


if __name__ == "__main__":
    sys.exit(cli())
