"""
Module
------

    config_interface.py

Description
-----------

    This module contains the sweep configuration: the command-line
    and YAML-formatted options are merged, validated against the
    sweep schema and resolved into an immutable SweepConfig object.

Classes
-------

    SweepConfig

        This is the data-class containing a validated sweep
        configuration.

Functions
---------

    build_config(options_dict)

        This function merges, validates and resolves the sweep
        options.

    parse_lambdas(schedule)

        This function parses a weight schedule.

Requirements
------------

- numpy; https://numpy.org/

- pyyaml; https://pyyaml.org/

- schema; https://github.com/keleshev/schema

Author(s)
---------

    Henry R. Winterbottom; 02 March 2024

History
-------

    2024-03-02: Henry Winterbottom -- Initial implementation.

"""

# ----

# pylint: disable=too-many-instance-attributes

# ----

import os
from dataclasses import asdict, dataclass
from typing import Any, Dict, Generic, Optional, Tuple

import numpy

from bergman.oscillation_interface import EvaluationGrid, parse_grid
from bergman.symbols_interface import Symbol, symbol_from_id
from confs.json_interface import read_json
from confs.yaml_interface import YAML
from tools import parser_interface
from utils import schema_interface
from utils.exceptions_interface import (
    ConfigInterfaceError,
    JSONInterfaceError,
    OscillationInterfaceError,
    SchemaInterfaceError,
    SymbolsInterfaceError,
    YAMLInterfaceError,
)
from utils.logger_interface import Logger

# ----

# Define all available module properties.
__all__ = ["EXPERIMENTS", "SweepConfig", "build_config", "parse_lambdas"]

# ----

logger = Logger(caller_name=__name__)

SWEEP_SCHEMA = os.path.join(os.path.dirname(__file__), "schema", "sweep.schema.yaml")

EXPERIMENTS = (
    "semicommutator",
    "counterexample",
    "berezin",
    "bmo",
    "products",
    "hankel",
    "audit",
    "blocks",
)

# Truncation defaults (N, M - N) per dimension.
TRUNCATION = {1: (48, 16), 2: (8, 4)}
BLOCK_DEGREE = 6

# Trend ratio defaults; experiments absent from the table assert
# the direction only.
RATIOS = {"semicommutator": 0.25, "products": 0.25, "bmo": 0.5, "hankel": 0.5}

MAX_PRODUCT_SYMBOLS = 4

# Results mirror configuration keys and the options they replay.
REPLAY_OPTIONS = {
    "experiment": "experiment",
    "f": "f",
    "g": "g",
    "symbols": "symbols",
    "lambdas": "lambdas",
    "N": "degree",
    "M": "inner",
    "grid_spec": "grid",
    "seed": "seed",
    "n": "dimension",
    "rho": "rho",
    "ratio": "ratio",
    "workers": "workers",
}

# ----


def parse_lambdas(schedule: Any) -> Tuple[float, ...]:
    """
    Description
    -----------

    This function parses a weight schedule; `<start>:<stop>:<count>g`
    is a geometric schedule (endpoints included) and any other string
    is a comma-delimited list; the values are returned sorted and
    unique.

    Parameters
    ----------

    schedule: ``Any``

        A Python string, number or list specifying the schedule.

    Returns
    -------

    lambdas: ``Tuple[float, ...]``

        A Python tuple of ascending weight parameters.

    Raises
    ------

    ConfigInterfaceError:

        - raised if the schedule is malformed or contains non-finite
          values.

    """

    # Parse the schedule; proceed accordingly.
    try:
        if isinstance(schedule, (list, tuple)):
            values = numpy.array([float(item) for item in schedule])
        elif str(schedule).strip().endswith("g") and ":" in str(schedule):
            (start, stop, count) = str(schedule).strip()[:-1].split(":")
            if int(count) < 1 or float(start) <= 0.0 or float(stop) <= 0.0:
                raise ValueError(
                    "geometric schedules need positive endpoints and count"
                )
            values = numpy.geomspace(float(start), float(stop), int(count))
        else:
            values = numpy.array(
                [float(item) for item in parser_interface.split_ids(str(schedule))]
            )
    except (TypeError, ValueError) as errmsg:
        msg = f"Parsing weight schedule {schedule} failed with error {errmsg}. Aborting!!!"
        raise ConfigInterfaceError(msg=msg) from errmsg
    if values.size == 0 or not numpy.all(numpy.isfinite(values)):
        msg = f"The weight schedule {schedule} is empty or not finite. Aborting!!!"
        raise ConfigInterfaceError(msg=msg)

    # Snap geometric rounding to integers.
    rounded = numpy.round(values)
    snap = numpy.isclose(values, rounded, rtol=1.0e-12, atol=0.0)
    values = numpy.where(snap, rounded, values)

    return tuple(float(value) for value in numpy.unique(values))


# ----


@dataclass(frozen=True)
class SweepConfig:
    """
    Description
    -----------

    This is the data-class containing a validated sweep
    configuration.

    """

    experiment: str
    f: Optional[str]
    g: Optional[str]
    symbols: Tuple[str, ...]
    lambdas: Tuple[float, ...]
    N: int
    M: int
    grid_spec: str
    seed: int
    n: int = 1
    rho: float = 0.25
    ratio: Optional[float] = None
    workers: int = 1
    out: Optional[str] = None
    json: Optional[str] = None

    @property
    def grid(self: Generic) -> EvaluationGrid:
        """The evaluation grid."""
        return parse_grid(spec=self.grid_spec, n=self.n)

    def symbol(self: Generic, symbol_id: str) -> Symbol:
        """The catalog symbol for `symbol_id` in the sweep dimension."""
        return symbol_from_id(symbol_id=symbol_id, n=self.n)

    def provenance(self: Generic) -> Dict:
        """The configuration as a Python dictionary."""
        return asdict(self)


# ----


def __replay__(json_file: str) -> Dict:
    """
    Description
    -----------

    This function returns the options recorded in the `config` block
    of a JSON-formatted results mirror; the output paths are not
    replayed.

    """

    # Read the results mirror.
    mirror = read_json(json_file=json_file)
    config = mirror.get("config") if isinstance(mirror, dict) else None
    if not isinstance(config, dict):
        msg = f"The results file {json_file} has no configuration block. Aborting!!!"
        raise ConfigInterfaceError(msg=msg)

    # Map the configuration onto the options.
    options = {
        option: config[key]
        for (key, option) in REPLAY_OPTIONS.items()
        if config.get(key) is not None
    }
    if "symbols" in options:
        options["symbols"] = ",".join(options["symbols"])

    return options


# ----


def __merge__(options_dict: Dict) -> Dict:
    """
    Description
    -----------

    This function merges the options of an optional YAML-formatted
    `config` file, or of the configuration block of a JSON-formatted
    results mirror, with the command-line options; command-line
    values that are not NoneType take precedence.

    """

    # Collect the file options; proceed accordingly.
    options = {key: value for (key, value) in options_dict.items() if value is not None}
    config_file = options.get("config")
    if config_file is None:
        return options
    try:
        if str(config_file).lower().endswith(".json"):
            file_options = __replay__(json_file=config_file)
        else:
            file_options = YAML().read_yaml(yaml_file=config_file) or {}
    except (JSONInterfaceError, YAMLInterfaceError, OSError) as errmsg:
        msg = f"Reading sweep configuration {config_file} failed with error {errmsg}. Aborting!!!"
        raise ConfigInterfaceError(msg=msg) from errmsg
    if not isinstance(file_options, dict):
        msg = f"The sweep configuration {config_file} is not a mapping. Aborting!!!"
        raise ConfigInterfaceError(msg=msg)
    if "lambda" in file_options:
        file_options["lambdas"] = file_options.pop("lambda")
    file_options.update(options)

    return file_options


# ----


def __check_symbols__(cfg: SweepConfig) -> None:
    """
    Description
    -----------

    This function checks the per-experiment symbol requirements.

    """

    # Check the symbol ids; proceed accordingly.
    ids = [item for item in (cfg.f, cfg.g) if item is not None] + list(cfg.symbols)
    symbol_n = 1 if cfg.experiment == "blocks" else cfg.n
    try:
        symbols = {item: symbol_from_id(symbol_id=item, n=symbol_n) for item in ids}
    except SymbolsInterfaceError as errmsg:
        msg = f"The sweep symbols could not be resolved: {errmsg}. Aborting!!!"
        raise ConfigInterfaceError(msg=msg) from errmsg
    if cfg.experiment == "products":
        if not 1 <= len(cfg.symbols) <= MAX_PRODUCT_SYMBOLS:
            msg = (
                f"The products experiment requires 1 to {MAX_PRODUCT_SYMBOLS} "
                f"symbols; received {len(cfg.symbols)}. Aborting!!!"
            )
            raise ConfigInterfaceError(msg=msg)
        return
    if cfg.f is None:
        msg = f"The {cfg.experiment} experiment requires a symbol (--f). Aborting!!!"
        raise ConfigInterfaceError(msg=msg)
    if cfg.experiment == "blocks" and cfg.n != 2:
        msg = (
            "The blocks experiment runs on the two-dimensional ball "
            "(--dimension 2). Aborting!!!"
        )
        raise ConfigInterfaceError(msg=msg)
    if cfg.experiment == "counterexample" and not symbols[cfg.f].radial:
        msg = f"The counterexample experiment requires a RADIAL symbol; received {cfg.f}. Aborting!!!"
        raise ConfigInterfaceError(msg=msg)


# ----


def build_config(options_dict: Dict) -> SweepConfig:
    """
    Description
    -----------

    This function merges the command-line options with an optional
    YAML-formatted configuration file, validates the result against
    the sweep schema and resolves the defaults and per-experiment
    requirements.

    Parameters
    ----------

    options_dict: ``Dict``

        A Python dictionary containing the command-line options.

    Returns
    -------

    cfg: ``SweepConfig``

        A Python SweepConfig object.

    Raises
    ------

    ConfigInterfaceError:

        - raised if the options do not validate against the sweep
          schema.

        - raised for a malformed weight schedule or grid, a weight
          not exceeding the dimension, an inner truncation below the
          truncation, an unknown symbol id, or missing symbols.

    """

    # Validate the merged options against the schema.
    options = __merge__(options_dict=options_dict)
    try:
        cls_schema = schema_interface.build_schema(
            YAML().read_yaml(yaml_file=SWEEP_SCHEMA)
        )
        options = schema_interface.validate_schema(
            cls_schema=cls_schema, cls_opts=options, write_table=False
        )
    except SchemaInterfaceError as errmsg:
        msg = f"The sweep options are invalid: {errmsg}. Aborting!!!"
        raise ConfigInterfaceError(msg=msg) from errmsg

    # Resolve the defaults.
    n = int(options["dimension"])
    experiment = options["experiment"]
    (N, extra) = TRUNCATION[n]
    if experiment == "blocks":
        (N, extra) = (BLOCK_DEGREE, 0)
    N = options["degree"] if options["degree"] is not None else N
    M = options["inner"] if options["inner"] is not None else N + extra
    ratio = options["ratio"] if options["ratio"] is not None else RATIOS.get(experiment)
    cfg = SweepConfig(
        experiment=experiment,
        f=options["f"],
        g=options["g"] if options["g"] is not None else options["f"],
        symbols=tuple(parser_interface.split_ids(options["symbols"])),
        lambdas=parse_lambdas(schedule=options["lambdas"]),
        N=int(N),
        M=int(M),
        grid_spec=str(options["grid"]),
        seed=int(options["seed"]),
        n=n,
        rho=float(options["rho"]),
        ratio=ratio,
        workers=int(options["workers"]),
        out=options["out"],
        json=options["json"],
    )

    # Check the configuration.
    if min(cfg.lambdas) <= cfg.n:
        msg = f"All weights must exceed the dimension n = {cfg.n}; received {cfg.lambdas}. Aborting!!!"
        raise ConfigInterfaceError(msg=msg)
    if cfg.N < 0 or cfg.M < cfg.N:
        msg = f"The truncations must satisfy 0 <= N <= M; received N = {cfg.N}, M = {cfg.M}. Aborting!!!"
        raise ConfigInterfaceError(msg=msg)
    if cfg.workers < 1 or cfg.rho <= 0.0:
        msg = f"The worker count and growth exponent must be positive; received {cfg.workers}, {cfg.rho}. Aborting!!!"
        raise ConfigInterfaceError(msg=msg)
    try:
        parse_grid(spec=cfg.grid_spec, n=cfg.n)
    except OscillationInterfaceError as errmsg:
        msg = f"Invalid grid: {errmsg}. Aborting!!!"
        raise ConfigInterfaceError(msg=msg) from errmsg
    __check_symbols__(cfg=cfg)
    msg = (
        f"Sweep {cfg.experiment}: f = {cfg.f}, g = {cfg.g}, symbols = {list(cfg.symbols)}, "
        f"lambdas = {list(cfg.lambdas)}, N = {cfg.N}, M = {cfg.M}, grid = {cfg.grid_spec}."
    )
    logger.info(msg=msg)

    return cfg
