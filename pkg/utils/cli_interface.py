"""
Module
------

    cli_interface.py

Description
-----------

    This module contains functions to be used for any command line
    interface (CLI) argument collection(s) and schema validation(s);
    the CLI arguments are defined within a YAML-formatted file.

Classes
-------

   CLIParser(schema_file=None)

       This is the base-class object for the command-line interface
       (CLI) argument parsing; valid argument attribute keys can be
       found at https://tinyurl.com/argparse-objects.

Functions
---------

    __addarg__(parser, arg_key, arg_obj)

        This function adds a single CLI argument, defined by a
        SimpleNamespace object, to the ArgumentParser object.

    __checkschema__(options_obj, schema_path, write_table=False,
                    logger_method="info")

        This function validates the CLI argument schema.

    init(args_objs, description=None, prog=None, epilog=None,
         formatter_class=RichHelpFormatter)

        This function initializes a Python ArgumentParser object in
        accordance with the specified argument SimpleNamespace objects
        and the respective keyword attributes.

    options(parser, argv=None, validate_schema=False, schema_path=None)

        This function defines a Python SimpleNamespace object
        containing the CLI arguments.

Requirements
------------

- rich_argparse; https://github.com/hamdanal/rich-argparse

Author(s)
---------

    Henry R. Winterbottom; 04 June 2023

History
-------

    2023-06-04: Henry Winterbottom -- Initial implementation.

    2024-03-02: Henry Winterbottom -- Optional arguments use the
                double-dash long form; `options` accepts an explicit
                argument list and rejects unknown arguments.

"""

# ----

# pylint: disable=too-few-public-methods

# ----

import os
from argparse import ArgumentParser
from pydoc import locate
from types import SimpleNamespace
from typing import Any, Dict, Generic, List, Tuple

from rich_argparse import RichHelpFormatter

from confs.yaml_interface import YAML
from tools import fileio_interface, parser_interface
from utils import schema_interface
from utils.exceptions_interface import CLIInterfaceError

# ----

# Define all available module properties.
__all__ = ["CLIParser", "init", "options"]

# ----

# Set the default ArgumentParser formatter class attributes.
RichHelpFormatter.styles["argparse.args"] = "green"
RichHelpFormatter.styles["argparse.metavar"] = "cyan"
RichHelpFormatter.styles["argparse.text"] = "default"
RichHelpFormatter.styles["argparse.help"] = "blue_violet"

# Argument attributes consumed by `init` rather than passed to
# `add_argument`.
RESERVED_KEYS = ["action", "longname", "required", "shortname", "type"]

# ----


class CLIParser:
    """
    Description
    -----------

    This is the base-class object for the command-line interface (CLI)
    argument parsing; valid argument attribute keys can be found at
    https://tinyurl.com/argparse-objects.

    Keywords
    --------

    schema_file: ``str``, optional

        A Python string specifying the path to the YAML-formatted file
        containing the CLI argument definitions; if NoneType upon
        entry, the `CLI_SCHEMA` environment variable is used.

    Raises
    ------

    CLIInterfaceError:

        - raised if the CLI argument definitions file does not exist.

    """

    def __init__(self: Generic, schema_file: str = None):
        """
        Description
        -----------

        Creates a new CLIParser object.

        """

        # Define the base-class attributes.
        cli_yaml = schema_file or parser_interface.enviro_get(envvar="CLI_SCHEMA")
        if cli_yaml is None:
            cli_yaml = os.path.join(os.getcwd(), "cli_schema.yaml")
        if not fileio_interface.fileexist(path=cli_yaml):
            msg = f"The CLI schema file {cli_yaml} does not exist. Aborting!!!"
            raise CLIInterfaceError(msg=msg)
        self.cli_dict = YAML().read_yaml(yaml_file=cli_yaml)

    def build(self: Generic) -> Tuple[SimpleNamespace]:
        """
        Description
        -----------

        This method defines all CLI argument SimpleNamespace objects;
        each object has a single attribute, named for the argument,
        containing the argument attributes.

        Returns
        -------

        args_objs: ``Tuple[SimpleNamespace]``

            A Python tuple of SimpleNamespace objects containing the
            CLI argument(s) attributes.

        """

        # Collect all CLI attributes from the specified schema.
        args_objs = tuple(
            parser_interface.object_setattr(
                object_in=parser_interface.object_define(),
                key=cli_arg,
                value=parser_interface.dict_toobject(in_dict=cli_attrs),
            )
            for (cli_arg, cli_attrs) in self.cli_dict.items()
        )

        return args_objs


# ----


def __addarg__(parser: ArgumentParser, arg_key: str, arg_obj: SimpleNamespace) -> None:
    """
    Description
    -----------

    This function adds a single CLI argument, defined by a
    SimpleNamespace object, to the ArgumentParser object; required
    arguments are positional and optional arguments use the
    `--longname` (and `-shortname`, if defined) flags.

    Parameters
    ----------

    parser: ``ArgumentParser``

        A Python ArgumentParser object.

    arg_key: ``str``

        A Python string specifying the argument name.

    arg_obj: ``SimpleNamespace``

        A Python SimpleNamespace object containing the argument
        attributes.

    Raises
    ------

    CLIInterfaceError:

        - raised if the argument type cannot be located.

        - raised if an exception is encountered while adding the
          argument.

    """

    # Define the attributes for the respective CLI argument.
    arg_attrs = parser_interface.object_todict(object_in=arg_obj)
    arg_dict: Dict[str, Any] = {
        key: value for (key, value) in arg_attrs.items() if key not in RESERVED_KEYS
    }
    longname = arg_attrs.get("longname", arg_key)
    shortname = arg_attrs.get("shortname")
    if arg_attrs.get("type") is not None:
        arg_dict["type"] = locate(arg_attrs["type"])
        if arg_dict["type"] is None:
            msg = (
                f"The type {arg_attrs['type']} for CLI argument {arg_key} "
                "could not be located. Aborting!!!"
            )
            raise CLIInterfaceError(msg=msg)
    if arg_attrs.get("action") is not None:
        arg_dict["action"] = arg_attrs["action"]

    # Add the argument; proceed accordingly.
    try:
        if arg_attrs.get("required", False):
            parser.add_argument(longname, **arg_dict)
        elif shortname is not None:
            parser.add_argument(f"--{longname}", f"-{shortname}", **arg_dict)
        else:
            parser.add_argument(f"--{longname}", **arg_dict)
    except Exception as errmsg:
        msg = f"Initializing the CLI argument {arg_key} failed with error {errmsg}. Aborting!!!"
        raise CLIInterfaceError(msg=msg) from errmsg


# ----


def __checkschema__(
    options_obj: SimpleNamespace,
    schema_path: str,
    write_table: bool = False,
    logger_method: str = "info",
) -> Dict:
    """
    Description
    -----------

    This function validates the CLI argument schema.

    Parameters
    ----------

    options_obj: ``SimpleNamespace``

        A Python SimpleNamespace containing the specified CLI
        arguments.

    schema_path: ``str``

        A Python string specifying the path to the YAML-formatted file
        containing the CLI argument schema.

    Keywords
    ---------

    write_table: ``bool``, optional

        A Python boolean valued variable specifying whether to write
        the schema attributes table using the specified logger method.

    logger_method: ``str``, optional

        A Python string specifying the logger method to be used to
        write the schema attributes table.

    Returns
    -------

    options_dict: ``Dict``

        A Python dictionary containing the validated CLI arguments.

    """

    # Validate the CLI argument schema.
    cls_schema = schema_interface.build_schema(YAML().read_yaml(yaml_file=schema_path))
    options_dict = schema_interface.validate_schema(
        cls_schema=cls_schema,
        cls_opts=parser_interface.object_todict(object_in=options_obj),
        write_table=write_table,
        logger_method=logger_method.lower(),
    )

    return options_dict


# ----


def init(
    args_objs: Tuple[SimpleNamespace],
    description: str = None,
    prog: str = None,
    epilog: str = None,
    formatter_class: Any = RichHelpFormatter,
) -> ArgumentParser:
    """
    Description
    -----------

    This function initializes a Python ArgumentParser object in
    accordance with the specified argument SimpleNamespace objects and
    the respective keyword attributes.

    Parameters
    ----------

    args_objs: ``Tuple[SimpleNamespace]``

        A Python tuple of SimpleNamespace objects containing the
        mandatory and optional arguments.

    Keywords
    --------

    description: ``str``, optional

        A Python string defining the purpose of the respective
        application/program.

    prog: ``str``, optional

        A Python string specifying the program name.

    epilog: ``str``, optional

        A Python string specifying text to be provided at the bottom
        of a `help` type message.

    formatter_class: ``Any``, optional

        A Python Argparse customizing class.

    Returns
    -------

    parser: ``ArgumentParser``

        A Python ArgumentParser object.

    """

    # Initialize the CLI.
    parser = ArgumentParser(
        prog=prog,
        description=description,
        epilog=epilog,
        formatter_class=formatter_class,
    )

    # Define the respective mandatory and optional application
    # attributes accordingly.
    for args_item_obj in args_objs:
        for arg_key, arg_obj in vars(args_item_obj).items():
            __addarg__(parser=parser, arg_key=arg_key, arg_obj=arg_obj)

    return parser


# ----


def options(
    parser: ArgumentParser,
    argv: List[str] = None,
    validate_schema: bool = False,
    schema_path: str = None,
) -> SimpleNamespace:
    """
    Description
    -----------

    This function defines a Python SimpleNamespace object containing
    the CLI arguments.

    Parameters
    ----------

    parser: ``ArgumentParser``

        A Python ArgumentParser object containing the CLI arguments.

    Keywords
    --------

    argv: ``List[str]``, optional

        A Python list of CLI argument strings; if NoneType upon entry,
        `sys.argv` is parsed.

    validate_schema: ``bool``, optional

        A Python boolean valued variable specifying whether to
        validate the schema for the respective CLI arguments.

    schema_path: ``str``, optional

        A Python string specifying the path to the YAML-formatted file
        containing the CLI argument schema.

    Returns
    -------

    options_obj: ``SimpleNamespace``

        A Python SimpleNamespace object containing the CLI arguments.

    Raises
    ------

    CLIInterfaceError:

        - raised if the `schema_path` attribute is NoneType when
          attempting to validate the CLI argument schema.

    """

    # Define the CLI arguments.
    options_obj = parser.parse_args(args=argv)

    # Validate the CLI argument schema; proceed accordingly.
    if validate_schema:
        if schema_path is None:
            msg = (
                "The CLI arguments cannot be validated without a specified "
                "schema. Aborting!!!"
            )
            raise CLIInterfaceError(msg=msg)
        options_dict = __checkschema__(options_obj=options_obj, schema_path=schema_path)
        options_obj = parser_interface.dict_toobject(in_dict=options_dict)

    return options_obj
