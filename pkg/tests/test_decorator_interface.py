#!/usr/bin/env python3

"""
Script
------

    test_decorator_interface.py

Description
-----------

    This script is the driver script for the
    `utils.decorator_interface` module unit-tests.

Classes
-------

    TestDecoratorInterface()

        This the base-class object for all `decorator_interface`
        module unit-tests; it is a sub-class of TestCase.

Requirements
------------

- rich_argparse; https://github.com/hamdanal/rich-argparse

Author(s)
---------

    Henry R. Winterbottom; 02 March 2024

"""

# ----

import os
import unittest
from types import SimpleNamespace
from typing import Callable
from unittest import TestCase

from tools import parser_interface
from utils.decorator_interface import cli_wrapper, script_wrapper

# ----

CLI_SCHEMA = os.path.join(
    os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
    "experiments",
    "schema",
    "qlab.cli.yaml",
)

# ----


class TestDecoratorInterface(TestCase):
    """
    Description
    -----------

    This the base-class object for all `decorator_interface` module
    unit-tests; it is a sub-class of TestCase.

    """

    def test_cli_wrapper(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `decorator_interface`
        `cli_wrapper` function; the parsed arguments are passed via
        the `options_obj` keyword argument.

        """

        # Execute the unit-test.
        @cli_wrapper("Quantization laboratory.", CLI_SCHEMA, "qlab")
        def sample_function(options_obj: SimpleNamespace) -> SimpleNamespace:
            """
            Description
            -----------

            This is a dummy function for the respective unit test(s).

            """

            return options_obj

        self.assertIsInstance(sample_function, Callable)
        self.assertIsInstance(sample_function.__wrapped__, Callable)
        options_obj = sample_function(argv=["bmo", "--f", "abs2", "--seed", "11"])
        self.assertEqual(options_obj.experiment, "bmo")
        self.assertEqual(options_obj.seed, 11)
        self.assertEqual(parser_interface.enviro_get(envvar="CLI_SCHEMA"), CLI_SCHEMA)

    def test_script_wrapper(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `decorator_interface`
        `script_wrapper` function; the wrapped function value is
        returned.

        """

        # Execute the unit-test.
        @script_wrapper("qlab")
        def sample_function(value: int) -> int:
            """
            Description
            -----------

            This is a dummy function for the respective unit test(s).

            """

            return 2 * value

        self.assertIsInstance(sample_function.__wrapped__, Callable)
        self.assertEqual(sample_function(3), 6)
        self.assertEqual(sample_function.__name__, "sample_function")


# ----


if __name__ == "__main__":
    unittest.main()
