#!/usr/bin/env python3

"""
Script
------

    test_parser_interface.py

Description
-----------

    This script is the driver script for the `tools.parser_interface`
    module unit-tests.

Classes
-------

    TestParserInterface()

        This the base-class object for all `parser_interface` module
        unit-tests; it is a sub-class of TestCase.

Author(s)
---------

    Henry R. Winterbottom; 02 March 2024

"""

# ----

import unittest
from types import SimpleNamespace
from unittest import TestCase

from tools import parser_interface
from utils.exceptions_interface import ParserInterfaceError

# ----


class TestParserInterface(TestCase):
    """
    Description
    -----------

    This the base-class object for all `parser_interface` module
    unit-tests; it is a sub-class of TestCase.

    """

    def test_typed_value(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `parser_interface`
        `typed_value` and `string_parser` functions.

        """

        # Execute the unit-test.
        self.assertEqual(parser_interface.typed_value(" 48 "), 48)
        self.assertEqual(parser_interface.typed_value("0.25"), 0.25)
        self.assertIsNone(parser_interface.typed_value("None"))
        self.assertTrue(parser_interface.typed_value("True"))
        self.assertEqual(parser_interface.typed_value("8:128:5g"), "8:128:5g")
        self.assertEqual(parser_interface.typed_value(7), 7)
        self.assertEqual(
            parser_interface.string_parser(in_list=["8", "x", "false"]), [8, "x", False]
        )

    def test_dict_formatter(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `parser_interface`
        `dict_formatter` function; keys are sorted and nested
        dictionaries are formatted.

        """

        # Execute the unit-test.
        in_dict = {"seed": "7", "grid": {"delta": "0.25", "spec": "beta"}, "f": "z1"}
        out_dict = parser_interface.dict_formatter(in_dict=in_dict)
        self.assertEqual(list(out_dict), ["f", "grid", "seed"])
        self.assertEqual(out_dict["seed"], 7)
        self.assertEqual(out_dict["grid"]["delta"], 0.25)

    def test_dict_key_value(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `parser_interface`
        `dict_key_value` function.

        """

        # Execute the unit-test.
        dict_in = {"lambdas": "8,16", "type": "int"}
        self.assertEqual(
            parser_interface.dict_key_value(dict_in=dict_in, key="lambdas"), [8, 16]
        )
        self.assertEqual(
            parser_interface.dict_key_value(
                dict_in=dict_in, key="lambdas", no_split=True
            ),
            "8,16",
        )
        self.assertIsNone(
            parser_interface.dict_key_value(dict_in=dict_in, key="default", force=True)
        )
        with self.assertRaises(ParserInterfaceError):
            parser_interface.dict_key_value(dict_in=dict_in, key="default")

    def test_objects(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `parser_interface`
        object functions.

        """

        # Execute the unit-test.
        obj = parser_interface.object_define()
        obj = parser_interface.object_setattr(object_in=obj, key="f", value="abs2")
        self.assertEqual(
            parser_interface.object_getattr(object_in=obj, key="f"), "abs2"
        )
        self.assertIsNone(
            parser_interface.object_getattr(object_in=obj, key="g", force=True)
        )
        with self.assertRaises(ParserInterfaceError):
            parser_interface.object_getattr(object_in=obj, key="g")
        self.assertEqual(parser_interface.object_todict(object_in=obj), {"f": "abs2"})
        converted = parser_interface.dict_toobject(in_dict={"seed": 7})
        self.assertIsInstance(converted, SimpleNamespace)
        self.assertEqual(converted.seed, 7)

    def test_enviro(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `parser_interface`
        `enviro_set` and `enviro_get` functions.

        """

        # Execute the unit-test.
        parser_interface.enviro_set(envvar="QLAB_TEST_SEED", value=11)
        self.assertEqual(parser_interface.enviro_get(envvar="QLAB_TEST_SEED"), "11")
        self.assertIsNone(parser_interface.enviro_get(envvar="QLAB_TEST_UNDEFINED"))

    def test_split_ids(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `parser_interface`
        `split_ids` function.

        """

        # Execute the unit-test.
        self.assertEqual(
            parser_interface.split_ids("z1, re_z1,,abs2 "), ["z1", "re_z1", "abs2"]
        )
        self.assertEqual(parser_interface.split_ids(["z1", " abs2"]), ["z1", "abs2"])
        self.assertEqual(parser_interface.split_ids(None), [])
        self.assertEqual(parser_interface.split_ids("8;16", sep=";"), ["8", "16"])


# ----


if __name__ == "__main__":
    unittest.main()
