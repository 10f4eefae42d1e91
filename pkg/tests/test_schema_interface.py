#!/usr/bin/env python3

"""
Script
------

    test_schema_interface.py

Description
-----------

    This script is the driver script for the `utils.schema_interface`
    module unit-tests.

Classes
-------

    TestSchemaInterface()

        This the base-class object for all `schema_interface` module
        unit-tests; it is a sub-class of TestCase.

Requirements
------------

- schema; https://github.com/keleshev/schema

Author(s)
---------

    Henry R. Winterbottom; 02 March 2024

"""

# ----

import os
import unittest
from unittest import TestCase

from schema import Optional

from confs.yaml_interface import YAML
from utils.exceptions_interface import SchemaInterfaceError
from utils.schema_interface import build_schema, validate_schema

# ----


class TestSchemaInterface(TestCase):
    """
    Description
    -----------

    This the base-class object for all `schema_interface` module
    unit-tests; it is a sub-class of TestCase.

    """

    def setUp(self: TestCase) -> None:
        """
        Description
        -----------

        This method defines the base-class attributes for all
        `schema_interface` unit-tests.

        """

        # Define the base-class attributes.
        schema_path = os.path.join(
            os.path.dirname(os.path.abspath(__file__)), "test_files", "schema.yaml"
        )
        self.schema_def_dict = YAML().read_yaml(yaml_file=schema_path)

    def test_build_schema(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `schema_interface`
        `build_schema` function.

        """

        # Execute the unit-test.
        cls_schema = build_schema(schema_def_dict=self.schema_def_dict)
        required = [key for key in cls_schema if not isinstance(key, Optional)]
        optional = {
            key.key: key.default for key in cls_schema if isinstance(key, Optional)
        }
        self.assertEqual(sorted(required), ["experiment", "lam"])
        self.assertEqual(optional, {"degree": 4, "symmetric": False, "label": None})
        with self.assertRaises(SchemaInterfaceError):
            build_schema(schema_def_dict={"seed": {"type": "nosuchtype"}})
        with self.assertRaises(SchemaInterfaceError):
            build_schema(schema_def_dict={"seed": {"type": "int", "default": "x"}})

    def test_validate_schema(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `schema_interface`
        `validate_schema` function; optional attributes receive their
        default values and string values are converted.

        """

        # Execute the unit-test.
        cls_schema = build_schema(schema_def_dict=self.schema_def_dict)
        cls_opts = validate_schema(
            cls_schema=cls_schema,
            cls_opts={"experiment": "hankel", "lam": "16.0", "degree": "6"},
        )
        self.assertEqual(cls_opts["lam"], 16.0)
        self.assertEqual(cls_opts["degree"], 6)
        self.assertFalse(cls_opts["symmetric"])
        self.assertIsNone(cls_opts["label"])
        cls_opts = validate_schema(
            cls_schema=cls_schema,
            cls_opts={"experiment": "bmo", "lam": 8.0, "extra": 1},
            write_table=False,
        )
        self.assertEqual(cls_opts["extra"], 1)

    def test_validate_schema_errors(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `schema_interface`
        `validate_schema` function failures.

        """

        # Execute the unit-test.
        cls_schema = build_schema(schema_def_dict=self.schema_def_dict)
        invalid = [
            {"lam": 8.0},
            {"experiment": "blocks", "lam": 8.0},
            {"experiment": "bmo", "lam": 8.0, "degree": 4.5},
            {"experiment": "bmo", "lam": 8.0, "label": 3},
        ]
        for cls_opts in invalid:
            with self.assertRaises(SchemaInterfaceError):
                validate_schema(cls_schema=cls_schema, cls_opts=cls_opts)
        with self.assertRaises(SchemaInterfaceError):
            validate_schema(
                cls_schema=cls_schema,
                cls_opts={"experiment": "bmo", "lam": 8.0},
                logger_method="nosuchmethod",
            )
        with self.assertRaises(SchemaInterfaceError):
            validate_schema(
                cls_schema=cls_schema,
                cls_opts={"experiment": "bmo", "lam": 8.0, "extra": 1},
                ignore_extra_keys=False,
            )


# ----


if __name__ == "__main__":
    unittest.main()
