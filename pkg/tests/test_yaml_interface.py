#!/usr/bin/env python3

"""
Script
------

    test_yaml_interface.py

Description
-----------

    This script is the driver script for the `confs.yaml_interface`
    module unit-tests.

Classes
-------

    TestYAMLInterface()

        This is the base-class object for all yaml_interface
        unit-tests; it is a sub-class of TestCase.

Requirements
------------

- pyyaml; https://pyyaml.org/

Author(s)
---------

    Henry R. Winterbottom; 08 December 2022

History
-------

    2022-12-08: Henry Winterbottom -- Initial implementation.

    2024-03-02: Henry Winterbottom -- Updated for the sweep
                configuration files.

"""

# ----

import os
import tempfile
import unittest
from types import SimpleNamespace
from unittest import TestCase

from confs.yaml_interface import YAML
from tools import parser_interface
from utils.exceptions_interface import YAMLInterfaceError

# ----


class TestYAMLInterface(TestCase):
    """
    Description
    -----------

    This is the base-class object for all yaml_interface unit-tests;
    it is a sub-class of TestCase.

    """

    def setUp(self: TestCase) -> None:
        """
        Description
        -----------

        This method defines the base-class attributes for all
        yaml_interface unit-tests.

        """

        # Define the base-class attributes.
        dirpath = os.path.join(os.path.dirname(__file__), "test_files")
        self.sweep_yaml = os.path.join(dirpath, "sweep.yaml")
        parser_interface.enviro_set(envvar="QLAB_TEST_DIR", value="/scratch/qlab")

    def test_read_yaml(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the yaml_interface
        `read_yaml` method; environment variables are expanded and
        included files are resolved against the including file.

        """

        # Execute the unit-test.
        yaml_dict = YAML().read_yaml(yaml_file=self.sweep_yaml)
        self.assertEqual(yaml_dict["experiment"], "bmo")
        self.assertEqual(yaml_dict["lambda"], "8:32:3g")
        self.assertEqual(yaml_dict["out"], "/scratch/qlab/bmo.csv")
        self.assertEqual(yaml_dict["grid"], "beta:1:0.5:4")
        yaml_obj = YAML().read_yaml(yaml_file=self.sweep_yaml, return_obj=True)
        self.assertIsInstance(yaml_obj, SimpleNamespace)
        self.assertEqual(yaml_obj.f, "abs2")

    def test_read_yaml_errors(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the yaml_interface
        `read_yaml` method errors.

        """

        # Execute the unit-test.
        with tempfile.TemporaryDirectory() as dirpath:
            empty = os.path.join(dirpath, "empty.yaml")
            listing = os.path.join(dirpath, "listing.yaml")
            broken = os.path.join(dirpath, "broken.yaml")
            for path, contents in (
                (empty, ""),
                (listing, "- bmo\n- hankel\n"),
                (broken, "experiment: [bmo\n"),
            ):
                with open(path, "w", encoding="utf-8") as stream:
                    stream.write(contents)
            self.assertEqual(YAML().read_yaml(yaml_file=empty), {})
            for path in (listing, broken, os.path.join(dirpath, "missing.yaml")):
                with self.assertRaises(YAMLInterfaceError):
                    YAML().read_yaml(yaml_file=path)


# ----

if __name__ == "__main__":
    unittest.main()
