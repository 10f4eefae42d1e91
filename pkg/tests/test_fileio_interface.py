#!/usr/bin/env python3

"""
Script
------

    test_fileio_interface.py

Description
-----------

    This script is the driver script for the `tools.fileio_interface`
    module unit-tests.

Classes
-------

    TestFileIOInterface()

        This the base-class object for all `fileio_interface` module
        unit-tests; it is a sub-class of TestCase.

Author(s)
---------

    Henry R. Winterbottom; 02 March 2024

"""

# ----

import os
import tempfile
import unittest
from unittest import TestCase

from tools import fileio_interface

# ----


class TestFileIOInterface(TestCase):
    """
    Description
    -----------

    This the base-class object for all `fileio_interface` module
    unit-tests; it is a sub-class of TestCase.

    """

    def setUp(self: TestCase) -> None:
        """
        Description
        -----------

        This method defines the base-class attributes for all
        `fileio_interface` unit-tests.

        """

        # Define the base-class attributes.
        self.tmpdir = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmpdir.cleanup)

    def test_dirpath_tree(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `fileio_interface`
        `dirpath_tree` and `fileexist` functions.

        """

        # Execute the unit-test.
        path = os.path.join(self.tmpdir.name, "runs", "bmo")
        self.assertFalse(fileio_interface.fileexist(path=path))
        fileio_interface.dirpath_tree(path=path)
        self.assertTrue(fileio_interface.fileexist(path=path))
        fileio_interface.dirpath_tree(path=path)
        self.assertTrue(os.path.isdir(path))

    def test_parent_dirpath(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `fileio_interface`
        `parent_dirpath` function.

        """

        # Execute the unit-test.
        path = os.path.join(self.tmpdir.name, "out", "hankel", "rows.csv")
        fileio_interface.parent_dirpath(path=path)
        self.assertTrue(os.path.isdir(os.path.dirname(path)))
        self.assertFalse(fileio_interface.fileexist(path=path))


# ----


if __name__ == "__main__":
    unittest.main()
