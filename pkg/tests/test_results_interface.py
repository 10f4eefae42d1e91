#!/usr/bin/env python3

"""
Script
------

    test_results_interface.py

Description
-----------

    This script is the driver script for the
    `experiments.results_interface` module unit-tests.

Classes
-------

    TestResultsInterface()

        This the base-class object for all `results_interface` module
        unit-tests; it is a sub-class of TestCase.

Requirements
------------

- numpy; https://numpy.org/

- tabulate; https://github.com/astanin/python-tabulate

Author(s)
---------

    Henry R. Winterbottom; 02 March 2024

"""

# ----

import os
import tempfile
import time
import unittest
from unittest import TestCase

import numpy

from confs.json_interface import read_json
from experiments.results_interface import (
    CSV_HEADER,
    SweepResult,
    SweepRow,
    TrendCheck,
    collect_rows,
    format_float,
)

# ----


class TestResultsInterface(TestCase):
    """
    Description
    -----------

    This the base-class object for all `results_interface` module
    unit-tests; it is a sub-class of TestCase.

    """

    def setUp(self: TestCase) -> None:
        """
        Description
        -----------

        This method defines the base-class attributes for all
        `results_interface` unit-tests.

        """

        # Define the base-class attributes.
        self.rows = [
            SweepRow("hankel", "re_z1", "", 8.0, 6, 8, 0.25, diag_N_delta=0.01),
            SweepRow(
                "hankel",
                "re_z1",
                "",
                16.0,
                6,
                8,
                0.125,
                diag_N_delta=0.05,
                details={"argmax": numpy.array([0.1 + 0.2j])},
            ),
        ]
        self.result = SweepResult(
            config={"experiment": "hankel", "lambdas": (8.0, 16.0)},
            rows=self.rows,
            trends=[TrendCheck("hankel", "nonincreasing", True, "ok")],
        )

    def test_format_float(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `results_interface`
        `format_float` function.

        """

        # Execute the unit-test.
        self.assertEqual(format_float(None), "")
        self.assertEqual(format_float(0.1), "0.1")
        self.assertEqual(format_float(8), "8.0")
        value = 1.0 / 3.0
        self.assertEqual(float(format_float(value)), value)

    def test_sweep_row(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `results_interface`
        `SweepRow` data-class reliability flag.

        """

        # Execute the unit-test; a diagnostic above 10% of the value
        # flags the row.
        (first, second) = self.rows
        self.assertTrue(first.reliable)
        self.assertFalse(second.reliable)
        self.assertEqual(second.diagnostic, 0.05)
        both = SweepRow("bmo", "abs2", "", 8.0, None, None, 1.0, 0.02, 0.08)
        self.assertEqual(both.diagnostic, 0.08)
        self.assertTrue(both.reliable)
        self.assertTrue(SweepRow("bmo", "abs2", "", 8.0, None, None, 0.0).reliable)
        nan = SweepRow("bmo", "abs2", "", 8.0, None, None, numpy.nan)
        self.assertFalse(nan.reliable)
        self.assertEqual(
            first.cells(),
            ["hankel", "re_z1", "", "8.0", "6", "8", "0.25", "0.01", "", ""],
        )
        self.assertEqual(second.to_dict()["flag"], "UNRELIABLE")

    def test_write_csv(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `SweepResult`
        `write_csv` method; identical results give byte-identical
        files.

        """

        # Execute the unit-test.
        with tempfile.TemporaryDirectory() as dirpath:
            paths = [os.path.join(dirpath, "out", f"run{idx}.csv") for idx in (0, 1)]
            for path in paths:
                self.result.write_csv(path=path)
            contents = []
            for path in paths:
                with open(path, "rb") as stream:
                    contents.append(stream.read())
        self.assertEqual(contents[0], contents[1])
        lines = contents[0].decode("utf-8").split("\n")
        self.assertEqual(lines[0], ",".join(CSV_HEADER))
        self.assertEqual(
            lines[0],
            "experiment,f,g,lambda,N,M,value,diag_N_delta,diag_path_delta,grid",
        )
        self.assertEqual(lines[1], "hankel,re_z1,,8.0,6,8,0.25,0.01,,")
        self.assertEqual(len(lines), 4)
        self.assertEqual(lines[-1], "")

    def test_write_json(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `SweepResult`
        `to_dict` and `write_json` methods.

        """

        # Execute the unit-test.
        mirror = self.result.to_dict()
        self.assertEqual(mirror["schema_version"], 1)
        self.assertTrue(mirror["passed"])
        self.assertEqual([row["flag"] for row in mirror["rows"]], ["OK", "UNRELIABLE"])
        with tempfile.TemporaryDirectory() as dirpath:
            path = os.path.join(dirpath, "results.json")
            self.result.write_json(path=path)
            contents = read_json(json_file=path)
        self.assertEqual(contents["config"]["lambdas"], [8.0, 16.0])
        argmax = contents["rows"][1]["details"]["argmax"]
        self.assertEqual(argmax, [{"re": 0.1, "im": 0.2}])
        self.assertEqual(contents["trends"][0]["series"], "hankel")

    def test_summary(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `SweepResult`
        `summary`, `series` and `passed` attributes.

        """

        # Execute the unit-test.
        table = self.result.summary()
        self.assertIn("UNRELIABLE", table)
        self.assertIn("2.500000e-01", table)
        self.assertEqual(self.result.series_names(), ["hankel"])
        self.assertEqual([row.lam for row in self.result.series("hankel")], [8.0, 16.0])
        self.result.trends.append(TrendCheck("hankel", "decreasing", False))
        self.assertFalse(self.result.passed)

    def test_collect_rows(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `results_interface`
        `collect_rows` function; rows are merged in schedule order
        regardless of completion order.

        """

        # Define the row function; the smallest weight finishes last.
        def rows_for(lam: float):
            time.sleep(0.05 / lam)
            return [SweepRow("bmo", "abs2", "", lam, None, None, 1.0 / lam)]

        # Execute the unit-test.
        lambdas = (2.0, 4.0, 8.0, 16.0)
        rows = collect_rows(lambdas=lambdas, func=rows_for, workers=4)
        self.assertEqual([row.lam for row in rows], list(lambdas))
        serial = collect_rows(lambdas=lambdas, func=rows_for, workers=1)
        self.assertEqual([row.value for row in serial], [row.value for row in rows])


# ----


if __name__ == "__main__":
    unittest.main()
