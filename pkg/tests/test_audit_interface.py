#!/usr/bin/env python3

"""
Script
------

    test_audit_interface.py

Description
-----------

    This script is the driver script for the
    `experiments.audit_interface` module unit-tests.

Classes
-------

    TestAuditInterface()

        This the base-class object for all `audit_interface` module
        unit-tests; it is a sub-class of TestCase.

Requirements
------------

- numpy; https://numpy.org/

Author(s)
---------

    Henry R. Winterbottom; 02 March 2024

"""

# ----

import unittest
from unittest import TestCase

from bergman.geometry_interface import Weight
from bergman.symbols_interface import symbol_from_id
from experiments.audit_interface import (
    AUDITS,
    audit_rows,
    check_constants,
    run_inequality_audit,
)
from experiments.config_interface import build_config
from experiments.results_interface import SweepRow

# ----


def audit_row(value: float, holds: bool = True, lam: float = 8.0) -> SweepRow:
    """A synthetic audit row."""
    return SweepRow(
        "audit:x", "abs2", "", lam, None, None, value, details={"holds": holds}
    )


# ----


class TestAuditInterface(TestCase):
    """
    Description
    -----------

    This the base-class object for all `audit_interface` module
    unit-tests; it is a sub-class of TestCase.

    """

    def setUp(self: TestCase) -> None:
        """
        Description
        -----------

        This method defines the base-class attributes for all
        `audit_interface` unit-tests.

        """

        # Define the base-class attributes.
        self.options = {
            "experiment": "audit",
            "f": "abs2",
            "degree": 6,
            "inner": 8,
            "grid": "beta:1:0.5:4",
        }

    def test_check_constants(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `audit_interface`
        `check_constants` function.

        """

        # Execute the unit-test.
        steady = [audit_row(1.0), audit_row(1.5, lam=16.0)]
        self.assertTrue(check_constants(steady, "x").passed)
        growing = [audit_row(3.0, lam=16.0), audit_row(1.0)]
        self.assertFalse(check_constants(growing, "x").passed)
        self.assertTrue(check_constants(growing, "x", uniform=False).passed)
        decaying = [audit_row(4.0), audit_row(2.0, lam=32.0), audit_row(1.0, lam=128.0)]
        self.assertTrue(check_constants(decaying, "x").passed)
        vanishing = [audit_row(0.0), audit_row(1.0e-9, lam=16.0)]
        self.assertTrue(check_constants(vanishing, "x").passed)
        undefined = [audit_row(1.0), audit_row(float("nan"), lam=16.0)]
        self.assertFalse(check_constants(undefined, "x").passed)
        self.assertFalse(check_constants(undefined, "x", uniform=False).passed)
        failing = [audit_row(1.0), audit_row(1.0, holds=False)]
        self.assertFalse(check_constants(failing, "x", uniform=False).passed)

    def test_audit_rows(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `audit_interface`
        `audit_rows` function; every audit applies to a bounded symbol
        at lam = 16 and the bounds with closed constants hold.

        """

        # Execute the unit-test.
        cfg = build_config(options_dict=dict(self.options, lambdas="16"))
        rows = audit_rows(
            f=symbol_from_id("abs2"), weight=Weight(n=1, lam=16.0), cfg=cfg
        )
        names = {row.experiment.split(":", 1)[1]: row for row in rows}
        self.assertEqual(set(names), set(AUDITS))
        for name in ("forelli_rudin", "growth", "toeplitz_schur", "hankel_schur"):
            self.assertTrue(names[name].details["holds"], name)
        self.assertTrue(names["mo_average"].details["holds"])
        self.assertEqual(names["hankel_schur"].N, 6)
        self.assertEqual(names["hankel_schur"].M, 8)
        self.assertIsNone(names["growth"].N)

    def test_run_inequality_audit(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `audit_interface`
        `run_inequality_audit` function; the Hankel-BO audit is
        skipped for lam <= 4p.

        """

        # Execute the unit-test.
        cfg = build_config(options_dict=dict(self.options, lambdas="8"))
        result = run_inequality_audit(cfg=cfg)
        names = result.series_names()
        self.assertNotIn("audit:hankel_bo", names)
        self.assertIn("audit:forelli_rudin", names)
        self.assertEqual(len(result.trends), len(names))
        self.assertEqual(result.grid["spec"], "beta:1:0.5:4")

    def test_run_inequality_audit_schedule(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `audit_interface`
        `run_inequality_audit` function over the default weight
        schedule; every audit holds with finite constants that do not
        grow for the bounded symbols abs2 and re_z1.

        """

        # Execute the unit-test.
        for symbol in ("abs2", "re_z1"):
            cfg = build_config(options_dict=dict(self.options, f=symbol))
            self.assertEqual(len(cfg.lambdas), 5)
            result = run_inequality_audit(cfg=cfg)
            for trend in result.trends:
                self.assertTrue(trend.passed, f"{symbol}: {trend.detail}")


# ----


if __name__ == "__main__":
    unittest.main()
