#!/usr/bin/env python3

"""
Script
------

    test_oscillation_interface.py

Description
-----------

    This script is the driver script for the
    `bergman.oscillation_interface` module unit-tests.

Classes
-------

    TestOscillationInterface()

        This the base-class object for all `oscillation_interface`
        module unit-tests; it is a sub-class of TestCase.

Requirements
------------

- numpy; https://numpy.org/

- scipy; https://scipy.org/

Author(s)
---------

    Henry R. Winterbottom; 02 March 2024

"""

# ----

import unittest
from unittest import TestCase

import numpy

from bergman.geometry_interface import Weight
from bergman.oscillation_interface import (
    average_and_Aq,
    berezin,
    berezin_symbol,
    bmo_bo_lipschitz_audit,
    bmo_seminorm,
    bo_seminorm,
    continuity_modulus,
    double_average_bound,
    mean_oscillation,
    mo_average_bound_audit,
    osc,
    parse_grid,
    vmo_profile,
)
from bergman.oscillatory_interface import oscillatory_gamma0
from bergman.symbols_interface import COUNTEREXAMPLE, UC, VMO, symbol_from_id
from utils.exceptions_interface import OscillationInterfaceError

# ----


class TestOscillationInterface(TestCase):
    """
    Description
    -----------

    This the base-class object for all `oscillation_interface` module
    unit-tests; it is a sub-class of TestCase.

    """

    def setUp(self: TestCase) -> None:
        """
        Description
        -----------

        This method defines the base-class attributes for all
        `oscillation_interface` unit-tests.

        """

        # Define the base-class attributes.
        self.disk = Weight(n=1, lam=2.0)
        self.grid = parse_grid(spec="beta:1.5:0.5:4", n=1)
        self.abs2 = symbol_from_id("abs2")
        self.z1 = symbol_from_id("z1")

    def test_parse_grid(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `oscillation_interface`
        `parse_grid` function and the grid attributes.

        """

        # Execute the unit-test; the origin is sampled once.
        expected = numpy.tanh([0.0, 0.5, 1.0, 1.5])
        numpy.testing.assert_allclose(self.grid.radii, expected)
        self.assertEqual(self.grid.points.shape, (13, 1))
        self.assertEqual(self.grid.points_for(f=self.abs2).shape, (4, 1))
        self.assertEqual(self.grid.points_for(f=self.z1).shape, (13, 1))
        metadata = self.grid.metadata()
        self.assertEqual(metadata["spec"], "beta:1.5:0.5:4")
        self.assertEqual(metadata["npoints"], 13)
        default = parse_grid(spec="beta:6:0.25:32", n=2)
        self.assertEqual(default.points.shape, (769, 2))
        malformed = ("beta:6:0.25", "gamma:6:0.25:32", "beta:1:2:4", "beta:6:0.25:0")
        for spec in malformed:
            with self.assertRaises(OscillationInterfaceError):
                parse_grid(spec=spec, n=1)

    def test_berezin(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `oscillation_interface`
        `berezin` function; B|z|^2(0) = n / lam and the computation
        paths agree.

        """

        # Execute the unit-test.
        weights = (Weight(n=1, lam=2.0), Weight(n=1, lam=9.0), Weight(n=2, lam=4.0))
        for weight in weights:
            abs2 = symbol_from_id("abs2", n=weight.n)
            origin = numpy.zeros(weight.n)
            for path in ("radial", "convolution", "kernel"):
                value = berezin(f=abs2, weight=weight, z=origin, path=path)
                self.assertAlmostEqual(value.real, weight.n / weight.lam, places=10)
            z = numpy.zeros(weight.n, dtype=complex)
            z[0] = 0.3 + 0.1j
            radial = berezin(f=abs2, weight=weight, z=z, path="radial")
            convolution = berezin(f=abs2, weight=weight, z=z, path="convolution")
            self.assertLess(abs(radial - convolution), 1.0e-8)

        # Holomorphic symbols are fixed by the transform.
        z = numpy.array([0.3 - 0.5j])
        for path in ("convolution", "kernel"):
            value = berezin(f=self.z1, weight=self.disk, z=z, path=path)
            self.assertLess(abs(value - z[0]), 1.0e-10)

    def test_berezin_paths(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `oscillation_interface`
        `berezin` function path selection.

        """

        # Execute the unit-test.
        osc_symbol = symbol_from_id("osc_counterexample")
        with self.assertRaises(OscillationInterfaceError):
            berezin(f=osc_symbol, weight=self.disk, z=[0.2], path="convolution")
        with self.assertRaises(OscillationInterfaceError):
            berezin(f=self.z1, weight=self.disk, z=[0.2], path="radial")
        with self.assertRaises(OscillationInterfaceError):
            berezin(f=self.z1, weight=self.disk, z=[0.2], path="fourier")
        value = berezin(f=osc_symbol, weight=self.disk, z=[0.0])
        self.assertLess(abs(value - oscillatory_gamma0(alpha=0.0).value), 1.0e-8)

    def test_mean_oscillation(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `oscillation_interface`
        `mean_oscillation` function; MO(|z|^2)(0) = 1/12 at lam = 2.

        """

        # Execute the unit-test.
        for form in ("variance", "centered"):
            value = mean_oscillation(f=self.abs2, weight=self.disk, z=[0.0], form=form)
            self.assertAlmostEqual(value, 1.0 / 12.0, places=10)
        gamma = oscillatory_gamma0(alpha=0.0).value
        value = mean_oscillation(
            f=symbol_from_id("osc_counterexample"), weight=self.disk, z=[0.0]
        )
        self.assertAlmostEqual(value, 1.0 - abs(gamma) ** 2, places=7)
        with self.assertRaises(OscillationInterfaceError):
            mean_oscillation(f=self.abs2, weight=self.disk, z=[0.0], form="median")

    def test_bmo_seminorm(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `oscillation_interface`
        `bmo_seminorm` function.

        """

        # Execute the unit-test.
        report = bmo_seminorm(f=self.abs2, weight=self.disk, grid=self.grid)
        self.assertEqual(report.values.size, 4)
        self.assertGreaterEqual(report.value, numpy.sqrt(1.0 / 12.0) - 1.0e-10)
        self.assertEqual(report.grid["spec"], "beta:1.5:0.5:4")
        self.assertEqual(len(report.argmax), 1)
        const1 = symbol_from_id("const1")
        const = bmo_seminorm(f=const1, weight=self.disk, grid=self.grid)
        self.assertLess(const.value, 1.0e-6)

    def test_osc(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `oscillation_interface`
        `osc`, `bo_seminorm` and `continuity_modulus` functions.

        """

        # Execute the unit-test; the unit weighted metric ball about 0
        # has Euclidean radius tanh(sqrt(p / lam)).
        value = osc(f=self.z1, weight=self.disk, z=[0.0])
        self.assertAlmostEqual(value, numpy.tanh(1.0), places=7)
        report = bo_seminorm(f=self.z1, weight=self.disk, grid=self.grid)
        self.assertGreaterEqual(report.value, value - 1.0e-12)
        const1 = symbol_from_id("const1")
        const = bo_seminorm(f=const1, weight=self.disk, grid=self.grid)
        self.assertEqual(const.value, 0.0)
        modulus = continuity_modulus(f=self.z1, delta=0.25, grid=self.grid)
        self.assertLess(modulus.value, value)
        with self.assertRaises(OscillationInterfaceError):
            continuity_modulus(f=self.z1, delta=0.0, grid=self.grid)

    def test_average_and_Aq(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `oscillation_interface`
        `average_and_Aq` and `double_average_bound` functions; the
        average of |z|^2 over E(0, rho) is tanh(rho)^2 / 2.

        """

        # Execute the unit-test.
        rho = 0.5
        report = average_and_Aq(f=self.abs2, x=[0.0], rho=rho)
        self.assertAlmostEqual(report.mean.real, numpy.tanh(rho) ** 2 / 2.0, places=12)
        self.assertAlmostEqual(
            report.volume_quadrature, report.volume_closed, places=12
        )
        moved = average_and_Aq(f=self.z1, x=[0.4 + 0.3j], rho=rho)
        self.assertAlmostEqual(moved.volume_quadrature, moved.volume_closed, places=10)
        const = average_and_Aq(f=symbol_from_id("const1"), x=[0.5], rho=rho)
        self.assertLess(const.aq, 1.0e-20)
        bound = double_average_bound(f=self.abs2, x=[0.0], rho=rho)
        self.assertAlmostEqual(bound, 2.0 * report.aq, places=12)
        with self.assertRaises(OscillationInterfaceError):
            average_and_Aq(f=self.abs2, x=[0.0], rho=rho, q=3)

    def test_vmo_profile(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `oscillation_interface`
        `vmo_profile` function.

        """

        # Execute the unit-test.
        report = vmo_profile(f=self.abs2, rho_list=[1.0, 0.5, 0.25], grid=self.grid)
        self.assertEqual(len(report.sups), 3)
        self.assertTrue(report.decreasing)

    def test_berezin_radial_profiles(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `oscillation_interface`
        `berezin` function radial path for profiles that are singular
        at s = 0 or s = 1; every grid value is finite, including at
        lam = n + 1 where the weight exponent vanishes.

        """

        # Execute the unit-test.
        grid = parse_grid(spec="beta:6:0.25:1", n=1)
        for symbol_id in ("abs2", "beta0", "sin_beta0", "vmo_loglog"):
            f = symbol_from_id(symbol_id)
            for lam in (2.0, 4.0, 8.0, 64.0):
                weight = Weight(n=1, lam=lam)
                values = [berezin(f=f, weight=weight, z=z) for z in grid.points_for(f)]
                self.assertTrue(
                    numpy.all(numpy.isfinite(values)), f"{symbol_id}, lam = {lam}"
                )
        value = berezin(f=self.abs2, weight=self.disk, z=[0.0], path="radial")
        self.assertAlmostEqual(value.real, 0.5, places=10)

        # The radial and convolution paths agree away from the origin
        # and the deviation from the symbol decreases with the weight.
        sin_beta0 = symbol_from_id("sin_beta0")
        z = numpy.array([0.5])
        target = complex(sin_beta0.evaluate(z[None, :])[0])
        deviations = []
        for lam in (8.0, 64.0):
            weight = Weight(n=1, lam=lam)
            radial = berezin(f=sin_beta0, weight=weight, z=z, path="radial")
            convolution = berezin(f=sin_beta0, weight=weight, z=z, path="convolution")
            self.assertLess(abs(radial - convolution), 1.0e-5)
            deviations.append(abs(radial - target))
        self.assertLess(deviations[1], deviations[0])

    def test_vmo_profile_tags(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `oscillation_interface`
        `vmo_profile` function against the symbol class tags; the
        vanishing mean oscillation symbol decreases with the radius
        while the counterexample stays bounded away from zero.

        """

        # Execute the unit-test.
        rho_list = [1.0, 0.5, 0.25]
        loglog = symbol_from_id("vmo_loglog")
        report = vmo_profile(f=loglog, rho_list=rho_list, grid=self.grid)
        self.assertIn(VMO, loglog.tags)
        self.assertTrue(numpy.all(numpy.isfinite(report.sups)))
        self.assertTrue(report.decreasing)
        counterexample = symbol_from_id("osc_counterexample")
        report = vmo_profile(f=counterexample, rho_list=rho_list, grid=self.grid)
        self.assertIn(COUNTEREXAMPLE, counterexample.tags)
        self.assertGreater(min(report.sups), 0.5)

    def test_continuity_tags(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `oscillation_interface`
        `continuity_modulus` function against the symbol class tags;
        at delta = 0.05 the uniformly continuous symbols beta0 and
        sin_beta0 (1-Lipschitz in beta) and abs2 stay below the
        declared modulus while the counterexample fails near 0.

        """

        # Execute the unit-test.
        delta = 0.05
        declared = {"beta0": delta, "sin_beta0": delta, "abs2": 2.0 * delta}
        for symbol_id, epsilon in declared.items():
            f = symbol_from_id(symbol_id)
            self.assertIn(UC, f.tags)
            modulus = continuity_modulus(f=f, delta=delta, grid=self.grid)
            self.assertLessEqual(modulus.value, epsilon + 1.0e-9, symbol_id)
        counterexample = symbol_from_id("osc_counterexample")
        modulus = continuity_modulus(f=counterexample, delta=delta, grid=self.grid)
        self.assertGreater(modulus.value, 0.5)

    def test_mo_average_bound_audit(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `oscillation_interface`
        `mo_average_bound_audit` function.

        """

        # Execute the unit-test.
        report = mo_average_bound_audit(
            f=self.abs2, weight=Weight(n=1, lam=4.0), rho=1.0, grid=self.grid
        )
        self.assertTrue(report.holds)
        self.assertLessEqual(report.constant, 1.0 + 1.0e-8)
        self.assertEqual(len(report.lhs), 4)

    def test_bmo_bo_lipschitz_audit(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `oscillation_interface`
        `bmo_bo_lipschitz_audit` function.

        """

        # Execute the unit-test.
        report = bmo_bo_lipschitz_audit(
            g=self.z1, weight=self.disk, grid=self.grid, npairs=20
        )
        self.assertTrue(report.lipschitz_holds)
        self.assertGreater(report.bmo, 0.0)
        self.assertTrue(numpy.isfinite(report.triangular_constant))
        self.assertLessEqual(report.npairs, 20)

    def test_berezin_symbol(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `oscillation_interface`
        `berezin_symbol` function.

        """

        # Execute the unit-test.
        weight = Weight(n=1, lam=4.0)
        transformed = berezin_symbol(f=self.abs2, weight=weight)
        self.assertEqual(transformed.id, "B[4](abs2)")
        self.assertTrue(transformed.radial)
        z = numpy.array([[0.0], [numpy.tanh(1.0)]])
        values = transformed.evaluate(z)
        self.assertAlmostEqual(values[0].real, 0.25, places=8)
        expected = berezin(f=self.abs2, weight=weight, z=z[1])
        self.assertLess(abs(values[1] - expected), 1.0e-8)
        with self.assertRaises(OscillationInterfaceError):
            berezin_symbol(f=self.z1, weight=weight)


# ----


if __name__ == "__main__":
    unittest.main()
