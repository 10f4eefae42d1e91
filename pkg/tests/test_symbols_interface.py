#!/usr/bin/env python3

"""
Script
------

    test_symbols_interface.py

Description
-----------

    This script is the driver script for the
    `bergman.symbols_interface` module unit-tests.

Classes
-------

    TestSymbolsInterface()

        This the base-class object for all `symbols_interface` module
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

import numpy

from bergman.geometry_interface import sphere_directions
from bergman.symbols_interface import (
    BOUNDED,
    COUNTEREXAMPLE,
    HOLOMORPHIC,
    RADIAL,
    UC,
    VMO,
    Symbol,
    catalog,
    conj,
    constant,
    harmonic_measure,
    lift_last,
    modulus,
    precompose,
    product,
    scale,
    symbol_from_id,
    symbol_sum,
)
from utils.exceptions_interface import SymbolsInterfaceError

# ----


class TestSymbolsInterface(TestCase):
    """
    Description
    -----------

    This the base-class object for all `symbols_interface` module
    unit-tests; it is a sub-class of TestCase.

    """

    def setUp(self: TestCase) -> None:
        """
        Description
        -----------

        This method defines the base-class attributes for all
        `symbols_interface` unit-tests.

        """

        # Define the base-class attributes; the sample points avoid
        # the origin.
        radii = numpy.linspace(0.05, 0.95, 10)
        self.points = {
            n: (radii[:, None, None] * sphere_directions(n=n, count=12)[None]).reshape(
                -1, n
            )
            for n in (1, 2)
        }

    def test_catalog(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `symbols_interface`
        `catalog` function; BOUNDED symbols respect their sup bounds.

        """

        # Execute the unit-test.
        for n in (1, 2):
            symbols = catalog(n=n)
            ids = [f.id for f in symbols]
            self.assertIn("osc_counterexample", ids)
            arcs = [item for item in ids if item.startswith("harmonic_arc")]
            self.assertEqual(len(arcs), int(n == 1))
            for f in symbols:
                self.assertEqual(f.n, n)
                values = f.evaluate(self.points[n])
                self.assertTrue(numpy.all(numpy.isfinite(values)), f.id)
                if f.has(BOUNDED):
                    self.assertLessEqual(
                        float(numpy.max(numpy.abs(values))), f.sup_bound + 1.0e-12
                    )

    def test_symbol_from_id(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `symbols_interface`
        `symbol_from_id` function.

        """

        # Execute the unit-test.
        abs2 = symbol_from_id(symbol_id="abs2", n=2)
        z = self.points[2]
        numpy.testing.assert_allclose(
            abs2.evaluate(z), numpy.sum(numpy.abs(z) ** 2, axis=-1), rtol=1.0e-14
        )
        self.assertTrue(abs2.radial)
        self.assertFalse(abs2.oscillatory)
        osc = symbol_from_id(symbol_id="osc_counterexample")
        self.assertTrue(osc.oscillatory)
        self.assertTrue(osc.has(COUNTEREXAMPLE))
        self.assertEqual(complex(osc.evaluate(numpy.zeros((1, 1)))[0]), 1.0)
        s = numpy.array([0.25, 0.5])
        numpy.testing.assert_allclose(osc.profile(s), numpy.exp(1j / s))
        with self.assertRaises(SymbolsInterfaceError):
            symbol_from_id(symbol_id="unknown")
        with self.assertRaises(SymbolsInterfaceError):
            symbol_from_id(symbol_id="z1").profile(s)
        with self.assertRaises(SymbolsInterfaceError):
            Symbol(id="bad", evaluate=lambda z: z[..., 0], tags=frozenset([BOUNDED]))

    def test_constant(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `symbols_interface`
        `constant` function.

        """

        # Execute the unit-test.
        one = constant(value=1.0, n=2)
        self.assertTrue(one.has(HOLOMORPHIC) and one.has(RADIAL) and one.has(VMO))
        numpy.testing.assert_allclose(one.evaluate(self.points[2]), 1.0)
        self.assertEqual(one.poly_degree, 0)
        self.assertTrue(conj(one).has(HOLOMORPHIC))

    def test_symbol_sum(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `symbols_interface`
        `symbol_sum` function; class tags require both operands.

        """

        # Execute the unit-test.
        (z1, beta0) = (symbol_from_id("z1"), symbol_from_id("beta0"))
        total = symbol_sum(z1, beta0)
        self.assertTrue(total.has(UC))
        self.assertFalse(total.has(BOUNDED))
        z = self.points[1]
        numpy.testing.assert_allclose(
            total.evaluate(z), z1.evaluate(z) + beta0.evaluate(z), rtol=1.0e-14
        )
        with self.assertRaises(SymbolsInterfaceError):
            symbol_sum(z1, symbol_from_id("z1", n=2))

    def test_product(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `symbols_interface`
        `product`, `conj` and `scale` functions.

        """

        # Execute the unit-test.
        z1 = symbol_from_id("z1", n=2)
        mod2 = product(conj(z1), z1)
        z = self.points[2]
        numpy.testing.assert_allclose(mod2.evaluate(z), numpy.abs(z[:, 0]) ** 2)
        self.assertEqual(mod2.poly_degree, 2)
        self.assertFalse(conj(z1).has(HOLOMORPHIC))
        self.assertTrue(product(z1, z1).has(HOLOMORPHIC))
        numpy.testing.assert_allclose(scale(z1, 2.0).evaluate(z), 2.0 * z[:, 0])

        # The frequencies of conjugate oscillatory symbols cancel.
        osc = symbol_from_id("osc_counterexample")
        cancelled = product(conj(osc), osc)
        self.assertFalse(cancelled.oscillatory)
        numpy.testing.assert_allclose(cancelled.evaluate(self.points[1]), 1.0)
        self.assertTrue(product(osc, osc).has(COUNTEREXAMPLE))

    def test_modulus(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `symbols_interface`
        `modulus` function.

        """

        # Execute the unit-test.
        osc = modulus(symbol_from_id("osc_counterexample"))
        self.assertFalse(osc.oscillatory)
        numpy.testing.assert_allclose(osc.evaluate(self.points[1]), 1.0)
        re_z1 = modulus(symbol_from_id("re_z1"))
        z = self.points[1]
        numpy.testing.assert_allclose(re_z1.evaluate(z), numpy.abs(z[:, 0].real))

    def test_precompose(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `symbols_interface`
        `precompose` function.

        """

        # Execute the unit-test; (f o phi_a)(0) = f(a).
        a = numpy.array([0.3, -0.4j])
        composed = precompose(symbol_from_id("abs2", n=2), a)
        self.assertFalse(composed.radial)
        value = composed.evaluate(numpy.zeros((1, 2)))[0]
        self.assertAlmostEqual(complex(value), 0.25, places=14)

    def test_lift_last(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `symbols_interface`
        `lift_last` function.

        """

        # Execute the unit-test.
        lifted = lift_last(symbol_from_id("z1"))
        self.assertEqual(lifted.n, 2)
        self.assertTrue(lifted.has(HOLOMORPHIC))
        z = self.points[2]
        numpy.testing.assert_allclose(lifted.evaluate(z), z[:, 1])
        with self.assertRaises(SymbolsInterfaceError):
            lift_last(symbol_from_id("z1", n=2))

    def test_harmonic_measure(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `symbols_interface`
        `harmonic_measure` function and the harmonic arc symbol.

        """

        # Execute the unit-test; the upper half-circle has measure
        # 1/2 at the center.
        for method in ("poisson", "closed"):
            value = harmonic_measure(z=0.0, theta1=0.0, theta2=numpy.pi, method=method)
            self.assertAlmostEqual(float(value), 0.5, places=10)
        z = numpy.array([0.3 + 0.2j, -0.5j, 0.7])
        numpy.testing.assert_allclose(
            harmonic_measure(z=z, theta1=0.5, theta2=4.0),
            harmonic_measure(z=z, theta1=0.5, theta2=4.0, method="closed"),
            atol=1.0e-9,
        )
        arc = symbol_from_id(f"harmonic_arc:0:{numpy.pi!r}")
        self.assertAlmostEqual(complex(arc.evaluate(numpy.zeros((1, 1)))[0]), 0.0)
        with self.assertRaises(SymbolsInterfaceError):
            harmonic_measure(z=0.0, theta1=1.0, theta2=0.5)
        with self.assertRaises(SymbolsInterfaceError):
            harmonic_measure(z=1.0, theta1=0.0, theta2=1.0)
        with self.assertRaises(SymbolsInterfaceError):
            symbol_from_id("harmonic_arc:0:1", n=2)


# ----


if __name__ == "__main__":
    unittest.main()
