#!/usr/bin/env python3

"""
Script
------

    test_quadrature_interface.py

Description
-----------

    This script is the driver script for the
    `bergman.quadrature_interface` module unit-tests.

Classes
-------

    TestQuadratureInterface()

        This the base-class object for all `quadrature_interface`
        module unit-tests; it is a sub-class of TestCase.

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

from bergman.geometry_interface import Weight, basis_eval
from bergman.quadrature_interface import (
    assemble,
    build_rule,
    disk_rule,
    gauss_jacobi_unit,
    integrate,
    radial_weighted_integral,
)
from utils.exceptions_interface import QuadratureInterfaceError

# ----


class TestQuadratureInterface(TestCase):
    """
    Description
    -----------

    This the base-class object for all `quadrature_interface` module
    unit-tests; it is a sub-class of TestCase.

    """

    def test_gauss_jacobi_unit(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `quadrature_interface`
        `gauss_jacobi_unit` function.

        """

        # Execute the unit-test; the mean of s under (1 - s)^2 is 1/4.
        (nodes, weights) = gauss_jacobi_unit(npts=12, alpha=2.0)
        self.assertAlmostEqual(float(numpy.sum(weights)), 1.0, places=14)
        self.assertTrue(numpy.all((nodes > 0.0) & (nodes < 1.0)))
        self.assertAlmostEqual(float(numpy.sum(weights * nodes)), 0.25, places=14)

    def test_build_rule(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `quadrature_interface`
        `build_rule` and `integrate` functions.

        """

        # Execute the unit-test; the rule reproduces the monomial
        # moments ||z^a||^2 and annihilates z_1.
        cases = ((1, 2.0, 0.5), (2, 3.0, 2.0 / 3.0), (1, 7.5, 1.0 / 7.5))
        for (n, lam, expected) in cases:
            weight = Weight(n=n, lam=lam)
            rule = build_rule(n=n, weight=weight, target_degree=16)
            self.assertAlmostEqual(float(numpy.sum(rule.weights)), 1.0, places=12)
            self.assertTrue(numpy.all(rule.weights > 0.0))
            self.assertGreaterEqual(rule.exactness_degree, 16)
            moment = integrate(
                f=lambda z: numpy.sum(numpy.abs(z) ** 2, axis=-1), rule=rule
            )
            self.assertAlmostEqual(moment.real, expected, places=12)
            odd = integrate(f=lambda z: z[..., 0], rule=rule)
            self.assertAlmostEqual(abs(odd), 0.0)
        with self.assertRaises(QuadratureInterfaceError):
            build_rule(n=3, weight=Weight(n=3, lam=5.0), target_degree=4)

    def test_disk_rule(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `quadrature_interface`
        `disk_rule` function.

        """

        # Execute the unit-test.
        rule = disk_rule(n=2, radius=0.5, degree=8)
        self.assertAlmostEqual(float(numpy.sum(rule.weights)), 0.5**4, places=12)
        self.assertTrue(numpy.all(numpy.linalg.norm(rule.points, axis=-1) < 0.5))
        with self.assertRaises(QuadratureInterfaceError):
            disk_rule(n=1, radius=1.0, degree=8)

    def test_integrate_nonfinite(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `quadrature_interface`
        `integrate` function for an integrand which is not finite at a
        node.

        """

        # Execute the unit-test.
        rule = build_rule(n=1, weight=Weight(n=1, lam=2.0), target_degree=4)
        with self.assertRaises(QuadratureInterfaceError):
            integrate(f=lambda z: numpy.full(z.shape[:-1], numpy.nan), rule=rule)

    def test_assemble(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `quadrature_interface`
        `assemble` function; the Gram matrix of the orthonormal basis
        is the identity.

        """

        # Execute the unit-test.
        weight = Weight(n=2, lam=3.0)
        indices = numpy.array(
            [(a, d - a) for d in range(5) for a in range(d, -1, -1)]
        )
        rule = build_rule(n=2, weight=weight, target_degree=8)
        gram = assemble(
            rule=rule,
            weight=weight,
            values=numpy.ones(rule.size),
            rows=indices,
            cols=indices,
        )
        numpy.testing.assert_allclose(gram, numpy.eye(len(indices)), atol=1.0e-10)
        with self.assertRaises(QuadratureInterfaceError):
            assemble(
                rule=rule,
                weight=weight,
                values=numpy.full(rule.size, numpy.inf),
                rows=indices,
                cols=indices,
            )
        self.assertEqual(
            basis_eval(weight=weight, indices=indices, z=rule.points).shape,
            (rule.size, len(indices)),
        )

    def test_radial_weighted_integral(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `quadrature_interface`
        `radial_weighted_integral` function.

        """

        # Execute the unit-test; the Beta(beta + 1, alpha + 1) mean of s
        # is (beta + 1) / (alpha + beta + 2).
        value = radial_weighted_integral(g=lambda s: s, alpha=3.0, beta=1.0)
        self.assertAlmostEqual(value.real, 2.0 / 6.0, places=12)
        value = radial_weighted_integral(g=lambda s: s, alpha=-0.5, beta=-0.5)
        self.assertAlmostEqual(value.real, 0.5, places=12)
        with self.assertRaises(QuadratureInterfaceError):
            radial_weighted_integral(g=lambda s: s, alpha=-1.0)


# ----


if __name__ == "__main__":
    unittest.main()
