#!/usr/bin/env python3

"""
Script
------

    test_operators_interface.py

Description
-----------

    This script is the driver script for the
    `bergman.operators_interface` module unit-tests.

Classes
-------

    TestOperatorsInterface()

        This the base-class object for all `operators_interface`
        module unit-tests; it is a sub-class of TestCase.

Requirements
------------

- numpy; https://numpy.org/

Author(s)
---------

    Henry R. Winterbottom; 02 March 2024

"""

# ----

import csv
import os
import tempfile
import unittest
from unittest import TestCase

import numpy

from bergman.geometry_interface import Weight
from bergman.linalg_interface import operator_norm
from bergman.operators_interface import (
    block_decomposition_check,
    build_basis,
    export_csv,
    hankel_gram,
    hankel_norm,
    product_deviation,
    radial_eigenvalues,
    semicommutator,
    toeplitz_matrix,
)
from bergman.oscillatory_interface import oscillatory_gamma0
from bergman.quadrature_interface import build_rule
from bergman.symbols_interface import conj, precompose, symbol_from_id
from utils.exceptions_interface import OperatorsInterfaceError

# ----


class TestOperatorsInterface(TestCase):
    """
    Description
    -----------

    This the base-class object for all `operators_interface` module
    unit-tests; it is a sub-class of TestCase.

    """

    def setUp(self: TestCase) -> None:
        """
        Description
        -----------

        This method defines the base-class attributes for all
        `operators_interface` unit-tests.

        """

        # Define the base-class attributes.
        self.disk = Weight(n=1, lam=2.0)
        self.ball = Weight(n=2, lam=3.5)
        self.z1 = symbol_from_id("z1")

    def test_build_basis(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `operators_interface`
        `build_basis` function.

        """

        # Execute the unit-test.
        basis = build_basis(n=2, max_degree=3)
        self.assertEqual(basis.dimension, 10)
        self.assertEqual(basis.multi_index(0), (0, 0))
        self.assertEqual(basis.index_of((0, 1)), 2)
        self.assertEqual(list(basis.degrees), [0, 1, 1, 2, 2, 2, 3, 3, 3, 3])
        self.assertEqual(build_basis(n=1, max_degree=5).dimension, 6)
        with self.assertRaises(OperatorsInterfaceError):
            basis.index_of((4, 0))
        with self.assertRaises(OperatorsInterfaceError):
            build_basis(n=3, max_degree=2)

    def test_toeplitz_matrix(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `operators_interface`
        `toeplitz_matrix` function; T_|z|^2 is diagonal with entries
        (m + n) / (m + lam) and the product rule path reproduces the
        diagonal fast path.

        """

        # Execute the unit-test.
        for weight in (Weight(n=1, lam=5.0), self.ball):
            basis = build_basis(n=weight.n, max_degree=5)
            abs2 = symbol_from_id("abs2", n=weight.n)
            m = basis.degrees
            expected = (m + weight.n) / (m + weight.lam)
            fast = toeplitz_matrix(f=abs2, weight=weight, basis=basis)
            numpy.testing.assert_allclose(fast.diagonal(), expected, rtol=1.0e-12)
            self.assertEqual(
                float(numpy.max(numpy.abs(fast.entries - numpy.diag(fast.diagonal())))),
                0.0,
            )
            rule = build_rule(n=weight.n, weight=weight, target_degree=16)
            slow = toeplitz_matrix(f=abs2, weight=weight, basis=basis, rule=rule)
            numpy.testing.assert_allclose(slow.entries, fast.entries, atol=1.0e-10)

        # The constant symbol gives the Gram matrix.
        basis = build_basis(n=2, max_degree=4)
        gram = toeplitz_matrix(
            f=symbol_from_id("const1", n=2),
            weight=self.ball,
            basis=basis,
            rule=build_rule(n=2, weight=self.ball, target_degree=8),
        )
        numpy.testing.assert_allclose(gram.entries, numpy.eye(15), atol=1.0e-10)

    def test_oscillatory_rejected(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `operators_interface`
        `toeplitz_matrix` function; oscillatory symbols without the
        RADIAL tag are rejected.

        """

        # Execute the unit-test.
        moved = precompose(symbol_from_id("osc_counterexample"), [0.2])
        with self.assertRaises(OperatorsInterfaceError):
            basis = build_basis(n=1, max_degree=2)
            toeplitz_matrix(f=moved, weight=self.disk, basis=basis)

    def test_radial_eigenvalues(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `operators_interface`
        `radial_eigenvalues` function.

        """

        # Execute the unit-test.
        weight = Weight(n=1, lam=3.0)
        gamma = radial_eigenvalues(f=symbol_from_id("abs2"), weight=weight, max_m=4)
        m = numpy.arange(5)
        numpy.testing.assert_allclose(gamma, (m + 1.0) / (m + 3.0))
        osc = radial_eigenvalues(
            f=symbol_from_id("osc_counterexample"), weight=self.disk, max_m=0
        )
        self.assertLess(abs(osc[0] - oscillatory_gamma0(alpha=0.0).value), 1.0e-8)
        with self.assertRaises(OperatorsInterfaceError):
            radial_eigenvalues(f=self.z1, weight=self.disk, max_m=2)

    def test_semicommutator(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `operators_interface`
        `semicommutator` function.

        """

        # Execute the unit-test; the semi-commutator vanishes for a
        # holomorphic right factor.
        holo = semicommutator(
            f=symbol_from_id("re_z1"), g=self.z1, weight=self.disk, N=6, M=8
        )
        self.assertLess(operator_norm(matrix=holo.entries), 1.0e-10)

        # T_z T_conj(z) - T_|z|^2 is diagonal and largest in modulus at
        # the constant function, where T_conj(z) 1 = 0 leaves -1 / lam.
        anti = semicommutator(f=self.z1, g=conj(self.z1), weight=self.disk, N=6, M=8)
        self.assertAlmostEqual(complex(anti.entries[0, 0]).real, -0.5, places=10)
        self.assertAlmostEqual(operator_norm(matrix=anti.entries), 0.5, places=10)
        with self.assertRaises(OperatorsInterfaceError):
            semicommutator(f=self.z1, g=self.z1, weight=self.disk, N=6, M=4)

    def test_product_deviation(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `operators_interface`
        `product_deviation` function.

        """

        # Execute the unit-test.
        z1 = symbol_from_id("z1", n=2)
        deviation = product_deviation(symbols=[z1, z1, z1], weight=self.ball, N=4, M=7)
        self.assertLess(operator_norm(matrix=deviation.entries), 1.0e-10)
        with self.assertRaises(OperatorsInterfaceError):
            product_deviation(symbols=[], weight=self.ball, N=4, M=7)
        with self.assertRaises(OperatorsInterfaceError):
            product_deviation(symbols=[z1] * 5, weight=self.ball, N=4, M=7)

    def test_hankel_norm(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `operators_interface`
        `hankel_gram` and `hankel_norm` functions.

        """

        # Execute the unit-test; ||H_conj(z)|| = sqrt(1/2) at lam = 2
        # and holomorphic symbols have vanishing Hankel operators.
        value = hankel_norm(f=conj(self.z1), weight=self.disk, N=6, M=8)
        self.assertAlmostEqual(value, numpy.sqrt(0.5), places=10)
        self.assertLess(hankel_norm(f=self.z1, weight=self.disk, N=6, M=8), 1.0e-6)
        gram = hankel_gram(f=symbol_from_id("re_z1"), weight=self.disk, N=4, M=6)
        numpy.testing.assert_allclose(gram.entries, gram.entries.conj().T)
        self.assertEqual(gram.kind, "hankel_gram")

    def test_block_decomposition_check(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `operators_interface`
        `block_decomposition_check` function.

        """

        # Execute the unit-test.
        report = block_decomposition_check(c=symbol_from_id("re_z1"), N=4)
        self.assertLess(report.factorization_error, 1.0e-12)
        self.assertLess(report.cross_block_max, 1.0e-8)
        self.assertLess(report.block_error_max, 1.0e-8)
        self.assertEqual(len(report.block_errors), 5)
        with self.assertRaises(OperatorsInterfaceError):
            block_decomposition_check(c=symbol_from_id("beta0"), N=2)

    def test_export_csv(self: TestCase) -> None:
        """
        Description
        -----------

        This method provides a unit-test for the `operators_interface`
        `export_csv` function.

        """

        # Execute the unit-test.
        basis = build_basis(n=1, max_degree=3)
        abs2 = symbol_from_id("abs2")
        matrix = toeplitz_matrix(f=abs2, weight=self.disk, basis=basis)
        with tempfile.TemporaryDirectory() as dirpath:
            path = os.path.join(dirpath, "matrix", "toeplitz.csv")
            export_csv(matrix=matrix, path=path)
            with open(path, "r", encoding="utf-8", newline="") as stream:
                rows = list(csv.reader(stream))
        self.assertEqual(len(rows), 4)
        (re, im) = rows[1][1].split(",")
        self.assertEqual(float(re), matrix.entries[1, 1].real)
        self.assertEqual(float(im), 0.0)


# ----


if __name__ == "__main__":
    unittest.main()
