import unittest

import numpy as np

from hecke_cellular.cellcheck.radical import (
    count_simples_by_radical,
    null_space,
    radical_basis,
    radical_cross_check,
    row_reduce,
    structure_constants,
    working_dtype,
)
from hecke_cellular.coefficients.rings import build_ring
from hecke_cellular.resources.errors import RingError, ShapeError, SizeCapExceeded


class TestModularLinearAlgebra(unittest.TestCase):

    def test_row_reduce(self):
        reduced, pivots = row_reduce(np.array([[2, 4, 1], [1, 2, 4]]), 5)
        self.assertEqual(pivots, [0, 2])
        self.assertEqual(reduced.tolist(), [[1, 2, 0], [0, 0, 1]])

    def test_null_space(self):
        matrix = np.array([[1, 2], [2, 4]])
        basis = null_space(matrix, 5)
        self.assertEqual(basis.shape, (1, 2))
        self.assertFalse(((matrix @ basis.T) % 5).any())
        # a non-zero multiple of (3, 1)
        self.assertEqual((3 * basis[0, 1] - basis[0, 0]) % 5, 0)
        self.assertNotEqual(basis[0, 1] % 5, 0)
        self.assertEqual(null_space(np.eye(3, dtype=np.int64), 7).shape, (0, 3))

    def test_large_prime_keeps_exact_integers(self):
        p = 2147483647
        reduced, pivots = row_reduce(np.array([[p - 1, 2], [1, p - 2]], dtype=object), p, object)
        self.assertEqual(pivots, [0])
        self.assertEqual(reduced.tolist(), [[1, p - 2]])

    def test_working_dtype(self):
        self.assertIs(working_dtype(3, 48), np.int64)
        self.assertIs(working_dtype(2147483647, 6), object)


class TestStructureConstants(unittest.TestCase):

    def test_hecke_table(self):
        sc = structure_constants("hecke", 2, build_ring("gf:3,q=2,a=1"))
        self.assertEqual(sc.dimension, 2)
        self.assertFalse(sc.parity.any())
        one = sc.keys.index(next(k for k in sc.keys if k.length == 0))
        s = 1 - one
        # T_1^2 = (q - 1) T_1 + q
        self.assertEqual(sc.table[s, s].tolist()[s], 1)
        self.assertEqual(sc.table[s, s].tolist()[one], 2)

    def test_hc_parity(self):
        sc = structure_constants("hc", 2, build_ring("gf:3,q=1,a=1"))
        self.assertEqual(sc.dimension, 8)
        self.assertEqual(int(sc.parity.sum()), 4)

    def test_guards(self):
        with self.assertRaises(RingError):
            structure_constants("hecke", 2, build_ring("Qq"))
        with self.assertRaises(SizeCapExceeded):
            structure_constants("hecke", 5, build_ring("gf:3,q=1,a=1"))
        with self.assertRaises(ShapeError):
            structure_constants("schur", 2, build_ring("gf:3,q=1,a=1"))


class TestRadicalOracle(unittest.TestCase):
    """Simple-module counts from A/Rad A."""

    def test_semisimple_group_algebra(self):
        report = count_simples_by_radical(structure_constants("hecke", 3, build_ring("gf:5,q=1,a=1")))
        self.assertEqual(report.radical_dimension, 0)
        self.assertEqual(report.simple_count, 3)

    def test_modular_group_algebra(self):
        sc = structure_constants("hecke", 3, build_ring("gf:3,q=1,a=1"))
        self.assertEqual(radical_basis(sc).shape[0], 4)
        self.assertEqual(count_simples_by_radical(sc).simple_count, 2)

    def test_cross_check_hecke(self):
        for text in ("gf:3,q=1,a=1", "gf:5,q=4,a=1"):
            report = radical_cross_check("hecke", 3, build_ring(text))
            self.assertEqual(report["status"], "pass", report)
            self.assertEqual(report["classification_count"], 2)

    def test_cross_check_large_prime(self):
        """Products of residues near 2**31 must not wrap around."""
        ring = build_ring("gf:2147483647,q=1,a=1")
        sc = structure_constants("hecke", 3, ring)
        self.assertEqual(sc.dtype, object)
        report = radical_cross_check("hecke", 3, ring)
        self.assertEqual(report["status"], "pass", report)
        self.assertEqual(report["oracle"]["simple_count"], 3)
        self.assertEqual(report["oracle"]["radical_dimension"], 0)

    def test_cross_check_hecke_clifford(self):
        ring = build_ring("gf:3,q=1,a=1")
        report = radical_cross_check("hc", 2, ring)
        self.assertEqual(report["status"], "pass", report)
        self.assertEqual(report["oracle"]["simple_count"], 1)
        report = radical_cross_check("hc", 3, ring)
        self.assertEqual(report["status"], "pass", report)
        self.assertEqual(report["oracle"]["dimension"], 48)


if __name__ == '__main__':
    unittest.main()
