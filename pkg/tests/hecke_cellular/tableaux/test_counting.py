import unittest

from hecke_cellular.resources.errors import ShapeError
from hecke_cellular.symgroup.composition import compositions, partitions
from hecke_cellular.tableaux.counting import rsk_count_identity, shifted_knuth_count_identity


class TestCountIdentities(unittest.TestCase):
    """RSK and shifted Knuth cardinalities checked by enumeration."""

    def test_rsk_examples(self):
        self.assertEqual(rsk_count_identity((1, 1), (1, 1)), (2, 2))
        self.assertEqual(rsk_count_identity((3,), (3,)), (1, 1))
        self.assertEqual(rsk_count_identity((2, 3), (3, 1, 0, 1)), (4, 4))

    def test_rsk_all_small(self):
        for n in range(1, 5):
            for lam in compositions(n, n):
                for mu in partitions(n):
                    lhs, rhs = rsk_count_identity(lam, mu)
                    self.assertEqual(lhs, rhs, (lam, mu))

    def test_shifted_knuth_examples(self):
        self.assertEqual(shifted_knuth_count_identity((1,), (1,)), (2, 2))
        self.assertEqual(shifted_knuth_count_identity((1, 1), (1, 1)), (8, 8))
        self.assertEqual(shifted_knuth_count_identity((2, 1), (2, 1)), (12, 12))

    def test_shifted_knuth_all_small(self):
        for n in range(1, 4):
            for lam in compositions(n, n):
                for mu in compositions(n, n):
                    lhs, rhs = shifted_knuth_count_identity(lam, mu)
                    self.assertEqual(lhs, rhs, (lam, mu))

    def test_size_mismatch(self):
        with self.assertRaises(ShapeError):
            rsk_count_identity((2,), (1,))


if __name__ == '__main__':
    unittest.main()
