import unittest

from hecke_cellular.resources.errors import ShapeError
from hecke_cellular.symgroup.composition import (
    compositions,
    dominance_le,
    is_partition,
    is_refinement,
    is_strict_partition,
    normalize,
    parse_composition,
    partitions,
    refinement_blocks,
    strict_partitions,
    transpose,
)


class TestCompositions(unittest.TestCase):
    """Compositions, partitions and the dominance order."""

    def test_normalize(self):
        self.assertEqual(normalize([2, 0, 3, 0, 0]), (2, 0, 3))
        self.assertEqual(parse_composition("[2,0,3]"), (2, 0, 3))
        self.assertEqual(parse_composition("2, 1"), (2, 1))
        with self.assertRaises(ShapeError):
            normalize([1, -1])

    def test_dominance(self):
        self.assertFalse(dominance_le((3, 3), (4, 1, 1)))
        self.assertFalse(dominance_le((4, 1, 1), (3, 3)))
        self.assertTrue(dominance_le((2, 1), (2, 1)))
        self.assertTrue(dominance_le((1, 1, 1), (3,)))
        self.assertTrue(dominance_le((2, 0, 2), (2, 2)))
        with self.assertRaises(ShapeError):
            dominance_le((2,), (1,))

    def test_refinement(self):
        self.assertTrue(is_refinement((1, 2, 1, 3, 2), (4, 5)))
        self.assertTrue(is_refinement((2, 1), (2, 1)))
        self.assertFalse(is_refinement((2, 1), (1, 2)))
        self.assertEqual(refinement_blocks((1, 2, 1, 3, 2), (4, 5)), [[0, 1, 2], [3, 4]])

    def test_partitions(self):
        self.assertEqual(partitions(4), ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)))
        self.assertEqual(strict_partitions(5), ((5,), (4, 1), (3, 2)))
        self.assertTrue(is_partition((3, 3, 1)))
        self.assertFalse(is_strict_partition((3, 3, 1)))
        self.assertEqual(len(compositions(4, 4)), 8)
        self.assertEqual(transpose((3, 1)), (2, 1, 1))


if __name__ == '__main__':
    unittest.main()
