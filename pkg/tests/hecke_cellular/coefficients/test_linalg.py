import unittest

from hecke_cellular.coefficients.linalg import EchelonSpace, add_scaled, intersection, span_of
from hecke_cellular.coefficients.rings import build_ring
from hecke_cellular.resources.errors import RingError


class TestEchelonSpace(unittest.TestCase):
    """Sparse reduced row echelon form over a field."""

    def setUp(self):
        self.ring = build_ring("Q")
        one = self.ring.one
        self.x_plus_y = {"x": one, "y": one}
        self.y_plus_z = {"y": one, "z": one}

    def test_rank_and_membership(self):
        space = span_of(self.ring, [self.x_plus_y, self.y_plus_z, {"x": self.ring.one, "z": -self.ring.one}])
        self.assertEqual(space.rank, 2)
        self.assertTrue(space.contains({"x": self.ring.from_int(2), "y": self.ring.from_int(3), "z": self.ring.one}))
        self.assertFalse(space.contains({"z": self.ring.one}))

    def test_reduce_respects_order(self):
        # z is eliminated first, so the residue of z is expressed through x and y
        space = EchelonSpace(self.ring, order=lambda key: {"z": 0, "y": 1, "x": 2}[key])
        space.add(self.y_plus_z)
        self.assertEqual(space.pivots, ["z"])
        self.assertEqual(space.reduce({"z": self.ring.one}), {"y": -self.ring.one})

    def test_solve(self):
        space = span_of(self.ring, [self.x_plus_y, self.y_plus_z])
        target = {}
        add_scaled(target, self.x_plus_y, self.ring.from_int(2))
        add_scaled(target, self.y_plus_z, self.ring.from_int(-1))
        coords = space.solve(target)
        self.assertIsNotNone(coords)
        rebuilt = {}
        rows = dict(zip(space.pivots, space.rows()))
        for pivot, value in coords.items():
            add_scaled(rebuilt, rows[pivot], value)
        self.assertEqual(rebuilt, target)
        self.assertIsNone(space.solve({"w": self.ring.one}))

    def test_intersection(self):
        first = span_of(self.ring, [{"x": self.ring.one}, {"y": self.ring.one}])
        second = span_of(self.ring, [{"y": self.ring.one}, {"z": self.ring.one}])
        meet = intersection(self.ring, first, second)
        self.assertEqual(meet.rank, 1)
        self.assertTrue(meet.contains({"y": self.ring.one}))

    def test_needs_field(self):
        with self.assertRaises(RingError):
            EchelonSpace(build_ring("ZaQ"))


if __name__ == '__main__':
    unittest.main()
