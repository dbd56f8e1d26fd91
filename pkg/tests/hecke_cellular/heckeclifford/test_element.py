import unittest

from hecke_cellular.coefficients.rings import build_ring
from hecke_cellular.heckeclifford.element import (
    HCElement,
    anti_homomorphism_check,
    from_t_first,
    gamma_lemma_check,
    gamma_realization_check,
    hc_basis,
    span_failure_witness,
    to_t_first,
)
from hecke_cellular.resources.errors import RingError, ShapeError
from hecke_cellular.symgroup.perm import Perm


class TestHCMultiply(unittest.TestCase):
    """Relations of H^c_n(a; q) over Q(a, q)."""

    def setUp(self):
        self.ring = build_ring("Qaq")

    def c(self, n, *indices):
        return HCElement.clifford(n, indices, self.ring)

    def test_clifford_relations(self):
        self.assertEqual(self.c(2, 1) * self.c(2, 1), HCElement.one(2, self.ring).scale(self.ring.a))
        self.assertEqual(self.c(2, 2, 1), -self.c(2, 1, 2))
        self.assertEqual(self.c(2, 1) * self.c(2, 2), self.c(2, 1, 2))

    def test_generator_moves_past_clifford(self):
        t1 = HCElement.generator(2, 1, self.ring)
        self.assertEqual(t1 * self.c(2, 1), HCElement.basis((2,), Perm.simple(2, 1), self.ring))
        expected = (HCElement.basis((1,), Perm.simple(2, 1), self.ring)
                    + (self.c(2, 2) - self.c(2, 1)).scale(self.ring.q - self.ring.one))
        self.assertEqual(t1 * self.c(2, 2), expected)
        t1 = HCElement.generator(3, 1, self.ring)
        self.assertEqual(t1 * self.c(3, 3), HCElement.basis((3,), Perm.simple(3, 1), self.ring))

    def test_quadratic_and_braid(self):
        t1 = HCElement.generator(3, 1, self.ring)
        t2 = HCElement.generator(3, 2, self.ring)
        q = self.ring.q
        one = HCElement.one(3, self.ring)
        self.assertEqual(t1 * t1, t1.scale(q - self.ring.one) + one.scale(q))
        self.assertEqual(t1 * t2 * t1, t2 * t1 * t2)

    def test_associativity(self):
        x = HCElement.generator(3, 1, self.ring) + self.c(3, 2)
        y = self.c(3, 1, 3) + HCElement.generator(3, 2, self.ring)
        z = HCElement.generator(3, 1, self.ring) * self.c(3, 3)
        self.assertEqual((x * y) * z, x * (y * z))

    def test_basis_size(self):
        self.assertEqual(len(hc_basis(3)), 48)

    def test_t_first_round_trip(self):
        x = HCElement.generator(3, 2, self.ring) * self.c(3, 1, 3) + self.c(3, 2)
        self.assertEqual(from_t_first(to_t_first(x), 3, self.ring), x)

    def test_parity(self):
        self.assertEqual(self.c(2, 1).parity(), 1)
        self.assertEqual(HCElement.one(2, self.ring).parity(), 0)
        self.assertIsNone((self.c(2, 1) + HCElement.one(2, self.ring)).parity())

    def test_rank_mismatch(self):
        with self.assertRaises(ShapeError):
            HCElement.one(2, self.ring) * HCElement.one(3, self.ring)
        with self.assertRaises(ShapeError):
            HCElement.clifford(2, (3,), self.ring)


class TestGammaElements(unittest.TestCase):

    def test_gamma_lemma(self):
        ring = build_ring("Q:q=3,a=5")
        for n in range(1, 4):
            for indices in ((), (1,), (1, 2), tuple(range(1, n + 1))):
                if all(i <= n for i in indices):
                    self.assertTrue(gamma_lemma_check(n, indices, ring), (n, indices))
        with self.assertRaises(ShapeError):
            gamma_lemma_check(2, (2, 1), ring)

    def test_gamma_realization(self):
        ring = build_ring("Qaq")
        for lam in ((2, 1), (1, 2), (3,)):
            self.assertTrue(gamma_realization_check(lam, ring), lam)


class TestSpecialisations(unittest.TestCase):

    def test_anti_homomorphism_at_q_one(self):
        self.assertTrue(anti_homomorphism_check(2, build_ring("Q:q=1,a=2"), trials=5))
        self.assertTrue(anti_homomorphism_check(2, build_ring("gf:3,q=1,a=1"), trials=5))

    def test_anti_homomorphism_needs_q_one(self):
        with self.assertRaises(RingError):
            anti_homomorphism_check(2, build_ring("Q:q=2,a=1"), trials=1)

    def test_span_failure_witness(self):
        self.assertTrue(span_failure_witness(build_ring("gf:2,q=1,a=1")))
        self.assertFalse(span_failure_witness(build_ring("Qaq")))


if __name__ == '__main__':
    unittest.main()
