import unittest

from hecke_cellular.coefficients.laurent import A, ONE, Q
from hecke_cellular.coefficients.qnumbers import laurent_q_factorial
from hecke_cellular.coefficients.rings import build_ring
from hecke_cellular.heckeclifford.ideals import (
    GammaAlgebra,
    K_ideal,
    count_super_simples,
    delta_ideal,
    delta_space,
    delta_two_sided_check,
    has_simple,
    k_decomposition_check,
    k_generators,
    k_inclusions_check,
    predicted_simple,
    super_e_restricted,
    theta_check,
    theta_ideal,
    trace_ideal_Jc,
)
from hecke_cellular.resources.errors import ShapeError


class TestGammaAlgebra(unittest.TestCase):

    def test_theta_pairs(self):
        self.assertEqual(theta_ideal((2, 2, 1)), ((1, 2),))
        self.assertEqual(theta_ideal((3, 1)), ())
        self.assertEqual(theta_ideal((1, 1, 1)), ((1, 2), (1, 3), (2, 3)))
        with self.assertRaises(ShapeError):
            theta_ideal((1, 2))

    def test_squares(self):
        ring = build_ring("Qaq")
        gamma = GammaAlgebra((2, 1), ring)
        self.assertEqual(gamma.squares[1], ring.a * (ring.one + ring.q * ring.q))
        self.assertEqual(gamma.squares[2], ring.a)
        self.assertEqual(gamma.gamma(3), {})

    def test_quotient(self):
        self.assertIsNone(GammaAlgebra((1, 1), build_ring("Qaq")).quotient())
        self.assertEqual(GammaAlgebra((1, 1), build_ring("gf:2,q=1,a=1")).quotient().dimension, 2)
        self.assertEqual(GammaAlgebra((2, 2), build_ring("cyclo:4")).quotient().dimension, 2)
        self.assertEqual(GammaAlgebra((2, 1), build_ring("Qaq")).quotient().dimension, 4)

    def test_theta_check(self):
        ring = build_ring("Qaq")
        self.assertTrue(theta_check((1, 1), ring))
        self.assertTrue(theta_check((2, 1), ring))


class TestKIdeals(unittest.TestCase):

    def test_small_generators(self):
        self.assertEqual(K_ideal(0), [ONE])
        self.assertEqual(K_ideal(1), [ONE])
        self.assertEqual(K_ideal(2), [laurent_q_factorial(2), A * (Q - 1)])
        self.assertEqual(len(K_ideal(5)), 3)
        with self.assertRaises(ShapeError):
            K_ideal(-1)

    def test_inclusions(self):
        for n in range(1, 6):
            self.assertTrue(k_inclusions_check(n), n)

    def test_decomposition(self):
        ring = build_ring("Q:q=3,a=5")
        for n in range(1, 4):
            self.assertTrue(k_decomposition_check(n, ring), n)

    def test_over_fields(self):
        gf3 = build_ring("gf:3,q=1,a=1")
        self.assertEqual(k_generators(2, gf3), [gf3.one])
        self.assertEqual(k_generators(3, gf3), [])
        self.assertEqual(k_generators(-1, gf3), [gf3.one])
        qaq = build_ring("Qaq")
        self.assertEqual(k_generators(4, qaq), [qaq.one])


class TestDelta(unittest.TestCase):

    def test_generic_delta_is_everything(self):
        ring = build_ring("Qaq")
        self.assertEqual(delta_space((2, 1), ring).rank, 4)
        self.assertTrue(delta_two_sided_check((2, 1), ring))

    def test_delta_at_characteristic_three(self):
        ring = build_ring("gf:3,q=1,a=1")
        self.assertEqual(delta_ideal((3,), ring), [{(1,): ring.one}])
        self.assertEqual(delta_space((3,), ring).rank, 1)
        self.assertTrue(delta_two_sided_check((3,), ring))
        self.assertTrue(delta_two_sided_check((2, 1), ring))

    def test_delta_over_laurent_ring(self):
        ring = build_ring("ZaQ")
        self.assertTrue(delta_ideal((2, 1), ring))


class TestTraceIdeal(unittest.TestCase):

    def test_sandwich(self):
        for lam in ((1,), (2,), (2, 1)):
            data = trace_ideal_Jc(lam)
            self.assertTrue(data.J, lam)
            self.assertTrue(data.lower_bound, lam)
            self.assertTrue(data.upper_bound, lam)

    def test_non_strict(self):
        data = trace_ideal_Jc((1, 1))
        self.assertIsNone(data.J)
        self.assertIsNone(data.lower_bound)
        self.assertEqual(data.theta, ((1, 2),))
        self.assertTrue(data.notes)

    def test_laurent_ring(self):
        data = trace_ideal_Jc((2,), build_ring("ZaQ"))
        self.assertTrue(data.J)
        self.assertIsNone(data.upper_bound)

    def test_to_json(self):
        payload = trace_ideal_Jc((2, 1)).to_json()
        self.assertEqual(payload["lambda"], [2, 1])
        self.assertEqual(sorted(payload["K"]), ["0", "1"])
        self.assertEqual(payload["theta"], [])
        self.assertTrue(payload["sandwich"]["lower"])


class TestSuperClassification(unittest.TestCase):

    def test_super_e_restricted(self):
        self.assertFalse(super_e_restricted((3,), 3, 3))
        self.assertTrue(super_e_restricted((3,), 3, None))
        self.assertTrue(super_e_restricted((3, 1), 3, 3))
        self.assertTrue(super_e_restricted((5,), None, None))

    def test_characteristic_three(self):
        ring = build_ring("gf:3,q=1,a=1")
        self.assertFalse(has_simple((3,), ring))
        self.assertTrue(has_simple((2, 1), ring))
        self.assertFalse(has_simple((1, 1, 1), ring))
        for n, count in ((3, 1), (4, 1)):
            result = count_super_simples(n, ring)
            self.assertEqual(result.count, count, n)
            self.assertTrue(result.consistent, n)

    def test_generic(self):
        ring = build_ring("Qaq")
        for n in (3, 4):
            result = count_super_simples(n, ring)
            self.assertEqual(result.count, 2, n)
            self.assertEqual(result.predicted, 2, n)
            self.assertIsNone(result.e2)

    def test_a_zero_reduces_to_hecke(self):
        ring = build_ring("Q:q=1,a=0")
        self.assertTrue(predicted_simple((1, 1), ring, 2))
        result = count_super_simples(3, build_ring("gf:3,q=1,a=0"))
        self.assertTrue(result.consistent)

    def test_to_frame(self):
        frame = count_super_simples(3, build_ring("Qaq")).to_frame()
        self.assertEqual(list(frame["lambda"]), ["3", "2,1", "1,1,1"])


if __name__ == '__main__':
    unittest.main()
