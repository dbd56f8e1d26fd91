import unittest

from hecke_cellular.coefficients.laurent import A, ONE, Q, LaurentPolynomial
from hecke_cellular.coefficients.qnumbers import (
    even_ratio_power,
    q2_characteristic,
    q2_integer,
    q_binomial,
    q_characteristic,
    q_factorial,
    q_integer,
    q_multinomial,
)
from hecke_cellular.coefficients.rings import build_ring
from hecke_cellular.resources.errors import ShapeError
from hecke_cellular.symgroup.cosets import coset_poincare_polynomial, poincare_polynomial


class TestQNumbers(unittest.TestCase):
    """q-integers, factorials and multinomials."""

    def setUp(self):
        self.ring = build_ring("ZaQ")

    def test_q_integer(self):
        self.assertEqual(q_integer(3, self.ring), 1 + Q + Q ** 2)
        self.assertFalse(q_integer(0, self.ring))
        self.assertEqual(q2_integer(2, self.ring), 1 + Q ** 2)
        self.assertEqual(q2_integer(1, self.ring), ONE)

    def test_q_factorial(self):
        self.assertEqual(q_factorial(3, self.ring), (1 + Q) * (1 + Q + Q ** 2))
        self.assertEqual(q_factorial(0, self.ring), ONE)
        for n in range(6):
            self.assertEqual(q_factorial(n, self.ring), poincare_polynomial(n))

    def test_q_multinomial(self):
        self.assertEqual(q_multinomial(2, (1, 1), self.ring), 1 + Q)
        expected = LaurentPolynomial({(0, 0): 1, (0, 1): 1, (0, 2): 2, (0, 3): 1, (0, 4): 1})
        self.assertEqual(q_multinomial(4, (2, 2), self.ring), expected)
        self.assertEqual(q_multinomial(4, (4,), self.ring), ONE)
        for parts in [(2, 2), (1, 2, 1), (3, 0, 2), (1, 1, 1, 1)]:
            self.assertEqual(q_multinomial(sum(parts), parts, self.ring), coset_poincare_polynomial(parts))
        with self.assertRaises(ShapeError):
            q_multinomial(4, (2, 1), self.ring)

    def test_q_binomial(self):
        self.assertEqual(q_binomial(3, 1, self.ring), 1 + Q + Q ** 2)
        self.assertFalse(q_binomial(2, 3, self.ring))

    def test_even_ratio_power(self):
        self.assertEqual(even_ratio_power(0, self.ring, 3), q_factorial(3, self.ring))
        self.assertEqual(even_ratio_power(1, self.ring, 2), A * (Q - 1))
        self.assertEqual(
            even_ratio_power(1, self.ring, 4),
            A * (Q - 1) * q_integer(3, self.ring) * q_integer(4, self.ring),
        )
        with self.assertRaises(ShapeError):
            even_ratio_power(2, self.ring, 3)

    def test_bare_ratio_needs_field(self):
        generic = build_ring("Qaq")
        ratio = even_ratio_power(1, generic)
        self.assertEqual(ratio * (generic.q + generic.one), generic.a * (generic.q - generic.one))
        with self.assertRaises(ZeroDivisionError):
            even_ratio_power(1, build_ring("cyclo:2"))

    def test_specialisation_commutes(self):
        ring = build_ring("gf:11,q=2,a=3")
        value = q_multinomial(5, (2, 3), ring)
        # (2^5 - 1)(2^4 - 1) / ((2^2 - 1)(2 - 1)) = 155 = 1 mod 11
        quotient = q_factorial(5, ring) * ring.inv(q_factorial(2, ring) * q_factorial(3, ring))
        self.assertEqual(value, quotient)
        self.assertEqual(value, ring.one)

    def test_characteristics(self):
        self.assertEqual(q_characteristic(build_ring("cyclo:3"), 5), 3)
        self.assertEqual(q_characteristic(build_ring("cyclo:4"), 5), 4)
        self.assertEqual(q2_characteristic(build_ring("cyclo:4"), 5), 2)
        self.assertIsNone(q_characteristic(build_ring("Qq"), 6))
        self.assertIsNone(q2_characteristic(build_ring("Q:q=-1"), 4))
        self.assertEqual(q_characteristic(build_ring("gf:3,q=1,a=1"), 4), 3)


if __name__ == '__main__':
    unittest.main()
