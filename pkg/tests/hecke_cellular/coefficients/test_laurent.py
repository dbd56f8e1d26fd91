import unittest

from hecke_cellular.coefficients.laurent import A, ONE, Q, Q_INV, ZERO, LaurentPolynomial
from hecke_cellular.resources.errors import InvariantViolation


class TestLaurentPolynomial(unittest.TestCase):
    """Arithmetic in Z[a, q^{±1}]."""

    def test_canonical_form_drops_zeros(self):
        p = LaurentPolynomial({(0, 0): 1, (0, 1): 0, (1, 2): 3})
        self.assertEqual(p.terms, (((0, 0), 1), ((1, 2), 3)))
        self.assertEqual(Q - Q, ZERO)
        self.assertFalse(Q - Q)

    def test_ring_operations(self):
        self.assertEqual((Q + 1) * (Q - 1), Q ** 2 - 1)
        self.assertEqual(Q * Q_INV, ONE)
        self.assertEqual(Q ** -2, Q_INV * Q_INV)
        self.assertEqual(2 - Q, LaurentPolynomial({(0, 0): 2, (0, 1): -1}))

    def test_exact_division(self):
        self.assertEqual((Q ** 2 - 1).exquo(Q - 1), Q + 1)
        self.assertEqual((A * Q_INV * (Q + 1) * (Q + 1)).exquo(Q + 1), A * Q_INV * (Q + 1))
        self.assertIsNone((Q ** 2 + 1).try_exquo(Q + 1))
        with self.assertRaises(InvariantViolation):
            (Q ** 2 + 1).exquo(Q + 1)
        self.assertTrue((Q + 1).divides(Q ** 3 + 1))

    def test_units(self):
        self.assertTrue(Q_INV.is_unit())
        self.assertTrue((-Q).is_unit())
        self.assertFalse((Q + 1).is_unit())
        self.assertFalse(A.is_unit())

    def test_rendering(self):
        self.assertEqual((Q + 1).to_text(), "1 + q")
        self.assertEqual((A * Q_INV).to_text(), "a*q^-1")
        self.assertEqual((2 * A * Q - Q ** 2).to_text(), "-q^2 + 2*a*q")
        self.assertEqual(ZERO.to_text(), "0")
        self.assertEqual((A * Q - 1).to_json(), [[0, 0, -1], [1, 1, 1]])

    def test_evaluate_at_integers(self):
        p = A * (Q - 1) + Q_INV
        self.assertEqual((A * (Q - 1)).evaluate(2, 3, 1), 4)
        self.assertEqual(p.evaluate(2, 1, 1, 1), 1)


if __name__ == '__main__':
    unittest.main()
