import unittest

from hecke_cellular.coefficients.rings import build_ring
from hecke_cellular.heckeclifford.element import hc_parabolic_generator
from hecke_cellular.heckeclifford.products import (
    circ_product_hc_check,
    circled_basis_element,
    gamma_action,
    gamma_balance_check,
    gamma_square_check,
    super_circ_product,
    super_parabolic_element,
    super_to_hc,
)
from hecke_cellular.resources.errors import ShapeError
from hecke_cellular.tableaux.tableau import CircledTableau


class TestSuperProducts(unittest.TestCase):
    """∘_μ and the Γ actions on M^c_{λ;μ} for n = 3."""

    def setUp(self):
        self.ring = build_ring("Qaq")
        self.a = circled_basis_element(CircledTableau.parse("1 1'/1"), self.ring)
        self.b = circled_basis_element(CircledTableau.parse("1/1'/2"), self.ring)

    def test_parabolic_element(self):
        m = super_parabolic_element((2, 1), self.ring)
        self.assertEqual(super_to_hc(m), hc_parabolic_generator((2, 1), self.ring))

    def test_identity_factors(self):
        self.assertEqual(super_circ_product(super_parabolic_element((2, 1), self.ring), self.b), self.b)
        self.assertEqual(super_circ_product(self.b, super_parabolic_element((1, 1, 1), self.ring)), self.b)

    def test_product_agrees_with_hecke_clifford(self):
        self.assertTrue(circ_product_hc_check(self.a, self.b))
        other = circled_basis_element(CircledTableau.parse("1 2'/1'"), self.ring)
        self.assertTrue(circ_product_hc_check(other, self.b))

    def test_gamma_balance(self):
        for i in (1, 2):
            self.assertTrue(gamma_balance_check(self.a, self.b, i), i)

    def test_gamma_squares(self):
        for side in ("left", "right"):
            for i in (1, 2):
                self.assertTrue(gamma_square_check(self.a, side, i), (side, i))
                self.assertTrue(gamma_square_check(self.b, side, i), (side, i))

    def test_gamma_outside_the_blocks(self):
        self.assertFalse(gamma_action(self.a, "left", 2))
        self.assertFalse(gamma_action(self.a, "right", 3))
        with self.assertRaises(ShapeError):
            gamma_action(self.a, "middle", 1)

    def test_shape_mismatch(self):
        with self.assertRaises(ShapeError):
            super_circ_product(self.b, self.a)


if __name__ == '__main__':
    unittest.main()
