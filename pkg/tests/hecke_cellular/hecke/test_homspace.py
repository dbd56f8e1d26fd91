import unittest

from hecke_cellular.coefficients.laurent import ONE, Q
from hecke_cellular.coefficients.rings import build_ring
from hecke_cellular.hecke.element import HeckeElement, anti_involution, parabolic_generator
from hecke_cellular.hecke.homspace import (
    HomSpaceElement,
    canonical_decomposition,
    circ_product,
    coarsening_tableau,
    composition_action,
    decompose,
    homspace_element,
    parabolic_element,
    permutation_hypothesis,
    permutation_lemma_check,
    refinement_left_check,
    refinement_right_check,
    refinement_scalar,
    refinement_tableau,
)
from hecke_cellular.hecke.parabolic import parabolic_module
from hecke_cellular.resources.errors import InvariantViolation, ShapeError
from hecke_cellular.symgroup.composition import compositions, is_refinement, partitions
from hecke_cellular.symgroup.perm import Perm, all_perms
from hecke_cellular.tableaux.enumerate import enumerate_tableaux
from hecke_cellular.tableaux.tableau import Tableau, constant_row_tableau, dual_tableau


class TestHomSpaceElement(unittest.TestCase):
    """The double-coset basis m_S and its embedding into H_n."""

    def setUp(self):
        self.ring = build_ring("ZaQ")

    def test_single_row_is_parabolic_generator(self):
        s = Tableau.parse("1 1 1")
        self.assertEqual(homspace_element(s, self.ring).to_hecke(), parabolic_generator((3,), self.ring))

    def test_double_coset_sum(self):
        m = homspace_element(Tableau.parse("1 2/1"), self.ring)
        expected = HeckeElement.sum_of(3, self.ring, [Perm((1, 3, 2)), Perm((2, 3, 1)), Perm((3, 1, 2)), Perm((3, 2, 1))])
        self.assertEqual(m.to_hecke(), expected)

    def test_embedding_into_parabolic_module(self):
        s = Tableau.parse("1 1 2 3/1 4 4/3")
        module = parabolic_module((4, 3, 1), self.ring)
        members = module.embed(homspace_element(s, self.ring))
        self.assertEqual(len(members), 6)
        total = HeckeElement.zero(8, self.ring)
        for t in members:
            total = total + homspace_element(t, self.ring).to_hecke()
        self.assertEqual(total, homspace_element(s, self.ring).to_hecke())

    def test_star_is_dual(self):
        for lam, mu in (((2, 1), (1, 1, 1)), ((1, 2), (2, 1)), ((3, 1), (2, 2)), ((2, 2), (1, 3)), ((2, 1, 1), (2, 2))):
            for s in enumerate_tableaux(lam, mu):
                m = homspace_element(s, self.ring)
                self.assertEqual(m.star(), homspace_element(dual_tableau(s), self.ring))
                self.assertEqual(anti_involution(m.to_hecke()), m.star().to_hecke())

    def test_round_trip_through_hecke(self):
        lam, mu = (2, 2), (1, 2, 1)
        x = HomSpaceElement.zero(lam, mu, self.ring)
        for k, s in enumerate(enumerate_tableaux(lam, mu), start=1):
            x = x + homspace_element(s, self.ring).scale(Q ** k)
        self.assertEqual(HomSpaceElement.from_hecke(x.to_hecke(), lam, mu), x)

    def test_from_hecke_rejects_outsiders(self):
        with self.assertRaises(InvariantViolation):
            HomSpaceElement.from_hecke(HeckeElement.generator(2, 1, self.ring), (2,), (2,))

    def test_weight_checked(self):
        with self.assertRaises(ShapeError):
            HomSpaceElement((2, 1), (1, 2), self.ring, {Tableau.parse("1 2/1"): Q})
        with self.assertRaises(ShapeError):
            HomSpaceElement((2, 1), (2, 1), self.ring, {Tableau.parse("2 1/1"): Q})


class TestCircProduct(unittest.TestCase):
    """The composition M_{μ;ν} x M_{λ;μ} -> M_{λ;ν}."""

    def setUp(self):
        self.ring = build_ring("ZaQ")

    def test_unit_laws(self):
        for lam in partitions(4) + ((1, 3),):
            for mu in ((2, 2), (1, 2, 1), (3, 1)):
                for s in enumerate_tableaux(lam, mu):
                    b = homspace_element(s, self.ring)
                    self.assertEqual(circ_product(parabolic_element(mu, self.ring), b), b)
                    self.assertEqual(circ_product(b, parabolic_element(lam, self.ring)), b)

    def test_middle_mismatch(self):
        a = homspace_element(Tableau.parse("1 1/2"), self.ring)
        b = homspace_element(Tableau.parse("1 2 2"), self.ring)
        with self.assertRaises(ShapeError):
            circ_product(a, b)

    def test_small_product(self):
        # (1 + T_1) T_1 = q (1 + T_1)
        a = homspace_element(Tableau.parse("1/1"), self.ring)
        b = homspace_element(Tableau.parse("2/1"), self.ring)
        self.assertEqual(circ_product(a, b), homspace_element(Tableau.parse("1/1"), self.ring).scale(Q))

    def test_associativity(self):
        kappa, lam, mu, nu = (2, 2), (1, 2, 1), (3, 1), (2, 1, 1)

        def total(shape, weight):
            x = HomSpaceElement.zero(shape, weight, self.ring)
            for k, s in enumerate(enumerate_tableaux(shape, weight)):
                x = x + homspace_element(s, self.ring, weight).scale(Q ** (k % 3))
            return x

        a, b, c = total(mu, nu), total(lam, mu), total(kappa, lam)
        self.assertEqual(circ_product(circ_product(a, b), c), circ_product(a, circ_product(b, c)))


class TestRefinementAndPermutation(unittest.TestCase):
    """Closed forms for composing with refinement and permutation tableaux."""

    def setUp(self):
        self.ring = build_ring("ZaQ")

    def test_refinement_tableaux(self):
        self.assertEqual(refinement_tableau((2, 3, 4, 1, 2), (5, 4, 3)), Tableau.parse("1 1 2 2 2/3 3 3 3/4 5 5"))
        self.assertEqual(coarsening_tableau((4, 1, 2, 3, 2), (5, 2, 5)), Tableau.parse("1 1 1 1/1/2 2/3 3 3/3 3"))

    def test_refinement_scalar_by_hand(self):
        self.assertEqual(refinement_scalar(Tableau.parse("2/1"), (1, 1), (2,)), Q)
        self.assertEqual(refinement_scalar(Tableau.parse("1/2"), (1, 1), (2,)), ONE)

    def test_both_refinement_rules(self):
        for mu in ((2, 2), (3, 1), (4,)):
            for nu in compositions(4, 4):
                if not is_refinement(nu, mu):
                    continue
                for lam in partitions(4) + ((1, 3),):
                    for s in enumerate_tableaux(lam, mu):
                        self.assertTrue(refinement_left_check(s, nu, self.ring), (s, nu))
                    for t in enumerate_tableaux(lam, nu):
                        self.assertTrue(refinement_right_check(t, mu, self.ring), (t, mu))

    def test_permutation_rule(self):
        self.assertEqual(composition_action(Perm((2, 1)), (1, 2)), (2, 1))
        shapes = {3: ((2, 1), (1, 2), (3,)), 4: ((2, 2), (3, 1), (2, 1, 1), (1, 3))}
        for nu in ((1, 2), (2, 1, 1), (1, 1, 2)):
            for w in all_perms(len(nu)):
                for lam in shapes[sum(nu)]:
                    self.assertTrue(permutation_lemma_check(lam, nu, w, self.ring), (lam, nu, w))

    def test_permutation_hypothesis(self):
        swap = Perm((2, 1))
        self.assertTrue(permutation_hypothesis(Tableau.parse("1/2"), swap))
        self.assertFalse(permutation_hypothesis(Tableau.parse("2/1"), swap))
        self.assertFalse(permutation_hypothesis(Tableau.parse("1 2"), swap))


class TestCanonicalDecomposition(unittest.TestCase):
    """m_S = m_μ ∘_ν m_{P_{w,ν}} ∘_{wν} m_λ."""

    def setUp(self):
        self.ring = build_ring("ZaQ")

    def test_worked_example(self):
        s = Tableau.parse("2 2 3 3 3/1 1 1 1/1 3 3")
        nu, w = canonical_decomposition(s)
        self.assertEqual(nu, (4, 1, 2, 3, 2))
        self.assertEqual(w, Perm((3, 4, 1, 2, 5)))
        found = decompose(s)
        self.assertEqual(found.left, Tableau.parse("1 1 1 1/1/2 2/3 3 3/3 3"))
        self.assertEqual(found.permutation, Tableau.parse("3 3/4 4 4/1 1 1 1/2/5 5"))
        self.assertEqual(found.right, Tableau.parse("1 1 2 2 2/3 3 3 3/4 5 5"))

    def test_good_tableau_of_equal_weight(self):
        nu, w = canonical_decomposition(constant_row_tableau((3, 1)))
        self.assertEqual(nu, (3, 1))
        self.assertTrue(w.is_identity())
        nu, w = canonical_decomposition(Tableau.parse("1 1//3"), (2, 0, 1))
        self.assertEqual(nu, (2, 1))
        self.assertTrue(w.is_identity())

    def test_recomposition(self):
        for lam in partitions(4) + ((1, 3),):
            for mu in ((2, 2), (3, 1), (1, 2, 1), (2, 1, 1)):
                for s in enumerate_tableaux(lam, mu):
                    rebuilt = decompose(s, mu).recompose(self.ring, lam, mu)
                    self.assertEqual(rebuilt, homspace_element(s, self.ring, mu), s)


if __name__ == '__main__':
    unittest.main()
