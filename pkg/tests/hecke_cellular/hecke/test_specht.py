import unittest

from hecke_cellular.coefficients.rings import build_ring
from hecke_cellular.hecke.homspace import HomSpaceElement
from hecke_cellular.hecke.specht import SpechtQuotient, layer_from_products, specht_quotient
from hecke_cellular.resources.errors import RingError, ShapeError
from hecke_cellular.symgroup.composition import compositions, partitions
from hecke_cellular.tableaux.enumerate import enumerate_tableaux
from hecke_cellular.tableaux.tableau import Tableau


class TestSpechtQuotient(unittest.TestCase):
    """S_{λ;μ} over Q(q)."""

    def setUp(self):
        self.ring = build_ring("Qq")

    def test_two_one(self):
        quotient = specht_quotient((2, 1), (1, 1, 1), self.ring)
        self.assertEqual(quotient.dimension, 2)
        self.assertEqual(set(quotient.basis), {Tableau.parse("1 2/3"), Tableau.parse("1 3/2")})
        self.assertTrue(quotient.is_zero(
            HomSpaceElement((2, 1), (1, 1, 1), self.ring, {
                Tableau.parse("1 2/3"): self.ring.one,
                Tableau.parse("1 3/2"): self.ring.one,
                Tableau.parse("2 3/1"): self.ring.one,
            })))

    def test_top_quotient_is_a_line(self):
        for n in range(1, 5):
            for lam in partitions(n):
                self.assertEqual(specht_quotient(lam, lam, self.ring).dimension, 1, lam)
        for lam in ((1, 2), (1, 3), (2, 3)):
            self.assertEqual(specht_quotient(lam, lam, self.ring).dimension, 0, lam)

    def test_dimension_counts_semistandard_tableaux(self):
        for n in range(1, 5):
            for lam in partitions(n):
                for mu in compositions(n, n):
                    expected = len(enumerate_tableaux(lam, mu, "semistandard"))
                    self.assertEqual(specht_quotient(lam, mu, self.ring).dimension, expected, (lam, mu))

    def test_dimensions_at_roots_of_unity(self):
        for ring_text in ("cyclo:2", "cyclo:3"):
            ring = build_ring(ring_text)
            self.assertEqual(specht_quotient((1, 1), (2,), ring).dimension, 0)
            self.assertEqual(specht_quotient((2, 1), (2, 1), ring).dimension, 1)
            for n in range(1, 5):
                for lam in partitions(n):
                    for mu in compositions(n, n):
                        expected = len(enumerate_tableaux(lam, mu, "semistandard"))
                        self.assertEqual(specht_quotient(lam, mu, ring).dimension, expected, (ring_text, lam, mu))

    def test_basis_is_good(self):
        for lam in partitions(4):
            for mu in ((1, 1, 1, 1), (2, 1, 1), (1, 2, 1)):
                for t in specht_quotient(lam, mu, self.ring).basis:
                    self.assertTrue(t.is_good(), t)

    def test_reduction_is_canonical(self):
        quotient = specht_quotient((2, 2), (1, 1, 1, 1), self.ring)
        for t in quotient.ambient:
            reduced = quotient.reduce({t: self.ring.one})
            self.assertTrue(set(reduced) <= set(quotient.basis))
            self.assertEqual(quotient.reduce(reduced), reduced)
        for t in quotient.basis:
            self.assertEqual(quotient.reduce({t: self.ring.one}), {t: self.ring.one})

    def test_layer_matches_product_definition(self):
        for lam in ((2, 1), (2, 2), (3, 1), (2, 1, 1), (1, 2)):
            for mu in ((1,) * sum(lam), (2,) + (1,) * (sum(lam) - 2)):
                quotient = SpechtQuotient(lam, mu, self.ring)
                products = layer_from_products(lam, mu, self.ring)
                self.assertEqual(products.rank, quotient.space.rank, (lam, mu))
                for relation in products.rows():
                    self.assertTrue(quotient.is_zero(relation), (lam, mu))

    def test_to_json(self):
        payload = specht_quotient((3,), (2, 1), self.ring).to_json()
        self.assertEqual(payload["dim"], 1)
        self.assertEqual(payload["basis"], ["1 1 2"])

    def test_errors(self):
        with self.assertRaises(ShapeError):
            SpechtQuotient((2, 1), (2, 2), self.ring)
        with self.assertRaises(RingError):
            SpechtQuotient((2, 1), (1, 1, 1), build_ring("ZaQ"))
        quotient = specht_quotient((2, 1), (1, 1, 1), self.ring)
        with self.assertRaises(ShapeError):
            quotient.reduce(HomSpaceElement.basis(Tableau.parse("1 1/2"), self.ring))


if __name__ == '__main__':
    unittest.main()
