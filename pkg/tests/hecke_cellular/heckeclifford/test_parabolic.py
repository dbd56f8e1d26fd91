import unittest

from hecke_cellular.coefficients.rings import build_ring
from hecke_cellular.heckeclifford.homspace import SuperHomSpaceElement
from hecke_cellular.heckeclifford.parabolic import (
    circled_generator_action,
    circled_generator_check,
    super_parabolic_module,
)
from hecke_cellular.resources.errors import InvariantViolation
from hecke_cellular.tableaux.tableau import CircledTableau


def ct(text):
    return CircledTableau.parse(text)


class TestSuperParabolicModule(unittest.TestCase):
    """M^c_λ in free and circled coordinates over Q(a, q)."""

    def setUp(self):
        self.ring = build_ring("Qaq")

    def test_dimension(self):
        self.assertEqual(super_parabolic_module((2, 1), self.ring).dimension, 24)
        self.assertEqual(super_parabolic_module((3,), self.ring).dimension, 8)

    def test_generator_on_one_row(self):
        ring = self.ring
        self.assertEqual(circled_generator_action(1, ct("1 2'"), ring),
                         {ct("1' 2"): ring.one, ct("1 2'"): ring.q - ring.one})
        self.assertEqual(circled_generator_action(1, ct("1' 2"), ring), {ct("1 2'"): ring.q})
        self.assertEqual(circled_generator_action(1, ct("1' 2'"), ring),
                         {ct("1 2"): ring.a * (ring.q - ring.one), ct("1' 2'"): -ring.one})

    def test_generator_agrees_with_hecke_clifford(self):
        for text in ("1 2'/3", "1' 3/2'", "2 3'/1'", "1' 2'/3'"):
            self.assertTrue(circled_generator_check(ct(text), self.ring), text)

    def test_circled_coordinates_round_trip(self):
        module = super_parabolic_module((2, 1), self.ring)
        for text in ("1 2'/3", "2' 3/1", "1' 3'/2'"):
            vec = {ct(text): self.ring.one}
            self.assertEqual(module.to_circled(module.from_circled(vec)), vec)

    def test_right_gamma_merges_circles(self):
        ring = self.ring
        module = super_parabolic_module((4, 3, 1), ring)
        image = module.right_gamma({ct("1' 2 4 5'/3 7' 8/6'"): ring.one}, 2)
        self.assertEqual(image, {
            ct("1' 2 4 5'/3' 7' 8/6'"): ring.one,
            ct("1' 2 4 5'/3 7 8/6'"): -(ring.a * ring.q),
            ct("1' 2 4 5'/3 7' 8'/6'"): -(ring.q * ring.q),
        })
        self.assertEqual(module.right_gamma({ct("1' 2 4 5'/3 7' 8/6'"): ring.one}, 4), {})

    def test_embedding_spreads_circles_over_bars(self):
        module = super_parabolic_module((4, 3, 1), self.ring)
        h = SuperHomSpaceElement.basis(ct("1 1' 2 3'/1 5 5'/4'"), self.ring)
        image = module.embed(h)
        self.assertEqual(len(image), 12)
        ring = self.ring
        self.assertEqual(list(image.values()).count(ring.one), 3)
        self.assertEqual(module.extract(image, h.mu), h)

    def test_extract_rejects_foreign_vectors(self):
        module = super_parabolic_module((2, 1), self.ring)
        with self.assertRaises(InvariantViolation):
            module.extract({ct("1 2/3"): self.ring.one}, (1, 2))


if __name__ == '__main__':
    unittest.main()
