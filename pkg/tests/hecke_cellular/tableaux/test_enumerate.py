import unittest

from hecke_cellular.resources.errors import ShapeError
from hecke_cellular.symgroup.composition import compositions, dominance_le, partitions
from hecke_cellular.tableaux.enumerate import (
    enumerate_tableaux,
    is_shifted_prime,
    is_shifted_semistandard,
    ribbons,
)
from hecke_cellular.tableaux.tableau import CircledTableau, Tableau, constant_row_tableau


class TestEnumerateTableaux(unittest.TestCase):
    """Deterministic enumeration of every tableau family."""

    def test_row_semistandard_example(self):
        tableaux = enumerate_tableaux((2, 3), (3, 1, 0, 1))
        self.assertEqual(
            [t.to_text() for t in tableaux],
            ["1 1/1 2 4", "1 2/1 1 4", "1 4/1 1 2", "2 4/1 1 1"],
        )

    def test_good_tableaux(self):
        for lam in partitions(4) + ((1, 3), (2, 0, 2)):
            self.assertEqual(enumerate_tableaux(lam, lam, "good"), [constant_row_tableau(lam)])
            for mu in compositions(4, 4):
                if enumerate_tableaux(lam, mu, "good"):
                    self.assertTrue(dominance_le(mu, lam), (lam, mu))

    def test_every_letter_is_used_once(self):
        self.assertEqual([t.to_text() for t in enumerate_tableaux((1,), (1,))], ["1"])
        self.assertEqual([t.to_text() for t in enumerate_tableaux((2, 1), (1, 1, 1))], ["1 2/3", "1 3/2", "2 3/1"])
        # |Tab_{λ;(1^n)}| = n! / λ!
        self.assertEqual(len(enumerate_tableaux((2, 2), (1, 1, 1, 1))), 6)
        self.assertEqual(len(enumerate_tableaux((3, 2), (2, 2, 1))), 5)

    def test_semistandard(self):
        self.assertEqual(len(enumerate_tableaux((2, 1), (1, 1, 1), "semistandard")), 2)
        self.assertEqual(enumerate_tableaux((1, 2), (1, 1, 1), "semistandard"), [])
        for lam in partitions(4):
            for mu in compositions(4, 4):
                for t in enumerate_tableaux(lam, mu, "semistandard"):
                    self.assertTrue(t.is_good())

    def test_circled_counts(self):
        self.assertEqual(len(enumerate_tableaux((1,), (1,), "circled")), 2)
        self.assertEqual(len(enumerate_tableaux((2, 1), (2, 1), "circled")), 12)
        for t in enumerate_tableaux((2, 2), (2, 1, 1), "circled"):
            self.assertTrue(t.is_canonical())

    def test_shifted_flavours(self):
        self.assertEqual(len(enumerate_tableaux((2,), (1, 1), "shifted_circled")), 4)
        self.assertEqual(len(enumerate_tableaux((2,), (1, 1), "shifted_circled_prime")), 2)
        self.assertEqual(enumerate_tableaux((1, 1), (1, 1), "shifted_circled"), [])
        for mu in compositions(4, 4):
            for t in enumerate_tableaux((3, 1), mu, "shifted_circled"):
                self.assertTrue(t.tableau.is_semistandard())

    def test_prime_flavour_divides_by_length(self):
        for lam in [(3,), (2, 1), (3, 1), (4,)]:
            for mu in compositions(sum(lam), 3):
                full = enumerate_tableaux(lam, mu, "shifted_circled")
                prime = enumerate_tableaux(lam, mu, "shifted_circled_prime")
                self.assertEqual(len(full), len(prime) * 2 ** len(lam), (lam, mu))

    def test_errors(self):
        with self.assertRaises(ShapeError):
            enumerate_tableaux((2,), (1,))
        with self.assertRaises(ShapeError):
            enumerate_tableaux((2,), (2,), "skew")


class TestShiftedRules(unittest.TestCase):
    """Diagonal and ribbon conditions on shifted tableaux."""

    def test_diagonal_repeat_needs_circle(self):
        self.assertTrue(is_shifted_semistandard(CircledTableau.parse("1 2/2'")))
        self.assertFalse(is_shifted_semistandard(CircledTableau.parse("1 2/2")))
        self.assertFalse(is_shifted_semistandard(CircledTableau.parse("2 2/1")))

    def test_ribbons(self):
        self.assertEqual(
            ribbons(CircledTableau.parse("1 1 2/2")),
            [[(0, 0), (0, 1)], [(0, 2)], [(1, 0)]],
        )
        self.assertEqual(ribbons(CircledTableau.parse("1 2/2'")), [[(0, 0)], [(0, 1), (1, 0)]])

    def test_prime_rule(self):
        self.assertTrue(is_shifted_prime(CircledTableau.parse("1 2/2'")))
        self.assertFalse(is_shifted_prime(CircledTableau.parse("1 2'/2'")))
        self.assertTrue(is_shifted_prime(CircledTableau(Tableau.parse("1 2"), frozenset({(0, 1)}))))


if __name__ == '__main__':
    unittest.main()
