import unittest

from hecke_cellular.coefficients.laurent import A, Q, Q_INV
from hecke_cellular.coefficients.qnumbers import q2_integer, q_integer
from hecke_cellular.coefficients.rings import build_ring, parse_ring
from hecke_cellular.resources.errors import RingError


class TestParseRing(unittest.TestCase):
    """The ring selection grammar."""

    def test_plain_kinds(self):
        for text in ("ZaQ", "Qaq", "Qq"):
            self.assertEqual(parse_ring(text).kind, text)
        self.assertFalse(parse_ring("ZaQ").is_field)
        self.assertTrue(parse_ring("Qaq").is_field)

    def test_specialisations(self):
        cyclo = parse_ring("cyclo:3,a=1/2")
        self.assertEqual((cyclo.kind, cyclo.e, cyclo.a_value), ("cyclo", 3, "1/2"))
        gf = parse_ring("gf:3,q=1,a=2")
        self.assertEqual((gf.p, gf.q_value, gf.a_value), (3, "1", "2"))
        rational = parse_ring("Q:q=-1")
        self.assertEqual((rational.q_value, rational.a_value), ("-1", "1"))
        self.assertEqual(parse_ring("Q").text, "Q:q=1,a=1")

    def test_rejections(self):
        for text in ("cyclo:1", "cyclo", "gf:4,q=1", "gf:5,q=0", "gf:5,q=1/2", "Q:q=0", "Q:b=1", "bogus", ""):
            with self.subTest(text=text):
                with self.assertRaises(RingError):
                    parse_ring(text)


class TestCoefficientRings(unittest.TestCase):
    """Arithmetic contexts built from descriptors."""

    def setUp(self):
        self.laurent = build_ring("ZaQ")
        self.generic = build_ring("Qaq")

    def test_cyclotomic_specialisation(self):
        ring = build_ring("cyclo:2")
        self.assertFalse(q_integer(2, ring))
        self.assertTrue(q_integer(3, ring))

    def test_rational_specialisation(self):
        ring = build_ring("Q:q=-1")
        self.assertEqual(q2_integer(3, ring), ring.from_int(3))

    def test_finite_field(self):
        ring = build_ring("gf:3,q=1,a=1")
        self.assertEqual(ring.characteristic(), 3)
        self.assertFalse(q_integer(3, ring))

    def test_laurent_certificate(self):
        p = Q_INV * (A + 1) - 3 * Q
        self.assertEqual(self.generic.to_laurent(self.generic.from_laurent(p)), p)
        with self.assertRaises(RingError):
            self.generic.to_laurent(self.generic.one / (self.generic.q + self.generic.one))
        with self.assertRaises(RingError):
            self.generic.to_laurent(self.generic.one / self.generic.a)
        with self.assertRaises(RingError):
            self.generic.to_laurent(self.generic.one / self.generic.from_int(2))

    def test_non_field(self):
        self.assertEqual(self.laurent.inv(Q), Q_INV)
        with self.assertRaises(RingError):
            self.laurent.inv(Q + 1)
        with self.assertRaises(RingError):
            self.laurent.require_field("a quotient")


if __name__ == '__main__':
    unittest.main()
