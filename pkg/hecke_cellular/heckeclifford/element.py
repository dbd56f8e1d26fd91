"""
Elements of the Hecke-Clifford superalgebra H^c_n(a; q) in the normal form c^p T_w.

A generator T_i moves past a Clifford word as

    T_i c^p = s_i(c^p) T_i + (q - 1) t_i(c^p)

where s_i relabels c_i <-> c_{i+1} and t_i only sees the factors c_i, c_{i+1}
(see `twist_word`). Products are computed by letting the T_w part of the left
factor act on the right factor, memoised along reduced words, and then merging
the Clifford words.
"""
from __future__ import annotations

import logging
import random
from typing import Iterable, Mapping, Sequence

from sympy import Rational

from hecke_cellular.coefficients.linalg import EchelonSpace
from hecke_cellular.coefficients.qnumbers import laurent_even_ratio_power
from hecke_cellular.coefficients.rings import CoefficientRing, RingDescriptor, build_ring
from hecke_cellular.hecke.element import HeckeElement, accumulate, parabolic_generator
from hecke_cellular.heckeclifford.clifford import (
    CliffordWord,
    Word,
    a_power,
    merge_words,
    signed,
    sort_word,
    swap_word,
    twist_word,
    words_of,
)
from hecke_cellular.resources.errors import InvariantViolation, RingError, ShapeError
from hecke_cellular.symgroup.composition import normalize
from hecke_cellular.symgroup.perm import Perm, all_perms

logger = logging.getLogger(__name__)

Key = tuple[Word, Perm]


def _sort_key(key: Key):
    word, w = key
    return w.length, w.images, len(word), word


class HCElement:
    """A sparse combination Σ c_{p,w} c^p T_w."""

    __slots__ = ("n", "ring", "_terms")

    def __init__(self, n: int, ring: CoefficientRing, terms: Mapping[Key, object] | None = None):
        self.n = n
        self.ring = ring
        clean = {}
        for (word, w), c in (terms or {}).items():
            if w.n != n:
                raise ShapeError(f"T_{w} does not live in H^c_{n}")
            word = CliffordWord(n, word).indices
            if c:
                clean[(word, w)] = c
        self._terms = clean

    @classmethod
    def _wrap(cls, n: int, ring: CoefficientRing, terms: dict) -> HCElement:
        obj = cls.__new__(cls)
        obj.n, obj.ring, obj._terms = n, ring, terms
        return obj

    @classmethod
    def basis(cls, word: Sequence[int], w: Perm, ring: CoefficientRing) -> HCElement:
        return cls(w.n, ring, {(tuple(word), w): ring.one})

    @classmethod
    def one(cls, n: int, ring: CoefficientRing) -> HCElement:
        return cls._wrap(n, ring, {((), Perm.identity(n)): ring.one})

    @classmethod
    def zero(cls, n: int, ring: CoefficientRing) -> HCElement:
        return cls._wrap(n, ring, {})

    @classmethod
    def generator(cls, n: int, i: int, ring: CoefficientRing) -> HCElement:
        """T_i."""
        return cls._wrap(n, ring, {((), Perm.simple(n, i)): ring.one})

    @classmethod
    def clifford(cls, n: int, indices: Sequence[int], ring: CoefficientRing) -> HCElement:
        """c_{i_1} ... c_{i_r} for distinct indices in any order."""
        sign, word = sort_word(tuple(indices))
        CliffordWord(n, word)
        return cls._wrap(n, ring, {(word, Perm.identity(n)): signed(ring.one, sign)})

    @classmethod
    def from_hecke(cls, x: HeckeElement) -> HCElement:
        return cls._wrap(x.n, x.ring, {((), w): c for w, c in x.terms.items()})

    # inspection

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> list:
        return sorted(self._terms.items(), key=lambda item: _sort_key(item[0]))

    def coefficient(self, word: Sequence[int], w: Perm):
        return self._terms.get((tuple(word), w), self.ring.zero)

    def parity(self) -> int | None:
        """0 or 1 when homogeneous, None otherwise; zero counts as even."""
        parities = {len(word) % 2 for word, _ in self._terms}
        if not parities:
            return 0
        return parities.pop() if len(parities) == 1 else None

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HCElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    __hash__ = None

    # linear structure

    def _check(self, other: HCElement) -> None:
        if other.n != self.n:
            raise ShapeError(f"rank mismatch: H^c_{self.n} against H^c_{other.n}")

    def __add__(self, other: HCElement) -> HCElement:
        self._check(other)
        terms = dict(self._terms)
        for key, c in other._terms.items():
            accumulate(terms, key, c)
        return HCElement._wrap(self.n, self.ring, terms)

    def __neg__(self) -> HCElement:
        return HCElement._wrap(self.n, self.ring, {key: -c for key, c in self._terms.items()})

    def __sub__(self, other: HCElement) -> HCElement:
        return self + (-other)

    def scale(self, c) -> HCElement:
        terms: dict = {}
        for key, v in self._terms.items():
            accumulate(terms, key, v * c)
        return HCElement._wrap(self.n, self.ring, terms)

    def __mul__(self, other: HCElement) -> HCElement:
        return hc_multiply(self, other)

    # left actions

    def left_mul_generator(self, i: int) -> HCElement:
        ring = self.ring
        q, q_minus_one = ring.q, ring.q - ring.one
        terms: dict = {}
        for (word, w), c in self._terms.items():
            sign, swapped = swap_word(word, i)
            moved = signed(c, sign)
            sw = w.left_mul_simple(i)
            if w.has_left_descent(i):
                accumulate(terms, (swapped, sw), q * moved)
                accumulate(terms, (swapped, w), q_minus_one * moved)
            else:
                accumulate(terms, (swapped, sw), moved)
            for t_sign, a_deg, twisted in twist_word(word, i):
                accumulate(terms, (twisted, w), signed(q_minus_one * a_power(ring, a_deg) * c, t_sign))
        return HCElement._wrap(self.n, ring, terms)

    def left_mul_word(self, word: Word) -> HCElement:
        """c^word * self."""
        terms: dict = {}
        for (p, w), c in self._terms.items():
            sign, merged, common = merge_words(word, p)
            accumulate(terms, (merged, w), signed(a_power(self.ring, len(common)) * c, sign))
        return HCElement._wrap(self.n, self.ring, terms)

    def left_mul_basis(self, w: Perm) -> HCElement:
        """T_w * self."""
        result = self
        for i in reversed(w.reduced_word()):
            result = result.left_mul_generator(i)
        return result

    # rendering

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (word, w), c in self.items():
            parts.append(f"({self.ring.render(c)}) * {CliffordWord(self.n, word).to_text()} T{w}")
        return " + ".join(parts)

    def to_json(self) -> list[dict]:
        return [{"clifford": list(word), "perm": w.to_json(), "coeff": self.ring.to_json(c)}
                for (word, w), c in self.items()]

    def __repr__(self) -> str:
        return f"HCElement(n={self.n}, {self.to_text()})"


class LeftHCProducts:
    """T_u * y for a fixed y, memoised over u."""

    def __init__(self, y: HCElement):
        self.y = y
        self._cache: dict[Perm, HCElement] = {Perm.identity(y.n): y}

    def __call__(self, u: Perm) -> HCElement:
        cached = self._cache.get(u)
        if cached is not None:
            return cached
        i = next(k for k in range(1, u.n) if u.has_left_descent(k))
        result = self(u.left_mul_simple(i)).left_mul_generator(i)
        self._cache[u] = result
        return result

    def apply(self, x: HCElement) -> HCElement:
        """x * y."""
        ring = self.y.ring
        terms: dict = {}
        for (p, u), c in x.items():
            for (r, v), d in self(u)._terms.items():
                sign, merged, common = merge_words(p, r)
                accumulate(terms, (merged, v), signed(a_power(ring, len(common)) * c * d, sign))
        return HCElement._wrap(self.y.n, ring, terms)


def hc_multiply(x: HCElement, y: HCElement) -> HCElement:
    x._check(y)
    if not x or not y:
        return HCElement.zero(x.n, x.ring)
    return LeftHCProducts(y).apply(x)


def hc_basis(n: int) -> list[Key]:
    """The 2^n n! normal-form keys."""
    return [(word, w) for w in all_perms(n) for word in words_of(range(1, n + 1))]


def hc_parabolic_generator(lam: Sequence[int], ring: CoefficientRing) -> HCElement:
    return HCElement.from_hecke(parabolic_generator(normalize(lam), ring))


# T-first normal form

def from_t_first(terms: Mapping[tuple[Perm, Word], object], n: int, ring: CoefficientRing) -> HCElement:
    """Σ c T_w c^Q rewritten in the c-first normal form."""
    total = HCElement.zero(n, ring)
    for (w, word), c in terms.items():
        image = HCElement.basis(word, Perm.identity(n), ring).left_mul_basis(w)
        total = total + image.scale(c)
    return total


def to_t_first(x: HCElement) -> dict[tuple[Perm, Word], object]:
    """
    Coefficients of x on the T_w c^Q basis.

    T_w c^Q = ±c^{w(Q)} T_w + (terms with shorter T part), so the longest
    remaining key fixes one coefficient at a time.
    """
    remaining = x.terms
    out: dict = {}
    while remaining:
        word, w = max(remaining, key=_sort_key)
        c = remaining[(word, w)]
        inverse = w.inverse()
        source = tuple(sorted(inverse(j) for j in word))
        image = from_t_first({(w, source): x.ring.one}, x.n, x.ring)
        lead = image.coefficient(word, w)
        coeff = c * lead
        out[(w, source)] = coeff
        for key, v in image.terms.items():
            accumulate(remaining, key, -(v * coeff))
        if (word, w) in remaining:
            raise InvariantViolation(f"leading key {word}, {w} did not cancel")
    return out


# q = 1: the anti-homomorphism W_n(a)^op -> W_n(-a)

def mirror_ring(ring: CoefficientRing) -> CoefficientRing:
    """The same prime or rational field at q = 1 with a replaced by -a."""
    d = ring.descriptor
    if d.kind not in ("Q", "gf"):
        raise RingError(f"the q = 1 anti-homomorphism needs a Q or gf ring, got {ring.name}")
    if ring.q != ring.one:
        raise RingError(f"the anti-homomorphism only exists at q = 1, got {ring.name}")
    negated = str(-Rational(d.a_value))
    return build_ring(RingDescriptor(kind=d.kind, p=d.p, q_value=d.q_value, a_value=negated))


def star(x: HCElement, target: CoefficientRing) -> HCElement:
    """(c^P w)* = w^{-1} c^P = ±c^{w^{-1}(P)} w^{-1}, with coefficients moved into `target`."""
    terms: dict = {}
    for (word, w), c in x.terms.items():
        inverse = w.inverse()
        sign, moved = sort_word(tuple(inverse(j) for j in word))
        value = target.domain.convert_from(c, x.ring.domain)
        accumulate(terms, (moved, inverse), signed(value, sign))
    return HCElement._wrap(x.n, target, terms)


def anti_homomorphism_holds(x: HCElement, y: HCElement) -> bool:
    """(xy)* = (-1)^{|x||y|} y* x* for homogeneous x, y."""
    px, py = x.parity(), y.parity()
    if px is None or py is None:
        raise ShapeError("the graded anti-homomorphism needs homogeneous inputs")
    target = mirror_ring(x.ring)
    left = star(x * y, target)
    right = star(y, target) * star(x, target)
    if px and py:
        right = -right
    return left == right


def anti_homomorphism_check(n: int, ring: CoefficientRing, trials: int = 20, seed: int = 0) -> bool:
    """On every pair of generators and on `trials` random pairs of basis monomials."""
    gens = [HCElement.generator(n, i, ring) for i in range(1, n)]
    gens += [HCElement.clifford(n, (j,), ring) for j in range(1, n + 1)]
    pairs = [(x, y) for x in gens for y in gens]
    keys = hc_basis(n)
    rng = random.Random(seed)
    for _ in range(trials):
        (p, u), (r, v) = rng.choice(keys), rng.choice(keys)
        pairs.append((HCElement.basis(p, u, ring), HCElement.basis(r, v, ring)))
    for x, y in pairs:
        if not anti_homomorphism_holds(x, y):
            logger.info("anti-homomorphism fails on %s, %s", x, y)
            return False
    return True


# the Γ elements of a parabolic subalgebra

def _block_start(lam: Sequence[int], i: int) -> int:
    return sum(lam[:i - 1])


def gamma_left(lam: Sequence[int], i: int, ring: CoefficientRing) -> HCElement:
    """γ^L_{λ;i} = Σ_k q^{k-1} c_{b+k} over the i-th block."""
    lam = tuple(lam)
    n = sum(lam)
    if i < 1 or i > len(lam) or not lam[i - 1]:
        return HCElement.zero(n, ring)
    b, terms, power = _block_start(lam, i), {}, ring.one
    for k in range(1, lam[i - 1] + 1):
        terms[((b + k,), Perm.identity(n))] = power
        power = power * ring.q
    return HCElement._wrap(n, ring, terms)


def gamma_right(lam: Sequence[int], i: int, ring: CoefficientRing) -> HCElement:
    """γ^R_{λ;i} = Σ_k q^{λ_i-k} c_{b+k}."""
    lam = tuple(lam)
    n = sum(lam)
    if i < 1 or i > len(lam) or not lam[i - 1]:
        return HCElement.zero(n, ring)
    b, terms, power = _block_start(lam, i), {}, ring.one
    for k in range(lam[i - 1], 0, -1):
        terms[((b + k,), Perm.identity(n))] = power
        power = power * ring.q
    return HCElement._wrap(n, ring, terms)


def gamma_realization_check(lam: Sequence[int], ring: CoefficientRing) -> bool:
    """γ^L_{λ;i} m_λ = m_λ γ^R_{λ;i} for every block."""
    lam = normalize(lam)
    m = hc_parabolic_generator(lam, ring)
    for i in range(1, len(lam) + 1):
        if gamma_left(lam, i, ring) * m != m * gamma_right(lam, i, ring):
            logger.info("γ^L m_λ and m_λ γ^R differ for λ=%s, block %d", lam, i)
            return False
    return True


def gamma_lemma_value(n: int, indices: Sequence[int], ring: CoefficientRing) -> HCElement:
    """The closed form of m_n c_{i_1} ... c_{i_r} m_n."""
    r = len(indices)
    m = hc_parabolic_generator((n,), ring)
    if r % 2 == 0:
        return m.scale(ring.from_laurent(laurent_even_ratio_power(r // 2, n)))
    scalar = ring.from_laurent(laurent_even_ratio_power(r // 2, n - 1))
    return (gamma_left((n,), 1, ring) * m).scale(scalar)


def gamma_lemma_check(n: int, indices: Sequence[int], ring: CoefficientRing) -> bool:
    indices = tuple(int(i) for i in indices)
    if list(indices) != sorted(set(indices)) or any(not 1 <= i <= n for i in indices):
        raise ShapeError(f"indices {indices} must be an ascending subset of 1..{n}")
    m = hc_parabolic_generator((n,), ring)
    product = m * HCElement.clifford(n, indices, ring) * m
    if product != gamma_lemma_value(n, indices, ring):
        logger.info("m_n c%s m_n differs from its closed form at n=%d", list(indices), n)
        return False
    return gamma_realization_check((n,), ring)


def is_left_invariant(x: HCElement, mu: Sequence[int]) -> bool:
    """T_i x = q x for every s_i in S_μ."""
    q = x.ring.q
    b = 0
    for part in normalize(mu):
        for i in range(b + 1, b + part):
            if x.left_mul_generator(i) != x.scale(q):
                return False
        b += part
    return True


def span_failure_witness(ring: CoefficientRing) -> bool:
    """
    Whether c_1 c_2 m_2 lies in M^c_2 ∩ M^{c*}_2 without lying in the span of
    the circled basis {m_2, γ^L m_2}; this happens at q = 1, 2 = 0.
    """
    x = HCElement.clifford(2, (1, 2), ring) * hc_parabolic_generator((2,), ring)
    if not is_left_invariant(x, (2,)):
        return False
    m = hc_parabolic_generator((2,), ring)
    span = EchelonSpace(ring, order=_sort_key)
    span.extend([m.terms, (gamma_left((2,), 1, ring) * m).terms])
    return not span.contains(x.terms)


def hc_span(elements: Iterable[HCElement], ring: CoefficientRing) -> EchelonSpace:
    space = EchelonSpace(ring, order=_sort_key)
    space.extend(x.terms for x in elements)
    return space
