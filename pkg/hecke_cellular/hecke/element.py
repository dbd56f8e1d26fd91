"""
Elements of the Iwahori-Hecke algebra H_n(q) in the T_w basis.

The left action of a generator follows the quadratic relation
(T_i - q)(T_i + 1) = 0:

    T_i T_w = T_{s_i w}                       if l(s_i w) > l(w)
    T_i T_w = q T_{s_i w} + (q - 1) T_w       otherwise

and symmetrically on the right. Products are accumulated by walking reduced
words, memoising partial products along the way.
"""
from __future__ import annotations

import logging
from typing import Iterable, Mapping

from hecke_cellular.coefficients.rings import CoefficientRing
from hecke_cellular.resources.errors import ShapeError
from hecke_cellular.symgroup.cosets import young_subgroup
from hecke_cellular.symgroup.perm import Perm

logger = logging.getLogger(__name__)


def accumulate(target: dict, key, value) -> None:
    if not value:
        return
    if key in target:
        total = target[key] + value
        if total:
            target[key] = total
        else:
            del target[key]
    else:
        target[key] = value


def _sort_key(w: Perm):
    return w.length, w.images


class HeckeElement:
    """A sparse combination Σ c_w T_w over a fixed coefficient ring."""

    __slots__ = ("n", "ring", "_terms")

    def __init__(self, n: int, ring: CoefficientRing, terms: Mapping[Perm, object] | None = None):
        self.n = n
        self.ring = ring
        clean = {}
        for w, c in (terms or {}).items():
            if w.n != n:
                raise ShapeError(f"T_{w} does not live in H_{n}")
            if c:
                clean[w] = c
        self._terms = clean

    @classmethod
    def _wrap(cls, n: int, ring: CoefficientRing, terms: dict) -> HeckeElement:
        obj = cls.__new__(cls)
        obj.n, obj.ring, obj._terms = n, ring, terms
        return obj

    @classmethod
    def basis(cls, w: Perm, ring: CoefficientRing) -> HeckeElement:
        return cls._wrap(w.n, ring, {w: ring.one})

    @classmethod
    def one(cls, n: int, ring: CoefficientRing) -> HeckeElement:
        return cls.basis(Perm.identity(n), ring)

    @classmethod
    def zero(cls, n: int, ring: CoefficientRing) -> HeckeElement:
        return cls._wrap(n, ring, {})

    @classmethod
    def generator(cls, n: int, i: int, ring: CoefficientRing) -> HeckeElement:
        return cls.basis(Perm.simple(n, i), ring)

    @classmethod
    def sum_of(cls, n: int, ring: CoefficientRing, perms: Iterable[Perm]) -> HeckeElement:
        return cls._wrap(n, ring, {w: ring.one for w in perms})

    # inspection

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> list:
        return sorted(self._terms.items(), key=lambda item: _sort_key(item[0]))

    def support(self) -> list[Perm]:
        return sorted(self._terms, key=_sort_key)

    def coefficient(self, w: Perm):
        return self._terms.get(w, self.ring.zero)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    __hash__ = None

    # linear structure

    def _check(self, other: HeckeElement) -> None:
        if other.n != self.n:
            raise ShapeError(f"rank mismatch: H_{self.n} against H_{other.n}")

    def __add__(self, other: HeckeElement) -> HeckeElement:
        self._check(other)
        terms = dict(self._terms)
        for w, c in other._terms.items():
            accumulate(terms, w, c)
        return HeckeElement._wrap(self.n, self.ring, terms)

    def __neg__(self) -> HeckeElement:
        return HeckeElement._wrap(self.n, self.ring, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: HeckeElement) -> HeckeElement:
        return self + (-other)

    def scale(self, c) -> HeckeElement:
        if not c:
            return HeckeElement.zero(self.n, self.ring)
        terms = {}
        for w, v in self._terms.items():
            accumulate(terms, w, v * c)
        return HeckeElement._wrap(self.n, self.ring, terms)

    def __mul__(self, other: HeckeElement) -> HeckeElement:
        return hecke_multiply(self, other)

    # generator actions

    def left_mul_generator(self, i: int) -> HeckeElement:
        q, q_minus_one = self.ring.q, self.ring.q - self.ring.one
        terms: dict = {}
        for w, c in self._terms.items():
            sw = w.left_mul_simple(i)
            if w.has_left_descent(i):
                accumulate(terms, sw, q * c)
                accumulate(terms, w, q_minus_one * c)
            else:
                accumulate(terms, sw, c)
        return HeckeElement._wrap(self.n, self.ring, terms)

    def right_mul_generator(self, i: int) -> HeckeElement:
        q, q_minus_one = self.ring.q, self.ring.q - self.ring.one
        terms: dict = {}
        for w, c in self._terms.items():
            ws = w.right_mul_simple(i)
            if w.has_right_descent(i):
                accumulate(terms, ws, q * c)
                accumulate(terms, w, q_minus_one * c)
            else:
                accumulate(terms, ws, c)
        return HeckeElement._wrap(self.n, self.ring, terms)

    def left_mul_basis(self, w: Perm) -> HeckeElement:
        """T_w * self."""
        result = self
        for i in reversed(w.reduced_word()):
            result = result.left_mul_generator(i)
        return result

    def right_mul_basis(self, w: Perm) -> HeckeElement:
        """self * T_w."""
        result = self
        for i in w.reduced_word():
            result = result.right_mul_generator(i)
        return result

    # rendering

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({self.ring.render(c)}) * T{w}" for w, c in self.items())

    def to_json(self) -> list[dict]:
        return [{"perm": w.to_json(), "coeff": self.ring.to_json(c)} for w, c in self.items()]

    def __repr__(self) -> str:
        return f"HeckeElement(n={self.n}, {self.to_text()})"


class RightProducts:
    """
    x * T_v for a fixed x, memoised over v.

    x T_v = (x T_{v s_i}) T_i whenever i is a right descent of v, so every
    product reuses the one for a shorter permutation.
    """

    def __init__(self, x: HeckeElement):
        self.x = x
        self._cache: dict[Perm, HeckeElement] = {Perm.identity(x.n): x}

    def __call__(self, v: Perm) -> HeckeElement:
        cached = self._cache.get(v)
        if cached is not None:
            return cached
        i = next(k for k in range(1, v.n) if v.has_right_descent(k))
        result = self(v.right_mul_simple(i)).right_mul_generator(i)
        self._cache[v] = result
        return result

    def apply(self, y: HeckeElement) -> HeckeElement:
        """x * y."""
        terms: dict = {}
        for v, c in y.items():
            for w, value in self(v)._terms.items():
                accumulate(terms, w, value * c)
        return HeckeElement._wrap(self.x.n, self.x.ring, terms)


class LeftProducts:
    """T_u * y for a fixed y, memoised over u."""

    def __init__(self, y: HeckeElement):
        self.y = y
        self._cache: dict[Perm, HeckeElement] = {Perm.identity(y.n): y}

    def __call__(self, u: Perm) -> HeckeElement:
        cached = self._cache.get(u)
        if cached is not None:
            return cached
        i = next(k for k in range(1, u.n) if u.has_left_descent(k))
        result = self(u.left_mul_simple(i)).left_mul_generator(i)
        self._cache[u] = result
        return result

    def apply(self, x: HeckeElement) -> HeckeElement:
        """x * y."""
        terms: dict = {}
        for u, c in x.items():
            for w, value in self(u)._terms.items():
                accumulate(terms, w, c * value)
        return HeckeElement._wrap(self.y.n, self.y.ring, terms)


def hecke_multiply(x: HeckeElement, y: HeckeElement) -> HeckeElement:
    x._check(y)
    if not x or not y:
        return HeckeElement.zero(x.n, x.ring)
    # walk the shorter support
    if len(y) <= len(x):
        return RightProducts(x).apply(y)
    return LeftProducts(y).apply(x)


def hecke_invert_Tw(w: Perm, ring: CoefficientRing) -> HeckeElement:
    """T_w^{-1} = T_{i_r}^{-1} ... T_{i_1}^{-1} with T_i^{-1} = q^{-1} T_i + (q^{-1} - 1)."""
    result = HeckeElement.one(w.n, ring)
    q_inv = ring.q_inv
    for i in reversed(w.reduced_word()):
        # result * T_i^{-1}
        result = result.right_mul_generator(i).scale(q_inv) + result.scale(q_inv - ring.one)
    return result


def anti_involution(x: HeckeElement) -> HeckeElement:
    """(T_w)* = T_{w^{-1}}, extended linearly."""
    return HeckeElement._wrap(x.n, x.ring, {w.inverse(): c for w, c in x._terms.items()})


def parabolic_generator(lam, ring: CoefficientRing) -> HeckeElement:
    """m_λ = Σ_{w ∈ S_λ} T_w."""
    n = sum(lam)
    return HeckeElement.sum_of(n, ring, young_subgroup(lam))


def group_algebra_multiply(x: HeckeElement, y: HeckeElement) -> HeckeElement:
    """Product in the group algebra of S_n; agrees with hecke_multiply when q = 1."""
    x._check(y)
    terms: dict = {}
    for u, c in x.items():
        for v, d in y.items():
            accumulate(terms, u * v, c * d)
    return HeckeElement._wrap(x.n, x.ring, terms)
