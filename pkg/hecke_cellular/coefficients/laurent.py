"""
Integral Laurent polynomials in a and q.

An element is stored as a sparse map (i, j) -> c standing for c * a^i * q^j with
i >= 0 (a is never inverted) and any integer j. Zero coefficients are never
stored, so equality is structural.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Mapping

from sympy import ZZ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import ring as poly_ring

from hecke_cellular.resources.errors import InvariantViolation


_ZZ_AQ, _, _ = poly_ring("a,q", ZZ)


class LaurentPolynomial:
    """
    Element of Z[a, q, q^-1].

    >>> LaurentPolynomial({(0, 0): 1, (0, 1): 1})
    LaurentPolynomial('1 + q')
    """
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean: dict[tuple[int, int], int] = {}
        for (i, j), c in (terms or {}).items():
            if i < 0:
                raise ValueError("a-degree must be non-negative")
            c = int(c)
            if c:
                clean[(int(i), int(j))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[tuple[int, int], int]) -> LaurentPolynomial:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: int) -> LaurentPolynomial:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, c: int, a_deg: int = 0, q_deg: int = 0) -> LaurentPolynomial:
        return cls({(a_deg, q_deg): c})

    @classmethod
    def from_json(cls, triples: Iterable[Iterable[int]]) -> LaurentPolynomial:
        terms: dict[tuple[int, int], int] = {}
        for i, j, c in triples:
            terms[(i, j)] = terms.get((i, j), 0) + c
        return cls(terms)

    @property
    def terms(self) -> tuple[tuple[tuple[int, int], int], ...]:
        return tuple(sorted(self._terms.items()))

    def coefficient(self, a_deg: int, q_deg: int) -> int:
        return self._terms.get((a_deg, q_deg), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """Units of Z[a, q^{±1}] are exactly ±q^k."""
        if len(self._terms) != 1:
            return False
        (i, _), c = next(iter(self._terms.items()))
        return i == 0 and c in (1, -1)

    def a_degree(self) -> int:
        return max((i for i, _ in self._terms), default=0)

    def min_q_degree(self) -> int:
        return min((j for _, j in self._terms), default=0)

    # arithmetic

    @staticmethod
    def _coerce(other) -> LaurentPolynomial | None:
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(other)
        return None

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other) -> LaurentPolynomial:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for key, c in other._terms.items():
            value = terms.get(key, 0) + c
            if value:
                terms[key] = value
            else:
                terms.pop(key, None)
        return LaurentPolynomial._raw(terms)

    __radd__ = __add__

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial._raw({key: -c for key, c in self._terms.items()})

    def __sub__(self, other) -> LaurentPolynomial:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPolynomial:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> LaurentPolynomial:
        if isinstance(other, int):
            if other == 0:
                return LaurentPolynomial._raw({})
            return LaurentPolynomial._raw({key: c * other for key, c in self._terms.items()})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        terms: dict[tuple[int, int], int] = {}
        for ((i1, j1), c1), ((i2, j2), c2) in itertools.product(self._terms.items(), other._terms.items()):
            key = (i1 + i2, j1 + j2)
            terms[key] = terms.get(key, 0) + c1 * c2
        return LaurentPolynomial._raw({key: c for key, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPolynomial:
        if n < 0:
            if not self.is_unit():
                raise ValueError("only ±q^k can be inverted")
            ((_, j), c) = next(iter(self._terms.items()))
            return LaurentPolynomial({(0, -j * -n): c ** -n})
        result = LaurentPolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift_q(self, k: int) -> LaurentPolynomial:
        return LaurentPolynomial._raw({(i, j + k): c for (i, j), c in self._terms.items()})

    def try_exquo(self, divisor: LaurentPolynomial | int) -> LaurentPolynomial | None:
        """Exact quotient in Z[a, q^{±1}], or None when the division leaves a remainder."""
        divisor = self._coerce(divisor)
        if divisor is None or not divisor:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self:
            return LaurentPolynomial._raw({})
        shift_n, shift_d = self.min_q_degree(), divisor.min_q_degree()
        numer = _ZZ_AQ.from_dict({(i, j - shift_n): c for (i, j), c in self._terms.items()})
        denom = _ZZ_AQ.from_dict({(i, j - shift_d): c for (i, j), c in divisor._terms.items()})
        try:
            quotient = numer.exquo(denom)
        except ExactQuotientFailed:
            return None
        return LaurentPolynomial(
            {(i, j + shift_n - shift_d): int(c) for (i, j), c in quotient.items()}
        )

    def exquo(self, divisor: LaurentPolynomial | int) -> LaurentPolynomial:
        quotient = self.try_exquo(divisor)
        if quotient is None:
            raise InvariantViolation(f"{self} is not divisible by {divisor}")
        return quotient

    def divides(self, other: LaurentPolynomial | int) -> bool:
        other = self._coerce(other)
        return other.try_exquo(self) is not None

    def evaluate(self, a_value, q_value, one, q_inverse=None):
        """Substitute a and q in any ring whose elements support + * ** (q_inverse for negative powers)."""
        total = one * 0
        for (i, j), c in self._terms.items():
            q_part = q_value ** j if j >= 0 else q_inverse ** (-j)
            total = total + (one * c) * (a_value ** i) * q_part
        return total

    # rendering

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self._terms.items()):
            factors = []
            if i:
                factors.append("a" if i == 1 else f"a^{i}")
            if j:
                factors.append("q" if j == 1 else f"q^{j}")
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def to_json(self) -> list[list[int]]:
        return [[i, j, c] for (i, j), c in sorted(self._terms.items())]

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPolynomial('{self.to_text()}')"


ZERO = LaurentPolynomial()
ONE = LaurentPolynomial.constant(1)
Q = LaurentPolynomial.monomial(1, 0, 1)
Q_INV = LaurentPolynomial.monomial(1, 0, -1)
A = LaurentPolynomial.monomial(1, 1, 0)
