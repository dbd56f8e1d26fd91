"""
Pluggable coefficient rings.

Every ring exposes the same small surface (zero, one, q, q_inv, a, from_int, inv,
from_laurent, render, to_json) so that the algebra code never needs to know
whether it is running over Z[a, q^{±1}], a rational function field, a
cyclotomic field or a finite field. Elements are the native values of the
backing implementation: LaurentPolynomial for ZaQ and sympy domain elements
for every field. Zero tests are always spelled `not x`.
"""
from __future__ import annotations

import functools
import logging
import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any

import sympy
from sympy import GF, QQ, Poly, Rational, Symbol, cyclotomic_poly, isprime
from sympy.polys.agca.extensions import FiniteExtension

from hecke_cellular.coefficients.laurent import LaurentPolynomial, A, ONE, Q, Q_INV, ZERO
from hecke_cellular.resources.errors import RingError

logger = logging.getLogger(__name__)

KINDS = ("ZaQ", "Qaq", "Qq", "cyclo", "gf", "Q")


@dataclass(frozen=True)
class RingDescriptor:
    kind: str
    e: int | None = None
    p: int | None = None
    q_value: str | None = None
    a_value: str | None = None

    @property
    def text(self) -> str:
        if self.kind == "cyclo":
            return f"cyclo:{self.e},a={self.a_value}"
        if self.kind == "gf":
            return f"gf:{self.p},q={self.q_value},a={self.a_value}"
        if self.kind == "Q":
            return f"Q:q={self.q_value},a={self.a_value}"
        return self.kind

    @property
    def is_field(self) -> bool:
        return self.kind != "ZaQ"


def _parse_assignments(chunks: list[str], allowed: set[str]) -> dict[str, str]:
    values = {}
    for chunk in chunks:
        key, sep, value = chunk.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or key not in allowed or not value:
            raise RingError(f"bad ring parameter {chunk!r}; expected one of {sorted(allowed)} as key=value")
        try:
            Rational(value)
        except (TypeError, ValueError, sympy.SympifyError):
            raise RingError(f"ring parameter {key} must be rational, got {value!r}")
        values[key] = value
    return values


def parse_ring(text: str) -> RingDescriptor:
    """
    Parse the ring grammar `ZaQ | Qaq | Qq | cyclo:e[,a=r] | gf:p,q=v,a=v | Q[:q=v,a=v]`.
    """
    text = (text or "").strip()
    if text in ("ZaQ", "Qaq", "Qq"):
        return RingDescriptor(kind=text)
    kind, _, rest = text.partition(":")
    chunks = [c for c in rest.split(",") if c.strip()] if rest else []
    if kind == "cyclo":
        if not chunks or not re.fullmatch(r"\d+", chunks[0].strip()):
            raise RingError(f"cyclotomic ring needs an order: cyclo:e[,a=r], got {text!r}")
        e = int(chunks[0])
        if e < 2:
            raise RingError(f"cyclotomic order must be at least 2, got {e}")
        values = _parse_assignments(chunks[1:], {"a"})
        return RingDescriptor(kind="cyclo", e=e, a_value=str(Rational(values.get("a", "1"))))
    if kind == "gf":
        if not chunks or not re.fullmatch(r"\d+", chunks[0].strip()):
            raise RingError(f"finite field needs a prime: gf:p,q=v,a=v, got {text!r}")
        p = int(chunks[0])
        if not isprime(p):
            raise RingError(f"gf characteristic must be prime, got {p}")
        values = _parse_assignments(chunks[1:], {"q", "a"})
        q_value = Rational(values.get("q", "1"))
        a_value = Rational(values.get("a", "1"))
        if q_value.q != 1 or a_value.q != 1:
            raise RingError("gf values must be integers")
        if (q_value.p % p) == 0:
            raise RingError("q must be invertible")
        return RingDescriptor(kind="gf", p=p, q_value=str(q_value), a_value=str(a_value))
    if kind == "Q":
        values = _parse_assignments(chunks, {"q", "a"})
        q_value = Rational(values.get("q", "1"))
        if q_value == 0:
            raise RingError("q must be invertible")
        return RingDescriptor(kind="Q", q_value=str(q_value), a_value=str(Rational(values.get("a", "1"))))
    raise RingError(f"unknown ring {text!r}; expected one of {', '.join(KINDS)}")


class CoefficientRing(ABC):
    """Arithmetic context shared by all algebra elements."""

    def __init__(self, descriptor: RingDescriptor):
        self.descriptor = descriptor

    @property
    def name(self) -> str:
        return self.descriptor.text

    @property
    def is_field(self) -> bool:
        return self.descriptor.is_field

    zero: Any
    one: Any
    q: Any
    q_inv: Any
    a: Any

    def from_int(self, n: int):
        return self.one * int(n)

    @abstractmethod
    def inv(self, x):
        raise NotImplementedError("CoefficientRing hasn't supported `inv`.")

    @abstractmethod
    def from_laurent(self, p: LaurentPolynomial):
        raise NotImplementedError("CoefficientRing hasn't supported `from_laurent`.")

    def to_laurent(self, x) -> LaurentPolynomial:
        raise RingError(f"{self.name} elements cannot be certified as Laurent polynomials")

    @abstractmethod
    def render(self, x) -> str:
        raise NotImplementedError("CoefficientRing hasn't supported `render`.")

    def to_json(self, x):
        return self.render(x)

    def characteristic(self) -> int:
        return 0

    def require_field(self, what: str) -> None:
        if not self.is_field:
            raise RingError(f"{what} needs a field, got {self.name}")

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r})"


class LaurentRing(CoefficientRing):
    """Z[a, q^{±1}] on LaurentPolynomial."""

    def __init__(self, descriptor: RingDescriptor):
        super().__init__(descriptor)
        self.zero, self.one, self.q, self.q_inv, self.a = ZERO, ONE, Q, Q_INV, A

    def from_int(self, n: int) -> LaurentPolynomial:
        return LaurentPolynomial.constant(int(n))

    def inv(self, x: LaurentPolynomial) -> LaurentPolynomial:
        if not x.is_unit():
            raise RingError(f"{x} is not invertible in {self.name}")
        return x ** -1

    def from_laurent(self, p: LaurentPolynomial) -> LaurentPolynomial:
        return p

    def to_laurent(self, x: LaurentPolynomial) -> LaurentPolynomial:
        return x

    def render(self, x: LaurentPolynomial) -> str:
        return x.to_text()

    def to_json(self, x: LaurentPolynomial):
        return x.to_json()


class SympyFieldRing(CoefficientRing):
    """A field backed by a sympy domain, with chosen images of q and a."""

    def __init__(self, descriptor: RingDescriptor, domain, q, a, layout: tuple[str, ...] = ()):
        super().__init__(descriptor)
        self.domain = domain
        self.zero, self.one = domain.zero, domain.one
        self.q, self.a = q, a
        if not q:
            raise RingError("q must be invertible")
        self.q_inv = self.one / q
        # generator order of a rational function field, used to certify Laurent elements
        self._layout = layout

    def inv(self, x):
        if not x:
            raise ZeroDivisionError(f"division by zero in {self.name}")
        return self.one / x

    def from_laurent(self, p: LaurentPolynomial):
        return p.evaluate(self.a, self.q, self.one, self.q_inv)

    def to_laurent(self, x) -> LaurentPolynomial:
        if not self._layout:
            return super().to_laurent(x)
        numer, denom = x.numer, x.denom
        denom_terms = denom.terms()
        if len(denom_terms) != 1:
            raise RingError(f"{self.render(x)} has a non-monomial denominator")
        d_monom, d_coeff = denom_terms[0]
        shift = dict(zip(self._layout, d_monom))
        if shift.get("a", 0):
            raise RingError(f"{self.render(x)} divides by a")
        terms = {}
        for monom, coeff in numer.terms():
            exps = dict(zip(self._layout, monom))
            value = QQ.convert(coeff) / QQ.convert(d_coeff)
            if QQ.denom(value) != 1:
                raise RingError(f"{self.render(x)} has non-integral coefficients")
            terms[(exps.get("a", 0), exps.get("q", 0) - shift.get("q", 0))] = int(QQ.numer(value))
        return LaurentPolynomial(terms)

    def render(self, x) -> str:
        return str(self.domain.to_sympy(x))

    def characteristic(self) -> int:
        return int(self.domain.characteristic())


def _build(descriptor: RingDescriptor) -> CoefficientRing:
    kind = descriptor.kind
    if kind == "ZaQ":
        return LaurentRing(descriptor)
    if kind == "Qaq":
        a_sym, q_sym = sympy.symbols("a q")
        domain = QQ.frac_field(a_sym, q_sym)
        a, q = domain.gens
        return SympyFieldRing(descriptor, domain, q=q, a=a, layout=("a", "q"))
    if kind == "Qq":
        domain = QQ.frac_field(Symbol("q"))
        (q,) = domain.gens
        return SympyFieldRing(descriptor, domain, q=q, a=domain.one, layout=("q",))
    if kind == "cyclo":
        x = Symbol("x")
        domain = FiniteExtension(Poly(cyclotomic_poly(descriptor.e, x), x, domain=QQ))
        return SympyFieldRing(descriptor, domain, q=domain.generator,
                              a=domain.from_sympy(Rational(descriptor.a_value)))
    if kind == "gf":
        domain = GF(descriptor.p)
        return SympyFieldRing(descriptor, domain, q=domain.from_sympy(Rational(descriptor.q_value)),
                              a=domain.from_sympy(Rational(descriptor.a_value)))
    if kind == "Q":
        return SympyFieldRing(descriptor, QQ, q=QQ.from_sympy(Rational(descriptor.q_value)),
                              a=QQ.from_sympy(Rational(descriptor.a_value)))
    raise RingError(f"unknown ring kind {kind!r}")


@functools.lru_cache(maxsize=None)
def build_ring(descriptor: RingDescriptor | str) -> CoefficientRing:
    if isinstance(descriptor, str):
        descriptor = parse_ring(descriptor)
    logger.debug("building coefficient ring %s", descriptor.text)
    return _build(descriptor)


def generic_ring() -> CoefficientRing:
    """Q(a, q): where every generic statement is decided before specialisation."""
    return build_ring("Qaq")


def generic_q_ring() -> CoefficientRing:
    """Q(q) with a = 1, enough for statements about H_n alone."""
    return build_ring("Qq")
