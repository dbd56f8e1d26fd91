"""
q-integers, q-factorials and their relatives.

Everything is first computed in Z[a, q^{±1}] and then mapped into the target
ring, so specialisation commutes with the arithmetic by construction.
"""
from __future__ import annotations

import functools
from typing import Sequence

from hecke_cellular.coefficients.laurent import LaurentPolynomial, A, ONE, Q
from hecke_cellular.coefficients.rings import CoefficientRing
from hecke_cellular.resources.errors import InvariantViolation, ShapeError


@functools.lru_cache(maxsize=None)
def laurent_q_integer(k: int, step: int = 1) -> LaurentPolynomial:
    if k < 0:
        raise ShapeError(f"q-integers need k >= 0, got {k}")
    return LaurentPolynomial({(0, step * i): 1 for i in range(k)})


@functools.lru_cache(maxsize=None)
def laurent_q_factorial(n: int) -> LaurentPolynomial:
    if n < 0:
        raise ShapeError(f"q-factorial needs n >= 0, got {n}")
    result = ONE
    for k in range(1, n + 1):
        result = result * laurent_q_integer(k)
    return result


def laurent_q_multinomial(n: int, parts: Sequence[int]) -> LaurentPolynomial:
    if any(p < 0 for p in parts) or sum(parts) != n:
        raise ShapeError(f"parts {tuple(parts)} do not form a composition of {n}")
    denominator = ONE
    for p in parts:
        denominator = denominator * laurent_q_factorial(p)
    return laurent_q_factorial(n).exquo(denominator)


def laurent_even_ratio_power(s: int, n: int) -> LaurentPolynomial:
    """(a(q-1)/[2])^s [n]! as a polynomial; [2]^s divides [n]! because [2m] = [2]⟦m⟧."""
    if s < 0:
        raise ShapeError(f"s must be non-negative, got {s}")
    if 2 * s > n:
        raise ShapeError(f"(a(q-1)/[2])^{s} [{n}]! is only polynomial for s <= n/2")
    two = laurent_q_integer(2)
    quotient = laurent_q_factorial(n)
    for _ in range(s):
        quotient = quotient.try_exquo(two)
        if quotient is None:
            raise InvariantViolation(f"[2]^{s} does not divide [{n}]!")
    return quotient * (A * (Q - 1)) ** s


def q_integer(k: int, ring: CoefficientRing):
    return ring.from_laurent(laurent_q_integer(k))


def q_factorial(n: int, ring: CoefficientRing):
    return ring.from_laurent(laurent_q_factorial(n))


def q_multinomial(n: int, parts: Sequence[int], ring: CoefficientRing):
    return ring.from_laurent(laurent_q_multinomial(n, parts))


def q_binomial(n: int, k: int, ring: CoefficientRing):
    if not 0 <= k <= n:
        return ring.zero
    return q_multinomial(n, (k, n - k), ring)


def q2_integer(k: int, ring: CoefficientRing):
    return ring.from_laurent(laurent_q_integer(k, step=2))


def even_ratio_power(s: int, ring: CoefficientRing, n: int | None = None):
    """
    With n given: the polynomial (a(q-1)/[2])^s [n]!.
    Without n: the bare ratio (a(q-1)/[2])^s, which only exists in a field where [2] != 0.
    """
    if n is not None:
        return ring.from_laurent(laurent_even_ratio_power(s, n))
    ring.require_field("the bare ratio a(q-1)/[2]")
    two = q_integer(2, ring)
    if not two:
        raise ZeroDivisionError(f"[2] vanishes in {ring.name}")
    ratio = ring.a * (ring.q - ring.one) * ring.inv(two)
    return ratio ** s if s else ring.one


def q_characteristic(ring: CoefficientRing, bound: int) -> int | None:
    """Smallest k <= bound with [k] = 0, or None when there is none (e = ∞ at this rank)."""
    for k in range(1, bound + 1):
        if not q_integer(k, ring):
            return k
    return None


def q2_characteristic(ring: CoefficientRing, bound: int) -> int | None:
    """Smallest k <= bound with ⟦k⟧ = 0, or None."""
    for k in range(1, bound + 1):
        if not q2_integer(k, ring):
            return k
    return None
