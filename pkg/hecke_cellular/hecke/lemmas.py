"""
Local transformations of relations in Specht quotients, and the scalar rules.

Every check instantiates both sides inside the relevant SpechtQuotient and
compares reductions; they return bool and log the first failure.
"""
from __future__ import annotations

import logging
from math import comb
from typing import Mapping, Sequence

from hecke_cellular.coefficients.qnumbers import q_binomial
from hecke_cellular.coefficients.rings import CoefficientRing
from hecke_cellular.hecke.element import HeckeElement, parabolic_generator
from hecke_cellular.hecke.homspace import HomSpaceElement
from hecke_cellular.hecke.specht import specht_quotient
from hecke_cellular.resources.errors import ShapeError
from hecke_cellular.symgroup.composition import normalize
from hecke_cellular.symgroup.cosets import block_swap
from hecke_cellular.symgroup.perm import Perm
from hecke_cellular.tableaux.tableau import Tableau

logger = logging.getLogger(__name__)

LOCAL_KINDS = ("add_top_row", "add_bottom_bar", "scalar_lemma", "scalar_corollary")


def _grow(mu: Sequence[int], values: Sequence[int]) -> tuple[int, ...]:
    grown = list(mu) + [0] * max(0, max(values, default=0) - len(mu))
    for v in values:
        grown[v - 1] += 1
    return tuple(grown)


def add_top_row(t: Tableau, row: Sequence[int]) -> Tableau:
    return Tableau((tuple(row),) + t.rows)


def add_bottom_bar(t: Tableau, a: int, l: int, last_row: int | None = None) -> Tableau:
    """Join a bar of l copies of a at the right of the last row."""
    rows = list(t.rows)
    r = len(rows) - 1 if last_row is None else last_row
    rows[r] = rows[r] + (a,) * l
    return Tableau(tuple(rows))


def top_row_check(lam: Sequence[int], mu: Sequence[int], row: Sequence[int], ring: CoefficientRing) -> bool:
    """Every relation of S_{λ;μ} stays a relation of S_{(k,λ);μ^+} after adding the row on top."""
    row = tuple(int(v) for v in row)
    if list(row) != sorted(row) or any(v < 1 for v in row):
        raise ShapeError(f"the new row {row} must be a weakly increasing sequence of positive entries")
    lam, mu = normalize(lam), normalize(mu)
    source = specht_quotient(lam, mu, ring)
    target = specht_quotient((len(row),) + lam, _grow(mu, row), ring)
    for relation in source.relations():
        image = {add_top_row(t, row): c for t, c in relation.items()}
        if not target.is_zero(image):
            logger.info("adding the row %s breaks the relation %s", row, relation)
            return False
    return True


def bottom_bar_check(lam: Sequence[int], mu: Sequence[int], a: int, l: int, ring: CoefficientRing) -> bool:
    """Relations survive joining a bar of a's to the last row, weighted by [#_{ra}(T) + l choose l]."""
    lam, mu = normalize(lam), normalize(mu)
    if a < len(mu) or l < 0:
        raise ShapeError(f"the bar value {a} must be at least every entry of weight {mu}")
    r = len(lam)
    grown_lam = lam[:-1] + (lam[-1] + l,)
    source = specht_quotient(lam, mu, ring)
    target = specht_quotient(grown_lam, _grow(mu, [a] * l), ring)
    for relation in source.relations():
        image = {}
        for t, c in relation.items():
            image[add_bottom_bar(t, a, l)] = c * q_binomial(t.count(r, a) + l, l, ring)
        if not target.is_zero(image):
            logger.info("joining %d copies of %d breaks the relation %s", l, a, relation)
            return False
    return True


def scalar_lemma_tableau(n: int, k: int, l: int, i: int) -> Tableau:
    """T_i in Tab_{(n-k,k);(n-l,l)}: the second row holds i ones."""
    return Tableau((
        (1,) * (n - l - i) + (2,) * (l - k + i),
        (1,) * i + (2,) * (k - i),
    ))


def scalar_lemma_check(n: int, k: int, l: int, ring: CoefficientRing, i: int | None = None) -> bool:
    """m_{T_i} ≡ (-1)^i q^{C(i,2)} [k choose i] m_{T_0} in S_{(n-k,k);(n-l,l)}."""
    if not 0 <= k <= l <= n:
        raise ShapeError(f"need 0 <= k <= l <= n, got k={k}, l={l}, n={n}")
    lam, mu = (n - k, k), (n - l, l)
    quotient = specht_quotient(lam, mu, ring)
    first = scalar_lemma_tableau(n, k, l, 0)
    indices = [i] if i is not None else range(0, min(k, n - l) + 1)
    for j in indices:
        scalar = (-ring.one) ** j * ring.q ** comb(j, 2) * q_binomial(k, j, ring)
        difference = {scalar_lemma_tableau(n, k, l, j): ring.one}
        if first in difference:
            difference[first] = difference[first] - scalar
        else:
            difference[first] = -scalar
        if not quotient.is_zero({t: c for t, c in difference.items() if c}):
            logger.info("scalar rule fails for n=%d k=%d l=%d i=%d", n, k, l, j)
            return False
    return True


def scalar_corollary_check(n: int, entries: Sequence[int], ring: CoefficientRing) -> bool:
    """(1..1 a_1..a_k / 1..1) ≡ (-1)^k q^{C(k,2)} (1..1 / a_1..a_k) in S_{(n-k,k);μ}."""
    entries = tuple(sorted(int(v) for v in entries))
    k = len(entries)
    if n - 2 * k < 0 or any(v < 1 for v in entries):
        raise ShapeError(f"entries {entries} do not fit the shape ({n - k},{k})")
    upper = Tableau(((1,) * (n - 2 * k) + entries, (1,) * k))
    lower = Tableau(((1,) * (n - k), entries))
    quotient = specht_quotient((n - k, k), upper.weight, ring)
    scalar = (-ring.one) ** k * ring.q ** comb(k, 2)
    relation = HomSpaceElement.basis(upper, ring) - HomSpaceElement.basis(lower, ring).scale(scalar)
    return quotient.is_zero(relation)


def local_transform_check(kind: str, instance: Mapping, ring: CoefficientRing) -> bool:
    """
    Dispatch on kind:
      add_top_row       {"lambda", "mu", "row"}
      add_bottom_bar    {"lambda", "mu", "a", "l"}
      scalar_lemma      {"n", "k", "l", "i"?}
      scalar_corollary  {"n", "entries"}
    """
    if kind == "add_top_row":
        return top_row_check(instance["lambda"], instance["mu"], instance["row"], ring)
    if kind == "add_bottom_bar":
        return bottom_bar_check(instance["lambda"], instance["mu"], int(instance["a"]), int(instance["l"]), ring)
    if kind == "scalar_lemma":
        return scalar_lemma_check(int(instance["n"]), int(instance["k"]), int(instance["l"]), ring,
                                  instance.get("i"))
    if kind == "scalar_corollary":
        return scalar_corollary_check(int(instance["n"]), instance["entries"], ring)
    raise ShapeError(f"unknown local transformation {kind!r}; expected one of {LOCAL_KINDS}")


def braiding_hexagon_check(n: int, m: int, p: int, ring: CoefficientRing) -> bool:
    """
    σ acts on concatenated parabolic generators as left multiplication by the
    block swap; both hexagon factorizations hold on m_{(n,p,m)} and m_{(n,m,p)},
    and the swap intertwines m_{(a,b)} with m_{(b,a)}.
    """
    def t(w: Perm) -> HeckeElement:
        return HeckeElement.basis(w, ring)

    first = parabolic_generator((n, p, m), ring)
    whole = t(block_swap(n + p, m)) * first
    stepwise = t(Perm.direct_sum(block_swap(n, m), Perm.identity(p))) * (
        t(Perm.direct_sum(Perm.identity(n), block_swap(p, m))) * first)
    second = parabolic_generator((n, m, p), ring)
    whole2 = t(block_swap(n, m + p)) * second
    stepwise2 = t(Perm.direct_sum(Perm.identity(m), block_swap(n, p))) * (
        t(Perm.direct_sum(block_swap(n, m), Perm.identity(p))) * second)
    swap = t(block_swap(n, m))
    natural = swap * parabolic_generator((n, m), ring) == parabolic_generator((m, n), ring) * swap
    return whole == stepwise and whole2 == stepwise2 and natural
