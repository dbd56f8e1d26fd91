"""
Ideal data of Γ_λ and the classification of simple H^c_n-supermodules.

Γ_λ is the Clifford superalgebra on γ_1..γ_r (r = number of non-zero parts)
with γ_i^2 = a⟦λ_i⟧. Θ_λ is generated by γ_i - γ_j for λ_i = λ_j, so Γ_λ/Θ_λ
is either zero or the Clifford algebra on the distinct parts. K_m, Δ_{λ;i},
Δ_λ and the trace ideal J^c_λ decide which λ carry a simple module.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Sequence

import pandas as pd

from hecke_cellular.coefficients.laurent import A, LaurentPolynomial, Q
from hecke_cellular.coefficients.linalg import EchelonSpace
from hecke_cellular.coefficients.qnumbers import (
    laurent_even_ratio_power,
    laurent_q_integer,
    q2_characteristic,
    q2_integer,
    q_characteristic,
)
from hecke_cellular.coefficients.rings import CoefficientRing, build_ring, generic_ring
from hecke_cellular.hecke.classify import e_restricted, map_partitions
from hecke_cellular.heckeclifford.clifford import CliffordAlgebra
from hecke_cellular.heckeclifford.element import gamma_lemma_check
from hecke_cellular.heckeclifford.parabolic import super_parabolic_module
from hecke_cellular.heckeclifford.specht import e2_strict, gamma_class, super_specht_quotient
from hecke_cellular.resources.errors import InvariantViolation, RingError, ShapeError
from hecke_cellular.symgroup.composition import Composition, is_partition, is_strict_partition, normalize, partitions
from hecke_cellular.tableaux.enumerate import enumerate_tableaux

logger = logging.getLogger(__name__)


def _require_partition(lam: Sequence[int]) -> Composition:
    lam = normalize(lam)
    if not is_partition(lam):
        raise ShapeError(f"{lam} is not a partition")
    return lam


class GammaAlgebra(CliffordAlgebra):
    """Γ_λ with labels 1..ℓ(λ)."""

    def __init__(self, lam: Sequence[int], ring: CoefficientRing):
        self.lam = _require_partition(lam)
        self.parts = tuple(p for p in self.lam if p)
        super().__init__({i: ring.a * q2_integer(p, ring) for i, p in enumerate(self.parts, start=1)}, ring)

    def gamma(self, i: int) -> dict:
        """γ_{λ;i}; zero beyond the non-zero parts."""
        return self.generator(i)

    def representative(self, i: int) -> int:
        """The first index carrying the same part as i."""
        return self.parts.index(self.parts[i - 1]) + 1

    def theta_generators(self) -> list[dict]:
        return [{(i,): self.ring.one, (j,): -self.ring.one} for i, j in theta_ideal(self.lam)]

    def theta_space(self) -> EchelonSpace:
        return self.two_sided_ideal(self.theta_generators())

    def quotient(self) -> CliffordAlgebra | None:
        """Γ_λ/Θ_λ, or None when it vanishes."""
        two_a = self.ring.a + self.ring.a
        for i, j in theta_ideal(self.lam):
            if two_a * q2_integer(self.parts[i - 1], self.ring):
                return None
        reps = sorted({self.representative(i) for i in self.labels})
        return CliffordAlgebra({i: self.squares[i] for i in reps}, self.ring)

    def project(self, x: dict, target: CliffordAlgebra) -> dict:
        """The image of x under γ_i -> g_{rep(i)}."""
        out: dict = {}
        for word, c in x.items():
            image = target.product(target.generator(self.representative(i)) for i in word)
            for key, value in image.items():
                updated = out.get(key, self.ring.zero) + c * value
                if updated:
                    out[key] = updated
                else:
                    out.pop(key, None)
        return out


def theta_ideal(lam: Sequence[int]) -> tuple[tuple[int, int], ...]:
    """Index pairs (i, j), i < j, with λ_i = λ_j > 0; Θ_λ is generated by the γ_i - γ_j."""
    lam = _require_partition(lam)
    parts = [p for p in lam if p]
    return tuple((i, j) for i, j in combinations(range(1, len(parts) + 1), 2) if parts[i - 1] == parts[j - 1])


def theta_check(lam: Sequence[int], ring: CoefficientRing) -> bool:
    """dim Γ_λ/Θ_λ from the two-sided ideal agrees with the closed form and with dim S^c_{λ;λ}."""
    ring.require_field("checking Θ_λ")
    gamma = GammaAlgebra(lam, ring)
    by_ideal = gamma.dimension - gamma.theta_space().rank
    quotient = gamma.quotient()
    closed = quotient.dimension if quotient is not None else 0
    specht = super_specht_quotient(gamma.lam, gamma.lam, ring).dimension
    if not by_ideal == closed == specht:
        logger.info("Γ_%s/Θ: ideal %d, closed form %d, S^c %d", gamma.lam, by_ideal, closed, specht)
        return False
    return True


# K_m

def K_ideal(n: int) -> list[LaurentPolynomial]:
    """Generators (a(q-1)/[2])^s [n]!, 0 <= s <= n/2, of K_n ⊂ Z[a, q^{±1}]."""
    if n < 0:
        raise ShapeError(f"K_n needs n >= 0, got {n}")
    return [laurent_even_ratio_power(s, n) for s in range(n // 2 + 1)]


def k_generators(m: int, ring: CoefficientRing) -> list:
    """K_m in the ring; over a field this is [1] or []. K_{-1} is the unit ideal."""
    if m < 0:
        return [ring.one]
    values = [ring.from_laurent(g) for g in K_ideal(m)]
    if ring.is_field:
        return [ring.one] if any(values) else []
    return [v for v in values if v]


def k_nonzero(m: int, ring: CoefficientRing) -> bool:
    return bool(k_generators(m, ring))


def _square_bracket(n: int) -> LaurentPolynomial:
    return laurent_q_integer(n, step=2)


def k_inclusions_check(n: int) -> bool:
    """
    a⟦n⟧K_{n-1} ⊆ K_n ⊆ K_{n-1}, through the explicit witnesses

        g_{n,s} = [n] g_{n-1,s},   g_{n,n/2} = (a(q-1)[n]/[2]) g_{n-1,n/2-1},
        a⟦n⟧ g_{n-1,s} = α g_{n,s} + β g_{n,s+1}.
    """
    if n < 1:
        raise ShapeError(f"the inclusions start at n = 1, got {n}")
    two = laurent_q_integer(2)
    current, previous = K_ideal(n), K_ideal(n - 1)
    for s, g in enumerate(current):
        if s <= (n - 1) // 2:
            witness = laurent_q_integer(n) * previous[s]
        else:
            witness = A * (Q - 1) * laurent_q_integer(n).exquo(two) * previous[s - 1]
        if g != witness:
            logger.info("K_%d ⊆ K_%d fails at s=%d", n, n - 1, s)
            return False
    if n % 2:
        alpha, beta = A * (Q ** n + 1).exquo(two), 0
    else:
        alpha, beta = A * Q * (Q ** (n - 1) + 1).exquo(two), -1
    for s, g in enumerate(previous):
        target = A * _square_bracket(n) * g
        combination = alpha * current[s]
        if beta:
            combination = combination + current[s + 1] * beta
        if target != combination:
            logger.info("a⟦%d⟧K_%d ⊆ K_%d fails at s=%d", n, n - 1, n, s)
            return False
    return True


def k_decomposition_check(n: int, ring: CoefficientRing) -> bool:
    """m_n C_n m_n = K_n m_n ⊕ K_{n-1} γ^L_n m_n, one Clifford monomial at a time."""
    return all(gamma_lemma_check(n, indices, ring)
               for r in range(n + 1) for indices in combinations(range(1, n + 1), r))


# Δ_λ

def _q_power(ring: CoefficientRing, d: int):
    result = ring.one
    for _ in range(d):
        result = result * ring.q
    return result


def delta_factors(lam: Sequence[int], ring: CoefficientRing) -> list[list[dict]]:
    """For each i, elements of Γ_λ spanning Δ_{λ;i} over the ring."""
    gamma = GammaAlgebra(lam, ring)
    parts = list(gamma.parts) + [0]
    factors = []
    for i in range(1, len(gamma.parts) + 1):
        d = parts[i - 1] - parts[i]
        nxt = gamma.gamma(i + 1)
        q_d = _q_power(ring, d)
        shifted = {w: -(q_d * c) for w, c in nxt.items()}
        difference = dict(gamma.gamma(i))
        difference.update(shifted)
        spans = []
        for k in k_generators(d, ring):
            spans.append({(): k})
            if nxt:
                spans.append({w: k * c for w, c in nxt.items()})
        for k in k_generators(d - 1, ring):
            spans.append({w: k * c for w, c in difference.items()})
            if nxt:
                spans.append({w: k * c for w, c in gamma.multiply(difference, nxt).items()})
        factors.append([x for x in spans if x])
    return factors


def delta_ideal(lam: Sequence[int], ring: CoefficientRing) -> list[dict]:
    """Generators of Δ_λ = Δ_{λ;r} ⋯ Δ_{λ;1} as elements of Γ_λ."""
    gamma = GammaAlgebra(lam, ring)
    factors = delta_factors(lam, ring)
    out = []
    for choice in product(*reversed(factors)):
        element = gamma.product(choice)
        if element:
            out.append(element)
    return out


def delta_space(lam: Sequence[int], ring: CoefficientRing) -> EchelonSpace:
    ring.require_field("the span of Δ_λ")
    space = EchelonSpace(ring)
    space.extend(delta_ideal(lam, ring))
    return space


def delta_two_sided_check(lam: Sequence[int], ring: CoefficientRing) -> bool:
    """Δ_λ γ_j and γ_j Δ_λ stay in Δ_λ for every generator."""
    gamma = GammaAlgebra(lam, ring)
    space = delta_space(lam, ring)
    for row in space.rows():
        for j in gamma.labels:
            g = gamma.gamma(j)
            if not space.contains(gamma.multiply(row, g)) or not space.contains(gamma.multiply(g, row)):
                logger.info("Δ_%s is not closed under γ_%d", gamma.lam, j)
                return False
    return True


def power_space(gamma: CliffordAlgebra, space: EchelonSpace, r: int) -> EchelonSpace:
    """The span of all r-fold products of elements of space."""
    result = EchelonSpace(gamma.ring)
    result.add(gamma.one())
    for _ in range(r):
        nxt = EchelonSpace(gamma.ring)
        for x in result.rows():
            for y in space.rows():
                nxt.add(gamma.multiply(x, y))
        result = nxt
    return result


# J^c_λ

@dataclass
class IdealData:
    lam: Composition
    ring: str
    K: dict[int, list[LaurentPolynomial]]
    theta: tuple[tuple[int, int], ...]
    delta: list[dict]
    J: list[dict] | None = None
    lower_bound: bool | None = None
    upper_bound: bool | None = None
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        ring = build_ring(self.ring)
        gamma = GammaAlgebra(self.lam, ring)

        def render(x: dict) -> str:
            return gamma.render(x, symbol="γ")

        return {
            "lambda": list(self.lam),
            "ring": self.ring,
            "K": {str(m): [g.to_text() for g in gens] for m, gens in self.K.items()},
            "theta": [f"γ{i} - γ{j}" for i, j in self.theta],
            "delta": [render(x) for x in self.delta],
            "J": None if self.J is None else [render(x) for x in self.J],
            "sandwich": {"lower": self.lower_bound, "upper": self.upper_bound},
            "notes": list(self.notes),
        }


def _j_generators(lam: Composition) -> list[dict]:
    """J^c_λ over Q(a,q): classes of m_λ m_T in S^c_{λ;λ} ≅ Γ_λ, certified Laurent."""
    field_ring = generic_ring()
    module = super_parabolic_module(lam, field_ring)
    top = super_specht_quotient(lam, lam, field_ring)
    words = {}
    for r in range(len(lam) + 1):
        for word in combinations(range(1, len(lam) + 1), r):
            words[gamma_class(lam, word)] = word
    out = []
    for t in enumerate_tableaux(lam, (1,) * module.n, "circled"):
        vec = module.subgroup_sum(lam, module.free_of(t))
        reduced = top.reduce(module.free_extract(vec, lam))
        element = {}
        for s, c in reduced.items():
            if s not in words:
                raise InvariantViolation(f"S^c_{{{lam};{lam}}} reduction left {s}")
            try:
                element[words[s]] = field_ring.to_laurent(c)
            except RingError as exc:
                raise InvariantViolation(f"m_λ m_T is not Laurent-integral at T={t}: {exc}") from exc
        if element:
            out.append(element)
    logger.debug("J^c_%s: %d non-zero classes", lam, len(out))
    return out


def trace_ideal_Jc(lam: Sequence[int], ring: CoefficientRing | None = None) -> IdealData:
    """
    The ideal data of λ, with J^c_λ and the sandwich Δ^r + Θ ⊆ J ⊆ Δ + Θ
    decided over `ring` (Q(a,q) when omitted; the sandwich needs a field).
    """
    lam = _require_partition(lam)
    ring = ring or generic_ring()
    gamma = GammaAlgebra(lam, ring)
    r = len(gamma.parts)
    ks = {m: K_ideal(m) for m in sorted({p - nxt for p, nxt in zip(lam, lam[1:] + (0,))} | {0})}
    data = IdealData(lam, ring.name, ks, theta_ideal(lam), delta_ideal(lam, ring))
    if not is_strict_partition(lam):
        data.notes.append("S^c_{λ;λ} vanishes generically for non-strict λ; J^c_λ not computed")
        return data
    data.J = [{w: ring.from_laurent(c) for w, c in x.items()} for x in _j_generators(lam)]
    data.J = [{w: c for w, c in x.items() if c} for x in data.J]
    data.J = [x for x in data.J if x]
    if not ring.is_field:
        data.notes.append(f"{ring.name} is not a field; sandwich not decided")
        return data
    theta = gamma.theta_space()
    upper = delta_space(lam, ring)
    for row in theta.rows():
        upper.add(row)
    j_space = EchelonSpace(ring)
    j_space.extend(data.J)
    for row in theta.rows():
        j_space.add(row)
    lower = power_space(gamma, delta_space(lam, ring), r)
    for row in theta.rows():
        lower.add(row)
    data.lower_bound = all(j_space.contains(x) for x in lower.rows())
    data.upper_bound = all(upper.contains(x) for x in j_space.rows())
    logger.info("J^c_%s over %s: dim %d, Δ^r+Θ ⊆ J: %s, J ⊆ Δ+Θ: %s",
                lam, ring.name, j_space.rank, data.lower_bound, data.upper_bound)
    return data


# classification

def super_e_restricted(lam: Sequence[int], e: int | None, e2: int | None) -> bool:
    """λ_i - λ_{i+1} < e when e₂ | λ_i, and <= e otherwise."""
    lam = _require_partition(lam)
    if e is None:
        return True
    padded = list(lam) + [0]
    for i, part in enumerate(lam):
        if not part:
            continue
        d = part - padded[i + 1]
        divisible = e2 is not None and part % e2 == 0
        if d > e or (divisible and d == e):
            return False
    return True


def predicted_simple(lam: Sequence[int], ring: CoefficientRing, n: int) -> bool:
    """The field corollaries: which λ should carry a simple supermodule."""
    two_a = ring.a + ring.a
    e = q_characteristic(ring, n)
    if not two_a:
        return e_restricted(lam, e)
    if ring.q == -ring.one:
        p = ring.characteristic()
        if p == 0:
            return e2_strict(lam, None)
        return e2_strict(lam, p) and super_e_restricted(lam, 2 * p, p)
    e2 = q2_characteristic(ring, n)
    return e2_strict(lam, e2) and super_e_restricted(lam, e, e2)


def has_simple(lam: Sequence[int], ring: CoefficientRing) -> bool:
    """Γ_λ/Θ_λ ≠ 0 and Δ_λ maps onto it modulo the radical."""
    ring.require_field("deciding simple supermodules")
    gamma = GammaAlgebra(lam, ring)
    quotient = gamma.quotient()
    if quotient is None:
        return False
    images = [gamma.project(x, quotient) for x in delta_ideal(lam, ring)]
    images.extend(quotient.radical().rows())
    return quotient.contains_one(quotient.two_sided_ideal(x for x in images if x))


def _classify_super_row(args: tuple[Composition, str, int]) -> dict:
    lam, ring_text, n = args
    ring = build_ring(ring_text)
    gamma = GammaAlgebra(lam, ring)
    quotient = gamma.quotient()
    e2 = q2_characteristic(ring, n)
    return {
        "lambda": list(lam),
        "strict": e2_strict(lam, e2),
        "e_restricted": predicted_simple(lam, ring, n),
        "quotient_dim": 0 if quotient is None else quotient.dimension,
        "simple_nonzero": has_simple(lam, ring),
    }


@dataclass
class SuperClassification:
    n: int
    ring: str
    e: int | None
    e2: int | None
    rows: list[dict]

    @property
    def count(self) -> int:
        return sum(1 for row in self.rows if row["simple_nonzero"])

    @property
    def predicted(self) -> int:
        return sum(1 for row in self.rows if row["e_restricted"])

    @property
    def consistent(self) -> bool:
        return all(row["simple_nonzero"] == row["e_restricted"] for row in self.rows)

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame(self.rows)
        if not frame.empty:
            frame["lambda"] = frame["lambda"].map(lambda lam: ",".join(map(str, lam)))
        return frame

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "ring": self.ring,
            "e": self.e,
            "e2": self.e2,
            "count": self.count,
            "predicted_count": self.predicted,
            "consistent": self.consistent,
            "rows": self.rows,
        }


def count_super_simples(n: int, ring: CoefficientRing, jobs: int = 1) -> SuperClassification:
    """|Irr(H^c_n)/Π| with the per-λ table."""
    ring.require_field("classifying simple supermodules")
    e, e2 = q_characteristic(ring, n), q2_characteristic(ring, n)
    rows = map_partitions(_classify_super_row, [(lam, ring.name, n) for lam in partitions(n)], jobs)
    result = SuperClassification(n, ring.name, e, e2, rows)
    logger.info("H^c_%d over %s: %d simple supermodules up to Π, %d predicted (e=%s, e₂=%s)",
                n, ring.name, result.count, result.predicted, e, e2)
    return result
