"""
Classification of simple H_n-modules through the Morita context of S_λ.

J_λ = m_λ S_λ is read off S_{λ;λ} ≅ k, and the simple head D_λ is non-zero
exactly when the pairing G[S, T] = φ(m_λ T_{d(S)^{-1}} T_{d(T)} m_λ) does
not vanish.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import pandas as pd

from hecke_cellular.coefficients.laurent import ONE, LaurentPolynomial
from hecke_cellular.coefficients.linalg import EchelonSpace
from hecke_cellular.coefficients.qnumbers import laurent_q_factorial, q_characteristic
from hecke_cellular.coefficients.rings import CoefficientRing, build_ring, generic_q_ring
from hecke_cellular.hecke.parabolic import parabolic_module
from hecke_cellular.hecke.specht import specht_quotient
from hecke_cellular.resources.errors import InvariantViolation, RingError, ShapeError
from hecke_cellular.symgroup.composition import Composition, is_partition, normalize, partitions
from hecke_cellular.tableaux.tableau import Tableau, constant_row_tableau, min_rep_tableau, tableau_to_perm

logger = logging.getLogger(__name__)


def _differences(lam: Composition) -> list[int]:
    padded = list(lam) + [0]
    return [padded[i] - padded[i + 1] for i in range(len(lam))]


def _require_partition(lam: Sequence[int]) -> Composition:
    lam = normalize(lam)
    if not is_partition(lam):
        raise ShapeError(f"{lam} is not a partition")
    return lam


def laurent_f_lambda(lam: Sequence[int]) -> LaurentPolynomial:
    result = ONE
    for d in _differences(_require_partition(lam)):
        result = result * laurent_q_factorial(d)
    return result


def f_lambda(lam: Sequence[int], ring: CoefficientRing | None = None):
    """f_λ = [λ_1 - λ_2]! [λ_2 - λ_3]! ... [λ_r]!; a Laurent polynomial unless a ring is given."""
    value = laurent_f_lambda(lam)
    return value if ring is None else ring.from_laurent(value)


def e_restricted(lam: Sequence[int], e: int | None) -> bool:
    """All successive differences, the last part included, are below e (e = None means ∞)."""
    lam = _require_partition(lam)
    return e is None or all(d < e for d in _differences(lam))


def witness_tableau(lam: Sequence[int]) -> Tableau:
    """R in Tab_{λ;λ} with #_{ij}(R) = λ_{i+j-1} - λ_{i+j}."""
    lam = _require_partition(lam)
    padded = list(lam) + [0] * (len(lam) + 1)
    rows = []
    for i in range(1, len(lam) + 1):
        row = []
        for j in range(1, len(lam) - i + 2):
            row.extend([j] * (padded[i + j - 2] - padded[i + j - 1]))
        rows.append(tuple(row))
    return Tableau(tuple(rows))


def witness_value(lam: Sequence[int]) -> LaurentPolynomial:
    """Π_i ([λ_i - λ_{i+1}]!)^i."""
    result = ONE
    for i, d in enumerate(_differences(_require_partition(lam)), start=1):
        result = result * laurent_q_factorial(d) ** i
    return result


def sandwich_value(t: Tableau, ring: CoefficientRing):
    """φ(m_λ m_T) for row-standard T of partition shape λ: the class of m_λ m_T in S_{λ;λ} ≅ k."""
    lam = t.shape
    module = parabolic_module(lam, ring)
    return _pairing(module, {t: ring.one}, specht_quotient(lam, lam, ring), constant_row_tableau(lam))


def _pairing(module, vec, top, anchor):
    reduced = top.reduce(module.extract(module.subgroup_sum(module.lam, vec), module.lam))
    stray = set(reduced) - {anchor}
    if stray:
        raise InvariantViolation(f"S_{{{module.lam};{module.lam}}} reduction left {sorted(map(str, stray))}")
    return reduced.get(anchor, module.ring.zero)


@dataclass(frozen=True)
class TraceIdeal:
    lam: Composition
    generators: tuple[LaurentPolynomial, ...]
    f_lambda: LaurentPolynomial
    witness: Tableau
    witness_generator: LaurentPolynomial
    divisible_by_f: bool
    contains_f_power: bool

    @property
    def power(self) -> int:
        return len(self.lam)

    def specialize(self, ring: CoefficientRing) -> list:
        return [ring.from_laurent(g) for g in self.generators]

    def is_unit_ideal(self, ring: CoefficientRing) -> bool:
        """Over a field the ideal is (1) as soon as one generator survives."""
        ring.require_field("deciding the unit ideal")
        return any(self.specialize(ring))

    def to_json(self, ring: CoefficientRing | None = None) -> dict:
        result = {
            "lambda": list(self.lam),
            "generators": [g.to_text() for g in self.generators],
            "f_lambda": self.f_lambda.to_text(),
            "witness": self.witness.to_text(),
            "witness_generator": self.witness_generator.to_text(),
            "divisible_by_f": self.divisible_by_f,
            "contains_f_power": self.contains_f_power,
            "power": self.power,
        }
        if ring is not None:
            result["ring"] = ring.name
            result["generators_in_ring"] = [ring.render(g) for g in self.specialize(ring)]
            if ring.is_field:
                result["unit_ideal"] = self.is_unit_ideal(ring)
        return result


def trace_ideal_J(lam: Sequence[int], ring: CoefficientRing | None = None) -> TraceIdeal:
    """
    J_λ from the classes of m_λ m_T, T in Tab_λ, computed over Q(q) and certified Laurent.
    The ring only matters for reporting (TraceIdeal.specialize).
    """
    lam = _require_partition(lam)
    field_ring = generic_q_ring()
    module = parabolic_module(lam, field_ring)
    top = specht_quotient(lam, lam, field_ring)
    anchor = constant_row_tableau(lam)
    generators: dict[LaurentPolynomial, None] = {}
    values: dict[Tableau, LaurentPolynomial] = {}
    for t in module.tableaux:
        value = _pairing(module, {t: field_ring.one}, top, anchor)
        try:
            certified = field_ring.to_laurent(value)
        except RingError as exc:
            raise InvariantViolation(f"m_λ m_T is not Laurent-integral at T={t}: {exc}") from exc
        values[t] = certified
        if certified:
            generators.setdefault(certified, None)
    f = laurent_f_lambda(lam)
    divisible = all(f.divides(g) for g in generators)
    witness = witness_tableau(lam)
    witness_generator = values[min_rep_tableau(witness)]
    ratio = witness_generator.try_exquo(witness_value(lam))
    if ratio is None or not ratio.is_unit():
        raise InvariantViolation(f"witness {witness} gives {witness_generator}, not a unit times {witness_value(lam)}")
    contains = witness_generator.divides(f ** len(lam))
    logger.info("J_%s: %d generators, f=%s, divisible=%s, f^%d contained=%s",
                lam, len(generators), f, divisible, len(lam), contains)
    if ring is not None:
        logger.debug("J_%s reported over %s", lam, ring.name)
    return TraceIdeal(lam, tuple(generators), f, witness, witness_generator, divisible, contains)


@dataclass
class GramMatrix:
    lam: Composition
    ring: CoefficientRing
    basis: list[Tableau]
    entries: list[list] = field(default_factory=list)

    @property
    def rank(self) -> int:
        space = EchelonSpace(self.ring)
        space.extend({j: v for j, v in enumerate(row) if v} for row in self.entries)
        return space.rank

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "ring": self.ring.name,
            "basis": [t.to_text() for t in self.basis],
            "matrix": [[self.ring.render(v) for v in row] for row in self.entries],
            "gram_rank": self.rank,
        }


def gram_matrix(lam: Sequence[int], ring: CoefficientRing) -> GramMatrix:
    """G[S, T] over the quotient basis of S_λ = S_{λ;(1^n)}."""
    ring.require_field("a Gram matrix")
    lam = normalize(lam)
    n = sum(lam)
    basis = specht_quotient(lam, (1,) * n, ring).basis
    gram = GramMatrix(lam, ring, basis)
    if not basis:
        return gram
    module = parabolic_module(lam, ring)
    top = specht_quotient(lam, lam, ring)
    anchor = constant_row_tableau(lam)
    for s in basis:
        inverse = tableau_to_perm(s).inverse()
        gram.entries.append([
            _pairing(module, module.basis_action(inverse, {t: ring.one}), top, anchor) for t in basis
        ])
    logger.info("Gram matrix of S_%s over %s: size %d, rank %d", lam, ring.name, len(basis), gram.rank)
    return gram


def _classify_row(args: tuple[Composition, str, int | None]) -> dict:
    lam, ring_text, e = args
    ring = build_ring(ring_text)
    rank = gram_matrix(lam, ring).rank
    return {
        "lambda": list(lam),
        "e_restricted": e_restricted(lam, e),
        "gram_rank": rank,
        "dim_simple": rank,
        "simple_nonzero": rank > 0,
    }


@dataclass
class Classification:
    n: int
    ring: str
    e: int | None
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
            "count": self.count,
            "e_restricted_count": self.predicted,
            "consistent": self.consistent,
            "rows": self.rows,
        }


def map_partitions(worker, args: list, jobs: int = 1) -> list:
    """Run worker over args, in a process pool when jobs > 1; results keep the input order."""
    if jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(worker, args))
    return [worker(a) for a in args]


def count_simples(n: int, ring: CoefficientRing, jobs: int = 1) -> Classification:
    """Number of partitions λ of n with non-zero Gram rank, with the per-λ table."""
    ring.require_field("classifying simple modules")
    e = q_characteristic(ring, n)
    rows = map_partitions(_classify_row, [(lam, ring.name, e) for lam in partitions(n)], jobs)
    result = Classification(n, ring.name, e, rows)
    logger.info("H_%d over %s: %d simple modules, %d e-restricted partitions (e=%s)",
                n, ring.name, result.count, result.predicted, e)
    return result
