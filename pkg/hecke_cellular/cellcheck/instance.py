"""
Filtered algebras given by a multiplication oracle, and the dominance-filtered
instances built from H_n and H^c_n.

Labels of the Hecke and Hecke-Clifford instances are the partitions of n, with
λ ≤ μ exactly when λ dominates μ. A^{≤λ} is the two-sided ideal generated by
the m_ν with ν ⊵ λ, so the label (1^n) carries the whole algebra. The Morita
data at λ is read inside A modulo A^{<λ}: M_λ = A m_λ, N_λ = m_λ A,
B_λ = m_λ A m_λ, with η(x, y) = xy and ρ(y, x) = yx. Super signs live in the
multiplication oracle.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Hashable, Iterable, Mapping, Sequence

from hecke_cellular.coefficients.linalg import EchelonSpace, scale_vector
from hecke_cellular.coefficients.rings import CoefficientRing
from hecke_cellular.hecke.element import HeckeElement, parabolic_generator
from hecke_cellular.hecke.element import _sort_key as hecke_sort_key
from hecke_cellular.heckeclifford.clifford import words_of
from hecke_cellular.heckeclifford.element import HCElement, hc_basis, hc_parabolic_generator
from hecke_cellular.heckeclifford.element import _sort_key as hc_sort_key
from hecke_cellular.resources.errors import ShapeError
from hecke_cellular.symgroup.composition import dominance_le, partitions
from hecke_cellular.symgroup.cosets import min_coset_reps
from hecke_cellular.symgroup.perm import all_perms

logger = logging.getLogger(__name__)

Vector = dict
Oracle = Callable[[Mapping, Mapping], Vector]


@dataclass
class MoritaData:
    """Spanning sets of M_λ, N_λ and B_λ inside A, with the two pairings."""
    label: Any
    M: list[Vector]
    N: list[Vector]
    B: list[Vector]
    eta: Oracle
    rho: Oracle


@dataclass
class FilteredAlgebraInstance:
    name: str
    ring: CoefficientRing
    basis: list
    generators: list[Vector]
    multiply: Oracle
    labels: list
    leq: Callable[[Any, Any], bool]
    ideals: dict[Any, list[Vector]]
    cells: dict[Any, MoritaData] = field(default_factory=dict)
    order: Callable[[Hashable], Any] | None = None
    _sums: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def lt(self, a, b) -> bool:
        return a != b and self.leq(a, b)

    def space(self, vectors: Iterable[Mapping] = ()) -> EchelonSpace:
        space = EchelonSpace(self.ring, self.order)
        space.extend(vectors)
        return space

    def sum_of_ideals(self, labels: Iterable) -> EchelonSpace:
        """Σ A^{≤μ} over the given labels, as a fresh echelon space."""
        key = frozenset(labels)
        cached = self._sums.get(key)
        if cached is None:
            cached = self.space()
            for label in self.labels:
                if label in key:
                    cached.extend(self.ideals[label])
            self._sums[key] = cached
        return cached.copy()

    def ideal(self, label) -> EchelonSpace:
        return self.sum_of_ideals([label])

    def lower(self, label) -> EchelonSpace:
        """A^{<λ}."""
        return self.sum_of_ideals(mu for mu in self.labels if self.lt(mu, label))

    def not_above(self, label) -> EchelonSpace:
        """Σ_{μ ≱ λ} A^{≤μ}."""
        return self.sum_of_ideals(mu for mu in self.labels if not self.leq(label, mu))

    def whole(self) -> EchelonSpace:
        return self.space({key: self.ring.one} for key in self.basis)


def render_vector(vec: Mapping, ring: CoefficientRing, order=None) -> list[dict]:
    keys = sorted(vec, key=order) if order else list(vec)
    return [{"key": str(key), "coeff": ring.render(vec[key])} for key in keys]


def label_json(label):
    return list(label) if isinstance(label, tuple) else label


def two_sided_closure(seeds: Iterable[Mapping], generators: Sequence[Mapping], multiply: Oracle,
                      ring: CoefficientRing, order=None) -> EchelonSpace:
    """The smallest subspace containing the seeds and stable under x -> gx, xg for every generator g."""
    space = EchelonSpace(ring, order)
    queue = deque()
    for vec in seeds:
        if space.add(vec):
            queue.append(vec)
    while queue:
        vec = queue.popleft()
        for g in generators:
            for image in (multiply(g, vec), multiply(vec, g)):
                if space.add(image):
                    queue.append(image)
    return space


def _independent(vectors: Iterable[Mapping], modulo: EchelonSpace) -> list[Vector]:
    """A subset of vectors independent modulo a subspace and spanning the same quotient."""
    space = modulo.copy()
    return [dict(vec) for vec in vectors if space.add(vec)]


def _dominance_instance(name: str, n: int, ring: CoefficientRing, basis: list, generators: list[Vector],
                        multiply: Oracle, m_of, lefts, rights, order) -> FilteredAlgebraInstance:
    labels = list(partitions(n))
    ideals = {}
    for lam in labels:
        seeds = [m_of(nu) for nu in labels if dominance_le(lam, nu)]
        space = two_sided_closure(seeds, generators, multiply, ring, order)
        ideals[lam] = space.rows()
        logger.info("%s: A^{<=%s} has dimension %d", name, lam, space.rank)

    inst = FilteredAlgebraInstance(
        name=name,
        ring=ring,
        basis=basis,
        generators=generators,
        multiply=multiply,
        labels=labels,
        leq=lambda lam, mu: dominance_le(mu, lam),
        ideals=ideals,
        order=order,
    )
    for lam in labels:
        lower = inst.lower(lam)
        m = m_of(lam)
        M = _independent((multiply(x, m) for x in lefts(lam)), lower)
        N = _independent((multiply(m, y) for y in rights(lam)), lower)
        B = _independent((multiply(y, x) for y in N for x in M), lower)
        inst.cells[lam] = MoritaData(lam, M, N, B, eta=multiply, rho=multiply)
        logger.debug("%s: label %s has |M|=%d |N|=%d |B|=%d", name, lam, len(M), len(N), len(B))
    return inst


def hecke_instance(n: int, ring: CoefficientRing) -> FilteredAlgebraInstance:
    """H_n with the dominance filter and the Murphy-type cell data."""
    ring.require_field("a filtered algebra instance")

    def multiply(x: Mapping, y: Mapping) -> Vector:
        return (HeckeElement(n, ring, x) * HeckeElement(n, ring, y)).terms

    def m_of(lam) -> Vector:
        return parabolic_generator(lam, ring).terms

    def lefts(lam) -> list[Vector]:
        return [{d: ring.one} for d in min_coset_reps(lam)]

    def rights(lam) -> list[Vector]:
        return [{d.inverse(): ring.one} for d in min_coset_reps(lam)]

    generators = [HeckeElement.generator(n, i, ring).terms for i in range(1, n)]
    return _dominance_instance(f"H_{n}", n, ring, list(all_perms(n)), generators,
                               multiply, m_of, lefts, rights, hecke_sort_key)


def hc_instance(n: int, ring: CoefficientRing) -> FilteredAlgebraInstance:
    """H^c_n with the dominance filter; M_λ is spanned by c^P T_d m_λ and N_λ by m_λ T_{d^{-1}} c^P."""
    ring.require_field("a filtered algebra instance")
    words = words_of(range(1, n + 1))

    def multiply(x: Mapping, y: Mapping) -> Vector:
        return (HCElement(n, ring, x) * HCElement(n, ring, y)).terms

    def m_of(lam) -> Vector:
        return hc_parabolic_generator(lam, ring).terms

    def lefts(lam) -> list[Vector]:
        return [{(word, d): ring.one} for d in min_coset_reps(lam) for word in words]

    def rights(lam) -> list[Vector]:
        return [(HCElement.basis((), d.inverse(), ring) * HCElement.clifford(n, word, ring)).terms
                for d in min_coset_reps(lam) for word in words]

    generators = [HCElement.generator(n, i, ring).terms for i in range(1, n)]
    generators += [HCElement.clifford(n, (j,), ring).terms for j in range(1, n + 1)]
    return _dominance_instance(f"H^c_{n}", n, ring, hc_basis(n), generators,
                               multiply, m_of, lefts, rights, hc_sort_key)


def build_instance(algebra: str, n: int, ring: CoefficientRing) -> FilteredAlgebraInstance:
    if algebra == "hecke":
        return hecke_instance(n, ring)
    if algebra == "hc":
        return hc_instance(n, ring)
    raise ShapeError(f"unknown algebra {algebra!r}; expected 'hecke' or 'hc'")


def refine_to_total_order(inst: FilteredAlgebraInstance, order: Sequence) -> FilteredAlgebraInstance:
    """
    Rebuild the instance over a linear extension of its poset.

    The new ideal at λ is Σ_{μ ⊴ λ} A^{≤μ} where ⊴ is the position in `order`;
    the Morita data is kept.
    """
    order = list(order)
    if sorted(map(repr, order)) != sorted(map(repr, inst.labels)) or len(set(order)) != len(order):
        raise ShapeError(f"{order} is not a permutation of the labels of {inst.name}")
    position = {label: i for i, label in enumerate(order)}
    for a in inst.labels:
        for b in inst.labels:
            if inst.leq(a, b) and position[a] > position[b]:
                raise ShapeError(f"{order} is not a linear extension: {a} <= {b} in {inst.name}")
    ideals = {lam: inst.sum_of_ideals(order[:position[lam] + 1]).rows() for lam in order}
    return replace(
        inst,
        name=f"{inst.name}/total",
        labels=order,
        leq=lambda a, b: position[a] <= position[b],
        ideals=ideals,
        cells=dict(inst.cells),
    )


# Seeded corruptions, used to confirm that each checker can fail.

def drop_ideal_vector(inst: FilteredAlgebraInstance, label=None, index: int = -1) -> FilteredAlgebraInstance:
    """Remove one spanning vector of A^{≤λ} (default: the top label, so the covering fails)."""
    label = inst.labels[-1] if label is None else label
    rows = list(inst.ideals[label])
    if not rows:
        raise ShapeError(f"A^{{<={label}}} has no vector to drop")
    del rows[index]
    return replace(inst, name=f"{inst.name}/drop-ideal", ideals={**inst.ideals, label: rows},
                   cells=dict(inst.cells))


def flip_rho(inst: FilteredAlgebraInstance, label) -> FilteredAlgebraInstance:
    """Replace ρ at one label by -ρ."""
    cell = inst.cells[label]
    ring = inst.ring
    rho = cell.rho

    def flipped(y: Mapping, x: Mapping) -> Vector:
        return scale_vector(rho(y, x), -ring.one)

    cells = {**inst.cells, label: replace(cell, rho=flipped)}
    return replace(inst, name=f"{inst.name}/flip-rho", cells=cells)


def drop_module_vector(inst: FilteredAlgebraInstance, label, side: str = "M") -> FilteredAlgebraInstance:
    """Remove the last spanning vector of M_λ (or N_λ), leaving a rank-deficient layer."""
    if side not in ("M", "N"):
        raise ShapeError(f"side must be 'M' or 'N', got {side!r}")
    cell = inst.cells[label]
    vectors = getattr(cell, side)
    if not vectors:
        raise ShapeError(f"{side}_{label} is already empty")
    cells = {**inst.cells, label: replace(cell, **{side: vectors[:-1]})}
    return replace(inst, name=f"{inst.name}/drop-{side}", cells=cells)
