"""
Hom-spaces M_{λ;μ} = m_μ H_n m_λ with their double-coset basis.

For S in Tab_{λ;μ} the basis element is m_S = Σ T_v over the double coset
S_μ d S_λ with d = d(S_↓); M_λ is the case μ = (1^n), where m_T = T_{d(T)} m_λ.
The ∘ product of A in M_{μ;ν} and B in M_{λ;μ} writes B = m_μ y with y
supported on D_μ^{-1} and returns A y.
"""
from __future__ import annotations

import functools
import logging
from dataclasses import dataclass
from typing import Mapping, Sequence

from hecke_cellular.coefficients.laurent import LaurentPolynomial
from hecke_cellular.coefficients.qnumbers import laurent_q_multinomial
from hecke_cellular.coefficients.rings import CoefficientRing
from hecke_cellular.hecke.element import HeckeElement, RightProducts, accumulate
from hecke_cellular.resources.errors import InvariantViolation, ShapeError
from hecke_cellular.symgroup.composition import Composition, normalize, refinement_blocks
from hecke_cellular.symgroup.cosets import double_coset_reps, is_min_coset_rep, young_subgroup
from hecke_cellular.symgroup.perm import Perm
from hecke_cellular.tableaux.enumerate import enumerate_tableaux
from hecke_cellular.tableaux.tableau import (
    Tableau,
    dual_tableau,
    min_rep_tableau,
    perm_to_tableau,
    permutation_tableau,
    restrict_weight,
    tableau_to_perm,
)

logger = logging.getLogger(__name__)


def _pad(mu: Composition, length: int) -> Composition:
    return tuple(mu) + (0,) * max(0, length - len(mu))


def tableau_rep(s: Tableau) -> Perm:
    """d(S_↓), the minimal element of the double coset of S."""
    return tableau_to_perm(min_rep_tableau(s))


def rep_tableau(d: Perm, lam: Sequence[int], mu: Sequence[int]) -> Tableau:
    """The tableau of Tab_{λ;μ} whose double coset has minimal element d."""
    return restrict_weight(perm_to_tableau(d, lam), mu)


@functools.lru_cache(maxsize=None)
def double_coset(d: Perm, lam: Composition, mu: Composition) -> frozenset:
    """S_μ d S_λ."""
    left = [x * d for x in young_subgroup(mu)]
    return frozenset(xd * y for xd in left for y in young_subgroup(lam))


def _check_weight(s: Tableau, lam: Composition, mu: Composition) -> None:
    if s.shape != lam[:len(s.shape)] or any(lam[len(s.shape):]):
        raise ShapeError(f"{s} does not have shape {lam}")
    weight = _pad(s.weight, len(mu))
    if weight != _pad(mu, len(weight)):
        raise ShapeError(f"{s} does not have weight {mu}")
    if not s.is_row_semistandard():
        raise ShapeError(f"{s} is not row-semistandard")


class HomSpaceElement:
    """Σ c_S m_S over Tab_{λ;μ}."""

    __slots__ = ("lam", "mu", "ring", "_terms", "_hecke")

    def __init__(self, lam: Sequence[int], mu: Sequence[int], ring: CoefficientRing,
                 terms: Mapping[Tableau, object] | None = None):
        self.lam, self.mu, self.ring = normalize(lam), normalize(mu), ring
        if sum(self.lam) != sum(self.mu):
            raise ShapeError(f"{self.lam} and {self.mu} have different sizes")
        clean = {}
        for s, c in (terms or {}).items():
            _check_weight(s, self.lam, self.mu)
            if c:
                clean[s] = c
        self._terms = clean
        self._hecke = None

    @classmethod
    def _wrap(cls, lam: Composition, mu: Composition, ring: CoefficientRing, terms: dict) -> HomSpaceElement:
        obj = cls.__new__(cls)
        obj.lam, obj.mu, obj.ring, obj._terms, obj._hecke = lam, mu, ring, terms, None
        return obj

    @classmethod
    def basis(cls, s: Tableau, ring: CoefficientRing, mu: Sequence[int] | None = None) -> HomSpaceElement:
        return cls(s.shape, s.weight if mu is None else mu, ring, {s: ring.one})

    @classmethod
    def zero(cls, lam: Sequence[int], mu: Sequence[int], ring: CoefficientRing) -> HomSpaceElement:
        return cls(lam, mu, ring)

    @property
    def n(self) -> int:
        return sum(self.lam)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> list:
        return sorted(self._terms.items())

    def coefficient(self, s: Tableau):
        return self._terms.get(s, self.ring.zero)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomSpaceElement):
            return NotImplemented
        return (self.lam, self.mu, self._terms) == (other.lam, other.mu, other._terms)

    __hash__ = None

    def _check(self, other: HomSpaceElement) -> None:
        if (self.lam, self.mu) != (other.lam, other.mu):
            raise ShapeError(f"M_{{{self.lam};{self.mu}}} against M_{{{other.lam};{other.mu}}}")

    def __add__(self, other: HomSpaceElement) -> HomSpaceElement:
        self._check(other)
        terms = dict(self._terms)
        for s, c in other._terms.items():
            accumulate(terms, s, c)
        return HomSpaceElement._wrap(self.lam, self.mu, self.ring, terms)

    def __neg__(self) -> HomSpaceElement:
        return self.scale(-self.ring.one)

    def __sub__(self, other: HomSpaceElement) -> HomSpaceElement:
        return self + (-other)

    def scale(self, c) -> HomSpaceElement:
        terms: dict = {}
        for s, v in self._terms.items():
            accumulate(terms, s, v * c)
        return HomSpaceElement._wrap(self.lam, self.mu, self.ring, terms)

    def to_hecke(self) -> HeckeElement:
        if self._hecke is None:
            terms: dict = {}
            for s, c in self._terms.items():
                for v in double_coset(tableau_rep(s), self.lam, self.mu):
                    accumulate(terms, v, c)
            self._hecke = HeckeElement(self.n, self.ring, terms)
        return self._hecke

    @classmethod
    def from_hecke(cls, x: HeckeElement, lam: Sequence[int], mu: Sequence[int],
                   check: bool = True) -> HomSpaceElement:
        """Read x off at the minimal double-coset representatives."""
        lam, mu = normalize(lam), normalize(mu)
        terms = {}
        for d in double_coset_reps(lam, mu):
            c = x.coefficient(d)
            if c:
                terms[rep_tableau(d, lam, mu)] = c
        result = cls._wrap(lam, mu, x.ring, terms)
        if check and result.to_hecke() != x:
            raise InvariantViolation(f"element of H_{x.n} does not lie in M_{{{lam};{mu}}}")
        result._hecke = x
        return result

    def star(self) -> HomSpaceElement:
        """(m_S)* = m_{S*}: the anti-involution carries M_{λ;μ} onto M_{μ;λ}."""
        return HomSpaceElement._wrap(self.mu, self.lam, self.ring,
                                     {dual_tableau(s): c for s, c in self._terms.items()})

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({self.ring.render(c)}) * m[{s}]" for s, c in self.items())

    def to_json(self) -> list[dict]:
        return [{"tableau": s.to_json(), "coeff": self.ring.to_json(c)} for s, c in self.items()]

    def __repr__(self) -> str:
        return f"HomSpaceElement({self.lam};{self.mu}, {self.to_text()})"


def homspace_element(s: Tableau, ring: CoefficientRing, mu: Sequence[int] | None = None) -> HomSpaceElement:
    """m_S; pass mu when the weight has trailing zero parts."""
    return HomSpaceElement.basis(s, ring, mu)


def free_part(b: HeckeElement, mu: Sequence[int]) -> HeckeElement:
    """y with b = m_μ y: the coefficients of b on D_μ^{-1}."""
    terms = {w: c for w, c in b.terms.items() if is_min_coset_rep(w.inverse(), mu)}
    return HeckeElement(b.n, b.ring, terms)


class CircProducts:
    """A ∘ B for a fixed left factor A, sharing A T_w across many B."""

    def __init__(self, a: HomSpaceElement):
        self.a = a
        self._products = RightProducts(a.to_hecke())

    def __call__(self, b: HomSpaceElement, check: bool = True) -> HomSpaceElement:
        if self.a.lam != b.mu:
            raise ShapeError(f"cannot compose M_{{{self.a.lam};{self.a.mu}}} after M_{{{b.lam};{b.mu}}}")
        y = free_part(b.to_hecke(), b.mu)
        return HomSpaceElement.from_hecke(self._products.apply(y), b.lam, self.a.mu, check=check)


def circ_product(a: HomSpaceElement, b: HomSpaceElement) -> HomSpaceElement:
    """A ∘_μ B for A in M_{μ;ν} and B in M_{λ;μ}; lands in M_{λ;ν}."""
    return CircProducts(a)(b)


def parabolic_element(lam: Sequence[int], ring: CoefficientRing) -> HomSpaceElement:
    """m_λ as the identity of M_{λ;λ}."""
    lam = normalize(lam)
    return HomSpaceElement.basis(Tableau(tuple((i + 1,) * p for i, p in enumerate(lam))), ring, lam)


# refinements


def refinement_tableau(nu: Sequence[int], mu: Sequence[int]) -> Tableau:
    """Shape μ, weight ν: row i lists the parts of ν refining μ_i. Its m is m_μ in M_{μ;ν}."""
    groups = refinement_blocks(nu, mu)
    return Tableau(tuple(tuple(j + 1 for j in group for _ in range(nu[j])) for group in groups))


def coarsening_tableau(nu: Sequence[int], mu: Sequence[int]) -> Tableau:
    """Shape ν, weight μ: row j is filled with the part of μ that ν_j refines. Its m is m_μ in M_{ν;μ}."""
    groups = refinement_blocks(nu, mu)
    owner = {j: i + 1 for i, group in enumerate(groups) for j in group}
    return Tableau(tuple((owner[j],) * nu[j] for j in range(len(nu))))


def composition_action(w: Perm, nu: Sequence[int]) -> Composition:
    """(wν)_k = ν_{w(k)}."""
    if len(nu) != w.n:
        raise ShapeError(f"permutation of S_{w.n} cannot act on {tuple(nu)}")
    return tuple(nu[w(k) - 1] for k in range(1, w.n + 1))


@dataclass(frozen=True)
class CanonicalDecomposition:
    """m_S = m_μ ∘_ν m_{P_{w,ν}} ∘_{wν} m_λ."""
    nu: Composition
    w: Perm
    left: Tableau
    permutation: Tableau
    right: Tableau

    def recompose(self, ring: CoefficientRing, lam: Sequence[int], mu: Sequence[int]) -> HomSpaceElement:
        twisted = composition_action(self.w, self.nu)
        a = HomSpaceElement.basis(self.left, ring, mu)
        p = HomSpaceElement.basis(self.permutation, ring, self.nu)
        c = HomSpaceElement.basis(self.right, ring, twisted)
        if c.lam != normalize(lam):
            raise ShapeError(f"decomposition belongs to shape {c.lam}, not {tuple(lam)}")
        return circ_product(a, circ_product(p, c))


def decompose(s: Tableau, mu: Sequence[int] | None = None) -> CanonicalDecomposition:
    mu = normalize(s.weight if mu is None else mu)
    _check_weight(s, s.shape, mu)
    column_major = [(i, j) for j in range(1, len(mu) + 1) for i in range(1, len(s.rows) + 1) if s.count(i, j)]
    row_major = [(i, j) for i in range(1, len(s.rows) + 1) for j in range(1, len(mu) + 1) if s.count(i, j)]
    index = {pair: k for k, pair in enumerate(column_major, start=1)}
    nu = tuple(s.count(i, j) for i, j in column_major)
    w = Perm(tuple(index[pair] for pair in row_major)) if row_major else Perm.identity(0)
    twisted = composition_action(w, nu)
    # value j of the left factor fills the rows of ν that came from column j
    left = Tableau(tuple((j,) * s.count(i, j) for i, j in column_major))
    right_rows = []
    for i in range(1, len(s.rows) + 1):
        right_rows.append(tuple(k for k, (r, j) in enumerate(row_major, start=1) if r == i for _ in range(s.count(r, j))))
    right = Tableau(tuple(right_rows))
    permutation = Tableau(tuple((w(k),) * nu[w(k) - 1] for k in range(1, w.n + 1)))
    logger.debug("canonical decomposition of %s: nu=%s w=%s wnu=%s", s, nu, w, twisted)
    return CanonicalDecomposition(nu, w, left, permutation, right)


def canonical_decomposition(s: Tableau, mu: Sequence[int] | None = None) -> tuple[Composition, Perm]:
    """The unique (ν, w) with ν of positive parts and m_S = m_μ ∘_ν m_{P_{w,ν}} ∘_{wν} m_λ."""
    found = decompose(s, mu)
    return found.nu, found.w


# lemma checks


def refinement_left_check(s: Tableau, nu: Sequence[int], ring: CoefficientRing,
                          mu: Sequence[int] | None = None) -> bool:
    """m_μ ∘_μ m_S equals the sum of m_T over the T in Tab_{λ;ν} merging to S."""
    mu = normalize(s.weight if mu is None else mu)
    nu = normalize(nu)
    lhs = circ_product(HomSpaceElement.basis(refinement_tableau(nu, mu), ring, nu),
                       HomSpaceElement.basis(s, ring, mu))
    expected = {t: ring.one for t in enumerate_tableaux(s.shape, nu) if restrict_weight(t, mu) == s}
    return lhs == HomSpaceElement(s.shape, nu, ring, expected)


def refinement_scalar(t: Tableau, nu: Sequence[int], mu: Sequence[int]):
    """The Laurent scalar c with m_μ ∘_ν m_T = c m_{T|μ}, for T in Tab_{λ;ν}."""
    groups = refinement_blocks(normalize(nu), normalize(mu))
    block = {j + 1: g for g, group in enumerate(groups) for j in group}
    boxes = list(t.boxes())
    inversions = sum(
        1
        for r, _, v in boxes
        for r2, _, v2 in boxes
        if r < r2 and block[v] == block[v2] and v2 < v
    )
    scalar = LaurentPolynomial.monomial(1, 0, inversions)
    for row in range(1, len(t.rows) + 1):
        for group in groups:
            parts = [t.count(row, j + 1) for j in group]
            scalar = scalar * laurent_q_multinomial(sum(parts), parts)
    return scalar


def refinement_right_check(t: Tableau, mu: Sequence[int], ring: CoefficientRing,
                           nu: Sequence[int] | None = None) -> bool:
    """m_μ ∘_ν m_T = (q^{inversions} Π q-multinomials) m_{T|μ}."""
    nu = normalize(t.weight if nu is None else nu)
    mu = normalize(mu)
    lhs = circ_product(HomSpaceElement.basis(coarsening_tableau(nu, mu), ring, mu),
                       HomSpaceElement.basis(t, ring, nu))
    scalar = ring.from_laurent(refinement_scalar(t, nu, mu))
    return lhs == HomSpaceElement.basis(restrict_weight(t, mu), ring, mu).scale(scalar)


def permutation_hypothesis(t: Tableau, w: Perm) -> bool:
    """i <= k and T(k, l) < T(i, j) force w(T(k, l)) < w(T(i, j))."""
    boxes = list(t.boxes())
    return all(
        w(v2) < w(v)
        for r, _, v in boxes
        for r2, _, v2 in boxes
        if r <= r2 and v2 < v
    )


def permute_entries(t: Tableau, w: Perm) -> Tableau:
    return Tableau(tuple(tuple(w(v) for v in row) for row in t.rows))


def permutation_lemma_check(lam: Sequence[int], nu: Sequence[int], w: Perm, ring: CoefficientRing) -> bool:
    """m_{P_{w,ν}} ∘_{wν} m_T = m_{wT} for every T in Tab_{λ;wν} meeting the hypothesis."""
    nu = tuple(nu)
    twisted = composition_action(w, nu)
    products = CircProducts(HomSpaceElement.basis(permutation_tableau(w, nu), ring, nu))
    checked = 0
    for t in enumerate_tableaux(lam, twisted):
        if not permutation_hypothesis(t, w):
            continue
        checked += 1
        if products(HomSpaceElement.basis(t, ring, twisted)) != HomSpaceElement.basis(permute_entries(t, w), ring, nu):
            logger.info("permutation lemma fails at %s for w=%s", t, w)
            return False
    logger.debug("permutation lemma: %d tableaux checked for lam=%s nu=%s w=%s", checked, lam, nu, w)
    return True
