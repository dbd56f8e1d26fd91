"""
Specht quotients S_{λ;μ} = M_{λ;μ} / M^{>λ}_{λ;μ}.

The layer M^{>λ}_{λ;μ} is the span of all m_R ∘_ν m_S over partitions ν
strictly dominating λ, assembled inside M_λ. Reduction modulo the layer
eliminates tableaux in the priority order (non-good first, then longer
d(S^↑) first), so the quotient basis that survives consists of good tableaux.
"""
from __future__ import annotations

import functools
import logging
from typing import Mapping, Sequence

from hecke_cellular.coefficients.linalg import EchelonSpace
from hecke_cellular.coefficients.rings import CoefficientRing
from hecke_cellular.hecke.homspace import CircProducts, HomSpaceElement
from hecke_cellular.hecke.parabolic import parabolic_module
from hecke_cellular.resources.errors import ShapeError
from hecke_cellular.symgroup.composition import Composition, dominance_lt, normalize, partitions
from hecke_cellular.tableaux.enumerate import enumerate_tableaux
from hecke_cellular.tableaux.tableau import Tableau, max_rep_tableau, tableau_to_perm

logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=None)
def elimination_priority(t: Tableau):
    """Smaller keys become pivots first."""
    return t.is_good(), -tableau_to_perm(max_rep_tableau(t)).length, t.rows


class SpechtQuotient:

    def __init__(self, lam: Sequence[int], mu: Sequence[int], ring: CoefficientRing):
        ring.require_field("a Specht quotient")
        self.lam, self.mu, self.ring = normalize(lam), normalize(mu), ring
        if sum(self.lam) != sum(self.mu):
            raise ShapeError(f"{self.lam} and {self.mu} have different sizes")
        self.ambient = enumerate_tableaux(self.lam, self.mu)
        self.space = EchelonSpace(ring, order=elimination_priority)
        self._build()

    def _build(self) -> None:
        module = parabolic_module(self.lam, self.ring)
        for product in module.upper_layer(self.mu):
            if self.space.rank == len(self.ambient):
                break
            self.space.add(product.terms)
        logger.info("S_{%s;%s}: ambient %d, layer %d, quotient %d",
                    self.lam, self.mu, len(self.ambient), self.space.rank, self.dimension)

    @property
    def dimension(self) -> int:
        return len(self.ambient) - self.space.rank

    @property
    def basis(self) -> list[Tableau]:
        """Tableaux whose classes form a basis of the quotient."""
        pivots = set(self.space.pivots)
        return [t for t in self.ambient if t not in pivots]

    def relations(self) -> list[dict]:
        """Echelon rows of the layer; each one is congruent to zero."""
        return self.space.rows()

    def reduce(self, x: HomSpaceElement | Mapping) -> dict:
        """Canonical representative of the class of x, supported on `basis`."""
        if isinstance(x, HomSpaceElement):
            if (x.lam, x.mu) != (self.lam, self.mu):
                raise ShapeError(f"M_{{{x.lam};{x.mu}}} element reduced in S_{{{self.lam};{self.mu}}}")
            x = x.terms
        return self.space.reduce(x)

    def reduce_element(self, x: HomSpaceElement | Mapping) -> HomSpaceElement:
        return HomSpaceElement(self.lam, self.mu, self.ring, self.reduce(x))

    def is_zero(self, x: HomSpaceElement | Mapping) -> bool:
        return not self.reduce(x)

    def coordinates(self, x: HomSpaceElement | Mapping) -> list:
        reduced = self.reduce(x)
        return [reduced.get(t, self.ring.zero) for t in self.basis]

    def to_json(self, with_basis: bool = True) -> dict:
        result = {"lambda": list(self.lam), "mu": list(self.mu), "ring": self.ring.name, "dim": self.dimension}
        if with_basis:
            result["basis"] = [t.to_text() for t in self.basis]
        return result


@functools.lru_cache(maxsize=None)
def _specht_quotient(lam: Composition, mu: Composition, ring: CoefficientRing) -> SpechtQuotient:
    return SpechtQuotient(lam, mu, ring)


def specht_quotient(lam: Sequence[int], mu: Sequence[int], ring: CoefficientRing) -> SpechtQuotient:
    return _specht_quotient(normalize(lam), normalize(mu), ring)


def layer_from_products(lam: Sequence[int], mu: Sequence[int], ring: CoefficientRing) -> EchelonSpace:
    """M^{>λ}_{λ;μ} spanned directly by all m_R ∘_ν m_S with ν a partition strictly dominating λ."""
    lam, mu = normalize(lam), normalize(mu)
    space = EchelonSpace(ring, order=elimination_priority)
    for nu in partitions(sum(lam)):
        if not dominance_lt(lam, nu):
            continue
        rights = [HomSpaceElement.basis(s, ring, nu) for s in enumerate_tableaux(lam, nu)]
        for r in enumerate_tableaux(nu, mu):
            products = CircProducts(HomSpaceElement.basis(r, ring, mu))
            for right in rights:
                space.add(products(right).terms)
    return space
