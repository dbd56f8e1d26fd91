"""
The circled hom-spaces M^c_{λ;μ}, spanned by m_S for S in Tab^c_{λ;μ}.

Elements are sparse maps from canonical circled tableaux (circles only on the
rightmost box of a bar) to coefficients. Everything that needs the ambient
module M^c_λ lives in `parabolic` and `products`.
"""
from __future__ import annotations

import logging
from typing import Mapping, Sequence

from hecke_cellular.coefficients.rings import CoefficientRing
from hecke_cellular.hecke.element import accumulate
from hecke_cellular.resources.errors import ShapeError
from hecke_cellular.symgroup.composition import Composition, normalize
from hecke_cellular.tableaux.tableau import CircledTableau

logger = logging.getLogger(__name__)


def _pad(mu: Composition, length: int) -> Composition:
    return tuple(mu) + (0,) * max(0, length - len(mu))


def _check_circled(s: CircledTableau, lam: Composition, mu: Composition) -> None:
    if s.shape != lam[:len(s.shape)] or any(lam[len(s.shape):]):
        raise ShapeError(f"{s} does not have shape {lam}")
    weight = _pad(s.weight, len(mu))
    if weight != _pad(mu, len(weight)):
        raise ShapeError(f"{s} does not have weight {mu}")
    if not s.tableau.is_row_semistandard() or not s.is_canonical():
        raise ShapeError(f"{s} is not a row-semistandard circled tableau")


class SuperHomSpaceElement:
    """Σ c_S m_S over Tab^c_{λ;μ}."""

    __slots__ = ("lam", "mu", "ring", "_terms")

    def __init__(self, lam: Sequence[int], mu: Sequence[int], ring: CoefficientRing,
                 terms: Mapping[CircledTableau, object] | None = None):
        self.lam, self.mu, self.ring = normalize(lam), normalize(mu), ring
        if sum(self.lam) != sum(self.mu):
            raise ShapeError(f"{self.lam} and {self.mu} have different sizes")
        clean = {}
        for s, c in (terms or {}).items():
            _check_circled(s, self.lam, self.mu)
            if c:
                clean[s] = c
        self._terms = clean

    @classmethod
    def _wrap(cls, lam: Composition, mu: Composition, ring: CoefficientRing, terms: dict) -> SuperHomSpaceElement:
        obj = cls.__new__(cls)
        obj.lam, obj.mu, obj.ring, obj._terms = lam, mu, ring, terms
        return obj

    @classmethod
    def basis(cls, s: CircledTableau, ring: CoefficientRing,
              mu: Sequence[int] | None = None) -> SuperHomSpaceElement:
        return cls(s.shape, s.weight if mu is None else mu, ring, {s: ring.one})

    @classmethod
    def zero(cls, lam: Sequence[int], mu: Sequence[int], ring: CoefficientRing) -> SuperHomSpaceElement:
        return cls(lam, mu, ring)

    @property
    def n(self) -> int:
        return sum(self.lam)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> list:
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key())

    def coefficient(self, s: CircledTableau):
        return self._terms.get(s, self.ring.zero)

    def parity(self) -> int | None:
        parities = {len(s.circled) % 2 for s in self._terms}
        if not parities:
            return 0
        return parities.pop() if len(parities) == 1 else None

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SuperHomSpaceElement):
            return NotImplemented
        return (self.lam, self.mu, self._terms) == (other.lam, other.mu, other._terms)

    __hash__ = None

    def _check(self, other: SuperHomSpaceElement) -> None:
        if (self.lam, self.mu) != (other.lam, other.mu):
            raise ShapeError(f"M^c_{{{self.lam};{self.mu}}} against M^c_{{{other.lam};{other.mu}}}")

    def __add__(self, other: SuperHomSpaceElement) -> SuperHomSpaceElement:
        self._check(other)
        terms = dict(self._terms)
        for s, c in other._terms.items():
            accumulate(terms, s, c)
        return SuperHomSpaceElement._wrap(self.lam, self.mu, self.ring, terms)

    def __neg__(self) -> SuperHomSpaceElement:
        return SuperHomSpaceElement._wrap(self.lam, self.mu, self.ring, {s: -c for s, c in self._terms.items()})

    def __sub__(self, other: SuperHomSpaceElement) -> SuperHomSpaceElement:
        return self + (-other)

    def scale(self, c) -> SuperHomSpaceElement:
        terms: dict = {}
        for s, v in self._terms.items():
            accumulate(terms, s, v * c)
        return SuperHomSpaceElement._wrap(self.lam, self.mu, self.ring, terms)

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({self.ring.render(c)}) * m[{s}]" for s, c in self.items())

    def to_json(self) -> list[dict]:
        return [{"tableau": s.to_json(), "coeff": self.ring.to_json(c)} for s, c in self.items()]

    def __repr__(self) -> str:
        return f"SuperHomSpaceElement({self.lam};{self.mu}, {self.to_text()})"
