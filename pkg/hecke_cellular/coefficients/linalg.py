"""
Sparse exact linear algebra over a field.

Vectors are plain dicts key -> field element with no zero entries. The
EchelonSpace keeps its rows in reduced row echelon form: every row has
coefficient one at its pivot and zero at every other pivot, so a vector is
reduced by a single pass over the pivots it touches.
"""
from __future__ import annotations

import logging
from typing import Any, Callable, Hashable, Iterable, Mapping

from hecke_cellular.coefficients.rings import CoefficientRing

logger = logging.getLogger(__name__)

Vector = dict


def add_scaled(target: dict, source: Mapping, scale) -> None:
    """target += scale * source, in place, dropping zeros."""
    for key, value in source.items():
        updated = target[key] + scale * value if key in target else scale * value
        if updated:
            target[key] = updated
        else:
            target.pop(key, None)


def scale_vector(vec: Mapping, scale) -> dict:
    if not scale:
        return {}
    out = {}
    for key, value in vec.items():
        product = value * scale
        if product:
            out[key] = product
    return out


def vector_sum(vectors: Iterable[Mapping]) -> dict:
    total: dict = {}
    for vec in vectors:
        for key, value in vec.items():
            updated = total[key] + value if key in total else value
            if updated:
                total[key] = updated
            else:
                total.pop(key, None)
    return total


class EchelonSpace:
    """
    A subspace given by reduced rows, with a configurable column priority.

    `order` maps a key to a sortable priority; the pivot of a new row is its
    entry of smallest priority, so keys that should be eliminated first get
    the smallest values.
    """

    def __init__(self, ring: CoefficientRing, order: Callable[[Hashable], Any] | None = None):
        ring.require_field("echelon reduction")
        self.ring = ring
        self.order = order or (lambda key: key)
        self._rows: dict[Hashable, dict] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list:
        return sorted(self._rows, key=self.order)

    def rows(self) -> list[dict]:
        return [dict(self._rows[p]) for p in self.pivots]

    def reduce(self, vec: Mapping) -> dict:
        out = dict(vec)
        for key in [k for k in vec if k in self._rows]:
            coeff = out.get(key)
            if coeff:
                add_scaled(out, self._rows[key], -coeff)
        return out

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)

    def add(self, vec: Mapping) -> bool:
        """Insert vec; returns False when it was already in the span."""
        residue = self.reduce(vec)
        if not residue:
            return False
        pivot = min(residue, key=self.order)
        row = scale_vector(residue, self.ring.inv(residue[pivot]))
        for other in self._rows.values():
            coeff = other.get(pivot)
            if coeff:
                add_scaled(other, row, -coeff)
        self._rows[pivot] = row
        return True

    def extend(self, vectors: Iterable[Mapping]) -> int:
        added = 0
        for vec in vectors:
            if self.add(vec):
                added += 1
        return added

    def copy(self) -> EchelonSpace:
        other = EchelonSpace(self.ring, self.order)
        other._rows = {k: dict(v) for k, v in self._rows.items()}
        return other

    def solve(self, vec: Mapping) -> dict | None:
        """
        Coordinates of vec in terms of the rows (keyed by pivot), or None when vec is outside the span.
        Valid because each row is the unique row with a non-zero pivot entry.
        """
        coords = {}
        for pivot, row in self._rows.items():
            value = vec.get(pivot)
            if value:
                coords[pivot] = value
        residue = dict(vec)
        for pivot, value in coords.items():
            add_scaled(residue, self._rows[pivot], -value)
        return coords if not residue else None


def span_of(ring: CoefficientRing, vectors: Iterable[Mapping], order=None) -> EchelonSpace:
    space = EchelonSpace(ring, order)
    space.extend(vectors)
    return space


def intersection(ring: CoefficientRing, first: EchelonSpace, second: EchelonSpace) -> EchelonSpace:
    """U ∩ W via the kernel of (u, w) -> u - w on tagged coordinates."""
    # Zassenhaus: rows (u, u) for u in U and (w, 0) for w in W; rows with zero left half give U ∩ W.
    def tagged_order(key):
        side, inner = key
        return (0 if side == "L" else 1, first.order(inner))

    space = EchelonSpace(ring, tagged_order)
    for row in first.rows():
        vec = {("L", k): v for k, v in row.items()}
        vec.update({("R", k): v for k, v in row.items()})
        space.add(vec)
    for row in second.rows():
        space.add({("L", k): v for k, v in row.items()})
    result = EchelonSpace(ring, first.order)
    for row in space.rows():
        if all(side == "R" for side, _ in row):
            result.add({k: v for (_, k), v in row.items()})
    return result
