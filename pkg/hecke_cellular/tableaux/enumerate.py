"""
Depth-first enumeration of the tableau families that index every basis.

All listings are deterministic: row words in lexicographic order, then the
circle patterns in binary order of the bars (top-left bar is the low bit).
"""
from __future__ import annotations

import functools
import itertools
import logging
from typing import Iterator, Sequence

from hecke_cellular.resources.errors import ShapeError
from hecke_cellular.symgroup.composition import Composition, is_partition, is_strict_partition, normalize
from hecke_cellular.tableaux.tableau import CircledTableau, Tableau

logger = logging.getLogger(__name__)

FLAVORS = (
    "row_semistandard",
    "row_standard",
    "semistandard",
    "good",
    "circled",
    "shifted_circled",
    "shifted_circled_prime",
)


def _row_fillings(length: int, remaining: list[int], start: int = 0) -> Iterator[tuple[int, ...]]:
    """Weakly increasing rows of the given length using at most remaining[v-1] copies of v."""
    if length == 0:
        yield ()
        return
    for v in range(start, len(remaining)):
        if remaining[v] == 0:
            continue
        for take in range(min(remaining[v], length), 0, -1):
            remaining[v] -= take
            for rest in _row_fillings(length - take, remaining, v + 1):
                yield (v + 1,) * take + rest
            remaining[v] += take


def _fill(shape: Sequence[int], remaining: list[int], row: int = 0) -> Iterator[tuple[tuple[int, ...], ...]]:
    if row == len(shape):
        if not any(remaining):
            yield ()
        return
    # _row_fillings holds its own decrement while suspended at yield
    for filling in _row_fillings(shape[row], remaining):
        for rest in _fill(shape, remaining, row + 1):
            yield (filling,) + rest


@functools.lru_cache(maxsize=None)
def _row_semistandard(lam: Composition, mu: Composition) -> tuple[Tableau, ...]:
    if sum(lam) != sum(mu):
        raise ShapeError(f"shape {lam} and weight {mu} have different sizes")
    return tuple(Tableau(rows) for rows in _fill(lam, list(mu)))


def circle_patterns(t: Tableau) -> Iterator[CircledTableau]:
    """Every canonical circling of t: one optional circle per bar, on its rightmost box."""
    ends = [(r, end) for r, _, end, _ in CircledTableau(t).bars()]
    for bits in itertools.product((False, True), repeat=len(ends)):
        yield CircledTableau(t, frozenset(box for box, on in zip(reversed(ends), bits) if on))


def diagonal_pairs(shape: Sequence[int]) -> Iterator[tuple[tuple[int, int], tuple[int, int]]]:
    """(upper, lower) = ((k, l+1), (k+1, l)): boxes on one diagonal of the shifted diagram."""
    for k in range(len(shape) - 1):
        for l in range(shape[k + 1]):
            if l + 1 < shape[k]:
                yield (k, l + 1), (k + 1, l)


def is_shifted_semistandard(t: CircledTableau) -> bool:
    if not is_strict_partition(t.shape) or not t.tableau.is_semistandard() or not t.is_canonical():
        return False
    for (ur, uc), (lr, lc) in diagonal_pairs(t.shape):
        upper, lower = t.tableau.entry(ur, uc), t.tableau.entry(lr, lc)
        if lower < upper:
            return False
        if lower == upper and not t.is_circled(lr, lc):
            return False
    return True


def ribbons(t: CircledTableau) -> list[list[tuple[int, int]]]:
    """Connected components of equal entries in the shifted diagram (box (r, c) sits at (r, r + c))."""
    parent = {(r, c): (r, c) for r, c, _ in t.tableau.boxes()}

    def find(box):
        while parent[box] != box:
            parent[box] = parent[parent[box]]
            box = parent[box]
        return box

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    rows = t.tableau.rows
    for r, c, v in t.tableau.boxes():
        if c + 1 < len(rows[r]) and rows[r][c + 1] == v:
            union((r, c), (r, c + 1))
        # shifted column: (r, c+1) sits right above (r+1, c)
        if r + 1 < len(rows) and c < len(rows[r + 1]) and c + 1 < len(rows[r]) and rows[r + 1][c] == rows[r][c + 1]:
            union((r, c + 1), (r + 1, c))
    groups: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for box in parent:
        groups.setdefault(find(box), []).append(box)
    return [sorted(g) for _, g in sorted(groups.items())]


def is_shifted_prime(t: CircledTableau) -> bool:
    """Ribbons meeting the first column carry no circle at their top-right box."""
    for ribbon in ribbons(t):
        if any(c == 0 for _, c in ribbon):
            top = min(r for r, _ in ribbon)
            corner = (top, max(c for r, c in ribbon if r == top))
            if corner in t.circled:
                return False
    return True


@functools.lru_cache(maxsize=None)
def _enumerate(lam: Composition, mu: Composition, flavor: str) -> tuple:
    if flavor == "row_semistandard":
        return _row_semistandard(lam, mu)
    if flavor == "row_standard":
        return _row_semistandard(lam, (1,) * sum(lam))
    if flavor == "semistandard":
        if not is_partition(lam):
            return ()
        return tuple(t for t in _row_semistandard(lam, mu) if t.is_semistandard())
    if flavor == "good":
        return tuple(t for t in _row_semistandard(lam, mu) if t.is_good())
    if flavor == "circled":
        return tuple(c for t in _row_semistandard(lam, mu) for c in circle_patterns(t))
    if flavor == "shifted_circled":
        if not is_strict_partition(lam):
            return ()
        return tuple(
            c
            for t in _row_semistandard(lam, mu) if t.is_semistandard()
            for c in circle_patterns(t) if is_shifted_semistandard(c)
        )
    if flavor == "shifted_circled_prime":
        return tuple(c for c in _enumerate(lam, mu, "shifted_circled") if is_shifted_prime(c))
    raise ShapeError(f"unknown tableau flavor {flavor!r}; expected one of {FLAVORS}")


def enumerate_tableaux(lam: Sequence[int], mu: Sequence[int], flavor: str = "row_semistandard") -> list:
    lam, mu = normalize(lam), normalize(mu)
    result = list(_enumerate(lam, mu, flavor))
    logger.debug("enumerated %d %s tableaux of shape %s weight %s", len(result), flavor, lam, mu)
    return result
