"""
Row-semistandard tableaux and circled tableaux.

Rows are stored top to bottom as tuples of positive ints; rows of length zero
are kept (compositions may have internal zeros), trailing empty rows are
dropped. Boxes are addressed (row, col) with both indices starting at 0;
"row i" in the usual 1-based sense is row index i-1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from hecke_cellular.resources.errors import ShapeError
from hecke_cellular.symgroup.composition import (
    Composition,
    is_partition,
    normalize,
    refinement_blocks,
)
from hecke_cellular.symgroup.perm import Perm


def _trim(rows: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    rows = [tuple(int(v) for v in row) for row in rows]
    while rows and not rows[-1]:
        rows.pop()
    return tuple(rows)


@dataclass(frozen=True, order=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", _trim(self.rows))
        if any(v < 1 for row in self.rows for v in row):
            raise ShapeError(f"tableau entries must be positive: {self.rows}")

    @classmethod
    def parse(cls, text: str) -> Tableau:
        """`1 1 2/2 3`; an empty row is an empty segment (`1 1//2`)."""
        rows = []
        for chunk in text.strip().split("/"):
            chunk = chunk.strip()
            if "'" in chunk:
                raise ShapeError("circled entries need CircledTableau.parse")
            rows.append(tuple(int(v) for v in chunk.split()) if chunk else ())
        return cls(tuple(rows))

    @property
    def shape(self) -> Composition:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    @property
    def weight(self) -> Composition:
        top = max((v for row in self.rows for v in row), default=0)
        counts = [0] * top
        for row in self.rows:
            for v in row:
                counts[v - 1] += 1
        return tuple(counts)

    def count(self, i: int, j: int) -> int:
        """#_{ij}: how many entries j sit in row i (both 1-based)."""
        if i > len(self.rows):
            return 0
        return sum(1 for v in self.rows[i - 1] if v == j)

    def boxes(self) -> Iterator[tuple[int, int, int]]:
        for r, row in enumerate(self.rows):
            for c, v in enumerate(row):
                yield r, c, v

    def entry(self, r: int, c: int) -> int:
        return self.rows[r][c]

    def reading_word(self) -> tuple[int, ...]:
        return tuple(v for row in self.rows for v in row)

    def is_row_semistandard(self) -> bool:
        return all(row[c] <= row[c + 1] for row in self.rows for c in range(len(row) - 1))

    def is_row_standard(self) -> bool:
        return self.is_row_semistandard() and all(w == 1 for w in self.weight)

    def is_semistandard(self) -> bool:
        if not is_partition(self.shape) or not self.is_row_semistandard():
            return False
        for r in range(len(self.rows) - 1):
            for c in range(len(self.rows[r + 1])):
                if self.rows[r][c] >= self.rows[r + 1][c]:
                    return False
        return True

    def is_good(self) -> bool:
        """T(i, j) >= i for every box."""
        return all(v >= r + 1 for r, _, v in self.boxes())

    def with_rows(self, rows) -> Tableau:
        return Tableau(tuple(tuple(r) for r in rows))

    def to_text(self) -> str:
        return "/".join(" ".join(str(v) for v in row) for row in self.rows)

    def to_json(self) -> list[list[dict]]:
        return [[{"v": v, "c": False} for v in row] for row in self.rows]

    def __str__(self) -> str:
        return self.to_text()


def tableau_to_perm(t: Tableau) -> Perm:
    """d(T): the k-th box in row reading order carries the value d(T)(k)."""
    if not t.is_row_standard():
        raise ShapeError(f"d(T) needs a row-standard tableau, got {t}")
    return Perm(t.reading_word())


def perm_to_tableau(w: Perm, lam: Sequence[int]) -> Tableau:
    """Inverse of tableau_to_perm on Tab_λ."""
    rows, start = [], 0
    for p in lam:
        rows.append(w.images[start:start + p])
        start += p
    return Tableau(tuple(rows))


def _renumber(t: Tableau, key) -> Tableau:
    boxes = sorted(t.boxes(), key=key)
    numbered = {(r, c): k for k, (r, c, _) in enumerate(boxes, start=1)}
    return Tableau(tuple(tuple(numbered[(r, c)] for c in range(len(row))) for r, row in enumerate(t.rows)))


def min_rep_tableau(s: Tableau) -> Tableau:
    """S_↓: number the boxes by (value, row, col)."""
    return _renumber(s, lambda box: (box[2], box[0], box[1]))


def max_rep_tableau(s: Tableau) -> Tableau:
    """S^↑: number the boxes by (value, bottom row first, col)."""
    return _renumber(s, lambda box: (box[2], -box[0], box[1]))


def dual_tableau(s: Tableau) -> Tableau:
    """S*: row j holds #_{ij}(S) copies of i, so #_{ij}(S*) = #_{ji}(S)."""
    weight = s.weight
    rows = []
    for j in range(1, len(weight) + 1):
        row = []
        for i in range(1, len(s.rows) + 1):
            row.extend([i] * s.count(i, j))
        rows.append(tuple(row))
    return Tableau(tuple(rows))


def restrict_weight(t: Tableau, mu: Sequence[int]) -> Tableau:
    """T|_μ: merge the values of each refinement block into a single value."""
    weight = t.weight
    mu = normalize(mu)
    padded = tuple(weight) + (0,) * max(0, len(mu) - len(weight))
    groups = refinement_blocks(padded, mu)
    value_map = {k + 1: g + 1 for g, group in enumerate(groups) for k in group}
    return Tableau(tuple(tuple(value_map[v] for v in row) for row in t.rows))


def permutation_tableau(w: Perm, nu: Sequence[int]) -> Tableau:
    """P_{w,ν} in Tab_{wν;ν}: row i is ν_{w(i)} copies of w(i)."""
    if len(nu) != w.n:
        raise ShapeError(f"permutation of S_{w.n} needs a composition with {w.n} parts, got {tuple(nu)}")
    return Tableau(tuple((w(i),) * nu[w(i) - 1] for i in range(1, w.n + 1)))


def row_reading_tableau(lam: Sequence[int]) -> Tableau:
    """The standard tableau with d(T) = 1."""
    return perm_to_tableau(Perm.identity(sum(lam)), lam)


def constant_row_tableau(lam: Sequence[int]) -> Tableau:
    """The unique good tableau of Tab_{λ;λ}: row i filled with i."""
    return Tableau(tuple((i + 1,) * p for i, p in enumerate(lam)))


@dataclass(frozen=True)
class CircledTableau:
    """
    A tableau together with a set of circled boxes.

    In canonical form a circle may only sit on the rightmost box of a bar (a
    maximal run of equal entries in a row), so circled entries never repeat
    inside a row.
    """
    tableau: Tableau
    circled: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "circled", frozenset(self.circled))
        for r, c in self.circled:
            if r >= len(self.tableau.rows) or c >= len(self.tableau.rows[r]):
                raise ShapeError(f"circled box {(r, c)} lies outside {self.tableau}")

    def __lt__(self, other: CircledTableau) -> bool:
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (self.tableau.rows, tuple(sorted(self.circled)))

    @classmethod
    def parse(cls, text: str) -> CircledTableau:
        rows, circled = [], set()
        for r, chunk in enumerate(text.strip().split("/")):
            row = []
            for c, token in enumerate(chunk.split()):
                if token.endswith("'"):
                    circled.add((r, c))
                    token = token[:-1]
                row.append(int(token))
            rows.append(tuple(row))
        return cls(Tableau(tuple(rows)), frozenset(circled))

    @property
    def shape(self) -> Composition:
        return self.tableau.shape

    @property
    def weight(self) -> Composition:
        return self.tableau.weight

    def bars(self) -> list[tuple[int, int, int, int]]:
        """(row, first col, last col, value) for each maximal run of equal entries."""
        out = []
        for r, row in enumerate(self.tableau.rows):
            c = 0
            while c < len(row):
                end = c
                while end + 1 < len(row) and row[end + 1] == row[c]:
                    end += 1
                out.append((r, c, end, row[c]))
                c = end + 1
        return out

    def is_canonical(self) -> bool:
        rightmost = {(r, end) for r, _, end, _ in self.bars()}
        return self.circled <= rightmost

    def is_circled(self, r: int, c: int) -> bool:
        return (r, c) in self.circled

    def to_text(self) -> str:
        return "/".join(
            " ".join(f"{v}'" if (r, c) in self.circled else str(v) for c, v in enumerate(row))
            for r, row in enumerate(self.tableau.rows)
        )

    def to_json(self) -> list[list[dict]]:
        return [
            [{"v": v, "c": (r, c) in self.circled} for c, v in enumerate(row)]
            for r, row in enumerate(self.tableau.rows)
        ]

    def __str__(self) -> str:
        return self.to_text()
