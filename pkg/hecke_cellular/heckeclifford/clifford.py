"""
Clifford words and the Clifford superalgebras built on them.

A word c_{i_1} ... c_{i_r} is stored with i_1 < ... < i_r. Multiplying two
words merges them: every transposition of two odd generators contributes a
sign and each repeated generator is replaced by its square.
"""
from __future__ import annotations

import functools
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from hecke_cellular.coefficients.linalg import EchelonSpace, add_scaled
from hecke_cellular.coefficients.rings import CoefficientRing
from hecke_cellular.resources.errors import ShapeError

logger = logging.getLogger(__name__)

Word = tuple[int, ...]


@functools.lru_cache(maxsize=None)
def merge_words(left: Word, right: Word) -> tuple[int, Word, Word]:
    """c_left c_right = sign * Π_{j in common} c_j^2 * c_word."""
    sign = 1
    for j in right:
        if sum(1 for i in left if i > j) % 2:
            sign = -sign
    common = tuple(sorted(set(left) & set(right)))
    word = tuple(sorted(set(left) ^ set(right)))
    return sign, word, common


@functools.lru_cache(maxsize=None)
def sort_word(indices: tuple[int, ...]) -> tuple[int, Word]:
    """(sign, ascending word) for a product of distinct generators in any order."""
    if len(set(indices)) != len(indices):
        raise ShapeError(f"c{list(indices)} repeats a generator")
    inversions = sum(1 for x, y in combinations(indices, 2) if x > y)
    return (-1 if inversions % 2 else 1), tuple(sorted(indices))


@functools.lru_cache(maxsize=None)
def swap_word(word: Word, i: int) -> tuple[int, Word]:
    """s_i(c_word): relabel c_i <-> c_{i+1}."""
    if i in word and i + 1 in word:
        return -1, word
    return 1, tuple(sorted(i + 1 if j == i else i if j == i + 1 else j for j in word))


@functools.lru_cache(maxsize=None)
def twist_word(word: Word, i: int) -> tuple[tuple[int, int, Word], ...]:
    """
    t_i(c_word) as (sign, power of a, word) triples, where

        T_i c_word = s_i(c_word) T_i + (q - 1) t_i(c_word)

    t_i vanishes unless c_{i+1} occurs; t_i(c_{i+1}) = c_{i+1} - c_i and
    t_i(c_i c_{i+1}) = c_i c_{i+1} + a, commuting with the other factors.
    """
    if i + 1 not in word:
        return ()
    if i in word:
        rest = tuple(j for j in word if j not in (i, i + 1))
        return (1, 0, word), (1, 1, rest)
    lowered = tuple(i if j == i + 1 else j for j in word)
    return (1, 0, word), (-1, 0, lowered)


def a_power(ring: CoefficientRing, k: int):
    result = ring.one
    for _ in range(k):
        result = result * ring.a
    return result


def signed(value, sign: int):
    return value if sign > 0 else -value


@dataclass(frozen=True, order=True)
class CliffordWord:
    n: int
    indices: Word = ()

    def __post_init__(self):
        idx = tuple(int(i) for i in self.indices)
        if any(not 1 <= i <= self.n for i in idx) or any(x >= y for x, y in zip(idx, idx[1:])):
            raise ShapeError(f"c{list(idx)} is not an ascending word of C_{self.n}")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def empty(cls, n: int) -> CliffordWord:
        return cls(n, ())

    @property
    def parity(self) -> int:
        return len(self.indices) % 2

    def __len__(self) -> int:
        return len(self.indices)

    def to_text(self) -> str:
        if not self.indices:
            return "1"
        return "c[" + ",".join(str(i) for i in self.indices) + "]"

    def __str__(self) -> str:
        return self.to_text()


class CliffordAlgebra:
    """
    Anticommuting odd generators g_j, j in `labels`, with g_j^2 = squares[j].

    Elements are plain dicts ascending label tuple -> coefficient, so the
    echelon machinery applies to them directly.
    """

    def __init__(self, squares: Mapping[int, object], ring: CoefficientRing):
        self.ring = ring
        self.squares = dict(squares)
        self.labels: Word = tuple(sorted(self.squares))

    @property
    def rank(self) -> int:
        return len(self.labels)

    @property
    def dimension(self) -> int:
        return 2 ** self.rank

    def basis(self) -> list[Word]:
        return [w for r in range(self.rank + 1) for w in combinations(self.labels, r)]

    def one(self) -> dict:
        return {(): self.ring.one}

    def generator(self, j: int) -> dict:
        if j not in self.squares:
            return {}
        return {(j,): self.ring.one}

    def word_product(self, left: Word, right: Word) -> tuple[object, Word]:
        sign, word, common = merge_words(left, right)
        coeff = self.ring.one
        for j in common:
            coeff = coeff * self.squares[j]
        return signed(coeff, sign), word

    def multiply(self, x: Mapping, y: Mapping) -> dict:
        out: dict = {}
        for u, c in x.items():
            for v, d in y.items():
                coeff, word = self.word_product(u, v)
                add_scaled(out, {word: coeff}, c * d)
        return out

    def product(self, factors: Iterable[Mapping]) -> dict:
        result = self.one()
        for factor in factors:
            result = self.multiply(result, factor)
        return result

    @staticmethod
    def parity(x: Mapping) -> int | None:
        """0 or 1 for homogeneous non-zero x, None otherwise."""
        parities = {len(w) % 2 for w in x}
        return parities.pop() if len(parities) == 1 else None

    def left_ideal(self, generators: Iterable[Mapping]) -> EchelonSpace:
        space = EchelonSpace(self.ring)
        for g in generators:
            for w in self.basis():
                space.add(self.multiply({w: self.ring.one}, g))
        return space

    def two_sided_ideal(self, generators: Iterable[Mapping]) -> EchelonSpace:
        left = self.left_ideal(generators)
        space = EchelonSpace(self.ring)
        for row in left.rows():
            for w in self.basis():
                space.add(self.multiply(row, {w: self.ring.one}))
        return space

    def radical(self) -> EchelonSpace:
        """
        The Jacobson radical.

        Away from characteristic 2 it is generated by the generators squaring
        to zero; in characteristic 2 the algebra is commutative and g_j - t_j
        is nilpotent whenever t_j^2 = g_j^2 (over a prime field t_j = g_j^2).
        """
        if self.ring.characteristic() == 2:
            gens = []
            for j in self.labels:
                root = self.squares[j]
                gens.append({(j,): self.ring.one, (): -root} if root else {(j,): self.ring.one})
        else:
            gens = [{(j,): self.ring.one} for j in self.labels if not self.squares[j]]
        return self.two_sided_ideal(gens)

    def contains_one(self, space: EchelonSpace) -> bool:
        return space.contains(self.one())

    def render(self, x: Mapping, symbol: str = "g") -> str:
        if not x:
            return "0"
        parts = []
        for w in sorted(x, key=lambda w: (len(w), w)):
            monomial = symbol + "[" + ",".join(str(j) for j in w) + "]" if w else "1"
            parts.append(f"({self.ring.render(x[w])}) * {monomial}")
        return " + ".join(parts)


def clifford_algebra(n: int, ring: CoefficientRing) -> CliffordAlgebra:
    """C_n(a): generators c_1..c_n with c_i^2 = a."""
    return CliffordAlgebra({i: ring.a for i in range(1, n + 1)}, ring)


def words_of(labels: Sequence[int]) -> list[Word]:
    return [w for r in range(len(labels) + 1) for w in combinations(sorted(labels), r)]
