"""
Permutations of {1, ..., n} in one-line notation, acting from the left.

A Perm w is stored as the tuple (w(1), ..., w(n)); products compose as
functions, (uv)(i) = u(v(i)). With this convention s_i * w swaps the values
i and i+1 of w, while w * s_i swaps the entries in positions i and i+1.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from hecke_cellular.resources.errors import ShapeError


@dataclass(frozen=True, order=True)
class Perm:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ShapeError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> Perm:
        obj = object.__new__(cls)
        object.__setattr__(obj, "images", images)
        return obj

    @classmethod
    def identity(cls, n: int) -> Perm:
        return cls._trusted(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, n: int, i: int) -> Perm:
        """The simple transposition s_i = (i, i+1) of S_n."""
        if not 1 <= i < n:
            raise ShapeError(f"s_{i} does not exist in S_{n}")
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls._trusted(tuple(images))

    @classmethod
    def from_word(cls, n: int, word: Iterable[int]) -> Perm:
        w = cls.identity(n)
        for i in word:
            w = w.right_mul_simple(i)
        return w

    @classmethod
    def parse(cls, text: str | Sequence[int]) -> Perm:
        """Accepts `[2,3,1]`, `2,3,1` or a sequence of ints."""
        if isinstance(text, str):
            body = text.strip().strip("[]")
            values = tuple(int(v) for v in body.replace(" ", "").split(",") if v)
        else:
            values = tuple(int(v) for v in text)
        return cls(values)

    @classmethod
    def direct_sum(cls, first: Perm, second: Perm) -> Perm:
        """(u, v) in S_m x S_k inside S_{m+k}."""
        m = first.n
        return cls._trusted(first.images + tuple(m + v for v in second.images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Perm) -> Perm:
        if other.n != self.n:
            raise ShapeError(f"cannot multiply permutations of S_{self.n} and S_{other.n}")
        return Perm._trusted(tuple(self.images[v - 1] for v in other.images))

    def inverse(self) -> Perm:
        inv = [0] * self.n
        for position, value in enumerate(self.images, start=1):
            inv[value - 1] = position
        return Perm._trusted(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, start=1))

    @functools.cached_property
    def length(self) -> int:
        return sum(1 for i, j in itertools.combinations(range(self.n), 2) if self.images[i] > self.images[j])

    def has_left_descent(self, i: int) -> bool:
        """ℓ(s_i w) < ℓ(w): the value i+1 sits to the left of the value i."""
        return self.images.index(i) > self.images.index(i + 1)

    def has_right_descent(self, i: int) -> bool:
        """ℓ(w s_i) < ℓ(w)."""
        return self.images[i - 1] > self.images[i]

    def left_mul_simple(self, i: int) -> Perm:
        """s_i * w."""
        swap = {i: i + 1, i + 1: i}
        return Perm._trusted(tuple(swap.get(v, v) for v in self.images))

    def right_mul_simple(self, i: int) -> Perm:
        """w * s_i."""
        images = list(self.images)
        images[i - 1], images[i] = images[i], images[i - 1]
        return Perm._trusted(tuple(images))

    def reduced_word(self) -> list[int]:
        """A reduced word i_1 ... i_r with s_{i_1} ... s_{i_r} = w, peeled off by smallest right descents."""
        word: list[int] = []
        w = self
        while not w.is_identity():
            i = next(k for k in range(1, w.n) if w.has_right_descent(k))
            word.append(i)
            w = w.right_mul_simple(i)
        word.reverse()
        return word

    def to_json(self) -> list[int]:
        return list(self.images)

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.images) + "]"

    def __repr__(self) -> str:
        return f"Perm({self})"


def length(w: Perm) -> int:
    return w.length


def reduced_word(w: Perm) -> list[int]:
    return w.reduced_word()


@functools.lru_cache(maxsize=None)
def all_perms(n: int) -> tuple[Perm, ...]:
    """S_n in lexicographic order of one-line notation."""
    return tuple(Perm._trusted(p) for p in itertools.permutations(range(1, n + 1)))
