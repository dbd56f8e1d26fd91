"""
Compositions are plain tuples of non-negative ints; trailing zeros are
dropped by `normalize`, internal zeros are kept.
"""
from __future__ import annotations

import functools
from typing import Iterable, Sequence

from hecke_cellular.resources.errors import ShapeError

Composition = tuple[int, ...]


def normalize(parts: Iterable[int]) -> Composition:
    parts = [int(p) for p in parts]
    if any(p < 0 for p in parts):
        raise ShapeError(f"composition parts must be non-negative, got {tuple(parts)}")
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def parse_composition(text: str | Sequence[int]) -> Composition:
    """`2,0,3`, `[2,0,3]` or a sequence."""
    if isinstance(text, str):
        body = text.strip().strip("[]()")
        return normalize(int(v) for v in body.replace(" ", "").split(",") if v)
    return normalize(text)


def size(parts: Sequence[int]) -> int:
    return sum(parts)


def nonzero(parts: Sequence[int]) -> Composition:
    return tuple(p for p in parts if p)


def blocks(parts: Sequence[int]) -> list[range]:
    """Position ranges (1-based) of the Young subgroup blocks."""
    out, start = [], 1
    for p in parts:
        out.append(range(start, start + p))
        start += p
    return out


def block_of(parts: Sequence[int]) -> dict[int, int]:
    """Position -> index of its block."""
    return {pos: k for k, block in enumerate(blocks(parts)) for pos in block}


def is_partition(parts: Sequence[int]) -> bool:
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def is_strict_partition(parts: Sequence[int]) -> bool:
    parts = normalize(parts)
    return all(parts[i] > parts[i + 1] for i in range(len(parts) - 1))


def dominance_le(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """λ ⊴ μ: every partial sum of λ is at most the matching partial sum of μ."""
    if sum(lam) != sum(mu):
        raise ShapeError(f"{tuple(lam)} and {tuple(mu)} have different sizes")
    width = max(len(lam), len(mu))
    s_lam = s_mu = 0
    for i in range(width):
        s_lam += lam[i] if i < len(lam) else 0
        s_mu += mu[i] if i < len(mu) else 0
        if s_lam > s_mu:
            return False
    return True


def dominance_lt(lam: Sequence[int], mu: Sequence[int]) -> bool:
    return normalize(lam) != normalize(mu) and dominance_le(lam, mu)


def is_refinement(nu: Sequence[int], mu: Sequence[int]) -> bool:
    """Consecutive blocks of ν sum to the parts of μ, i.e. S_ν ⊆ S_μ."""
    nu, mu = list(nu), list(mu)
    if sum(nu) != sum(mu):
        return False
    k = 0
    for target in mu:
        acc = 0
        while acc < target:
            if k >= len(nu):
                return False
            acc += nu[k]
            k += 1
        if acc != target:
            return False
        # zero parts of ν between blocks belong to the next block
    return all(p == 0 for p in nu[k:])


def refinement_blocks(nu: Sequence[int], mu: Sequence[int]) -> list[list[int]]:
    """Indices of ν grouped by the part of μ they refine (zero parts go to the earliest block that fits)."""
    if not is_refinement(nu, mu):
        raise ShapeError(f"{tuple(nu)} is not a refinement of {tuple(mu)}")
    groups: list[list[int]] = []
    k = 0
    for target in mu:
        group, acc = [], 0
        while acc < target:
            group.append(k)
            acc += nu[k]
            k += 1
        groups.append(group)
    if groups:
        groups[-1].extend(range(k, len(nu)))
    return groups


@functools.lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[Composition, ...]:
    """Partitions of n in reverse lexicographic order, (n) first."""
    max_part = n if max_part is None else max_part
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def strict_partitions(n: int) -> tuple[Composition, ...]:
    return tuple(p for p in partitions(n) if is_strict_partition(p))


@functools.lru_cache(maxsize=None)
def compositions(n: int, max_parts: int) -> tuple[Composition, ...]:
    """Compositions of n with positive parts and at most max_parts parts."""
    if n == 0:
        return ((),)
    if max_parts == 0:
        return ()
    out = []
    for first in range(n, 0, -1):
        for rest in compositions(n - first, max_parts - 1):
            out.append((first,) + rest)
    return tuple(out)


def transpose(lam: Sequence[int]) -> Composition:
    lam = normalize(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(max(lam)))
