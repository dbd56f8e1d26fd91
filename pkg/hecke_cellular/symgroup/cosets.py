from __future__ import annotations

import functools
import itertools
from typing import Sequence

from hecke_cellular.coefficients.laurent import LaurentPolynomial
from hecke_cellular.symgroup.composition import Composition, blocks, normalize
from hecke_cellular.symgroup.perm import Perm, all_perms


def _key(lam: Sequence[int]) -> Composition:
    return tuple(int(p) for p in lam)


def is_in_young_subgroup(w: Perm, lam: Sequence[int]) -> bool:
    for block in blocks(lam):
        if block and not all(block.start <= w(i) < block.stop for i in block):
            return False
    return True


@functools.lru_cache(maxsize=None)
def _young_subgroup(lam: Composition) -> tuple[Perm, ...]:
    n = sum(lam)
    factors = [itertools.permutations(block) for block in blocks(lam)]
    out = []
    for choice in itertools.product(*factors):
        images = tuple(v for part in choice for v in part)
        out.append(Perm._trusted(images) if images else Perm.identity(n))
    return tuple(sorted(out, key=lambda w: (w.length, w.images)))


def young_subgroup(lam: Sequence[int]) -> tuple[Perm, ...]:
    """S_λ, sorted by length."""
    return _young_subgroup(_key(lam))


def is_min_coset_rep(w: Perm, lam: Sequence[int]) -> bool:
    """ℓ(w s_i) > ℓ(w) for every s_i in S_λ: w increases on each block."""
    return all(w(i) < w(i + 1) for block in blocks(lam) for i in block if i + 1 in block)


@functools.lru_cache(maxsize=None)
def _min_coset_reps(lam: Composition) -> tuple[Perm, ...]:
    return tuple(w for w in all_perms(sum(lam)) if is_min_coset_rep(w, lam))


def min_coset_reps(lam: Sequence[int]) -> tuple[Perm, ...]:
    """D_λ, filtered from the lexicographic listing of S_n."""
    return _min_coset_reps(_key(lam))


@functools.lru_cache(maxsize=None)
def _double_coset_reps(lam: Composition, mu: Composition) -> tuple[Perm, ...]:
    return tuple(w for w in _min_coset_reps(lam) if is_min_coset_rep(w.inverse(), mu))


def double_coset_reps(lam: Sequence[int], mu: Sequence[int]) -> tuple[Perm, ...]:
    """D_λ ∩ D_μ^{-1}: minimal representatives of the double cosets S_μ w S_λ."""
    return _double_coset_reps(_key(lam), _key(mu))


def coset_decompose(w: Perm, lam: Sequence[int]) -> tuple[Perm, Perm]:
    """w = u v with u in D_λ and v in S_λ; u sorts the values of w inside each block."""
    images = list(w.images)
    for block in blocks(lam):
        if block:
            lo, hi = block.start - 1, block.stop - 1
            images[lo:hi] = sorted(images[lo:hi])
    u = Perm._trusted(tuple(images))
    return u, u.inverse() * w


def longest_rep(lam: Sequence[int]) -> Perm:
    """ϖ_λ: fill Y(λ) from the bottom row upwards and read the rows top to bottom."""
    lam = _key(lam)
    rows, start = [], 1
    for p in reversed(lam):
        rows.append(tuple(range(start, start + p)))
        start += p
    rows.reverse()
    images = tuple(v for row in rows for v in row)
    return Perm._trusted(images) if images else Perm.identity(0)


def block_swap(n: int, m: int) -> Perm:
    """ϖ_{(n,m)}: i -> i+m for i <= n, i -> i-n otherwise."""
    return Perm._trusted(tuple(i + m if i <= n else i - n for i in range(1, n + m + 1)))


def hexagon_check(n: int, m: int, p: int) -> bool:
    """Both length-additive factorizations of the braiding permutations."""
    first = block_swap(n + p, m)
    left = Perm.direct_sum(block_swap(n, m), Perm.identity(p))
    right = Perm.direct_sum(Perm.identity(n), block_swap(p, m))
    ok_first = first == left * right and first.length == left.length + right.length
    second = block_swap(n, m + p)
    left2 = Perm.direct_sum(Perm.identity(m), block_swap(n, p))
    right2 = Perm.direct_sum(block_swap(n, m), Perm.identity(p))
    ok_second = second == left2 * right2 and second.length == left2.length + right2.length
    return ok_first and ok_second


@functools.lru_cache(maxsize=None)
def poincare_polynomial(n: int) -> LaurentPolynomial:
    """Σ_{w in S_n} q^{ℓ(w)}."""
    counts: dict[tuple[int, int], int] = {}
    for w in all_perms(n):
        counts[(0, w.length)] = counts.get((0, w.length), 0) + 1
    return LaurentPolynomial(counts)


def coset_poincare_polynomial(lam: Sequence[int]) -> LaurentPolynomial:
    counts: dict[tuple[int, int], int] = {}
    for w in min_coset_reps(lam):
        counts[(0, w.length)] = counts.get((0, w.length), 0) + 1
    return LaurentPolynomial(counts)
