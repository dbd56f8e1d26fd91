"""Cardinality identities behind the cellular and super cellular basis theorems."""
from __future__ import annotations

import logging
from typing import Sequence

from hecke_cellular.resources.errors import ShapeError
from hecke_cellular.symgroup.composition import normalize, partitions, strict_partitions
from hecke_cellular.tableaux.enumerate import enumerate_tableaux

logger = logging.getLogger(__name__)


def _check_sizes(lam: Sequence[int], mu: Sequence[int]) -> int:
    if sum(lam) != sum(mu):
        raise ShapeError(f"{tuple(lam)} and {tuple(mu)} have different sizes")
    return sum(lam)


def rsk_count_identity(lam: Sequence[int], mu: Sequence[int]) -> tuple[int, int]:
    """|Tab_{λ;μ}| against Σ_ν |STab_{ν;λ}| |STab_{ν;μ}| over partitions ν."""
    n = _check_sizes(lam, mu)
    lam, mu = normalize(lam), normalize(mu)
    lhs = len(enumerate_tableaux(lam, mu, "row_semistandard"))
    rhs = sum(
        len(enumerate_tableaux(nu, lam, "semistandard")) * len(enumerate_tableaux(nu, mu, "semistandard"))
        for nu in partitions(n)
    )
    logger.debug("RSK count for %s;%s: %d vs %d", lam, mu, lhs, rhs)
    return lhs, rhs


def shifted_knuth_count_identity(lam: Sequence[int], mu: Sequence[int]) -> tuple[int, int]:
    """|Tab^c_{λ;μ}| against Σ_ν |STab^c_{ν;λ}| |STab^{c'}_{ν;μ}| over strict partitions ν."""
    n = _check_sizes(lam, mu)
    lam, mu = normalize(lam), normalize(mu)
    lhs = len(enumerate_tableaux(lam, mu, "circled"))
    rhs = sum(
        len(enumerate_tableaux(nu, lam, "shifted_circled")) * len(enumerate_tableaux(nu, mu, "shifted_circled_prime"))
        for nu in strict_partitions(n)
    )
    logger.debug("shifted Knuth count for %s;%s: %d vs %d", lam, mu, lhs, rhs)
    return lhs, rhs
