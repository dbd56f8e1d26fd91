"""
Elements m_S of M^c_{λ;μ}, the two Γ actions on them and the product ∘_μ.

A ∘_μ B = h_A B where A = h_A m_μ; h_A is read off the free coordinates of A
in M^c_μ, so every product is assembled from the coset images T_d B, d in D_μ.
"""
from __future__ import annotations

import logging
from typing import Sequence

from hecke_cellular.coefficients.rings import CoefficientRing
from hecke_cellular.hecke.element import accumulate
from hecke_cellular.heckeclifford.element import HCElement, from_t_first, to_t_first
from hecke_cellular.heckeclifford.homspace import SuperHomSpaceElement
from hecke_cellular.heckeclifford.parabolic import apply_free, super_parabolic_module
from hecke_cellular.resources.errors import ShapeError
from hecke_cellular.symgroup.composition import normalize
from hecke_cellular.symgroup.cosets import is_min_coset_rep
from hecke_cellular.tableaux.tableau import CircledTableau, constant_row_tableau

logger = logging.getLogger(__name__)

SIDES = ("left", "right")


def circled_basis_element(s: CircledTableau, ring: CoefficientRing,
                          mu: Sequence[int] | None = None) -> SuperHomSpaceElement:
    return SuperHomSpaceElement.basis(s, ring, mu)


def super_to_hc(x: SuperHomSpaceElement) -> HCElement:
    """The element of H^c_n represented by x."""
    module = super_parabolic_module(x.lam, x.ring)
    return module.to_hc(module.free_embed(x))


def super_parabolic_element(lam: Sequence[int], ring: CoefficientRing) -> SuperHomSpaceElement:
    """m_λ as the identity of M^c_{λ;λ}."""
    lam = normalize(lam)
    return SuperHomSpaceElement.basis(CircledTableau(constant_row_tableau(lam)), ring, lam)


def gamma_action(x: SuperHomSpaceElement, side: str, i: int) -> SuperHomSpaceElement:
    """
    γ_{μ;i} · x for side "left", x · γ_{λ;i} for side "right".

    The left action multiplies by γ^L_{μ;i} = Σ_k q^k c_{b+1+k} in front; the
    right one is x m_λ γ^R_{λ;i} = x γ^L_{λ;i} m_λ, computed in circled coordinates.
    """
    if side not in SIDES:
        raise ShapeError(f"unknown side {side!r}; expected one of {SIDES}")
    module = super_parabolic_module(x.lam, x.ring)
    ring = x.ring
    if side == "right":
        return module.extract(module.right_gamma(module.embed(x), i), x.mu)
    if i < 1 or i > len(x.mu) or not x.mu[i - 1]:
        return SuperHomSpaceElement.zero(x.lam, x.mu, ring)
    b = sum(x.mu[:i - 1])
    vec = module.free_embed(x)
    out: dict = {}
    power = ring.one
    for k in range(x.mu[i - 1]):
        for key, value in module.clifford((b + 1 + k,), vec).items():
            accumulate(out, key, power * value)
        power = power * ring.q
    return module.free_extract(out, x.mu)


def super_circ_product(a: SuperHomSpaceElement, b: SuperHomSpaceElement, check: bool = True) -> SuperHomSpaceElement:
    """A ∘_μ B for A in M^c_{μ;ν} and B in M^c_{λ;μ}; lands in M^c_{λ;ν}."""
    if a.lam != b.mu:
        raise ShapeError(f"cannot compose M^c_{{{a.lam};{a.mu}}} after M^c_{{{b.lam};{b.mu}}}")
    if a.ring is not b.ring:
        raise ShapeError(f"factors over {a.ring.name} and {b.ring.name}")
    module = super_parabolic_module(b.lam, b.ring)
    outer = super_parabolic_module(a.lam, a.ring)
    images = module.coset_images(a.lam, module.free_embed(b))
    return module.free_extract(apply_free(module, outer, outer.free_embed(a), images), a.mu, check)


def super_free_part(b: SuperHomSpaceElement) -> HCElement:
    """y with B = m_μ y: the T_w c^Q coefficients of B with w in D_μ^{-1}."""
    terms = {(w, word): c for (w, word), c in to_t_first(super_to_hc(b)).items()
             if is_min_coset_rep(w.inverse(), b.mu)}
    return from_t_first(terms, b.n, b.ring)


def circ_product_hc_check(a: SuperHomSpaceElement, b: SuperHomSpaceElement) -> bool:
    """A ∘ B agrees with A y_B computed in H^c_n."""
    product = super_circ_product(a, b)
    if super_to_hc(a) * super_free_part(b) != super_to_hc(product):
        logger.info("A∘B disagrees with H^c_n for A=%s, B=%s", a, b)
        return False
    return True


def gamma_balance_check(a: SuperHomSpaceElement, b: SuperHomSpaceElement, i: int) -> bool:
    """(A · γ_{μ;i}) ∘ B = A ∘ (γ_{μ;i} · B)."""
    left = super_circ_product(gamma_action(a, "right", i), b)
    right = super_circ_product(a, gamma_action(b, "left", i))
    if left != right:
        logger.info("Γ-balance fails at block %d for A=%s, B=%s", i, a, b)
        return False
    return True


def gamma_square_check(x: SuperHomSpaceElement, side: str, i: int) -> bool:
    """γ_i acting twice is multiplication by the square of γ_i, a⟦part⟧."""
    parts = x.mu if side == "left" else x.lam
    if i < 1 or i > len(parts) or not parts[i - 1]:
        return not gamma_action(x, side, i)
    twice = gamma_action(gamma_action(x, side, i), side, i)
    ring = x.ring
    square, power, q_squared = ring.zero, ring.one, ring.q * ring.q
    for _ in range(parts[i - 1]):
        square = square + power
        power = power * q_squared
    return twice == x.scale(ring.a * square)
