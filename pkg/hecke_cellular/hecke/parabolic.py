"""
The parabolic module M_λ = H_n m_λ on its tableau basis m_T = T_{d(T)} m_λ.

T_i acts on m_T according to the rows r(i), r(i+1) holding i and i+1:

    r(i) = r(i+1):  q m_T
    r(i) < r(i+1):  m_{s_i T}
    r(i) > r(i+1):  q m_{s_i T} + (q - 1) m_T

which lets every left-module computation stay inside M_λ without expanding
into H_n. M_{λ;μ} sits in M_λ through m_S = Σ_{T|_μ = S} m_T.
"""
from __future__ import annotations

import functools
import logging
from typing import Iterator, Mapping, Sequence

from hecke_cellular.coefficients.linalg import vector_sum
from hecke_cellular.coefficients.rings import CoefficientRing
from hecke_cellular.hecke.element import HeckeElement, accumulate
from hecke_cellular.hecke.homspace import HomSpaceElement
from hecke_cellular.resources.errors import InvariantViolation
from hecke_cellular.symgroup.composition import Composition, blocks, dominance_lt, normalize, partitions
from hecke_cellular.symgroup.cosets import min_coset_reps, young_subgroup
from hecke_cellular.symgroup.perm import Perm
from hecke_cellular.tableaux.enumerate import enumerate_tableaux
from hecke_cellular.tableaux.tableau import Tableau, min_rep_tableau, restrict_weight, tableau_to_perm

logger = logging.getLogger(__name__)


def swap_entries(t: Tableau, i: int) -> Tableau:
    """s_i T: exchange the entries i and i+1."""
    swap = {i: i + 1, i + 1: i}
    return Tableau(tuple(tuple(swap.get(v, v) for v in row) for row in t.rows))


class ParabolicModule:
    """Vectors are dicts row-standard Tableau -> coefficient."""

    def __init__(self, lam: Sequence[int], ring: CoefficientRing):
        self.lam = normalize(lam)
        self.ring = ring
        self.n = sum(self.lam)
        self.tableaux = enumerate_tableaux(self.lam, (1,) * self.n)
        self._row_of = {}
        for t in self.tableaux:
            rows = [0] * (self.n + 1)
            for r, _, v in t.boxes():
                rows[v] = r
            self._row_of[t] = rows
        self._swaps: dict[tuple[Tableau, int], Tableau] = {}
        self._fibres: dict[Composition, dict[Tableau, list[Tableau]]] = {}

    @property
    def dimension(self) -> int:
        return len(self.tableaux)

    def _swap(self, t: Tableau, i: int) -> Tableau:
        key = (t, i)
        found = self._swaps.get(key)
        if found is None:
            found = self._swaps[key] = swap_entries(t, i)
        return found

    def generator(self, i: int, vec: Mapping) -> dict:
        """T_i * vec."""
        q = self.ring.q
        q_minus_one = q - self.ring.one
        out: dict = {}
        for t, c in vec.items():
            rows = self._row_of[t]
            if rows[i] == rows[i + 1]:
                accumulate(out, t, q * c)
            elif rows[i] < rows[i + 1]:
                accumulate(out, self._swap(t, i), c)
            else:
                accumulate(out, self._swap(t, i), q * c)
                accumulate(out, t, q_minus_one * c)
        return out

    def basis_action(self, w: Perm, vec: Mapping) -> dict:
        """T_w * vec."""
        out = dict(vec)
        for i in reversed(w.reduced_word()):
            out = self.generator(i, out)
        return out

    def subgroup_sum(self, mu: Sequence[int], vec: Mapping) -> dict:
        """m_μ * vec, building T_w vec from T_{s_i w} vec along S_μ."""
        cache: dict[Perm, dict] = {}
        total: dict = {}
        for w in young_subgroup(mu):
            if w.is_identity():
                image = dict(vec)
            else:
                i = next(k for k in range(1, w.n) if w.has_left_descent(k))
                image = self.generator(i, cache[w.left_mul_simple(i)])
            cache[w] = image
            for t, c in image.items():
                accumulate(total, t, c)
        return total

    def fibres(self, mu: Sequence[int]) -> dict[Tableau, list[Tableau]]:
        """S in Tab_{λ;μ} -> the row-standard T with T|_μ = S."""
        mu = normalize(mu)
        found = self._fibres.get(mu)
        if found is None:
            found = {}
            for t in self.tableaux:
                found.setdefault(restrict_weight(t, mu), []).append(t)
            self._fibres[mu] = found
        return found

    def embed(self, h: HomSpaceElement) -> dict:
        fibres = self.fibres(h.mu)
        out: dict = {}
        for s, c in h.items():
            for t in fibres[s]:
                out[t] = c
        return out

    def extract(self, vec: Mapping, mu: Sequence[int], check: bool = True) -> HomSpaceElement:
        """Read an element of M_{λ;μ} off its coefficients at the S_↓."""
        mu = normalize(mu)
        terms = {}
        for s, members in self.fibres(mu).items():
            c = vec.get(min_rep_tableau(s), self.ring.zero)
            if check and any(vec.get(t, self.ring.zero) != c for t in members):
                raise InvariantViolation(f"vector of M_{self.lam} is not constant on the fibre of {s}")
            if c:
                terms[s] = c
        return HomSpaceElement(self.lam, mu, self.ring, terms)

    def coset_images(self, nu: Sequence[int], vec: Mapping) -> dict[Perm, dict]:
        """d -> T_d * vec for every d in D_ν, each built from T_{s_i d} vec."""
        images: dict[Perm, dict] = {}
        for d in sorted(min_coset_reps(nu), key=lambda w: w.length):
            if d.is_identity():
                images[d] = dict(vec)
            else:
                i = next(k for k in range(1, d.n) if d.has_left_descent(k))
                images[d] = self.generator(i, images[d.left_mul_simple(i)])
        return images

    def upper_layer(self, mu: Sequence[int]) -> Iterator[HomSpaceElement]:
        """Spanning vectors of M^{>λ}_{λ;μ}.

        For ν a partition strictly dominating λ, m_R ∘_ν m_S = h_R m_S where
        h_R = Σ T_{d(T)} over the fibre of R in M_ν, so every product is
        assembled from the coset images of the embedded m_S.
        """
        mu = normalize(mu)
        for nu in partitions(self.n):
            if not dominance_lt(self.lam, nu):
                continue
            outer = parabolic_module(nu, self.ring)
            reps = {t: tableau_to_perm(t) for t in outer.tableaux}
            fibres = outer.fibres(mu)
            for s in enumerate_tableaux(self.lam, nu):
                images = self.coset_images(nu, self.embed(HomSpaceElement.basis(s, self.ring, nu)))
                for members in fibres.values():
                    yield self.extract(vector_sum(images[reps[t]] for t in members), mu)


@functools.lru_cache(maxsize=None)
def parabolic_module(lam: Composition, ring: CoefficientRing) -> ParabolicModule:
    return ParabolicModule(lam, ring)


def generator_action(i: int, t: Tableau, ring: CoefficientRing) -> HomSpaceElement:
    """T_i m_T as an element of M_λ."""
    module = parabolic_module(t.shape, ring)
    return module.extract(module.generator(i, {t: ring.one}), (1,) * t.size)


def generator_action_check(t: Tableau, ring: CoefficientRing) -> bool:
    """The case table agrees with multiplication in H_n for every T_i."""
    m_t = HomSpaceElement.basis(t, ring).to_hecke()
    for i in range(1, t.size):
        if m_t.left_mul_generator(i) != generator_action(i, t, ring).to_hecke():
            logger.info("T_%d m_T disagrees with the case table at %s", i, t)
            return False
    return True


def is_in_parabolic_module(x: HeckeElement, lam: Sequence[int]) -> bool:
    """x lies in H_n m_λ iff x T_i = q x for every s_i in S_λ."""
    q = x.ring.q
    for block in blocks(lam):
        for i in list(block)[:-1]:
            if x.right_mul_generator(i) != x.scale(q):
                return False
    return True
