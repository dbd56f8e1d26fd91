"""
The parabolic supermodule M^c_λ = H^c_n m_λ ≅ C_n ⊗ M_λ.

Two coordinate systems are kept side by side:

  free     (word, T) -> c^word T_{d(T)} m_λ, T row-standard of shape λ;
  circled  CircledTableau T -> m_T = T_w c^P m_λ, w = d(T^×), P the reading
           positions of the circled boxes.

T_i acts on free coordinates through s_i, t_i on the word and the case table
of M_λ on the tableau. The circled basis is unitriangular against the free one
(the leading key of m_T has the same tableau and sits at the top length), and
the right action of Γ_λ and the embedding of M^c_{λ;μ} are written in circled
coordinates.
"""
from __future__ import annotations

import functools
import logging
from itertools import product as cartesian
from typing import Iterator, Mapping, Sequence

from hecke_cellular.coefficients.rings import CoefficientRing
from hecke_cellular.hecke.element import accumulate
from hecke_cellular.hecke.parabolic import parabolic_module
from hecke_cellular.heckeclifford.clifford import Word, a_power, merge_words, signed, swap_word, twist_word
from hecke_cellular.heckeclifford.element import HCElement
from hecke_cellular.heckeclifford.homspace import SuperHomSpaceElement
from hecke_cellular.resources.errors import InvariantViolation
from hecke_cellular.symgroup.composition import Composition, dominance_lt, normalize, partitions
from hecke_cellular.symgroup.cosets import min_coset_reps, young_subgroup
from hecke_cellular.symgroup.perm import Perm
from hecke_cellular.tableaux.enumerate import enumerate_tableaux
from hecke_cellular.tableaux.tableau import CircledTableau, Tableau, min_rep_tableau, row_reading_tableau, tableau_to_perm

logger = logging.getLogger(__name__)


class SuperParabolicModule:
    """Free vectors are dicts (word, Tableau) -> coefficient; circled vectors are dicts CircledTableau -> coefficient."""

    def __init__(self, lam: Sequence[int], ring: CoefficientRing):
        self.lam = normalize(lam)
        self.ring = ring
        self.n = sum(self.lam)
        self.hecke = parabolic_module(self.lam, ring)
        self.tableaux = self.hecke.tableaux
        self.reading = row_reading_tableau(self.lam)
        self._position = {(r, c): v for r, c, v in self.reading.boxes()}
        self._box = {v: (r, c) for (r, c), v in self._position.items()}
        self._reps = {t: tableau_to_perm(t) for t in self.tableaux}
        self._free: dict[CircledTableau, dict] = {}

    @property
    def dimension(self) -> int:
        return len(self.tableaux) << self.n

    def rep(self, t: Tableau) -> Perm:
        return self._reps[t]

    # free coordinates

    def generator(self, i: int, vec: Mapping) -> dict:
        """T_i * vec."""
        ring = self.ring
        q_minus_one = ring.q - ring.one
        out: dict = {}
        for (word, t), c in vec.items():
            sign, swapped = swap_word(word, i)
            for u, value in self.hecke.generator(i, {t: signed(c, sign)}).items():
                accumulate(out, (swapped, u), value)
            for t_sign, a_deg, twisted in twist_word(word, i):
                accumulate(out, (twisted, t), signed(q_minus_one * a_power(ring, a_deg) * c, t_sign))
        return out

    def clifford(self, word: Word, vec: Mapping) -> dict:
        """c^word * vec."""
        out: dict = {}
        for (p, t), c in vec.items():
            sign, merged, common = merge_words(word, p)
            accumulate(out, (merged, t), signed(a_power(self.ring, len(common)) * c, sign))
        return out

    def basis_action(self, w: Perm, vec: Mapping) -> dict:
        """T_w * vec."""
        out = dict(vec)
        for i in reversed(w.reduced_word()):
            out = self.generator(i, out)
        return out

    def act(self, x: HCElement, vec: Mapping) -> dict:
        """x * vec for x in H^c_n."""
        cache: dict[Perm, dict] = {}
        out: dict = {}
        for (word, u), c in x.items():
            image = cache.get(u)
            if image is None:
                image = cache[u] = self.basis_action(u, vec)
            for key, value in self.clifford(word, image).items():
                accumulate(out, key, c * value)
        return out

    def coset_images(self, nu: Sequence[int], vec: Mapping) -> dict[Perm, dict]:
        """d -> T_d * vec for every d in D_ν."""
        images: dict[Perm, dict] = {}
        for d in sorted(min_coset_reps(nu), key=lambda w: w.length):
            if d.is_identity():
                images[d] = dict(vec)
            else:
                i = next(k for k in range(1, d.n) if d.has_left_descent(k))
                images[d] = self.generator(i, images[d.left_mul_simple(i)])
        return images

    def subgroup_sum(self, mu: Sequence[int], vec: Mapping) -> dict:
        """m_μ * vec."""
        cache: dict[Perm, dict] = {}
        total: dict = {}
        for w in young_subgroup(mu):
            if w.is_identity():
                image = dict(vec)
            else:
                i = next(k for k in range(1, w.n) if w.has_left_descent(k))
                image = self.generator(i, cache[w.left_mul_simple(i)])
            cache[w] = image
            for key, c in image.items():
                accumulate(total, key, c)
        return total

    def to_hc(self, vec: Mapping) -> HCElement:
        """The free vector as an element of H^c_n."""
        terms: dict = {}
        subgroup = young_subgroup(self.lam)
        for (word, t), c in vec.items():
            d = self._reps[t]
            for v in subgroup:
                accumulate(terms, (word, d * v), c)
        return HCElement._wrap(self.n, self.ring, terms)

    # circled coordinates

    def positions(self, ct: CircledTableau) -> Word:
        return tuple(sorted(self._position[box] for box in ct.circled))

    def circled_at(self, t: Tableau, word: Word) -> CircledTableau:
        return CircledTableau(t, frozenset(self._box[j] for j in word))

    def free_of(self, ct: CircledTableau) -> dict:
        """m_T = T_{d(T^×)} c^P m_λ in free coordinates."""
        found = self._free.get(ct)
        if found is None:
            seed = {(self.positions(ct), self.reading): self.ring.one}
            found = self._free[ct] = self.basis_action(self._reps[ct.tableau], seed)
        return found

    def leading_tableau(self, word: Word, t: Tableau) -> CircledTableau:
        """The circled tableau whose m_T leads with the free key (word, t)."""
        return CircledTableau(t, frozenset((r, c) for r, c, v in t.boxes() if v in word))

    def to_circled(self, vec: Mapping) -> dict:
        remaining = dict(vec)
        out: dict = {}
        by_length: dict[int, list] = {}
        for t in self.tableaux:
            by_length.setdefault(self._reps[t].length, []).append(t)
        for length in sorted(by_length, reverse=True):
            level = set(by_length[length])
            for key in sorted((k for k in remaining if k[1] in level), key=lambda k: (k[1].rows, k[0])):
                c = remaining.get(key)
                if not c:
                    continue
                ct = self.leading_tableau(*key)
                image = self.free_of(ct)
                lead = image.get(key)
                if not lead:
                    raise InvariantViolation(f"m_{ct} does not lead with {key}")
                coeff = c * self.ring.inv(lead)
                out[ct] = coeff
                for k, v in image.items():
                    accumulate(remaining, k, -(v * coeff))
        if remaining:
            raise InvariantViolation(f"free vector of M^c_{self.lam} left a remainder in circled coordinates")
        return out

    def from_circled(self, cvec: Mapping) -> dict:
        out: dict = {}
        for ct, c in cvec.items():
            for key, v in self.free_of(ct).items():
                accumulate(out, key, v * c)
        return out

    def right_gamma(self, cvec: Mapping, i: int) -> dict:
        """x * γ_{λ;i}: m_T γ = T_w c^P γ^L_{λ;i} m_λ, merged circle by circle."""
        if i < 1 or i > len(self.lam) or not self.lam[i - 1]:
            return {}
        ring = self.ring
        b = sum(self.lam[:i - 1])
        out: dict = {}
        for ct, c in cvec.items():
            word = self.positions(ct)
            power = c
            for k in range(self.lam[i - 1]):
                sign, merged, common = merge_words(word, (b + 1 + k,))
                value = signed(a_power(ring, len(common)) * power, sign)
                accumulate(out, self.circled_at(ct.tableau, merged), value)
                power = power * ring.q
        return out

    # M^c_{λ;μ} inside M^c_λ

    def embed(self, h: SuperHomSpaceElement) -> dict:
        """m_S in circled coordinates: spread the circles of each bar, then sum over the fibre."""
        fibres = self.hecke.fibres(h.mu)
        ring = self.ring
        out: dict = {}
        for s, c in h.items():
            choices = []
            for r, first, last, _ in CircledTableau(s.tableau).bars():
                if (r, last) in s.circled:
                    choices.append([((r, first + l), l) for l in range(last - first + 1)])
            for picks in cartesian(*choices):
                weight = c
                for _ in range(sum(l for _, l in picks)):
                    weight = weight * ring.q
                boxes = frozenset(box for box, _ in picks)
                for t in fibres[s.tableau]:
                    accumulate(out, CircledTableau(t, boxes), weight)
        return out

    def extract(self, cvec: Mapping, mu: Sequence[int], check: bool = True) -> SuperHomSpaceElement:
        """Read an element of M^c_{λ;μ} off its coefficients at (S^×)_↓ circled on the left of each bar."""
        mu = normalize(mu)
        terms = {}
        for s in enumerate_tableaux(self.lam, mu, "circled"):
            key = CircledTableau(min_rep_tableau(s.tableau),
                                 frozenset((r, first) for r, first, last, _ in CircledTableau(s.tableau).bars()
                                           if (r, last) in s.circled))
            c = cvec.get(key)
            if c:
                terms[s] = c
        result = SuperHomSpaceElement(self.lam, mu, self.ring, terms)
        if check and self.embed(result) != {k: v for k, v in cvec.items() if v}:
            raise InvariantViolation(f"vector of M^c_{self.lam} does not lie in M^c_{{{self.lam};{mu}}}")
        return result

    def free_embed(self, h: SuperHomSpaceElement) -> dict:
        return self.from_circled(self.embed(h))

    def free_extract(self, vec: Mapping, mu: Sequence[int], check: bool = True) -> SuperHomSpaceElement:
        return self.extract(self.to_circled(vec), mu, check)

    def upper_layer(self, mu: Sequence[int]) -> Iterator[SuperHomSpaceElement]:
        """Spanning vectors of Σ_{ν ⊳ λ} M^c_{ν;μ} ∘_ν M^c_{λ;ν}, ν running over partitions."""
        mu = normalize(mu)
        for nu in partitions(self.n):
            if not dominance_lt(self.lam, nu):
                continue
            outer = super_parabolic_module(nu, self.ring)
            lefts = [outer.free_embed(SuperHomSpaceElement.basis(r, self.ring, mu))
                     for r in enumerate_tableaux(nu, mu, "circled")]
            for s in enumerate_tableaux(self.lam, nu, "circled"):
                right = self.free_embed(SuperHomSpaceElement.basis(s, self.ring, nu))
                images = self.coset_images(nu, right)
                for left in lefts:
                    yield self.free_extract(apply_free(self, outer, left, images), mu)


def apply_free(module: SuperParabolicModule, outer: SuperParabolicModule, left: Mapping,
               images: Mapping[Perm, dict]) -> dict:
    """h_A * B where A has free vector `left` in M^c_ν and `images` are the T_d B over D_ν."""
    total: dict = {}
    for (word, t), c in left.items():
        for key, value in module.clifford(word, images[outer.rep(t)]).items():
            accumulate(total, key, c * value)
    return total


@functools.lru_cache(maxsize=None)
def super_parabolic_module(lam: Composition, ring: CoefficientRing) -> SuperParabolicModule:
    return SuperParabolicModule(normalize(lam), ring)


def circled_generator_action(i: int, ct: CircledTableau, ring: CoefficientRing) -> dict:
    """T_i m_T in circled coordinates."""
    module = super_parabolic_module(ct.shape, ring)
    return module.to_circled(module.generator(i, module.free_of(ct)))


def circled_generator_check(ct: CircledTableau, ring: CoefficientRing) -> bool:
    """T_i m_T computed in M^c_λ agrees with multiplication in H^c_n."""
    module = super_parabolic_module(ct.shape, ring)
    m_t = module.to_hc(module.free_of(ct))
    for i in range(1, module.n):
        image = module.to_hc(module.from_circled(circled_generator_action(i, ct, ring)))
        if m_t.left_mul_generator(i) != image:
            logger.info("T_%d m_T disagrees with H^c_n at %s", i, ct)
            return False
    return True
