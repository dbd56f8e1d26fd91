"""
Checkers for the ideal-filter, rigidity, Morita-context and standard-basis
axioms of a FilteredAlgebraInstance.

Every checker returns a report dict and records the first failing element as
a witness; a failed axiom is data, not an exception.
"""
from __future__ import annotations

import logging
import random
from itertools import product
from typing import Any, Dict, Iterator, Mapping, Sequence

from hecke_cellular.cellcheck.generic.base_checker import BaseChecker
from hecke_cellular.cellcheck.instance import FilteredAlgebraInstance, label_json, render_vector
from hecke_cellular.coefficients.linalg import EchelonSpace, add_scaled, intersection

logger = logging.getLogger(__name__)


def _difference(x: Mapping, y: Mapping, ring) -> dict:
    out = dict(x)
    add_scaled(out, y, -ring.one)
    return out


def _quotient_rank(vectors, modulo: EchelonSpace) -> int:
    space = modulo.copy()
    space.extend(vectors)
    return space.rank - modulo.rank


def sample_tuples(pools: Sequence[Sequence], limit: int, seed: int) -> Iterator[tuple]:
    """All tuples of the product when there are at most `limit`, else a seeded sample in product order."""
    sizes = [len(pool) for pool in pools]
    total = 1
    for size in sizes:
        total *= size
    if total <= limit:
        yield from product(*pools)
        return
    for index in sorted(random.Random(seed).sample(range(total), limit)):
        picked = []
        for pool, size in zip(reversed(pools), reversed(sizes)):
            index, digit = divmod(index, size)
            picked.append(pool[digit])
        yield tuple(reversed(picked))


class IdealFilterChecker(BaseChecker):
    """Two-sidedness, monotonicity, covering and the product condition."""

    axiom = "ideal_filter"

    def check(self, inst: FilteredAlgebraInstance) -> Dict[str, Any]:
        if not self.validate_config():
            return self.invalid_config()
        found = {
            "two_sided": self._two_sided(inst),
            "monotone": self._monotone(inst),
            "covering": self._covering(inst),
            "product": self._product(inst),
        }
        checks = {name: witness is None for name, witness in found.items()}
        witness = next((w for w in found.values() if w is not None), None)
        logger.info("%s ideal filter: %s", inst.name, checks)
        return self.report(checks, witness, instance=inst.name)

    def _two_sided(self, inst):
        for lam in inst.labels:
            space = inst.ideal(lam)
            for vec in inst.ideals[lam]:
                for index, g in enumerate(inst.generators):
                    for side, image in (("left", inst.multiply(g, vec)), ("right", inst.multiply(vec, g))):
                        if not space.contains(image):
                            return {
                                "check": "two_sided",
                                "label": label_json(lam),
                                "generator": index,
                                "side": side,
                                "element": render_vector(vec, inst.ring, inst.order),
                            }
        return None

    def _monotone(self, inst):
        for small in inst.labels:
            for big in inst.labels:
                if not inst.lt(small, big):
                    continue
                space = inst.ideal(big)
                for vec in inst.ideals[small]:
                    if not space.contains(vec):
                        return {
                            "check": "monotone",
                            "label": label_json(small),
                            "above": label_json(big),
                            "element": render_vector(vec, inst.ring, inst.order),
                        }
        return None

    def _covering(self, inst):
        space = inst.sum_of_ideals(inst.labels)
        if space.rank == inst.dimension:
            return None
        missing = next(key for key in inst.basis if not space.contains({key: inst.ring.one}))
        return {"check": "covering", "rank": space.rank, "dimension": inst.dimension, "missing": str(missing)}

    def _product(self, inst):
        for i, lam in enumerate(inst.labels):
            for mu in inst.labels[i + 1:]:
                if inst.leq(lam, mu) or inst.leq(mu, lam):
                    continue
                below = inst.sum_of_ideals(nu for nu in inst.labels if inst.leq(nu, lam) and inst.leq(nu, mu))
                for x in inst.ideals[lam]:
                    for y in inst.ideals[mu]:
                        if not below.contains(inst.multiply(x, y)):
                            return {
                                "check": "product",
                                "labels": [label_json(lam), label_json(mu)],
                                "left": render_vector(x, inst.ring, inst.order),
                                "right": render_vector(y, inst.ring, inst.order),
                            }
        return None


class RigidityChecker(BaseChecker):
    """A^{≤λ} ∩ Σ_{μ≱λ} A^{≤μ} = A^{<λ} for every label."""

    axiom = "rigidity"

    def check(self, inst: FilteredAlgebraInstance) -> Dict[str, Any]:
        if not self.validate_config():
            return self.invalid_config()
        checks, witness = {}, None
        for lam in inst.labels:
            lower = inst.lower(lam)
            meet = intersection(inst.ring, inst.ideal(lam), inst.not_above(lam))
            outside = next((row for row in meet.rows() if not lower.contains(row)), None)
            ok = outside is None and meet.rank == lower.rank
            checks[",".join(map(str, lam)) if isinstance(lam, tuple) else str(lam)] = ok
            if not ok and witness is None:
                witness = {
                    "label": label_json(lam),
                    "intersection_rank": meet.rank,
                    "lower_rank": lower.rank,
                }
                if outside is not None:
                    witness["element"] = render_vector(outside, inst.ring, inst.order)
        logger.info("%s rigidity: %s", inst.name, checks)
        return self.report(checks, witness, instance=inst.name)


class MoritaContextChecker(BaseChecker):
    """
    The Morita data at a label: module closure, both associativity laws modulo
    A^{<λ}, trace equal to the layer and annihilation by the ideals not above λ.
    """

    axiom = "morita_context"

    def check(self, inst: FilteredAlgebraInstance, label=None) -> Dict[str, Any]:
        if not self.validate_config():
            return self.invalid_config()
        labels = inst.labels if label is None else [label]
        checks, witness = {}, None
        for lam in labels:
            found = {
                "bimodule": self._bimodule(inst, lam),
                "associative": self._associative(inst, lam),
                "trace": self._trace(inst, lam),
                "annihilation": self._annihilation(inst, lam),
            }
            prefix = "" if label is not None else ",".join(map(str, lam)) + ":"
            for name, found_witness in found.items():
                checks[prefix + name] = found_witness is None
                if found_witness is not None and witness is None:
                    witness = {"label": label_json(lam), **found_witness}
        logger.info("%s Morita context at %s: %s", inst.name, label if label is not None else "all labels", checks)
        extra = {"instance": inst.name}
        if label is not None:
            extra["label"] = label_json(label)
        return self.report(checks, witness, **extra)

    def _bimodule(self, inst, lam):
        cell, lower = inst.cells[lam], inst.lower(lam)
        ideal = inst.ideal(lam)
        for side, vectors in (("M", cell.M), ("N", cell.N)):
            for vec in vectors:
                if not ideal.contains(vec):
                    return {"check": "bimodule", "side": side, "reason": "outside A^{<=label}",
                            "element": render_vector(vec, inst.ring, inst.order)}
        left = lower.copy()
        left.extend(cell.M)
        right = lower.copy()
        right.extend(cell.N)
        for index, g in enumerate(inst.generators):
            for vec in cell.M:
                if not left.contains(inst.multiply(g, vec)):
                    return {"check": "bimodule", "side": "M", "generator": index,
                            "element": render_vector(vec, inst.ring, inst.order)}
            for vec in cell.N:
                if not right.contains(inst.multiply(vec, g)):
                    return {"check": "bimodule", "side": "N", "generator": index,
                            "element": render_vector(vec, inst.ring, inst.order)}
        return None

    def _associative(self, inst, lam):
        cell, lower, ring = inst.cells[lam], inst.lower(lam), inst.ring
        limit, seed = self.config["max_triples"], self.config["seed"]
        for x, y, x2 in sample_tuples([cell.M, cell.N, cell.M], limit, seed):
            gap = _difference(inst.multiply(cell.eta(x, y), x2), inst.multiply(x, cell.rho(y, x2)), ring)
            if not lower.contains(gap):
                return {"check": "associative", "law": "eta(x,y)x' = x rho(y,x')",
                        "triple": [render_vector(v, ring, inst.order) for v in (x, y, x2)]}
        for y, x, y2 in sample_tuples([cell.N, cell.M, cell.N], limit, seed):
            gap = _difference(inst.multiply(cell.rho(y, x), y2), inst.multiply(y, cell.eta(x, y2)), ring)
            if not lower.contains(gap):
                return {"check": "associative", "law": "rho(y,x)y' = y eta(x,y')",
                        "triple": [render_vector(v, ring, inst.order) for v in (y, x, y2)]}
        return None

    def _trace(self, inst, lam):
        cell, lower, ideal = inst.cells[lam], inst.lower(lam), inst.ideal(lam)
        image = lower.copy()
        for x in cell.M:
            for y in cell.N:
                value = cell.eta(x, y)
                if not ideal.contains(value):
                    return {"check": "trace", "reason": "eta leaves A^{<=label}",
                            "element": render_vector(value, inst.ring, inst.order)}
                image.add(value)
        layer = _quotient_rank(ideal.rows(), lower)
        if image.rank - lower.rank != layer:
            return {"check": "trace", "eta_rank": image.rank - lower.rank, "layer": layer}
        return None

    def _annihilation(self, inst, lam):
        cell, lower = inst.cells[lam], inst.lower(lam)
        for mu in inst.labels:
            if inst.leq(lam, mu):
                continue
            for a in inst.ideals[mu]:
                for x in cell.M:
                    if not lower.contains(inst.multiply(a, x)):
                        return {"check": "annihilation", "side": "M", "ideal": label_json(mu),
                                "element": render_vector(x, inst.ring, inst.order)}
                for y in cell.N:
                    if not lower.contains(inst.multiply(y, a)):
                        return {"check": "annihilation", "side": "N", "ideal": label_json(mu),
                                "element": render_vector(y, inst.ring, inst.order)}
        return None


class StandardBasisChecker(BaseChecker):
    """Layer bookkeeping: A^{≤λ}/A^{<λ} ≅ M_λ ⊗_{B_λ} N_λ with B_λ acting freely, summing to dim A."""

    axiom = "standard_basis"

    def check(self, inst: FilteredAlgebraInstance) -> Dict[str, Any]:
        if not self.validate_config():
            return self.invalid_config()
        layers, witness = [], None
        for lam in inst.labels:
            cell, lower = inst.cells[lam], inst.lower(lam)
            row = {
                "label": label_json(lam),
                "M": _quotient_rank(cell.M, lower),
                "N": _quotient_rank(cell.N, lower),
                "B": _quotient_rank(cell.B, lower),
                "layer": _quotient_rank(inst.ideals[lam], lower),
                "eta_rank": _quotient_rank((cell.eta(x, y) for x in cell.M for y in cell.N), lower),
            }
            row["ok"] = self._layer_ok(row)
            layers.append(row)
            if not row["ok"] and witness is None:
                witness = dict(row)
        total = sum(row["layer"] for row in layers)
        predicted = sum(row["M"] * row["N"] // row["B"] for row in layers if row["B"])
        checks = {
            "layers": all(row["ok"] for row in layers),
            "dimension": total == inst.dimension and predicted == inst.dimension,
        }
        if witness is None and not checks["dimension"]:
            witness = {"dimension": inst.dimension, "layer_sum": total, "predicted": predicted}
        logger.info("%s standard basis: layers %s, dim %d", inst.name,
                    [row["layer"] for row in layers], inst.dimension)
        return self.report(checks, witness, instance=inst.name, layers=layers)

    @staticmethod
    def _layer_ok(row: dict) -> bool:
        m, n, b, layer = row["M"], row["N"], row["B"], row["layer"]
        if b == 0:
            return m == n == layer == row["eta_rank"] == 0
        return (m * n) % b == 0 and m * n // b == layer and row["eta_rank"] == layer


def verify_ideal_filter(inst: FilteredAlgebraInstance, config: dict | None = None) -> dict:
    return IdealFilterChecker(config).check(inst)


def verify_rigidity(inst: FilteredAlgebraInstance, config: dict | None = None) -> dict:
    return RigidityChecker(config).check(inst)


def verify_morita_context(inst: FilteredAlgebraInstance, label, config: dict | None = None) -> dict:
    return MoritaContextChecker(config).check(inst, label)


def verify_standard_basis(inst: FilteredAlgebraInstance, config: dict | None = None) -> dict:
    return StandardBasisChecker(config).check(inst)


def verify_all(inst: FilteredAlgebraInstance, config: dict | None = None) -> list[dict]:
    """Every axiom family, Morita contexts at all labels in one report."""
    return [
        verify_ideal_filter(inst, config),
        verify_rigidity(inst, config),
        MoritaContextChecker(config).check(inst),
        verify_standard_basis(inst, config),
    ]
