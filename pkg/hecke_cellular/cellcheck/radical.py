"""
Count simple modules of H_n or H^c_n over GF(p) directly from structure
constants, independently of the Gram and trace-ideal machinery.

With X an integer lift of the left-regular matrix of x and
g_i(x) = (Tr(X^{p^i}) mod p^{i+1}) / p^i, the radical is the last term of

    I_{-1} = A,   I_i = {x ∈ I_{i-1} : g_i(xy) = 0 for all y ∈ A},

taken up to p^l ≤ dim A. Simple (super)modules up to parity are then the
field factors of the even centre of A/Rad A, counted as the fixed points of
Frobenius z -> z^p.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from sympy import GF
from sympy.polys.matrices import DomainMatrix

from hecke_cellular.coefficients.rings import CoefficientRing
from hecke_cellular.hecke.classify import count_simples
from hecke_cellular.hecke.element import HeckeElement
from hecke_cellular.heckeclifford.element import HCElement, hc_basis
from hecke_cellular.heckeclifford.ideals import count_super_simples
from hecke_cellular.resources.errors import InvariantViolation, RingError, ShapeError, SizeCapExceeded
from hecke_cellular.symgroup.perm import all_perms

logger = logging.getLogger(__name__)

MAX_ORACLE_DIMENSION = 48


@dataclass
class StructureConstants:
    """table[i, j, k] is the e_k coefficient of e_i e_j, reduced mod p."""
    keys: list
    parity: np.ndarray
    table: np.ndarray
    p: int

    @property
    def dimension(self) -> int:
        return len(self.keys)

    @property
    def dtype(self):
        return self.table.dtype

    def left_matrices(self) -> np.ndarray:
        """L[i] is the matrix of y -> e_i y, columns indexed by the basis."""
        return np.ascontiguousarray(np.transpose(self.table, (0, 2, 1)))

    def multiply(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        # contract one side at a time so every partial sum stays below d * p**2
        left = np.tensordot(x, self.table, axes=1) % self.p
        return np.tensordot(y, left, axes=1) % self.p

    def power(self, x: np.ndarray, exponent: int) -> np.ndarray:
        result, base = None, x % self.p
        while exponent:
            if exponent & 1:
                result = base if result is None else self.multiply(result, base)
            exponent >>= 1
            if exponent:
                base = self.multiply(base, base)
        return result


def _field_characteristic(ring: CoefficientRing) -> int:
    if ring.descriptor.kind != "gf":
        raise RingError(f"the radical oracle works over gf:p rings, got {ring.name}")
    return ring.characteristic()


def working_dtype(p: int, d: int):
    """int64 when every lifted product of the filtration fits, object (Python ints) otherwise."""
    modulus = p
    while modulus <= d:
        modulus *= p
    return np.int64 if d * modulus * modulus < 2 ** 63 else object


def structure_constants(algebra: str, n: int, ring: CoefficientRing,
                        max_dimension: int = MAX_ORACLE_DIMENSION) -> StructureConstants:
    p = _field_characteristic(ring)
    if algebra == "hecke":
        keys = list(all_perms(n))

        def element(key):
            return HeckeElement.basis(key, ring)

        parity = np.zeros(len(keys), dtype=np.int64)
    elif algebra == "hc":
        keys = hc_basis(n)

        def element(key):
            return HCElement.basis(key[0], key[1], ring)

        parity = np.array([len(word) % 2 for word, _ in keys], dtype=np.int64)
    else:
        raise ShapeError(f"unknown algebra {algebra!r}; expected 'hecke' or 'hc'")
    d = len(keys)
    if d > max_dimension:
        raise SizeCapExceeded(f"the radical oracle is limited to dimension {max_dimension}, got {d}")

    index = {key: k for k, key in enumerate(keys)}
    to_int = ring.domain.to_sympy
    dtype = working_dtype(p, d)
    table = np.zeros((d, d, d), dtype=dtype)
    elements = [element(key) for key in keys]
    for i, x in enumerate(elements):
        for j, y in enumerate(elements):
            for key, c in (x * y).terms.items():
                table[i, j, index[key]] = int(to_int(c)) % p
    logger.info("structure constants of %s_%d over %s: dimension %d", algebra, n, ring.name, d)
    return StructureConstants(keys, parity, table, p)


def _domain_matrix(matrix, p: int) -> DomainMatrix | None:
    rows = [[int(v) % p for v in row] for row in np.atleast_2d(np.asarray(matrix))]
    if not rows or not rows[0]:
        return None
    field = GF(p)
    return DomainMatrix([[field(v) for v in row] for row in rows], (len(rows), len(rows[0])), field)


def _to_array(dm: DomainMatrix, p: int, dtype) -> np.ndarray:
    rows = [[int(v) % p for v in row] for row in dm.to_Matrix().tolist()]
    return np.array(rows, dtype=dtype).reshape(dm.shape)


def row_reduce(matrix: np.ndarray, p: int, dtype=np.int64) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(p) and the pivot columns."""
    dm = _domain_matrix(matrix, p)
    if dm is None:
        return np.zeros((0, np.shape(matrix)[-1]), dtype=dtype), []
    reduced, pivots = dm.rref()
    return _to_array(reduced, p, dtype)[:len(pivots)], list(pivots)


def null_space(matrix: np.ndarray, p: int, dtype=np.int64) -> np.ndarray:
    """Rows spanning {v : matrix @ v = 0} over GF(p)."""
    matrix = np.atleast_2d(np.asarray(matrix))
    dm = _domain_matrix(matrix, p)
    if dm is None:
        return np.eye(matrix.shape[1], dtype=dtype)
    return _to_array(dm.nullspace(), p, dtype).reshape(-1, matrix.shape[1])


def _lifted_trace(mats: np.ndarray, level: int, p: int) -> np.ndarray:
    """g_level of each matrix in a batch with entries in [0, p)."""
    modulus = p ** (level + 1)
    power = mats % modulus
    for _ in range(level):
        result, base, exponent = None, power, p
        while exponent:
            if exponent & 1:
                result = base if result is None else np.matmul(result, base) % modulus
            exponent >>= 1
            if exponent:
                base = np.matmul(base, base) % modulus
        power = result
    traces = np.trace(power, axis1=-2, axis2=-1) % modulus
    scale = p ** level
    if np.any(traces % scale):
        raise InvariantViolation(f"trace of a p^{level}-th power is not divisible by {scale}")
    return (traces // scale) % p


def radical_basis(sc: StructureConstants) -> np.ndarray:
    """Rows spanning Rad A inside GF(p)^d."""
    d, p = sc.dimension, sc.p
    left = sc.left_matrices()
    basis = np.eye(d, dtype=sc.dtype)
    level = 0
    while True:
        if basis.shape[0] == 0:
            break
        lx = np.tensordot(basis, left, axes=1) % p
        form = np.stack([_lifted_trace(np.matmul(lx[k][None], left) % p, level, p) for k in range(basis.shape[0])])
        kernel = null_space(form.T, p, sc.dtype)
        basis = (kernel @ basis) % p
        logger.debug("radical filtration level %d: dimension %d", level, basis.shape[0])
        if p ** (level + 1) > d:
            break
        level += 1
    reduced, _ = row_reduce(basis, p, sc.dtype) if basis.shape[0] else (basis, [])
    return reduced


@dataclass
class RadicalReport:
    dimension: int
    radical_dimension: int
    even_centre_dimension: int
    simple_count: int

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "radical_dimension": self.radical_dimension,
            "even_centre_dimension": self.even_centre_dimension,
            "simple_count": self.simple_count,
        }


def count_simples_by_radical(sc: StructureConstants) -> RadicalReport:
    """Number of simple (super)modules up to parity change, from A/Rad A."""
    d, p = sc.dimension, sc.p
    radical, pivots = row_reduce(radical_basis(sc), p, sc.dtype) if d else (np.zeros((0, 0), dtype=sc.dtype), [])
    quotient = [c for c in range(d) if c not in pivots]

    def reduce(vec: np.ndarray) -> np.ndarray:
        vec = vec % p
        for i, c in enumerate(pivots):
            if vec[c]:
                vec = (vec - vec[c] * radical[i]) % p
        return vec

    even = [i for i in range(d) if sc.parity[i] == 0]
    # commutators [e_i, e_j] for even i, in quotient coordinates
    blocks = []
    for i in even:
        row = [reduce(sc.table[i, j] - sc.table[j, i])[quotient] for j in range(d)]
        blocks.append(np.concatenate(row) if row else np.zeros(0, dtype=sc.dtype))
    if not even or not quotient:
        return RadicalReport(d, len(pivots), 0, 0)
    relations = np.stack(blocks)
    central = null_space(relations.T, p, sc.dtype)
    lifts = np.zeros((central.shape[0], d), dtype=sc.dtype)
    lifts[:, even] = central
    images = np.stack([reduce(z)[quotient] for z in lifts]) if lifts.shape[0] else np.zeros((0, len(quotient)), dtype=sc.dtype)
    centre, _ = row_reduce(images, p, sc.dtype) if images.shape[0] else (images, [])
    m = centre.shape[0]
    if m == 0:
        return RadicalReport(d, len(pivots), 0, 0)
    reps = np.zeros((m, d), dtype=sc.dtype)
    reps[:, quotient] = centre
    frobenius = np.stack([reduce(sc.power(z, p) - z)[quotient] for z in reps])
    _, moved = row_reduce(frobenius, p, sc.dtype)
    count = m - len(moved)
    logger.info("radical oracle: dim %d, radical %d, even centre of the quotient %d, %d simple modules",
                d, len(pivots), m, count)
    return RadicalReport(d, len(pivots), m, count)


def radical_cross_check(algebra: str, n: int, ring: CoefficientRing, jobs: int = 1,
                        max_dimension: int = MAX_ORACLE_DIMENSION) -> dict:
    """Compare the oracle count with count_simples / count_super_simples."""
    sc = structure_constants(algebra, n, ring, max_dimension)
    oracle = count_simples_by_radical(sc)
    if algebra == "hecke":
        classified = count_simples(n, ring, jobs).count
    else:
        classified = count_super_simples(n, ring, jobs).count
    report = {
        "check": "radical_oracle",
        "algebra": algebra,
        "n": n,
        "ring": ring.name,
        "status": "pass" if oracle.simple_count == classified else "fail",
        "oracle": oracle.to_json(),
        "classification_count": classified,
    }
    if report["status"] == "fail":
        report["message"] = f"oracle counts {oracle.simple_count} simple modules, classification {classified}"
    return report
