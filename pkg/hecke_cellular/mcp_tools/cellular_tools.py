"""
Every CLI subcommand and MCP tool as one function from an argument dict to a
JSON-ready result. Argument names follow the long CLI flags (`lambda`, `mu`,
`n`, `ring`, `e`, `algebra`, ...); compositions may be given as `2,1` or as a
list of ints.
"""
from __future__ import annotations

import logging
import re
from typing import Any, Callable

from hecke_cellular.cellcheck.axioms import MoritaContextChecker, verify_all
from hecke_cellular.cellcheck.instance import (
    build_instance,
    drop_ideal_vector,
    drop_module_vector,
    flip_rho,
)
from hecke_cellular.cellcheck.radical import radical_cross_check
from hecke_cellular.coefficients.rings import CoefficientRing, build_ring, parse_ring
from hecke_cellular.hecke.classify import count_simples, gram_matrix, trace_ideal_J
from hecke_cellular.hecke.element import HeckeElement
from hecke_cellular.hecke.specht import specht_quotient
from hecke_cellular.heckeclifford.clifford import CliffordWord
from hecke_cellular.heckeclifford.element import HCElement, hc_basis
from hecke_cellular.heckeclifford.ideals import count_super_simples, trace_ideal_Jc
from hecke_cellular.heckeclifford.specht import queer_schur_count, super_specht_quotient
from hecke_cellular.resources.errors import RingError, UsageError
from hecke_cellular.resources.tools import Settings, check_size_cap, load_settings
from hecke_cellular.symgroup.composition import parse_composition
from hecke_cellular.symgroup.perm import all_perms

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

ALGEBRAS = ("hecke", "hc")
DEFAULT_RINGS = {"hecke": "Qq", "hc": "Qaq"}
CORRUPTIONS = ("drop-ideal", "flip-rho", "drop-module")

_TOKEN = re.compile(r"^([Tc])(\d+)$")


def _require(arguments: dict, key: str):
    value = arguments.get(key)
    if value is None or value == "":
        raise UsageError(f"missing required argument {key!r}")
    return value


def _algebra(arguments: dict) -> str:
    algebra = arguments.get("algebra") or "hecke"
    if algebra not in ALGEBRAS:
        raise UsageError(f"algebra must be one of {ALGEBRAS}, got {algebra!r}")
    return algebra


def _int(arguments: dict, key: str, default: int | None = None) -> int:
    value = arguments.get(key, default)
    if value is None:
        raise UsageError(f"missing required argument {key!r}")
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise UsageError(f"{key} must be an integer, got {value!r}")
    if number < 0:
        raise UsageError(f"{key} must be non-negative, got {number}")
    return number


def _composition(arguments: dict, key: str):
    value = _require(arguments, key)
    try:
        return parse_composition(value)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"{key} must look like 2,1: {exc}")


def resolve_ring(arguments: dict, default: str = "Qq") -> CoefficientRing:
    """--ring, or cyclo:e from --e; the two must agree when both are given."""
    text = arguments.get("ring")
    e = arguments.get("e")
    if e is not None:
        e = _int(arguments, "e")
        text = text or f"cyclo:{e}"
        descriptor = parse_ring(text)
        if descriptor.kind != "cyclo" or descriptor.e != e:
            raise RingError(f"--e {e} requires the ring cyclo:{e}, got {text}")
    return build_ring(text or default)


def parse_element(text: str, n: int, algebra: str, ring: CoefficientRing):
    """A product of generators such as `T1 c2 T2`; `1` or an empty string is the identity."""
    if algebra == "hecke":
        value = HeckeElement.one(n, ring)
    else:
        value = HCElement.one(n, ring)
    for token in str(text).replace("*", " ").split():
        if token == "1":
            continue
        match = _TOKEN.match(token)
        if not match:
            raise UsageError(f"cannot read generator {token!r}; use T<i> or c<i>")
        kind, index = match.group(1), int(match.group(2))
        if kind == "T":
            if not 1 <= index < n:
                raise UsageError(f"T{index} is not a generator of rank {n}")
            factor = (HeckeElement if algebra == "hecke" else HCElement).generator(n, index, ring)
        else:
            if algebra == "hecke":
                raise UsageError("Clifford generators need --algebra hc")
            factor = HCElement.clifford(n, (index,), ring)
        value = value * factor
    return value


def _envelope(command: str, payload: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, **payload}


def basis_tool(arguments: dict, settings: Settings) -> dict:
    algebra = _algebra(arguments)
    n = _int(arguments, "n")
    check_size_cap(n, algebra, settings, bool(arguments.get("allow_large")))
    if algebra == "hecke":
        terms = [f"T{w}" for w in sorted(all_perms(n), key=lambda w: (w.length, w.images))]
    else:
        terms = [f"{CliffordWord(n, word).to_text()} T{w}" for word, w in
                 sorted(hc_basis(n), key=lambda key: (key[1].length, key[1].images, len(key[0]), key[0]))]
    return _envelope("basis", {"algebra": algebra, "n": n, "dim": len(terms), "basis": terms})


def product_tool(arguments: dict, settings: Settings) -> dict:
    algebra = _algebra(arguments)
    n = _int(arguments, "n")
    check_size_cap(n, algebra, settings, bool(arguments.get("allow_large")))
    ring = resolve_ring(arguments, DEFAULT_RINGS[algebra])
    x = parse_element(arguments.get("x", "1"), n, algebra, ring)
    y = parse_element(arguments.get("y", "1"), n, algebra, ring)
    value = x * y
    return _envelope("product", {
        "algebra": algebra, "n": n, "ring": ring.name,
        "x": x.to_text(), "y": y.to_text(),
        "product": value.to_text(), "terms": value.to_json(),
    })


def specht_tool(arguments: dict, settings: Settings) -> dict:
    algebra = _algebra(arguments)
    lam = _composition(arguments, "lambda")
    n = sum(lam)
    mu = _composition(arguments, "mu") if arguments.get("mu") else (1,) * n
    if sum(mu) != n:
        raise UsageError(f"lambda {lam} and mu {mu} have different sizes")
    check_size_cap(n, algebra, settings, bool(arguments.get("allow_large")))
    ring = resolve_ring(arguments, DEFAULT_RINGS[algebra])
    quotient = specht_quotient(lam, mu, ring) if algebra == "hecke" else super_specht_quotient(lam, mu, ring)
    return _envelope("specht", {"algebra": algebra, **quotient.to_json()})


def gram_tool(arguments: dict, settings: Settings) -> dict:
    lam = _composition(arguments, "lambda")
    check_size_cap(sum(lam), "hecke", settings, bool(arguments.get("allow_large")))
    ring = resolve_ring(arguments)
    return _envelope("gram", gram_matrix(lam, ring).to_json())


def _jobs(arguments: dict, settings: Settings) -> int:
    return max(1, _int(arguments, "jobs", settings.jobs))


def classify_tool(arguments: dict, settings: Settings) -> dict:
    n = _int(arguments, "n")
    check_size_cap(n, "hecke", settings, bool(arguments.get("allow_large")))
    ring = resolve_ring(arguments)
    result = count_simples(n, ring, _jobs(arguments, settings))
    return _envelope("classify", result.to_json())


def classify_super_tool(arguments: dict, settings: Settings) -> dict:
    n = _int(arguments, "n")
    check_size_cap(n, "hc", settings, bool(arguments.get("allow_large")))
    ring = resolve_ring(arguments, "Qaq")
    payload = count_super_simples(n, ring, _jobs(arguments, settings)).to_json()
    if arguments.get("queer"):
        payload["queer_schur"] = queer_schur_count(n, ring)
    return _envelope("classify-super", payload)


def ideal_tool(arguments: dict, settings: Settings) -> dict:
    algebra = _algebra(arguments)
    lam = _composition(arguments, "lambda")
    check_size_cap(sum(lam), algebra, settings, bool(arguments.get("allow_large")))
    ring = resolve_ring(arguments, DEFAULT_RINGS[algebra])
    if algebra == "hecke":
        payload = trace_ideal_J(lam, ring).to_json(ring)
    else:
        payload = trace_ideal_Jc(lam, ring).to_json()
    return _envelope("ideal", {"algebra": algebra, **payload})


def verify_tool(arguments: dict, settings: Settings) -> dict:
    algebra = _algebra(arguments)
    n = _int(arguments, "n")
    check_size_cap(n, algebra, settings, bool(arguments.get("allow_large")))
    ring = resolve_ring(arguments, DEFAULT_RINGS[algebra])
    config = {
        "max_triples": _int(arguments, "max_triples", MoritaContextChecker.defaults["max_triples"]),
        "seed": _int(arguments, "seed", 0),
    }
    reports = []
    if arguments.get("radical"):
        reports.append(radical_cross_check(algebra, n, ring, _jobs(arguments, settings)))
    else:
        inst = build_instance(algebra, n, ring)
        corrupt = arguments.get("corrupt")
        if corrupt:
            label = _composition(arguments, "label") if arguments.get("label") else inst.labels[0]
            if label not in inst.labels:
                raise UsageError(f"{label} is not a label of {inst.name}")
            if corrupt == "drop-ideal":
                inst = drop_ideal_vector(inst)
            elif corrupt == "flip-rho":
                inst = flip_rho(inst, label)
            elif corrupt == "drop-module":
                inst = drop_module_vector(inst, label)
            else:
                raise UsageError(f"corrupt must be one of {CORRUPTIONS}, got {corrupt!r}")
        reports.extend(verify_all(inst, config))
    status = "pass" if all(r["status"] == "pass" for r in reports) else "fail"
    return _envelope("verify", {"algebra": algebra, "n": n, "ring": ring.name, "status": status, "reports": reports})


TOOLS: dict[str, Callable[[dict, Settings], dict]] = {
    "basis": basis_tool,
    "product": product_tool,
    "specht": specht_tool,
    "gram": gram_tool,
    "classify": classify_tool,
    "classify-super": classify_super_tool,
    "ideal": ideal_tool,
    "verify": verify_tool,
}


def dispatch_tool(name: str, arguments: dict[str, Any] | None = None, settings: Settings | None = None) -> dict:
    tool = TOOLS.get(name)
    if tool is None:
        raise UsageError(f"unknown command {name!r}; expected one of {sorted(TOOLS)}")
    settings = settings or load_settings()
    logger.info("running %s with %s", name, arguments)
    return tool(dict(arguments or {}), settings)


_RING = {"type": "string", "description": "ZaQ | Qaq | Qq | cyclo:e[,a=r] | gf:p,q=v,a=v | Q[:q=v,a=v]"}
_LAMBDA = {"type": "string", "description": "A composition such as 2,1"}
_N = {"type": "integer", "minimum": 0}
_ALGEBRA = {"type": "string", "enum": list(ALGEBRAS)}
_WORD = {"type": "string", "description": "Generators separated by spaces or *, e.g. T1 c2"}

TOOL_SCHEMAS = [
    {
        "name": "basis",
        "description": "Normal-form basis of H_n (T_w) or H^c_n (c-words times T_w).",
        "inputSchema": {"type": "object", "properties": {"n": _N, "algebra": _ALGEBRA}, "required": ["n"]},
    },
    {
        "name": "product",
        "description": "Product x * y of two words in the generators T<i> and c<i>, in normal form.",
        "inputSchema": {"type": "object", "properties": {
            "n": _N, "x": _WORD, "y": _WORD, "ring": _RING, "algebra": _ALGEBRA}, "required": ["n"]},
    },
    {
        "name": "specht",
        "description": "Dimension and basis of the Specht quotient S_{λ;μ} (super version with algebra=hc).",
        "inputSchema": {"type": "object", "properties": {
            "lambda": _LAMBDA, "mu": _LAMBDA, "ring": _RING, "algebra": _ALGEBRA}, "required": ["lambda"]},
    },
    {
        "name": "gram",
        "description": "Gram matrix and rank of the bilinear form on S_λ over a field.",
        "inputSchema": {"type": "object", "properties": {
            "lambda": _LAMBDA, "ring": _RING, "e": _N}, "required": ["lambda"]},
    },
    {
        "name": "classify",
        "description": "Simple modules of H_n over a field, against the e-restricted count.",
        "inputSchema": {"type": "object", "properties": {
            "n": _N, "ring": _RING, "e": _N, "jobs": _N}, "required": ["n"]},
    },
    {
        "name": "classify-super",
        "description": "Simple supermodules of H^c_n up to parity change, against the field corollaries.",
        "inputSchema": {"type": "object", "properties": {
            "n": _N, "ring": _RING, "e": _N, "jobs": _N, "queer": {"type": "boolean"}}, "required": ["n"]},
    },
    {
        "name": "ideal",
        "description": "The trace ideal J_λ (Hecke) or J^c_λ with its Δ/Θ sandwich (Hecke-Clifford).",
        "inputSchema": {"type": "object", "properties": {
            "lambda": _LAMBDA, "ring": _RING, "algebra": _ALGEBRA}, "required": ["lambda"]},
    },
    {
        "name": "verify",
        "description": "Run the ideal-filter, rigidity, Morita-context and standard-basis checks on H_n or H^c_n.",
        "inputSchema": {"type": "object", "properties": {
            "n": _N, "ring": _RING, "algebra": _ALGEBRA,
            "corrupt": {"type": "string", "enum": list(CORRUPTIONS)},
            "label": _LAMBDA, "radical": {"type": "boolean"},
            "max_triples": _N, "seed": _N, "jobs": _N}, "required": ["n"]},
    },
]
