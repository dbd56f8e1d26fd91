"""
Command-line front end: bases, products, Specht quotients, Gram ranks, ideal
data, classification tables and the axiom checks, as JSON on stdout (or
tables with --format text). Logs go to stderr.

Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 size cap
exceeded, 4 internal invariant violation.
"""
import argparse
import json
import logging
import sys

import pandas as pd

from hecke_cellular.mcp_tools.cellular_tools import CORRUPTIONS, dispatch_tool
from hecke_cellular.resources.errors import InvariantViolation, RingError, ShapeError, SizeCapExceeded, UsageError
from hecke_cellular.resources.tools import load_settings

logger = logging.getLogger("hecke_cellular")

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_SIZE, EXIT_INVARIANT = 0, 1, 2, 3, 4


def configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format="%(asctime)s [%(levelname)s] %(message)s",
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hecke-cellular",
                                     description="Exact computations in Hecke and Hecke-Clifford algebras")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", type=str, help="ZaQ | Qaq | Qq | cyclo:e[,a=r] | gf:p,q=v,a=v | Q[:q=v,a=v]")
    common.add_argument("--e", type=int, help="shorthand for --ring cyclo:e")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--allow-large", action="store_true", help="ignore the configured size caps")
    common.add_argument("--log-level", type=str, help="overrides HECKE_CELLULAR_LOG_LEVEL")
    algebra = argparse.ArgumentParser(add_help=False)
    algebra.add_argument("--algebra", choices=("hecke", "hc"), default="hecke")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", parents=[common, algebra], help="normal-form basis")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("product", parents=[common, algebra], help="product of two generator words")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=str, default="1", help="e.g. 'T1 c2'")
    p.add_argument("--y", type=str, default="1")

    p = sub.add_parser("specht", parents=[common, algebra], help="Specht quotient S_{λ;μ}")
    p.add_argument("--lambda", dest="lam", type=str, required=True)
    p.add_argument("--mu", type=str)

    p = sub.add_parser("gram", parents=[common], help="Gram matrix of S_λ")
    p.add_argument("--lambda", dest="lam", type=str, required=True)

    for name, text in (("classify", "simple modules of H_n"),
                       ("classify-super", "simple supermodules of H^c_n up to parity")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--jobs", type=int, help="worker processes across partitions")
        if name == "classify-super":
            p.add_argument("--queer", action="store_true", help="add the queer q-Schur count")

    p = sub.add_parser("ideal", parents=[common, algebra], help="trace ideal data of λ")
    p.add_argument("--lambda", dest="lam", type=str, required=True)

    p = sub.add_parser("verify", parents=[common, algebra], help="axiom checks on H_n or H^c_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--corrupt", choices=CORRUPTIONS)
    p.add_argument("--label", type=str, help="label for --corrupt flip-rho / drop-module")
    p.add_argument("--radical", action="store_true", help="cross-check simple counts with the radical oracle (gf rings)")
    p.add_argument("--max-triples", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int)
    return parser


def _arguments(args: argparse.Namespace) -> dict:
    skip = {"command", "format", "log_level"}
    out = {}
    for key, value in vars(args).items():
        if key in skip or value is None or value is False:
            continue
        out["lambda" if key == "lam" else key] = value
    return out


def to_text(result: dict) -> str:
    """Human-readable rendering: tables through pandas, everything else as key: value lines."""
    lines = []
    tables = []
    for key, value in result.items():
        if key in ("rows", "layers") and value:
            frame = pd.DataFrame(value)
            if "lambda" in frame:
                frame["lambda"] = frame["lambda"].map(lambda lam: ",".join(map(str, lam)))
            if "label" in frame:
                frame["label"] = frame["label"].map(lambda lam: ",".join(map(str, lam)))
            tables.append(frame.to_string(index=False))
        elif key == "reports":
            frame = pd.DataFrame([{"axiom": r.get("axiom", r.get("check")), "status": r["status"],
                                   "witness": json.dumps(r.get("witness"), ensure_ascii=False)
                                   if r.get("witness") else ""} for r in value])
            tables.append(frame.to_string(index=False))
        elif key in ("basis", "matrix") and isinstance(value, list):
            lines.append(f"{key}:")
            lines.extend(f"  {row if not isinstance(row, list) else '  '.join(row)}" for row in value)
        elif key != "terms":
            lines.append(f"{key}: {value if not isinstance(value, (dict, list)) else json.dumps(value, ensure_ascii=False)}")
    return "\n".join(lines + tables)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    try:
        settings = load_settings()
    except UsageError as exc:
        print(f"hecke-cellular: configuration error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    configure_logging(args.log_level or settings.log_level)
    try:
        result = dispatch_tool(args.command, _arguments(args), settings)
    except (UsageError, RingError, ShapeError) as exc:
        logger.error("%s: %s", args.command, exc)
        print(f"hecke-cellular {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeCapExceeded as exc:
        logger.error("%s: %s", args.command, exc)
        print(f"hecke-cellular {args.command}: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except InvariantViolation as exc:
        logger.exception("%s: internal invariant violated", args.command)
        print(f"hecke-cellular {args.command}: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT

    if args.format == "text":
        print(to_text(result))
    else:
        print(json.dumps(result, ensure_ascii=False, indent=2))
    return EXIT_FAILED if result.get("status") == "fail" else EXIT_OK


def run_app():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    run_app()
