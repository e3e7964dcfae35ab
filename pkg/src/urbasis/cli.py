"""Command-line interface.

Subcommands: `construct t1`, `construct t2`, `sidon`, `verify`,
`analyze blocks`, `analyze growth`. Artifacts are deterministic JSON
(decimal strings for every set-scale integer, no timestamps), each with an
embedded manifest recording the command, parameters, tool version, and the
sha256 digest of any input file, so reruns are byte-identical.

Exit codes: 0 success / all checks pass, 1 a mathematical check failed,
2 bad usage or unreadable input, 3 an internal invariant or resource cap
tripped. Set URB_LOG=quiet|info|debug to control stderr logging.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import logging
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Tuple

from urbasis import __version__
from urbasis.analysis import (
    FOUR_SQRT_SEVEN,
    block_counts,
    check_block_inequalities,
    growth_report,
    liminf_probe,
    nathanson_ok,
)
from urbasis.construct_t1 import build_t1, log_grid
from urbasis.construct_t2 import DEFAULT_MAX_SIDON_PRIME, build_t2
from urbasis.errors import (
    BuildInfeasible,
    DensityShortfall,
    InputError,
    InvariantViolation,
)
from urbasis.intset import IntSet, is_sidon, is_unique_basis_prefix
from urbasis.sidon import Method, bose_chowla, erdos_turan, mian_chowla

log = logging.getLogger("urbasis")

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _setup_logging() -> None:
    levels = {"quiet": logging.WARNING, "info": logging.INFO, "debug": logging.DEBUG}
    name = os.environ.get("URB_LOG", "quiet").strip().lower()
    logging.basicConfig(
        stream=sys.stderr,
        level=levels.get(name, logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
    )
    if name and name not in levels:
        log.warning("unknown URB_LOG=%r, defaulting to quiet", name)


def _strs(values) -> List[str]:
    return [str(v) for v in values]


def _manifest(command: str, parameters: dict, input_digest: Optional[str], outputs: List[str]) -> dict:
    return {
        "command": command,
        "parameters": {k: "" if v is None else str(v) for k, v in parameters.items()},
        "tool_version": __version__,
        "input_digest": input_digest,
        "outputs": outputs,
    }


def _emit(payload: dict, out: Optional[str]) -> None:
    text = json.dumps(payload, separators=(",", ":"), sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
        log.info("wrote %s (%d bytes)", out, len(text))
    else:
        sys.stdout.write(text)


def _load_set(path: str) -> Tuple[IntSet, str]:
    """Read a set from a file, sniffing the format.

    Accepts a construction artifact (the final stage is taken), a bare JSON
    array of decimal strings, or a line format (one integer per line, '#'
    comments).
    """
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    digest = hashlib.sha256(data).hexdigest()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InputError(f"{path} is not UTF-8 text: {exc}") from exc
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: invalid JSON: {exc}") from exc
        if isinstance(obj.get("stages"), list) and obj["stages"]:
            elements = obj["stages"][-1].get("elements")
        else:
            elements = obj.get("elements")
        if not isinstance(elements, list):
            raise InputError(f"{path}: artifact has no element list")
        try:
            return IntSet(int(e) for e in elements), digest
        except (TypeError, ValueError) as exc:
            raise InputError(f"{path}: non-integer element: {exc}") from exc
    if stripped.startswith("["):
        return IntSet.from_json(text), digest
    return IntSet.from_lines(text), digest


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a fraction: {text!r}") from exc


def _parse_grid(spec: str) -> List[int]:
    """Grid spec 'log:LO:HI:STEPS' -> deduplicated integer log grid."""
    parts = spec.split(":")
    if len(parts) != 4 or parts[0] != "log":
        raise InputError(f"grid must look like log:LO:HI:STEPS, got {spec!r}")
    try:
        lo, hi, steps = int(parts[1]), int(parts[2]), int(parts[3])
    except ValueError as exc:
        raise InputError(f"non-integer grid bound in {spec!r}") from exc
    return log_grid(lo, hi, steps)


# --- subcommand handlers ----------------------------------------------------


def _cmd_construct_t1(args: argparse.Namespace) -> int:
    result = build_t1(args.stages, grid_points=args.grid_points)
    for st in result.stages:
        a = abs(st.a_star)
        log.info(
            "h=%-3d |A|=%-6d a*=%-22d count/a*^(1/3)=%.3f",
            st.h, len(st.set), st.a_star, len(st.set) / a ** (1 / 3),
        )
    stages = []
    for st in result.stages:
        audit = None
        if st.audit is not None:
            audit = {
                "m": str(st.audit.repair.m),
                "b": str(st.audit.repair.b),
                "b_tilde": None
                if st.audit.repair.b_tilde is None
                else str(st.audit.repair.b_tilde),
                "greedy": _strs(st.audit.greedy_additions),
            }
        stages.append(
            {
                "h": st.h,
                "elements": _strs(st.set.elements),
                "a_star": str(st.a_star),
                "audit": audit,
            }
        )
    payload = {
        "theorem": "1",
        "stages": stages,
        "samples": [
            {"x": str(s.x), "count": s.count, "ok": s.ok} for s in result.samples
        ],
        "x0": None if result.x0 is None else str(result.x0),
        "manifest": _manifest(
            "construct t1",
            {"stages": args.stages, "grid_points": args.grid_points},
            None,
            [args.out] if args.out else [],
        ),
    }
    _emit(payload, args.out)
    return EXIT_OK


def _cmd_construct_t2(args: argparse.Namespace) -> int:
    epsilon = _parse_fraction(args.epsilon)
    cap = None if args.max_sidon_prime == 0 else args.max_sidon_prime
    result = build_t2(args.rounds, epsilon, max_sidon_prime=cap)
    for st in result.stages:
        log.info("stage %-3d |A|=%-6d span=[%d, %d]", st.index, len(st.set),
                 st.set.min(), st.set.max())
    stages = []
    for st in result.stages:
        repair = None
        if st.repair is not None:
            repair = {
                "m": str(st.repair.m),
                "b": str(st.repair.b),
                "b_tilde": None if st.repair.b_tilde is None else str(st.repair.b_tilde),
            }
        densify = None
        if st.densify is not None:
            densify = {
                "y": str(st.densify.y),
                "S_size": st.densify.s_size,
                "S_star_size": st.densify.s_star_size,
                "pruned_pairs": st.densify.pruned_pairs,
                "sidon_prime": st.densify.sidon_prime,
            }
        stages.append(
            {
                "index": st.index,
                "elements": _strs(st.set.elements),
                "repair": repair,
                "densify": densify,
            }
        )
    payload = {
        "theorem": "2",
        "epsilon": str(result.epsilon),
        "stages": stages,
        "x_ladder": _strs(result.x_ladder),
        "manifest": _manifest(
            "construct t2",
            {
                "rounds": args.rounds,
                "epsilon": args.epsilon,
                "max_sidon_prime": args.max_sidon_prime,
            },
            None,
            [args.out] if args.out else [],
        ),
    }
    _emit(payload, args.out)
    return EXIT_OK


_SIDON_METHODS = {
    "bose": lambda p: bose_chowla(p),
    "erdos-turan": lambda p: erdos_turan(p),
    "greedy": lambda p: mian_chowla(p),
}


def _cmd_sidon(args: argparse.Namespace) -> int:
    result = _SIDON_METHODS[args.method](args.param)
    payload = {
        "method": result.method.value,
        "param": result.param,
        "n_bound": str(result.n_bound),
        "cardinality": result.cardinality,
        "density_gap": result.density_gap,
        "elements": _strs(result.set.elements),
        "manifest": _manifest(
            "sidon",
            {"method": args.method, "param": args.param},
            None,
            [args.out] if args.out else [],
        ),
    }
    _emit(payload, args.out)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    A, digest = _load_set(args.input)
    log.info("verifying %d elements from %s", len(A), args.input)
    checks = {}
    ok = True

    if args.sidon:
        report = is_sidon(A)
        checks["sidon"] = {
            "ok": report.ok,
            "violation": None
            if report.violation is None
            else {
                "n": str(report.violation.n),
                "first": _strs(report.violation.first),
                "second": _strs(report.violation.second),
            },
        }
        ok = ok and report.ok
    else:
        h = args.unique_up_to if args.unique_up_to is not None else 0
        report = is_unique_basis_prefix(A, h)
        checks["unique"] = {
            "ok": report.ok,
            "H": h,
            "failure_kind": report.failure_kind,
            "counterexample": None
            if report.counterexample is None
            else str(report.counterexample),
        }
        ok = ok and report.ok
        nat_ok, violation = nathanson_ok(A)
        checks["nathanson"] = {
            "ok": nat_ok,
            "violation": None if violation is None else _strs(violation),
        }
        ok = ok and nat_ok

    payload = {
        "input": args.input,
        "cardinality": len(A),
        "checks": checks,
        "ok": ok,
        "manifest": _manifest(
            "verify",
            {"sidon": args.sidon, "unique_up_to": args.unique_up_to},
            digest,
            [args.out] if args.out else [],
        ),
    }
    _emit(payload, args.out)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _cmd_analyze_blocks(args: argparse.Namespace) -> int:
    A, digest = _load_set(args.input)
    profile = block_counts(A, args.n)
    report = check_block_inequalities(profile)
    probe = liminf_probe(A, args.n) if args.n >= 2 else None
    threshold = FOUR_SQRT_SEVEN + args.delta
    probe_ok = None if probe is None else probe < threshold
    ok = report.all_ok and report.cauchy_chain_ok and probe_ok is not False
    for c in report.checks:
        log.info("%-20s lhs=%-10d bound=%-10d %s", c.name, c.lhs, c.bound,
                 "ok" if c.ok else "FAIL")
    payload = {
        "n": args.n,
        "N": list(profile.N),
        "M": list(profile.M),
        "checks": [
            {"name": c.name, "lhs": c.lhs, "bound": c.bound, "ok": c.ok}
            for c in report.checks
        ],
        "cauchy_chain_ok": report.cauchy_chain_ok,
        "liminf_probe": probe,
        "probe_threshold": threshold,
        "probe_ok": probe_ok,
        "ok": ok,
        "manifest": _manifest(
            "analyze blocks",
            {"n": args.n, "delta": args.delta},
            digest,
            [args.out] if args.out else [],
        ),
    }
    _emit(payload, args.out)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _cmd_analyze_growth(args: argparse.Namespace) -> int:
    A, digest = _load_set(args.input)
    grid = _parse_grid(args.grid)
    report = growth_report(A, grid)
    nat_ok, violation = nathanson_ok(A)
    rows = [
        {
            "x": str(s.x),
            "count": s.count,
            "per_cbrt": s.per_cbrt,
            "per_sqrt": s.per_sqrt,
            "slack": s.slack,
        }
        for s in report.samples
    ]
    for s in report.samples:
        log.info("x=%-14s count=%-8d count/x^(1/3)=%-8.3f count/sqrt(x)=%-8.3f slack=%.3f",
                 s.x, s.count, s.per_cbrt, s.per_sqrt, s.slack)
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            writer = csv.DictWriter(
                fh, fieldnames=["x", "count", "per_cbrt", "per_sqrt", "slack"]
            )
            writer.writeheader()
            writer.writerows(rows)
    outputs = [p for p in (args.out, args.csv) if p]
    payload = {
        "samples": rows,
        "cA_estimate": report.cA_estimate,
        "nathanson_ok": nat_ok,
        "nathanson_violation": None if violation is None else _strs(violation),
        "manifest": _manifest(
            "analyze growth",
            {"grid": args.grid, "csv": args.csv},
            digest,
            outputs,
        ),
    }
    _emit(payload, args.out)
    return EXIT_OK if nat_ok else EXIT_CHECK_FAILED


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="urbasis",
        description="construct and verify unique representation bases of the integers",
    )
    parser.add_argument("--version", action="version", version=f"urbasis {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="run an inductive construction")
    which = construct.add_subparsers(dest="theorem", required=True)

    t1 = which.add_parser("t1", help="x^(1/3)/8 growth construction")
    t1.add_argument("--stages", type=int, required=True, help="number of stages to build")
    t1.add_argument("--grid-points", type=int, default=200, help="growth sample grid size")
    t1.add_argument("--out", help="artifact path (default: stdout)")
    t1.set_defaults(handler=_cmd_construct_t1)

    t2 = which.add_parser("t2", help="(sqrt(2)/2 - eps) sqrt(x) construction")
    t2.add_argument("--rounds", type=int, required=True, help="number of rounds to build")
    t2.add_argument("--epsilon", required=True, help="exact fraction, e.g. 1/10")
    t2.add_argument(
        "--max-sidon-prime",
        type=int,
        default=DEFAULT_MAX_SIDON_PRIME,
        help="largest Sidon-block prime to attempt (0 = uncapped)",
    )
    t2.add_argument("--out", help="artifact path (default: stdout)")
    t2.set_defaults(handler=_cmd_construct_t2)

    sidon = sub.add_parser("sidon", help="build a finite Sidon set")
    sidon.add_argument(
        "--method", choices=sorted(_SIDON_METHODS), required=True
    )
    sidon.add_argument(
        "--param", type=int, required=True, help="prime q/p, or count for greedy"
    )
    sidon.add_argument("--out", help="artifact path (default: stdout)")
    sidon.set_defaults(handler=_cmd_sidon)

    verify = sub.add_parser("verify", help="check r <= 1 (or the Sidon property) on a set")
    verify.add_argument("--input", required=True, help="set file (artifact, JSON array, or lines)")
    verify.add_argument(
        "--unique-up-to",
        type=int,
        default=None,
        metavar="H",
        help="additionally require r(n) = 1 for |n| <= H",
    )
    verify.add_argument(
        "--sidon", action="store_true", help="check the Sidon property instead"
    )
    verify.add_argument("--out", help="report path (default: stdout)")
    verify.set_defaults(handler=_cmd_verify)

    analyze = sub.add_parser("analyze", help="block profiles and growth reports")
    what = analyze.add_subparsers(dest="analysis", required=True)

    blocks = what.add_parser("blocks", help="block counts and the five inequalities")
    blocks.add_argument("--input", required=True)
    blocks.add_argument("--n", type=int, required=True, help="block width / count")
    blocks.add_argument(
        "--delta",
        type=float,
        default=0.42,
        help="probe margin: compare against 4*sqrt(7) + delta",
    )
    blocks.add_argument("--out", help="report path (default: stdout)")
    blocks.set_defaults(handler=_cmd_analyze_blocks)

    growth = what.add_parser("growth", help="counting-function growth over a grid")
    growth.add_argument("--input", required=True)
    growth.add_argument(
        "--grid", required=True, help="sample grid, e.g. log:1:1000000:50"
    )
    growth.add_argument("--csv", help="also write samples as CSV")
    growth.add_argument("--out", help="report path (default: stdout)")
    growth.set_defaults(handler=_cmd_analyze_growth)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    _setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BuildInfeasible as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        if exc.required_prime is not None:
            print(
                f"infeasible: would need a Sidon prime of about {exc.required_prime}",
                file=sys.stderr,
            )
        return EXIT_INTERNAL
    except (InvariantViolation, DensityShortfall) as exc:
        print(f"internal: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
