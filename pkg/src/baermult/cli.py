"""Command-line front end.

Exit codes: 0 success, 1 a verify suite failed, 2 hypothesis failure,
3 resource guard refused, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Sequence

from .arith import witt_chi
from .capability import capability_hypotheses, is_capable, verbal_center_descriptor
from .commutators import generate_basic
from .groups import Check, GroupSpec, HypothesisError, failed, parse_group
from .hall import ResourceLimitError
from .multiplier import multiplier_structure, validate_hypotheses
from .suites import SUITES, run_suites

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_HYPOTHESIS = 2
EXIT_RESOURCE = 3
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class Invocation:
    subcommand: str
    params: dict = field(default_factory=dict)
    format: str = "text"


def _torsion(text: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"torsion must be comma-separated integers, got {text!r}")
    if any(v < 2 for v in values):
        raise argparse.ArgumentTypeError(f"torsion orders must be >= 2, got {text!r}")
    return values


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _nonnegative(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _group_args(p: argparse.ArgumentParser, need_c: bool = True) -> None:
    p.add_argument("--group", help='compact form, e.g. "Z^2 * Z11 @ n=2"')
    p.add_argument("--m", type=_nonnegative, help="number of infinite cyclic factors")
    p.add_argument("--torsion", type=_torsion, default=None, help="r_1,...,r_t")
    p.add_argument("--n", type=_positive, help="degree of the nilpotent product")
    if need_c:
        p.add_argument("--c1", type=_positive, required=True)
        p.add_argument("--c2", type=_positive, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="baermult", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("witt", help="number of basic commutators of a weight")
    p.add_argument("--weight", type=_positive, required=True)
    p.add_argument("--alphabet", type=_nonnegative, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("basis", help="list basic commutators in Hall order")
    p.add_argument("--alphabet", type=_positive, required=True)
    p.add_argument("--min-weight", type=_positive, default=1)
    p.add_argument("--max-weight", type=_positive, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("mult", help="outer commutator multiplier structure")
    _group_args(p)
    p.add_argument("--mode", choices=("enumerated", "printed", "both"), default="enumerated")

    p = sub.add_parser("capable", help="capability verdict")
    _group_args(p)

    p = sub.add_parser("verify", help="run the oracle suites")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--cap", type=_positive, default=4)
    p.add_argument("--alphabet", type=_positive, default=2)
    p.add_argument("--samples", type=_positive, default=1000)
    p.add_argument("--max-weight", type=_positive, default=10)
    p.add_argument("--max-alphabet", type=_positive, default=3)
    p.add_argument("--max-top", type=_positive, default=7)
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def parse_args(argv: Sequence[str]) -> Invocation:
    ns = build_parser().parse_args(list(argv))
    params = {k: v for k, v in vars(ns).items() if k not in ("subcommand", "format")}
    if ns.subcommand in ("mult", "capable"):
        group = params.pop("group")
        if group is not None:
            if any(params[k] is not None for k in ("m", "torsion", "n")):
                raise UsageError("--group cannot be combined with --m/--torsion/--n")
            try:
                spec = parse_group(group)
            except ValueError as exc:
                raise UsageError(str(exc))
        else:
            if params["m"] is None:
                raise UsageError("--m (or --group) is required")
            try:
                spec = GroupSpec(params["m"], params["torsion"] or (), params["n"] or 1)
            except ValueError as exc:
                raise UsageError(str(exc))
        for k in ("m", "torsion", "n"):
            params.pop(k)
        params["spec"] = spec
    return Invocation(ns.subcommand, params, ns.format)


def _emit(payload: dict, fmt: str, text: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(text + "\n")


def _hypothesis_failure(inv: Invocation, checks: list[Check]) -> int:
    spec = inv.params["spec"]
    payload = {
        "spec": {**spec.to_dict(), "c1": str(inv.params["c1"]), "c2": str(inv.params["c2"])},
        "hypotheses": [c.to_dict() for c in checks],
        "error": "hypothesis failure",
    }
    lines = [f"hypothesis failure for {spec} (c1={inv.params['c1']}, c2={inv.params['c2']}):"]
    lines += [f"  {c.name}: {c.detail}" for c in failed(checks)]
    _emit(payload, inv.format, "\n".join(lines))
    print(f"baermult: {len(failed(checks))} hypothesis check(s) failed", file=sys.stderr)
    return EXIT_HYPOTHESIS


def _report_text(d: dict) -> str:
    def struct(s):
        parts = [f"Z^{s['free_rank']}"] + [
            f"Z_{t['modulus']}^{t['multiplicity']}" for t in s["torsion"]
        ]
        return " + ".join(parts)

    spec = d["spec"]
    lines = [
        f"group       m={spec['m']} torsion=({','.join(spec['torsion'])}) n={spec['n']}",
        f"variety     [N_{spec['c1']}, N_{spec['c2']}]",
        f"mode        {d['mode']}",
    ]
    for c in d["hypotheses"]:
        lines.append(f"  {'ok ' if c['passed'] else 'BAD'} {c['name']:<20} {c['detail']}")
    if "result" in d:
        lines.append(f"enumerated  {struct(d['result'])}   (normative)")
    if "as_printed" in d:
        lines.append(f"as printed  {struct(d['as_printed'])}")
    for row in d.get("discrepancies", []):
        flag = "DIFFERS" if row["differs"] else "agrees"
        lines.append(
            f"  {row['field']:<20} enumerated={row['enumerated']:>12} "
            f"as_printed={row['as_printed']:>12}  {flag}"
        )
    return "\n".join(lines)


def run(inv: Invocation) -> int:
    p = inv.params
    try:
        if inv.subcommand == "witt":
            value = witt_chi(p["weight"], p["alphabet"])
            _emit({"weight": str(p["weight"]), "alphabet": str(p["alphabet"]), "value": str(value)},
                  inv.format, str(value))
            return EXIT_OK

        if inv.subcommand == "basis":
            if p["min_weight"] > p["max_weight"]:
                raise UsageError("--min-weight exceeds --max-weight")
            items = generate_basic(p["alphabet"], p["min_weight"], p["max_weight"])
            payload = {"alphabet": str(p["alphabet"]),
                       "basis": [{"weight": str(c.weight), "commutator": str(c)} for c in items]}
            _emit(payload, inv.format, "\n".join(f"{c.weight}  {c}" for c in items))
            return EXIT_OK

        if inv.subcommand == "mult":
            spec, c1, c2 = p["spec"], p["c1"], p["c2"]
            checks = validate_hypotheses(spec, c1, c2)
            if failed(checks):
                return _hypothesis_failure(inv, checks)
            payload = multiplier_structure(spec, c1, c2, p["mode"]).to_dict()
            _emit(payload, inv.format, _report_text(payload))
            return EXIT_OK

        if inv.subcommand == "capable":
            spec, c1, c2 = p["spec"], p["c1"], p["c2"]
            checks = capability_hypotheses(spec, c1, c2)
            if failed(checks):
                return _hypothesis_failure(inv, checks)
            verdict = is_capable(spec, c1, c2)
            desc = verbal_center_descriptor(spec.with_degree(c1 + c2 + 1 + spec.n), c1, c2)
            payload = {
                "spec": {**spec.to_dict(), "c1": str(c1), "c2": str(c2)},
                "hypotheses": [c.to_dict() for c in checks],
                "verdict": verdict.verdict,
                "witness": verdict.witness,
                "marginal_subgroup": desc.to_dict(),
            }
            text = f"{verdict.verdict} ({verdict.witness}); V*(H) = {desc}"
            if desc.note:
                text += f"  [{desc.note}]"
            _emit(payload, inv.format, text)
            return EXIT_OK

        if inv.subcommand == "verify":
            names = SUITES if p["suite"] == "all" else (p["suite"],)
            results = run_suites(
                names, alphabet=p["alphabet"], cap=p["cap"], samples=p["samples"],
                max_weight=p["max_weight"], max_alphabet=p["max_alphabet"], max_top=p["max_top"],
            )
            ok = all(r.passed for r in results)
            _emit({"suites": [r.to_dict() for r in results], "passed": ok},
                  inv.format, "\n".join(r.line() for r in results))
            return EXIT_OK if ok else EXIT_VERIFY
    except HypothesisError as exc:
        return _hypothesis_failure(inv, exc.checks) if "spec" in p else _fail(str(exc), EXIT_HYPOTHESIS)
    except ResourceLimitError as exc:
        return _fail(f"resource guard: {exc}", EXIT_RESOURCE)
    except UsageError as exc:
        return _fail(str(exc), EXIT_USAGE)
    raise AssertionError(f"unhandled subcommand {inv.subcommand}")


def _fail(message: str, code: int) -> int:
    print(f"baermult: {message}", file=sys.stderr)
    return code


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        inv = parse_args(argv)
    except UsageError as exc:
        return _fail(f"usage error: {exc}", EXIT_USAGE)
    return run(inv)


if __name__ == "__main__":
    sys.exit(main())
