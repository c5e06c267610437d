"""Command-line interface.

    realwaring decompose --poly "x^5 + 10*x^4*y + ..." [--json]
    realwaring family    --poly ... --params 0,2
    realwaring check     --poly ... --params 1,0 [--strict]
    realwaring search    --poly ... --grid "1,2;3,4"

Exit status: 0 on success, 1 on domain errors (zero form, inadmissible
parameters, failed verification), 2 on usage and parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .binform import BinaryForm, effective_length, from_raw_coeffs, format_poly
from .delta import point_length
from .errors import DimensionError, ParseError, WaringError
from .exactnum import format_rational, to_rational
from .params import in_G, is_suitable
from .parser import parse_poly
from .rwd import RwdResult, decompose, decompose_with_params, search_shorter


class UsageError(Exception):
    pass


def _rational_list(text: str) -> list:
    try:
        return [to_rational(v) for v in text.split(",") if v.strip()]
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational list {text!r}: {exc}") from None


def _read_form(args) -> BinaryForm:
    if args.poly is not None:
        if args.convention is not None:
            raise UsageError("--convention only applies to --coeffs")
        return parse_poly(args.poly)
    if args.convention is None:
        raise UsageError("--coeffs requires an explicit --convention raw|cvec")
    coeffs = _rational_list(args.coeffs)
    if len(coeffs) < 2:
        raise UsageError("--coeffs needs at least two entries")
    if args.convention == "raw":
        return from_raw_coeffs(coeffs)
    return BinaryForm.from_cvec(coeffs)


def result_to_dict(res: RwdResult) -> dict:
    params = res.params
    fmt = format_rational
    if params is None:
        trace = {"m": None, "bounds": {}, "escalations": 0}
        s, delta = [], 0
    else:
        tr = params.trace
        trace = {
            "m": None if tr.m is None else fmt(tr.m),
            "bounds": {k: fmt(v) for k, v in tr.bounds.items()},
            "escalations": tr.escalations,
        }
        s, delta = [fmt(v) for v in params.s], params.delta
    return {
        "degree": res.form.degree,
        "parity": res.form.parity,
        "delta": delta,
        "params": s,
        "R": [fmt(v) for v in res.r_pair],
        "terms": [
            {"lambda": fmt(t.coeff), "form": [fmt(t.form.alpha), fmt(t.form.beta)]}
            for t in res.decomposition.terms
        ],
        "effective_length": effective_length(res.decomposition),
        "verified": res.verified,
        "trace": trace,
    }


def _result_text(res: RwdResult, verify: bool) -> str:
    lines = [f"p = {res.form}"]
    if res.params is not None:
        lines.append("params: (" + ", ".join(map(format_rational, res.params.s))
                     + f")  delta = {res.params.delta}")
    lines.append("p =")
    for t in res.decomposition.terms:
        lines.append(f"  {format_rational(t.coeff)} * ({t.form})^{res.form.degree}")
    lines.append(f"effective length: {res.effective_length}")
    if verify:
        lines.append("verified: " + ("yes" if res.verified else "NO (expansion mismatch)"))
    return "\n".join(lines)


def _check(form: BinaryForm, params: list, strict: bool) -> dict:
    nu = point_length(form.degree)
    if len(params) not in (nu, nu + 1):
        raise UsageError(f"degree {form.degree} needs {nu} or {nu + 1} parameters, "
                         f"got {len(params)}")
    g = in_G(form, params[:nu])
    out = {
        "degree": form.degree,
        "parity": form.parity,
        "point": [format_rational(v) for v in params[:nu]],
        "in_G": {"ok": g.ok, "reasons": g.reasons},
        "suitable": None,
    }
    if len(params) == nu + 1:
        su = is_suitable(form, params, strict=strict)
        out["suitable"] = {"ok": su.ok, "strict": strict, "reasons": su.reasons}
    return out


def _check_text(rep: dict) -> str:
    lines = ["point: (" + ", ".join(rep["point"]) + ")"]
    g = rep["in_G"]
    lines.append("in G: " + ("yes" if g["ok"] else "no"))
    lines += [f"  - {r}" for r in g["reasons"]]
    su = rep["suitable"]
    if su is not None:
        kind = "strict" if su["strict"] else "non-strict"
        lines.append(f"suitable ({kind}): " + ("yes" if su["ok"] else "no"))
        lines += [f"  - {r}" for r in su["reasons"]]
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--poly", help='homogeneous polynomial, e.g. "3*x^2*y + y^3"')
    src.add_argument("--coeffs", help="comma-separated coefficients c0,...,cd")
    common.add_argument("--convention", choices=("raw", "cvec"),
                        help="raw: coefficient of x^i*y^(d-i); cvec: binomial-scaled c_i")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--no-verify", dest="verify", action="store_false",
                        help="do not fail on an expansion mismatch")
    common.add_argument("--out", help="write output to FILE instead of stdout")

    parser = argparse.ArgumentParser(
        prog="realwaring",
        description="Exact real Waring decompositions of real binary forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("decompose", parents=[common], help="run the parameter-selecting algorithm")
    fam = sub.add_parser("family", parents=[common], help="decompose at a given parameter point")
    fam.add_argument("--params", required=True, help="parameter point r1,...,r_nu")
    chk = sub.add_parser("check", parents=[common],
                         help="test a point for admissibility (and a full vector for suitability)")
    chk.add_argument("--params", required=True)
    chk.add_argument("--strict", action="store_true",
                     help="verbatim even-degree suitability (forbids s* = 0)")
    srch = sub.add_parser("search", parents=[common], help="shortest decomposition over a grid")
    srch.add_argument("--grid", required=True, help='points separated by ";", e.g. "1,2;3,4"')
    srch.add_argument("--include-algorithm", action="store_true",
                      help="also consider the algorithm's own parameter choice")
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        form = _read_form(args)
        if args.command == "check":
            rep = _check(form, _rational_list(args.params), args.strict)
            text = json.dumps(rep, indent=2) if args.json else _check_text(rep)
            _emit(text, args.out)
            return 0
        if args.command == "decompose":
            res = decompose(form)
        elif args.command == "family":
            res = decompose_with_params(form, _rational_list(args.params))
        else:
            grid = [_rational_list(chunk) for chunk in args.grid.split(";") if chunk.strip()]
            if not grid:
                raise UsageError("--grid is empty")
            res = search_shorter(form, grid, include_algorithm=args.include_algorithm)
    except (UsageError, ParseError, DimensionError) as exc:
        print(f"realwaring: error: {exc}", file=sys.stderr)
        return 2
    except WaringError as exc:
        print(f"realwaring: {exc}", file=sys.stderr)
        return 1

    if args.json:
        text = json.dumps(result_to_dict(res), indent=2)
    else:
        text = _result_text(res, args.verify)
    _emit(text, args.out)
    if args.verify and not res.verified:
        print("realwaring: expansion does not reproduce the input form", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())
