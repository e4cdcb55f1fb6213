"""Command-line front end: ``compute``, ``verify``, ``certify`` and ``sweep``.

Every report is one JSON object per line (sorted keys, so identical inputs
give identical bytes).  ``--pretty`` prints readable polynomials instead.

Exit codes: 0 all verdicts positive, 1 a verification or certification
failed, 2 usage error, 3 enumeration cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Iterator, Sequence

from . import identities as ids
from .exact_poly import GuardError, IntPolynomial, QZPolynomial
from .realroots import is_log_concave, is_real_rooted, is_unimodal
from .words import as_multiplicities, as_s_sequence, sv_signed_s, sv_unsigned_s

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

ROUTES = {
    "signed-des": ("gf", "recurrence", "brute"),
    "unsigned-des": ("gf", "recurrence", "brute"),
    "qz-des": ("gf", "brute"),
    "macmahon": ("gf", "brute"),
    "asc-s": ("brute",),
    "sv-signed": ("gf", "recurrence", "brute"),
    "sv-unsigned": ("brute",),
}
IDENTITIES = ("equidistribution", "unsigned-equidistribution", "qz-gf", "macmahon",
              "ehrhart", "signed-gf", "chow-gessel")


class UsageError(ValueError):
    pass


# -- serialization --------------------------------------------------------------

def poly_fields(p) -> dict:
    if isinstance(p, IntPolynomial):
        return {"coeffs": [str(c) for c in p.coeffs]}
    return {"terms": [[i, j, l, str(c)] for i, j, l, c in p.terms()]}


def render_qz(p: QZPolynomial) -> str:
    parts = []
    for i, j, l, c in p.terms():
        mono = "".join(
            v if e == 1 else f"{v}^{e}" for v, e in (("t", i), ("q", j), ("z", l)) if e
        )
        body = mono if mono and abs(c) == 1 else f"{abs(c)}{mono}"
        if parts:
            parts.append(("+ " if c > 0 else "- ") + body)
        else:
            parts.append(body if c > 0 else "-" + body)
    return " ".join(parts) if parts else "0"


def render(p) -> str:
    return str(p) if isinstance(p, IntPolynomial) else render_qz(p)


def emit(report: dict, pretty: bool, out=None) -> None:
    out = out or sys.stdout
    if not pretty:
        out.write(json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n")
        return
    head = " ".join(f"{k}={v}" for k, v in sorted(report.get("input", {}).items()))
    out.write(f"[{report['command']}] {head}\n")
    for name, poly in report.get("_polys", {}).items():
        out.write(f"  {name}: {render(poly)}\n")
    for k, v in sorted(report.get("verdicts", {}).items()):
        out.write(f"  {k}: {v}\n")
    if report.get("mismatch"):
        out.write(f"  first mismatch: {report['mismatch']}\n")
    for note in report.get("notes", []):
        out.write(f"  note: {note}\n")


def _strip(report: dict) -> dict:
    return {k: v for k, v in report.items() if not k.startswith("_")}


# -- argument helpers ----------------------------------------------------------------

def _ints(values: Sequence[str] | None) -> list[int]:
    try:
        return [int(v) for v in values or []]
    except ValueError as exc:
        raise UsageError(f"expected integers, got {values}") from exc


def _vector(args) -> tuple[int, ...]:
    vals = _ints(args.values) + _ints(args.m) + _ints(args.s)
    if args.n is not None:
        vals.append(args.n)
    if not vals:
        raise UsageError("no input values given")
    return tuple(vals)


def _single_n(vals) -> int:
    if len(vals) != 1 or vals[0] < 1:
        raise UsageError(f"expected a single positive n, got {list(vals)}")
    return vals[0]


def _mult(vals):
    try:
        return as_multiplicities(vals)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _rational(x):
    if x is None:
        return None
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {x}") from exc


# -- compute -------------------------------------------------------------------------

def compute_poly(target: str, vals, route: str, max_total: int, max_product: int):
    """The polynomial for ``target`` via ``route``; returns (poly, input dict)."""
    from .realroots import brenti_chain

    if route not in ROUTES[target]:
        raise UsageError(f"route {route!r} is not available for {target}; "
                         f"choose from {', '.join(ROUTES[target])}")
    if target in ("signed-des", "unsigned-des"):
        m = _mult(vals)
        signed = target == "signed-des"
        if route == "brute":
            p = ids.descent_poly_bruteforce(m, signed, max_total)
        elif route == "recurrence":
            ids._check_total(m, max_total)
            p = brenti_chain(m, signed)[-1][1]
        elif signed:
            p = ids.signed_descent_poly_gf(m, max_total=max_total)
        else:
            p = ids.unsigned_descent_poly_gf(m, max_total=max_total)
        return p, {"m": list(m)}
    if target == "qz-des":
        m = _mult(vals)
        if route == "brute":
            return ids.qz_descent_poly_bruteforce(m, max_total), {"m": list(m)}
        return ids.qz_descent_poly_gf(m, max_total=max_total), {"m": list(m)}
    if target == "macmahon":
        m = _mult(vals)
        if route == "brute":
            return ids.macmahon_poly_bruteforce(m, max_total), {"m": list(m)}
        return ids.macmahon_poly_gf(m, max_total=max_total), {"m": list(m)}
    if target == "asc-s":
        try:
            s = as_s_sequence(vals)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        return ids.ascent_poly_bruteforce(s, max_product), {"s": list(s)}
    n = _single_n(vals)
    if target == "sv-signed":
        if route == "brute":
            p = ids.ascent_poly_bruteforce(sv_signed_s(n), max_product)
        elif route == "recurrence":
            p = ids.E_poly_recurrence(n)
        else:
            p = ids.ascent_poly_ehrhart(n)
        return p, {"n": n, "s": list(sv_signed_s(n))}
    return ids.ascent_poly_bruteforce(sv_unsigned_s(n), max_product), {
        "n": n, "s": list(sv_unsigned_s(n))}


def cmd_compute(args) -> tuple[list[dict], int]:
    if args.target not in ROUTES:
        raise UsageError(f"unknown target {args.target!r}")
    route = args.route or ROUTES[args.target][0]
    t0 = time.perf_counter()
    poly, inputs = compute_poly(args.target, _vector(args), route, args.max_total, args.max_product)
    q, z = _rational(args.q), _rational(args.z)
    if isinstance(poly, QZPolynomial) and (q is not None or z is not None):
        try:
            poly = poly.substitute(q=q, z=z)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        if q is not None:
            inputs["q"] = str(q)
        if z is not None:
            inputs["z"] = str(z)
        if q is not None and z is not None:
            poly = IntPolynomial(row.get((0, 0), 0) for row in poly.t_coeffs)
    report = {"command": "compute", "target": args.target, "route": route,
              "input": inputs, **poly_fields(poly), "_polys": {route: poly}}
    _timing(report, args, t0)
    return [report], EXIT_OK


def _timing(report, args, t0):
    if getattr(args, "timing", False):
        report["ms"] = round((time.perf_counter() - t0) * 1000, 3)


# -- verify -------------------------------------------------------------------------

def identity_report(name: str, vals, max_total: int, max_product: int) -> ids.IdentityReport:
    if name == "equidistribution":
        return ids.verify_equidistribution(_single_n(vals), max_total, max_product)
    if name == "unsigned-equidistribution":
        return ids.verify_unsigned_equidistribution(_single_n(vals), max_total, max_product)
    if name == "ehrhart":
        return ids.verify_ehrhart(_single_n(vals), max_product)
    if name == "chow-gessel":
        n = _single_n(vals)
        if n > max_total:
            raise ids.CapExceeded(f"n={n} exceeds cap {max_total}")
        return ids.verify_chow_gessel(n)
    m = _mult(vals)
    if name == "qz-gf":
        return ids.verify_qz_gf(m, max_total)
    if name == "macmahon":
        return ids.verify_macmahon(m, max_total)
    if name == "signed-gf":
        return ids.verify_signed_gf(m, max_total)
    raise UsageError(f"unknown identity {name!r}; choose from {', '.join(IDENTITIES)}")


def identity_to_dict(rep: ids.IdentityReport) -> dict:
    verdicts = {"equal": rep.equal, **rep.checks}
    return {
        "command": "verify",
        "identity": rep.identity,
        "input": rep.inputs,
        "routes": {name: poly_fields(p) for name, p in rep.routes.items()},
        "verdicts": verdicts,
        "info": rep.info,
        "mismatch": rep.mismatch,
        "notes": rep.notes,
        "_polys": dict(rep.routes),
    }


def cmd_verify(args) -> tuple[list[dict], int]:
    t0 = time.perf_counter()
    try:
        rep = identity_report(args.identity, _vector(args), args.max_total, args.max_product)
    except GuardError as exc:
        report = {"command": "verify", "identity": args.identity,
                  "verdicts": {"guard_vanishes": False}, "notes": [str(exc)]}
        return [report], EXIT_FAIL
    report = identity_to_dict(rep)
    _timing(report, args, t0)
    return [report], EXIT_OK if rep.ok else EXIT_FAIL


# -- certify ------------------------------------------------------------------------

def certify_poly(p: IntPolynomial) -> dict:
    if p.is_zero():
        raise UsageError("cannot certify the zero polynomial")
    if any(c < 0 for c in p.coeffs):
        raise UsageError("certify needs nonnegative coefficients")
    cert = is_real_rooted(p)
    return {
        "verdicts": {"real_rooted": cert.real_rooted,
                     "log_concave": is_log_concave(p),
                     "unimodal": is_unimodal(p)},
        "certificate": cert.summary(),
    }


def cmd_certify(args) -> tuple[list[dict], int]:
    t0 = time.perf_counter()
    if (args.m is None) == (args.coeffs is None):
        raise UsageError("certify needs exactly one of --m or --coeffs")
    if args.coeffs is not None:
        p = IntPolynomial(_ints(args.coeffs))
        inputs = {"coeffs": [str(c) for c in p.coeffs]}
    else:
        m = _mult(_ints(args.m))
        route = args.route or "gf"
        target = "unsigned-des" if args.unsigned else "signed-des"
        p, inputs = compute_poly(target, m, route, args.max_total, args.max_product)
        inputs.update(route=route, signed=not args.unsigned)
    report = {"command": "certify", "input": inputs, **poly_fields(p),
              **certify_poly(p), "_polys": {"polynomial": p}}
    _timing(report, args, t0)
    ok = all(report["verdicts"].values())
    return [report], EXIT_OK if ok else EXIT_FAIL


# -- sweep --------------------------------------------------------------------------

def canonical_vectors(bound: int) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing multiplicity vectors with total 1..bound."""
    def parts(n, largest):
        if n == 0:
            yield ()
            return
        for k in range(min(n, largest), 0, -1):
            for rest in parts(n - k, k):
                yield (k,) + rest

    for total in range(1, bound + 1):
        yield from parts(total, total)


def sweep_reports(bound: int, max_total: int) -> Iterator[tuple[dict, bool]]:
    for m in canonical_vectors(bound):
        t0 = time.perf_counter()
        checks = [ids.verify_qz_gf(m, max_total), ids.verify_macmahon(m, max_total),
                  ids.verify_signed_gf(m, max_total)]
        signed = checks[2].routes["signed_gf"]
        unsigned = ids.unsigned_descent_poly_gf(m, max_total=max_total)
        verdicts = {}
        for rep in checks:
            verdicts[f"{rep.identity}:equal"] = rep.equal
            for k, v in rep.checks.items():
                verdicts[f"{rep.identity}:{k}"] = v
        for label, poly in (("signed", signed), ("unsigned", unsigned)):
            for k, v in certify_poly(poly)["verdicts"].items():
                verdicts[f"{label}:{k}"] = v
        report = {"command": "sweep", "input": {"m": list(m)}, **poly_fields(signed),
                  "verdicts": verdicts, "mismatch": next((r.mismatch for r in checks if r.mismatch), None),
                  "_polys": {"signed": signed, "unsigned": unsigned}, "_t0": t0}
        yield report, all(verdicts.values())


def cmd_sweep(args) -> tuple[list[dict], int]:
    if args.bound < 1:
        raise UsageError("sweep bound must be >= 1")
    if args.bound > args.max_total:
        raise ids.CapExceeded(f"sweep bound {args.bound} exceeds cap {args.max_total}")
    reports, ok = [], True
    for report, passed in sweep_reports(args.bound, args.max_total):
        _timing(report, args, report.pop("_t0"))
        ok &= passed
        reports.append(report)
    return reports, EXIT_OK if ok else EXIT_FAIL


# -- parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-total", type=int, default=ids.DEFAULT_MAX_TOTAL,
                        help="cap on the multiset size for enumerations (default 10)")
    common.add_argument("--max-product", type=int, default=ids.DEFAULT_MAX_PRODUCT,
                        help="cap on the number of inversion sequences (default 10^7)")
    common.add_argument("--pretty", action="store_true", help="human-readable output")
    common.add_argument("--timing", action="store_true",
                        help="add wall time in ms (output is then not reproducible)")

    inputs = argparse.ArgumentParser(add_help=False)
    inputs.add_argument("--m", nargs="+", help="multiplicity vector")
    inputs.add_argument("--s", nargs="+", help="s-sequence")
    inputs.add_argument("--n", type=int)

    parser = argparse.ArgumentParser(
        prog="descentpoly",
        description="Descent polynomials of signed multipermutations and inversion sequences.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common, inputs], help="compute one polynomial")
    p.add_argument("target", choices=sorted(ROUTES))
    p.add_argument("values", nargs="*", help="m, s or n, space separated")
    p.add_argument("--route", choices=["brute", "recurrence", "gf"])
    p.add_argument("--q", help="specialize q (rational)")
    p.add_argument("--z", help="specialize z (rational)")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", parents=[common, inputs], help="check an identity across routes")
    p.add_argument("identity", choices=IDENTITIES)
    p.add_argument("values", nargs="*", help="m or n, space separated")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("certify", parents=[common], help="real-rootedness and log-concavity")
    p.add_argument("--m", nargs="+")
    p.add_argument("--coeffs", nargs="+", help="coefficients in ascending degree")
    p.add_argument("--unsigned", action="store_true", help="use unsigned permutations of m")
    p.add_argument("--route", choices=["brute", "recurrence", "gf"])
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("sweep", parents=[common], help="verify and certify all small m")
    p.add_argument("bound", type=int)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        reports, code = args.func(args)
    except UsageError as exc:
        print(f"descentpoly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ids.CapExceeded as exc:
        print(f"descentpoly: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    for report in reports:
        if args.pretty:
            emit(report, True, out)
        else:
            emit(_strip(report), False, out)
    return code


if __name__ == "__main__":
    sys.exit(main())
