"""Command line front end.

Four subcommands:

* ``table``: compute a multiplier polynomial (plain, rescaled, or its
  resultant against a cyclotomic polynomial) and emit it as canonical
  JSON and/or CSV.
* ``polygon``: Newton polygon vertex data of iterates, as JSON.
* ``verify``: run the identity check suites and print one verdict per
  line; optionally write a JSON report.
* ``parabolic``: classify rational parameters by the behaviour of
  their periodic cycles.

Exit status: 0 on success, 1 when a verify suite has a failing
verdict, 2 on usage errors, 3 when a computation hits the degree
guardrail without ``--allow-large``.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time
from fractions import Fraction

from .errors import GuardrailExceeded
from .families import (
    KINDS,
    Family,
    conjugacy_check,
    multiplier_poly,
    multiplier_via_product,
)
from . import invariants as inv
from . import newton
from .invariants import lift_to_x
from .numtheory import cyclotomic, divisors
from .parabolic import classify, classify_logistic, enumerate_candidates
from .polycore import IntPoly
from .report import Report, Verdict
from .resultants import resultant
from .serialize import encode_csv, encode_json


def _write_or_print(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)
        print("wrote %s" % path)


# ---------------------------------------------------------------------------
# table


def cmd_table(args: argparse.Namespace) -> int:
    fam = Family(args.family, args.d)
    res = multiplier_poly(fam, args.m, allow_large=args.allow_large)
    if args.resultant is not None:
        obj = resultant(lift_to_x(cyclotomic(args.resultant), "c"), res.delta)
    elif args.rescaled:
        try:
            scaled = res.delta.scale_c(IntPoly.const(res.scale))
            obj, sign = inv.rescale_extract(scaled, fam)
        except ValueError as exc:
            print("error: %s" % exc, file=sys.stderr)
            return 2
        if res.scale != 1:
            print("# scaled by %d before rescaling" % res.scale,
                  file=sys.stderr)
        print("# leading sign in the rescaled variable: %s" % sign,
              file=sys.stderr)
    else:
        obj = res.delta
    stem = args.out
    if args.format in ("json", "both"):
        _write_or_print(encode_json(obj),
                        None if stem is None else stem + ".json")
    if args.format in ("csv", "both"):
        _write_or_print(encode_csv(obj),
                        None if stem is None else stem + ".csv")
    return 0


# ---------------------------------------------------------------------------
# polygon


def cmd_polygon(args: argparse.Namespace) -> int:
    data = newton.polygon_export(args.d, args.k_max, args.family)
    text = json.dumps(data, sort_keys=True, indent=2) + "\n"
    _write_or_print(text, args.out)
    return 0


# ---------------------------------------------------------------------------
# verify


def _suite_integrality(quick: bool) -> list[Verdict]:
    plan = [("unicritical", 2, 3 if quick else 4),
            ("unicritical", 3, 2 if quick else 3),
            ("linearterm", 1, 3 if quick else 4),
            ("linearterm", 2, 2 if quick else 3),
            ("shifted", 1, 2 if quick else 3),
            ("shifted", 2, 2)]
    out = []
    for kind, d, m_max in plan:
        fam = Family(kind, d)
        for m in range(1, m_max + 1):
            out.append(inv.integrality_check(fam, m))
            out.append(inv.monicness_check(fam, m))
    return out


def _suite_rescaled_monic(quick: bool) -> list[Verdict]:
    out = []
    fam = Family("unicritical", 2)
    for n in range(1, 5 if quick else 7):
        for m in divisors(n):
            out.append(inv.psi_monicness_check(fam, n, m))
    fam = Family("unicritical", 3)
    for n in range(1, 4):
        for m in divisors(n):
            out.append(inv.psi_monicness_check(fam, n, m))
    return out


def _suite_cyclotomic_units(quick: bool) -> list[Verdict]:
    fam = Family("unicritical", 2)
    out = []
    for n in range(2, 5 if quick else 7):
        for m in divisors(n):
            if m < n:
                out.append(inv.morton_vivaldi_check(fam, n, m))
    return out


def _suite_degrees(quick: bool) -> list[Verdict]:
    fam = Family("unicritical", 2)
    out = []
    for n in range(1, 5 if quick else 7):
        out.extend(inv.degree_formula_check(fam, n))
    return out


def _suite_leading_terms(quick: bool) -> list[Verdict]:
    out = []
    for d in (2, 3):
        fam = Family("unicritical", d)
        for k in (1, 2):
            for m in (1, 2):
                out.append(inv.unicritical_res_lt_check(fam, k, m))
        for m in range(1, 3 if quick else 4):
            out.append(inv.unicritical_delta_lt_check(fam, m))
    for d in (1, 2):
        for k, m in ((1, 1), (1, 2), (2, 2)):
            out.append(inv.aux_leading_term_check(d, k, m))
            out.append(inv.aux_shifted_leading_check(d, k, m))
        out.extend(inv.cleared_eval_lt_check(d, 2))
    for d in (1, 2) if quick else (1, 2, 3):
        for n in range(2, 5 if quick else 7):
            out.append(inv.quadcrit_lt_check(d, n))
        out.append(inv.quadcrit_closed_form_check(d))
    for n in (2, 3, 5, 7) if quick else (2, 3, 5, 6, 7):
        out.append(inv.cyclotomic_prime_check(n))
    return out


def _suite_structure(quick: bool) -> list[Verdict]:
    out = [conjugacy_check(2), conjugacy_check(3)]
    pairs = ((1, 1), (1, 2), (2, 2)) if quick else ((1, 1), (1, 2), (2, 2),
                                                    (1, 3), (3, 3))
    for d in (1, 2):
        for k, m in pairs:
            out.extend(inv.linearterm_structure_checks(d, k, m))
            out.extend(inv.shifted_structure_checks(d, k, m))
        for m in (1, 2) if quick else (1, 2, 3):
            out.append(inv.delta_aux_product_check("linearterm", d, m))
            out.append(inv.delta_aux_product_check("shifted", d, m))
        aux_pairs = ((1, 2), (2, 2)) if quick else ((1, 2), (2, 2),
                                                    (1, 3), (3, 3))
        for k, m in aux_pairs:
            out.append(inv.aux_integrality_check("linearterm", d, k, m))
            out.append(inv.aux_integrality_check("shifted", d, k, m))
    fam = Family("unicritical", 2)
    for k, m in ((1, 1), (1, 2), (1, 3), (2, 2), (2, 4), (2, 6), (3, 3)):
        if quick and m > 4:
            continue
        out.append(inv.dynatomic_equality_check(fam, k, m))
    out.append(inv.coprime_product_check(fam, 2, 3))
    out.append(inv.coprime_product_check(fam, 3, 2))
    return out


def _suite_newton(quick: bool) -> list[Verdict]:
    out = []
    for d, k_max in ((2, 3 if quick else 5), (3, 3)):
        for k in range(1, k_max + 1):
            out.append(newton.iterate_polygon_check(d, k))
    for d, m_max in ((2, 3 if quick else 4), (3, 2 if quick else 3)):
        for m in range(1, m_max + 1):
            out.append(newton.delta_polygon_check(d, m))
    for k, m in ((1, 1), (1, 2), (2, 2), (2, 4)):
        if quick and m > 2:
            continue
        out.append(newton.resultant_polygon_check(2, k, m))
    for d in (1, 2):
        for k in range(1, 3 if quick else 4):
            out.extend(newton.orbit_slope_bound_check(d, k))
            out.extend(newton.linear_resultant_polygon_check(d, k))
    return out


def _suite_dual_route(quick: bool) -> list[Verdict]:
    plan = [("unicritical", 2, 3), ("linearterm", 1, 3),
            ("shifted", 1, 2), ("quadcrit", 1, 2)]
    if not quick:
        plan += [("unicritical", 3, 2), ("linearterm", 2, 2),
                 ("shifted", 2, 2), ("quadcrit", 2, 2)]
    out = []
    for kind, d, m_max in plan:
        fam = Family(kind, d)
        for m in range(1, m_max + 1):
            a = multiplier_poly(fam, m).delta
            b = multiplier_via_product(fam, m)
            ok = a == b
            out.append(Verdict(check="multiplier-route-agreement",
                               params={"family": fam.label(), "m": m},
                               passed=ok,
                               residual=None if ok else str(a - b)))
    return out


def _golden_recompute(meta: dict):
    kind = meta["object"]
    if kind == "rescaled-multiplier":
        fam = Family(meta["family"], meta["d"])
        res = multiplier_poly(fam, meta["m"])
        scaled = res.delta.scale_c(IntPoly.const(res.scale))
        psi, _sign = inv.rescale_extract(scaled, fam)
        return encode_json(psi)
    if kind == "cyclotomic-multiplier-resultant":
        fam = Family(meta["family"], meta["d"])
        delta = multiplier_poly(fam, meta["m"]).delta
        value = resultant(lift_to_x(cyclotomic(meta["n"]), "c"), delta)
        return encode_json(value)
    if kind == "iterate-polygons":
        data = newton.polygon_export(meta["d"], meta["k_max"], meta["family"])
        return json.dumps(data, sort_keys=True) + "\n"
    raise ValueError("unknown golden object %r" % kind)


def _suite_goldens(quick: bool) -> list[Verdict]:
    from importlib import resources

    out = []
    root = resources.files("dynres") / "golden"
    names = sorted(p.name for p in root.iterdir() if p.name.endswith(".json"))
    for name in names:
        data = json.loads((root / name).read_text())
        if quick and data["meta"].get("slow"):
            continue
        got = _golden_recompute(data["meta"])
        ok = got == data["canonical"]
        out.append(Verdict(check="golden-recompute",
                           params={"file": name},
                           passed=ok,
                           residual=None if ok else "canonical text differs"))
    return out


SUITES = {
    "integrality": _suite_integrality,
    "rescaled-monic": _suite_rescaled_monic,
    "cyclotomic-units": _suite_cyclotomic_units,
    "degrees": _suite_degrees,
    "leading-terms": _suite_leading_terms,
    "structure": _suite_structure,
    "newton": _suite_newton,
    "dual-route": _suite_dual_route,
    "goldens": _suite_goldens,
}


def cmd_verify(args: argparse.Namespace) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    verdicts = []
    clocks = {}
    for name in names:
        t0 = time.perf_counter()
        batch = SUITES[name](args.quick)
        clocks[name] = round(time.perf_counter() - t0, 3)
        for v in batch:
            print(v.line())
        verdicts.extend(batch)
    failed = [v for v in verdicts if not v.passed]
    print("%d checks, %d failed" % (len(verdicts), len(failed)))
    if args.report is not None:
        rep = Report(command="verify",
                     parameters={"suite": args.suite, "quick": args.quick},
                     verdicts=verdicts, artifacts=[], wall_clock=clocks)
        with open(args.report, "w") as fh:
            fh.write(rep.to_json())
        print("wrote %s" % args.report)
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# parabolic


def cmd_parabolic(args: argparse.Namespace) -> int:
    fam = Family(args.family, args.d)
    if args.logistic is not None:
        rows = [classify_logistic(Fraction(args.logistic),
                                  m_max=args.m_max, j_max=args.j_max)]
    elif args.c is not None:
        rows = [classify(fam, Fraction(args.c),
                         m_max=args.m_max, j_max=args.j_max)]
    else:
        if fam.kind != "unicritical":
            print("error: candidate enumeration exists only for z^d + c; "
                  "give an explicit --c", file=sys.stderr)
            return 2
        rows = [classify(fam, c, m_max=args.m_max, j_max=args.j_max)
                for c in enumerate_candidates(args.d)]
    for row in rows:
        print(row.line())
        for note in row.notes:
            print("  note: %s" % note)
    if args.report is not None:
        payload = [dataclasses.asdict(row) for row in rows]
        with open(args.report, "w") as fh:
            json.dump(payload, fh, indent=2, default=str)
            fh.write("\n")
        print("wrote %s" % args.report)
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dynres",
        description="exact multiplier polynomials and resultant invariants")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="emit one multiplier polynomial")
    p.add_argument("--family", choices=KINDS, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, default=1, help="cycle length")
    p.add_argument("--rescaled", action="store_true",
                   help="rewrite in the family's rescaled variable")
    p.add_argument("--resultant", type=int, metavar="N",
                   help="emit Res_x(cyc_N, delta_m) instead of delta_m")
    p.add_argument("--format", choices=("json", "csv", "both"),
                   default="json")
    p.add_argument("--out", help="output path stem (default: stdout)")
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("polygon", help="Newton polygon vertices of iterates")
    p.add_argument("--family", choices=KINDS, default="unicritical")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k-max", type=int, default=4)
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_polygon)

    p = sub.add_parser("verify", help="run identity check suites")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"],
                   default="all")
    p.add_argument("--quick", action="store_true",
                   help="smaller ranges, for a fast smoke run")
    p.add_argument("--report", help="write a JSON report here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("parabolic", help="classify rational parameters")
    p.add_argument("--family", choices=("unicritical", "linearterm"),
                   default="unicritical")
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--c", help="one parameter, as p/q "
                               "(write --c=-3/4 for negative values)")
    p.add_argument("--logistic",
                   help="a parameter of the a z (1 - z) iteration, mapped "
                        "onto z^2 + c before classifying")
    p.add_argument("--m-max", type=int, default=6)
    p.add_argument("--j-max", type=int, default=12)
    p.add_argument("--report", help="write a JSON report here")
    p.set_defaults(func=cmd_parabolic)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GuardrailExceeded as exc:
        print("guardrail: %s (re-run with --allow-large)" % exc,
              file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
