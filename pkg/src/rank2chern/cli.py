"""Command-line interface.

Subcommands:

* ``omega``      emit a refined dimension table (computed or closed form)
* ``integral``   evaluate the graded integral of an element
* ``relations``  dump relation-ideal slices in the element grammar
* ``sl2``        run operator checks (relations/adjoint/descent/closure)
* ``genfun``     generating-series identities and expansions
* ``verify``     run the named verification suites

Exit codes: 0 all checks passed, 1 a verification failed, 2 usage or parse
error.  Output is deterministic for identical arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import genfun as gf
from .algebra import ElementParseError, bidegree_cone, check_genus, format_element, parse_element
from .integral import IntegralConfig, graded_integral
from .operators import check_adjointness, check_closure, check_descent, check_sl2_relations
from .relations import (
    OmegaTable,
    default_max_coh,
    ideal_slice,
    omega_from_ideal,
    omega_from_pairing,
)
from .suites import SUITES, run_suites

USAGE_ERROR = 2
CHECK_FAILED = 1


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rank2chern",
        description="Exact computations in the rank-two descendent algebra "
        "of moduli of bundles on a curve.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, d_flag=True, max_coh=True, norm=True, fmt=True):
        p.add_argument("--genus", type=int, default=2, help="curve genus, 2..8")
        if d_flag:
            p.add_argument("--d", type=int, default=0, help="destabilizing degree bound")
        if max_coh:
            p.add_argument("--max-coh", type=int, default=None, dest="max_coh")
        if norm:
            p.add_argument(
                "--normalization",
                type=_fraction,
                default=Fraction(1),
                help="nonzero rational normalization B of the base integral",
            )
        if fmt:
            p.add_argument("--format", choices=("json", "csv", "text"), default="text")

    p_omega = sub.add_parser("omega", help="emit a refined dimension table")
    common(p_omega)
    p_omega.add_argument(
        "--route",
        choices=("ideal", "pairing", "closed"),
        default="ideal",
        help="computed via relation slices, pairing ranks (d=0), or the closed form",
    )

    p_int = sub.add_parser("integral", help="graded integral of an element")
    common(p_int, d_flag=False, max_coh=False, fmt=False)
    p_int.add_argument("element", help="element in the text grammar, e.g. 'gamma'")

    p_rel = sub.add_parser("relations", help="dump relation-ideal slices")
    common(p_rel)

    p_sl2 = sub.add_parser("sl2", help="operator checks")
    common(p_sl2, fmt=True)
    p_sl2.add_argument(
        "--check",
        choices=("relations", "adjoint", "descent", "closure"),
        default="relations",
    )

    p_gen = sub.add_parser("genfun", help="generating-series identities")
    common(p_gen, max_coh=False, norm=False)
    p_gen.add_argument(
        "--formula", choices=("stack", "n21", "intermediate", "rank3"), default="n21"
    )
    p_gen.add_argument("--rank", type=int, default=2, help="rank for the stack formula")
    p_gen.add_argument(
        "--check",
        choices=("symmetry", "tminus1", "unimodal", "zagier", "all"),
        default=None,
    )
    p_gen.add_argument("--expand", type=int, default=None, metavar="MAXDEG")

    p_ver = sub.add_parser("verify", help="run verification suites")
    common(p_ver)
    p_ver.add_argument("--suite", choices=SUITES, default="all")

    return parser


def _emit_table(table: OmegaTable, fmt: str, out) -> None:
    if fmt == "json":
        out.write(table.to_json() + "\n")
    elif fmt == "csv":
        out.write(table.to_csv())
    else:
        out.write(f"# genus={table.g} d={table.d} maxCoh={table.max_coh}\n")
        for (coh, chern), n in sorted(table.dims.items()):
            out.write(f"coh={coh} chern={chern} dim={n}\n")


def _cmd_omega(args, out) -> int:
    g = args.genus
    d = args.d
    max_coh = args.max_coh if args.max_coh is not None else default_max_coh(g, d)
    if args.route == "pairing":
        if d != 0:
            out.write("error: the pairing route is defined for d = 0 only\n")
            return USAGE_ERROR
        table = omega_from_pairing(g, IntegralConfig(g, args.normalization))
    elif args.route == "closed":
        expansion = gf.omega_closed_form(g, d).series_coefficients(max_coh)
        dims = {(i + j, i): int(v) for (i, j), v in expansion.terms.items()}
        table = OmegaTable(g, d, max_coh, dims)
    else:
        table = omega_from_ideal(g, d, max_coh)
    _emit_table(table, args.format, out)
    return 0


def _cmd_integral(args, out) -> int:
    g = args.genus
    cfg = IntegralConfig(g, args.normalization)
    value = graded_integral(parse_element(args.element, g), cfg)
    out.write(f"{value}\n")
    return 0


def _cmd_relations(args, out) -> int:
    g = args.genus
    d = args.d
    max_coh = args.max_coh if args.max_coh is not None else default_max_coh(g, d)
    slices = []
    for bd in bidegree_cone(g, max_coh):
        elements = ideal_slice(g, d, bd, check_independent=False)
        if elements:
            slices.append((tuple(bd), [format_element(x) for x in elements]))
    if args.format == "json":
        data = {
            "genus": g,
            "d": d,
            "maxCoh": max_coh,
            "slices": [
                {"coh": bd[0], "chern": bd[1], "relations": rows} for bd, rows in slices
            ],
        }
        out.write(json.dumps(data, indent=2, sort_keys=True) + "\n")
    else:
        for bd, rows in slices:
            out.write(f"# coh={bd[0]} chern={bd[1]}\n")
            for row in rows:
                out.write(row + "\n")
    return 0


def _cmd_sl2(args, out) -> int:
    g = args.genus
    if args.check == "relations":
        report = check_sl2_relations(g, args.d, args.max_coh)
    elif args.check == "adjoint":
        report = check_adjointness(g, IntegralConfig(g, args.normalization))
    elif args.check == "descent":
        report = check_descent(g, args.d, args.max_coh)
    else:
        report = check_closure(g)
        report["genus"] = g
    if args.format == "json":
        out.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        status = "pass" if report["pass"] else "FAIL"
        out.write(f"{report['check']}: genus={report['genus']} d={report['d']} "
                  f"cases={report['cases']} {status}\n")
        for f in report["failures"]:
            out.write(f"  failure at {f['where']}: expected {f['expected']}, got {f['got']}\n")
    return 0 if report["pass"] else CHECK_FAILED


def _genfun_formula(args):
    if args.formula == "stack":
        return gf.omega_stack(args.rank, args.genus), args.rank
    if args.formula == "n21":
        return gf.omega_closed_form(args.genus, 0), 2
    if args.formula == "intermediate":
        return gf.omega_closed_form(args.genus, args.d), 2
    return gf.omega_rank3(args.genus), 3


def _cmd_genfun(args, out) -> int:
    g = args.genus
    check_genus(g)
    formula, rank = _genfun_formula(args)
    rows = []
    ok = True
    if args.check is not None:
        checks = (
            ["symmetry", "tminus1", "unimodal", "zagier"] if args.check == "all" else [args.check]
        )
        for name in checks:
            if name == "symmetry":
                result = gf.check_shift_symmetry(formula, rank, g)
            elif name == "tminus1":
                if args.formula == "stack":
                    result = gf.stack_t_minus_one_matches(args.rank, g)
                elif args.formula == "rank3":
                    result = gf.rank3_t_minus_one_matches(g)
                else:
                    result = gf.closed_form_t_minus_one_matches(g)
            elif name == "unimodal":
                result = gf.check_unimodality(g)
            else:
                result = (
                    gf.zagier_combinatorial_omega(g).terms
                    == gf.omega_closed_polynomial(g).terms
                )
            ok = ok and result
            rows.append({"check": name, "formula": args.formula, "genus": g,
                         "d": args.d, "pass": result})
    if args.expand is not None:
        series = formula.series_coefficients(args.expand)
        expansion = [
            {"qExp": i, "tExp": j, "coeff": str(v)} for (i, j), v in sorted(series.terms.items())
        ]
    else:
        expansion = None

    if args.format == "json":
        payload = {}
        if rows:
            payload["checks"] = rows
        if expansion is not None:
            payload["expansion"] = expansion
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    elif args.format == "csv":
        if rows:
            out.write("check,formula,genus,d,pass\n")
            for r in rows:
                out.write(f"{r['check']},{r['formula']},{r['genus']},{r['d']},{r['pass']}\n")
        if expansion is not None:
            out.write("qExp,tExp,coeff\n")
            for r in expansion:
                out.write(f"{r['qExp']},{r['tExp']},{r['coeff']}\n")
    else:
        for r in rows:
            out.write(f"{r['check']} ({r['formula']}, genus {r['genus']}): "
                      f"{'pass' if r['pass'] else 'FAIL'}\n")
        if expansion is not None:
            for r in expansion:
                out.write(f"q^{r['qExp']} t^{r['tExp']}: {r['coeff']}\n")
    return 0 if ok else CHECK_FAILED


def _cmd_verify(args, out) -> int:
    reports = run_suites(args.suite, args.genus, args.d, args.max_coh, args.normalization)
    if args.format == "json":
        out.write(json.dumps(reports, indent=2, sort_keys=True) + "\n")
    else:
        for rep in reports:
            status = "pass" if rep["pass"] else "FAIL"
            out.write(
                f"{status}: suite={rep['suite']} genus={rep['genus']} d={rep['d']} "
                f"cases={rep['cases']}\n"
            )
            for f in rep["failures"]:
                out.write(
                    f"  failure at {f['where']}: expected {f['expected']}, got {f['got']}\n"
                )
    return 0 if all(r["pass"] for r in reports) else CHECK_FAILED


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    out = sys.stdout
    try:
        if args.command == "omega":
            return _cmd_omega(args, out)
        if args.command == "integral":
            return _cmd_integral(args, out)
        if args.command == "relations":
            return _cmd_relations(args, out)
        if args.command == "sl2":
            return _cmd_sl2(args, out)
        if args.command == "genfun":
            return _cmd_genfun(args, out)
        if args.command == "verify":
            return _cmd_verify(args, out)
        parser.error(f"unknown command {args.command!r}")
    except (ElementParseError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR
    return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
