"""Named verification suites behind the command-line `verify` subcommand.

Every suite returns a report dict

    {"suite", "genus", "d", "pass", "cases", "failures": [{"where",
     "expected", "got"}, ...]}

with the first failing witnesses listed so regressions stay diagnosable.
All comparisons are exact.
"""

from __future__ import annotations

from fractions import Fraction

from . import genfun
from .algebra import Element, bidegree_cone
from .integral import IntegralConfig, graded_integral
from .operators import check_adjointness, check_closure, check_descent, check_sl2_relations
from .relations import (
    OmegaTable,
    default_max_coh,
    omega_from_ideal,
    omega_from_pairing,
    pairing_kernel_matches_ideal,
    verify_vanishing_corollary,
)


def _report(suite, genus, d, cases, failures):
    return {
        "suite": suite,
        "genus": genus,
        "d": d,
        "pass": not failures,
        "cases": cases,
        "failures": failures[:10],
    }


def _table_matches_expansion(table: OmegaTable, expansion) -> list:
    got = table.to_coeff_dict()
    want = {k: int(v) for k, v in expansion.terms.items()}
    failures = []
    for key in sorted(set(got) | set(want)):
        if got.get(key, 0) != want.get(key, 0):
            failures.append(
                {
                    "where": f"q^{key[0]} t^{key[1]}",
                    "expected": str(want.get(key, 0)),
                    "got": str(got.get(key, 0)),
                }
            )
    return failures


def suite_main(genus: int, B=Fraction(1)) -> dict:
    """The d = 0 table from the pairing route against the closed form,
    plus the top-degree structure and the nonvanishing witness integral."""
    cfg = IntegralConfig(genus, B)
    table = omega_from_pairing(genus, cfg)
    closed = genfun.omega_closed_polynomial(genus)
    failures = _table_matches_expansion(table, closed)
    cases = len(closed.terms) + 3

    top_coh = 6 * genus - 6
    top_chern = 4 * genus - 4
    for (coh, chern), n in table.dims.items():
        if coh == top_coh and chern < top_chern and n:
            failures.append(
                {"where": f"dims[({coh},{chern})]", "expected": "0", "got": str(n)}
            )
    if table.dim(top_coh, top_chern) != 1:
        failures.append(
            {
                "where": f"dims[({top_coh},{top_chern})]",
                "expected": "1",
                "got": str(table.dim(top_coh, top_chern)),
            }
        )
    witness = (Element.alpha(genus) * Fraction(1, 2)) ** (genus - 1) * Element.beta(genus) ** (
        genus - 1
    )
    value = graded_integral(witness, cfg)
    expected = cfg.B / Fraction(2 ** (genus - 1))
    if value != expected or value == 0:
        failures.append(
            {"where": "integral (alpha/2)^(g-1) beta^(g-1)", "expected": str(expected), "got": str(value)}
        )
    if not verify_vanishing_corollary(table):
        failures.append({"where": "vanishing corollary", "expected": "pass", "got": "fail"})
    return _report("main", genus, 0, cases, failures)


def suite_intermediate(genus: int, d: int, max_coh: int = None) -> dict:
    """The degree-d table from the ideal route against the truncated series
    expansion of the closed form."""
    if max_coh is None:
        max_coh = default_max_coh(genus, d)
    table = omega_from_ideal(genus, d, max_coh)
    expansion = genfun.omega_closed_form(genus, d).series_coefficients(max_coh)
    failures = _table_matches_expansion(table, expansion)
    return _report("intermediate", genus, d, len(expansion.terms), failures)


def suite_pairing(genus: int, B=Fraction(1)) -> dict:
    """Two-route coincidence at d = 0 and the per-bidegree kernel match."""
    cfg = IntegralConfig(genus, B)
    by_ideal = omega_from_ideal(genus, 0, 6 * genus - 6)
    by_pairing = omega_from_pairing(genus, cfg)
    failures = []
    keys = set(by_ideal.dims) | set(by_pairing.dims)
    for bd in sorted(keys):
        if by_ideal.dims.get(bd, 0) != by_pairing.dims.get(bd, 0):
            failures.append(
                {
                    "where": f"bd={bd}",
                    "expected": str(by_pairing.dims.get(bd, 0)),
                    "got": str(by_ideal.dims.get(bd, 0)),
                }
            )
    cases = len(keys)
    for bd in bidegree_cone(genus, 6 * genus - 6):
        cases += 1
        if not pairing_kernel_matches_ideal(genus, bd, cfg):
            failures.append(
                {"where": f"kernel match at bd={tuple(bd)}", "expected": "match", "got": "mismatch"}
            )
    return _report("pairing", genus, 0, cases, failures)


def suite_sl2(genus: int, d: int = 0, max_coh: int = None, B=Fraction(1)) -> dict:
    """Commutation relations, d = 0 adjointness, and descent identities."""
    reports = [check_sl2_relations(genus, d, max_coh)]
    if d == 0:
        reports.append(check_adjointness(genus, IntegralConfig(genus, B)))
    reports.append(check_descent(genus, d))
    failures = []
    cases = 0
    for rep in reports:
        cases += rep["cases"]
        for f in rep["failures"]:
            f = dict(f)
            f["where"] = f"{rep['check']}: {f['where']}"
            failures.append(f)
    return _report("sl2", genus, d, cases, failures)


def suite_closure(genus: int, buffers=(None,)) -> dict:
    rep = check_closure(genus, buffers)
    return _report("closure", genus, 0, rep["cases"], rep["failures"])


def suite_genfun(max_genus: int = 8) -> dict:
    """The generating-series identity battery (exact, series level only)."""
    failures = []
    cases = 0

    def note(ok: bool, where: str):
        nonlocal cases
        cases += 1
        if not ok:
            failures.append({"where": where, "expected": "pass", "got": "fail"})

    for r in range(2, 6):
        for g in range(2, max_genus + 1):
            note(
                genfun.check_shift_symmetry(genfun.omega_stack(r, g), r, g),
                f"shift symmetry, stack r={r}, g={g}",
            )
    for g in range(2, max_genus + 1):
        note(
            genfun.check_shift_symmetry(genfun.omega_closed_form(g, 0), 2, g),
            f"shift symmetry, closed form g={g}",
        )
    for g in range(2, 6):
        note(
            genfun.check_shift_symmetry(genfun.omega_rank3(g), 3, g),
            f"shift symmetry, rank-3 formula g={g}",
        )
    for r in range(2, 6):
        for g in range(2, max_genus + 1):
            note(genfun.stack_t_minus_one_matches(r, g), f"t=-1, stack r={r}, g={g}")
    for g in range(2, max_genus + 1):
        note(genfun.closed_form_t_minus_one_matches(g), f"t=-1, closed form g={g}")
    for g in range(2, 6):
        note(genfun.rank3_t_minus_one_matches(g), f"t=-1, rank-3 formula g={g}")
    for g in range(2, max_genus + 1):
        zag = genfun.zagier_combinatorial_omega(g)
        note(
            zag.terms == genfun.omega_closed_polynomial(g).terms,
            f"block sum equals closed form, g={g}",
        )
    for g in range(2, max_genus + 1):
        note(genfun.check_unimodality(g), f"unimodality, g={g}")
    for g in range(2, max_genus + 1):
        note(genfun.telescoping_identity(g), f"telescoping, g={g}")
    for g in range(2, 6):
        for d in range(1, 4):
            note(
                genfun.intermediate_difference_matches(g, d),
                f"stratum difference, g={g}, d={d}",
            )
        for d in range(0, 3):
            note(genfun.full_stack_telescoping_qt(g, d), f"q=t stack telescoping, g={g}, d={d}")
    return _report("genfun", 0, 0, cases, failures)


SUITES = ("main", "intermediate", "sl2", "pairing", "closure", "genfun", "all")


def run_suites(name: str, genus: int, d: int, max_coh=None, B=Fraction(1)):
    """Run one named suite (or all of them) and return the report list."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    reports = []
    if name in ("main", "all"):
        reports.append(suite_main(genus, B))
    if name in ("intermediate", "all"):
        for dd in ([d] if name == "intermediate" else [1, 2]):
            reports.append(suite_intermediate(genus, dd, max_coh))
    if name in ("pairing", "all"):
        reports.append(suite_pairing(genus, B))
    if name in ("sl2", "all"):
        reports.append(suite_sl2(genus, d, max_coh, B))
    if name in ("closure", "all"):
        reports.append(suite_closure(genus))
    if name in ("genfun", "all"):
        reports.append(suite_genfun())
    return reports
