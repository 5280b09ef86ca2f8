"""Cross-verification suite: closed forms vs independent oracles.

Each check returns (name, passed, detail). The CLI `verify` subcommand
runs them and exits nonzero on any failure; the test suite reuses them.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .budget import current_budget
from . import extendibility as ext
from .diagrams import (
    all_diagrams,
    compose,
    jm_sum_brauer,
    jm_sum_sym,
    matrix_rep,
)
from .graphs import make_family, perfect_matchings
from .partitions import content, enumerate_sym_irreps, gl_dim, size, sym_dim
from .spectral import joint_spectrum, sym_eigen

ORACLE_TOL = 1e-9
SPEC_TOL = 1e-8


def grid_pairs(budget: int, n_max: int = 12, d_max: int = 9):
    """(n, d) pairs with d^n within budget, over the verified table ranges."""
    return [
        (n, d)
        for d in range(2, d_max + 1)
        for n in range(2, n_max + 1)
        if d ** n <= budget
    ]


def check_dual_solvers_exact() -> tuple[str, bool, str]:
    bad = []
    for n in range(2, 10):
        for d in range(2, 10):
            if ext.isotropic_dual_minimax(n, d) != ext.p_iso_prime(n, d):
                bad.append(("iso", n, d))
            if ext.q0_dual_value(n, d) != ext.p_b_complete(n, d):
                bad.append(("q0", n, d))
    return ("dual-solvers-exact", not bad, f"mismatches: {bad}" if bad else "2<=n,d<=9")


def check_oracle_closed_forms(budget: int | None = None) -> tuple[str, bool, str]:
    cap = current_budget(budget)
    bad = []
    pairs = grid_pairs(cap)
    for n, d in pairs:
        g = make_family("complete", n)
        if abs(ext.p_avg_numeric(g, "werner", d, cap) - float(ext.p_w_complete(n, d))) > ORACLE_TOL:
            bad.append(("werner", n, d))
        if abs(ext.p_avg_numeric(g, "brauer", d, cap) - float(ext.p_b_complete(n, d))) > ORACLE_TOL:
            bad.append(("brauer", n, d))
    return (
        "oracle-closed-forms",
        not bad,
        f"mismatches: {bad}" if bad else f"{len(pairs)} (n,d) grid points, tol {ORACLE_TOL}",
    )


def check_brauer_composition() -> tuple[str, bool, str]:
    diagrams = all_diagrams(3)
    bad = 0
    for d in (2, 3):
        reps = {dg: matrix_rep(dg, d) for dg in diagrams}
        for a, b in itertools.product(diagrams, repeat=2):
            result, loops = compose(a, b)
            if reps[a] @ reps[b] != reps[result] * (d ** loops):
                bad += 1
    return (
        "brauer-composition",
        bad == 0,
        f"{bad} failures" if bad else "225 ordered pairs at d in {2,3}, exact",
    )


def check_jm_spectra() -> tuple[str, bool, str]:
    from .partitions import enumerate_brauer_irreps

    bad = []
    for n, d in [(2, 2), (3, 2), (3, 3), (4, 2), (4, 3), (5, 2)]:
        js = jm_sum_sym(n, d)
        expected = {}
        for mu in enumerate_sym_irreps(n, d):
            c = content(mu)
            expected[c] = expected.get(c, 0) + sym_dim(mu) * gl_dim(mu, d)
        spec = sym_eigen(js, SPEC_TOL)
        got = {round(v): m for v, m in spec.as_pairs()}
        if got != expected or any(abs(v - round(v)) > SPEC_TOL for v in spec.eigenvalues):
            bad.append(("sym", n, d))

        jb = jm_sum_brauer(n, d)
        allowed = {
            Fraction(2 * content(lam) - (n - size(lam)) * (d - 1), 2)
            for lam in enumerate_brauer_irreps(n, d)
        }
        bspec = sym_eigen(jb, SPEC_TOL)
        if bspec.dimension != d ** n or not all(
            any(abs(v - float(a)) <= SPEC_TOL for a in allowed) for v in bspec.eigenvalues
        ):
            bad.append(("brauer", n, d))
        if js @ jb != jb @ js:
            bad.append(("commute", n, d))
    return ("jm-spectra", not bad, f"mismatches: {bad}" if bad else "6 (n,d) pairs")


def check_joint_spectrum_easy_pairs() -> tuple[str, bool, str]:
    bad = []
    for n, d in [(3, 2), (3, 3), (4, 2), (4, 3), (5, 2)]:
        js = joint_spectrum(jm_sum_sym(n, d), jm_sum_brauer(n, d), SPEC_TOL)
        predicted = {
            (
                content(mu),
                Fraction(2 * content(lam) - (n - size(lam)) * (d - 1), 2),
            )
            for lam, mu in ext.okada_easy_pairs(n, d)
        }
        for a, b in predicted:
            if not any(
                abs(pa - a) <= SPEC_TOL and abs(pb - float(b)) <= SPEC_TOL
                for pa, pb in js.pairs
            ):
                bad.append((n, d, a, b))
    return (
        "joint-spectrum-easy-pairs",
        not bad,
        f"missing pairs: {bad}" if bad else "easy-rule pairs appear in joint spectra",
    )


def check_primal_certificates(budget: int | None = None) -> tuple[str, bool, str]:
    cap = current_budget(budget)
    bad = []
    count = 0
    for n in range(2, 7):
        d = 2
        while d ** n <= cap:
            _, achieved = ext.werner_primal_certificate(n, d, cap)
            count += 1
            if achieved != ext.p_w_complete(n, d):
                bad.append((n, d))
            d += 1
    return (
        "werner-primal-certificates",
        not bad,
        f"mismatches: {bad}" if bad else f"{count} certificates, exact rational equality",
    )


def check_matching_states(budget: int | None = None) -> tuple[str, bool, str]:
    cap = current_budget(budget)
    bad = []
    for m in range(1, 6):
        got = len(perfect_matchings(make_family("complete", 2 * m)))
        want = 1
        for k in range(1, 2 * m, 2):
            want *= k
        if got != want:
            bad.append(("count", 2 * m))
    for n, d in [(3, 2), (4, 2), (5, 2), (3, 3), (4, 3)]:
        rho = ext.matching_lower_bound_state(n, d, cap)
        target = ext.isotropic_pair_state(Fraction(1, n + n % 2 - 1), d)
        for e in make_family("complete", n).edges:
            if ext.reduced_state(rho, e, n, d) != target:
                bad.append((n, d, e))
    return (
        "matching-lower-bound-states",
        not bad,
        f"mismatches: {bad}" if bad else "counts (2m-1)!! and exact marginals",
    )


def check_ppt_region() -> tuple[str, bool, str]:
    bad = []
    for d in (2, 3):
        for i in range(101):
            for j in range(101 - i):
                p, q = Fraction(i, 100), Fraction(j, 100)
                if ext.brauer_is_separable(p, q, d) != ext.brauer_is_ppt(p, q, d):
                    bad.append((d, p, q))
    return (
        "ppt-separability-region",
        not bad,
        f"mismatches: {bad[:5]}" if bad else "101x101 grid at d in {2,3}",
    )


def check_iso_dual_numeric(budget: int | None = None) -> tuple[str, bool, str]:
    cap = current_budget(budget)
    bad = []
    for n, d in [(2, 2), (3, 2), (3, 3), (4, 2), (5, 3)]:
        if d ** n > cap:
            continue
        got = ext.iso_dual_numeric(n, d, cap)
        if abs(got - float(ext.p_iso_prime(n, d))) > SPEC_TOL:
            bad.append((n, d, got))
    return (
        "isotropic-dual-numeric",
        not bad,
        f"mismatches: {bad}" if bad else f"golden-section minimum, tol {SPEC_TOL}",
    )


def check_cycle_values(budget: int | None = None) -> tuple[str, bool, str]:
    cap = current_budget(budget)
    vals = [ext.cycle_werner_value(n, cap) for n in (4, 6, 8, 10) if 2 ** n <= cap]
    ok = (
        abs(vals[0] - 0.75) <= ORACLE_TOL
        and all(a > b for a, b in zip(vals, vals[1:]))
        and all(v > ext.LN2 for v in vals)
    )
    return ("cycle-werner-values", ok, f"values {vals}, all above ln 2")


def check_conjecture_probe() -> tuple[str, bool, str]:
    bad = []
    for g in (make_family("complete", 3), make_family("path", 3)):
        rep = ext.conjecture_probe(g, "werner", 2, grid=21)
        if not (-1e-9 <= rep["gap"] <= rep["tolerance"]):
            bad.append((g.family_tag, rep["gap"]))
    return (
        "conjecture-probe",
        not bad,
        f"gaps outside tolerance: {bad}" if bad else "signed vs simplex minima agree (observation)",
    )


def check_bipartite(budget: int | None = None) -> tuple[str, bool, str]:
    cap = current_budget(budget)
    got = ext.p_avg_numeric(make_family("complete_bipartite", 2, 3), "brauer", 2, cap)
    want = float(ext.p_iso_bipartite(2, 3, 2))
    ok = abs(got - want) <= ORACLE_TOL
    return ("bipartite-value", ok, f"K_(2,3) numeric {got} vs closed form {want}")


def check_asymptotics() -> tuple[str, bool, str]:
    bad = []
    for d in (50, 100):
        for n in (3, 4, 5):
            if abs(float(ext.p_b_complete(n, d) - ext.p_iso(n, d))) > 2.0 / d:
                bad.append((n, d))
    if ext.asymptotic_limit("werner", "n", d=2) != Fraction(1, 4):
        bad.append("werner-n-limit")
    if ext.asymptotic_limit("isotropic_prime", "n", d=3) != 0:
        bad.append("iso-prime-n-limit")
    return ("asymptotic-limits", not bad, f"failures: {bad}" if bad else "large-d closeness and limit values")


ALL_CHECKS = [
    check_dual_solvers_exact,
    check_brauer_composition,
    check_jm_spectra,
    check_joint_spectrum_easy_pairs,
    check_ppt_region,
    check_conjecture_probe,
    check_asymptotics,
]

BUDGETED_CHECKS = [
    check_oracle_closed_forms,
    check_primal_certificates,
    check_matching_states,
    check_iso_dual_numeric,
    check_cycle_values,
    check_bipartite,
]


def run_all(budget: int | None = None):
    """Run every check; yields (name, passed, detail)."""
    for fn in ALL_CHECKS:
        yield fn()
    for fn in BUDGETED_CHECKS:
        yield fn(budget)
