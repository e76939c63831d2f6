"""Release gate: every guarantee the package makes, run end to end.

One test per guarantee.  Each drives a verification surface at its
shipping configuration, requires a clean report -- every residual exactly
zero, no tolerances anywhere -- and holds the wall clock to the budget the
README quotes.  A failure here means the library must not ship.
"""

import math
import time
from fractions import Fraction

import pytest

from qvertex.lattice import (
    check_cocycle_commutation,
    check_quasi_cocycle_axioms,
    eps_simple,
    inner_P,
    simple_root,
)
from qvertex.report import VerificationReport
from qvertex.scalars import (
    HalfExponent,
    classical_limit,
    q_binom,
    q_factorial,
    q_int,
    q_int_frac,
    q_power,
)
from qvertex.verify import (
    CheckConfig,
    check_identity1,
    check_identity2,
    check_identity3,
    check_ope_factors,
    check_qpow,
    default_test_vectors,
    verify_hwv,
    verify_lemma,
    verify_r2,
    verify_r4,
    verify_r5,
    verify_r6,
    verify_r7,
    verify_r8,
    verify_serre,
)
from qvertex.vertex import VertexContext

pytestmark = pytest.mark.acceptance


def _gate(name: str, report: VerificationReport, elapsed_s: float, budget_s: float):
    print(
        f"[acceptance] {name}: {report.total} checks, {report.failed} failed, "
        f"{elapsed_s:.2f}s (budget {budget_s:g}s)"
    )
    for rec in report.failures()[:5]:
        print(f"  FAIL {rec.name} {rec.params} residual={rec.residual[:2]}")
    assert report.failed == 0, f"{name}: {report.failed} of {report.total} checks failed"
    assert elapsed_s < budget_s, f"{name}: {elapsed_s:.2f}s is over the {budget_s:g}s budget"


def _names(report: VerificationReport) -> set:
    return {rec.name for rec in report.checks}


def test_qpow_series_dual_routes():
    t0 = time.perf_counter()
    report = check_qpow(order=16)
    elapsed = time.perf_counter() - t0

    duals = [r for r in report.checks if r.name == "qpow_dual_route"]
    exponents = {r.params["exponent"] for r in duals}
    assert exponents == {"-2", "-3/2", "-1", "-1/2", "1/2", "1", "3/2", "2"}
    assert all(r.params["order"] == 16 for r in duals)
    examples = {r.params["exponent"] for r in report.checks if r.name == "qpow_polynomial_example"}
    assert examples == {"1", "-1", "2"}
    reciprocals = {r.params["exponent"] for r in report.checks if r.name == "qpow_reciprocal"}
    assert reciprocals == {"1/2", "1", "3/2", "2"}

    _gate("qpow dual routes to order 16", report, elapsed, 1.0)


def test_symmetrizer_identities():
    for label, fn in (("1", check_identity1), ("2", check_identity2), ("3", check_identity3)):
        t0 = time.perf_counter()
        report = fn()
        elapsed = time.perf_counter() - t0
        if label == "2":
            assert "identity2_bracket_form" in _names(report)
        _gate(f"symmetrizer identity {label}", report, elapsed, 1.0)


def test_operator_product_factor_suite():
    t0 = time.perf_counter()
    report = check_ope_factors(order=12)
    elapsed = time.perf_counter() - t0

    mains = [r for r in report.checks if r.name == "ope_main_factor"]
    assert len(mains) == 20  # five pairings, both signs in each slot
    assert {r.params["c"] for r in mains} == {"-1", "-1/2", "1/2", "1", "2"}
    assert "ope_square_root_merge" in _names(report)

    _gate("operator-product factors to order 12", report, elapsed, 5.0)


def test_cocycle_tables_and_axioms():
    t0 = time.perf_counter()
    combined = VerificationReport("cocycle")
    for n in (2, 3, 4):
        combined.extend(check_quasi_cocycle_axioms(n))
    elapsed = time.perf_counter() - t0

    # The sign table in closed form: two short rows anticommute by
    # (-1)^{2(a_i|a_j)}, any pair involving the long row by (-1)^{(a_i|a_j)}.
    for n in (2, 3, 4):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                pairing = inner_P(simple_root(n, i), simple_root(n, j)).as_fraction()
                exponent = 2 * pairing if (i < n and j < n) else pairing
                assert exponent.denominator == 1
                expected = -1 if exponent.numerator % 2 else 1
                assert eps_simple(i, j) * eps_simple(j, i) == expected, (n, i, j)

    assert "pair_products" in _names(combined)
    _gate("two-cocycle tables and axioms, ranks 2-4", combined, elapsed, 1.0)


def test_drinfeld_relation_sweeps():
    t0 = time.perf_counter()
    combined = VerificationReport("relations")
    for rank in (2, 3):
        cfg = CheckConfig(rank=rank, mode_min=-2, mode_max=2)
        assert len(default_test_vectors(cfg)) >= 20
        ctx = VertexContext(rank)
        for fn in (verify_r2, verify_r4, verify_r5, verify_r6, verify_r7, verify_r8):
            combined.extend(fn(cfg, ctx))
    elapsed = time.perf_counter() - t0

    quads = [r for r in combined.checks if r.name == "r7_current_quadratic"]
    assert len(quads) == 2 * 2 * 2 + 2 * 3 * 3  # both signs, all ordered pairs, both ranks
    mixed = [r for r in combined.checks if r.name == "r8_mixed_commutator"]
    assert len(mixed) == 2 * 2 + 3 * 3
    assert _names(combined) >= {
        "r2_heisenberg_bracket",
        "r4_degree_shift",
        "r5_cartan_conjugation",
        "r6_heisenberg_current",
    }

    _gate("relation sweeps, ranks 2-3, modes [-2,2]", combined, elapsed, 600.0)


def test_serre_relation_sweeps():
    t0 = time.perf_counter()
    reports = {}
    for rank in (2, 3):
        reports[rank] = verify_serre(CheckConfig(rank=rank), VertexContext(rank))
    elapsed = time.perf_counter() - t0

    combined = VerificationReport("relations")
    for rank in (2, 3):
        rep = reports[rank]
        rows = [r for r in rep.checks if r.name == "serre_relation"]
        assert {r.params["m"] for r in rows} == ({2, 3} if rank == 2 else {1, 2, 3})
        assert {r.params["sign"] for r in rows} == {"+", "-"}
        splits = [r for r in rep.checks if r.name == "serre_branch_split"]
        assert len(splits) == (0 if rank == 2 else 2)
        combined.extend(rep)

    _gate("Serre sweeps, ranks 2-3, modes [-1,1]", combined, elapsed, 900.0)


def test_highest_weight_vectors():
    t0 = time.perf_counter()
    combined = VerificationReport("hwv")
    for rank in (2, 3):
        ctx = VertexContext(rank)
        cfg = CheckConfig(rank=rank)
        rep = verify_hwv(cfg, ctx)
        for name in ("hwv_raising_annihilates", "hwv_cartan_eigenvalue", "hwv_weight_pattern"):
            rows = [r for r in rep.checks if r.name == name]
            assert {r.params["i"] for r in rows} == set(range(rank + 1)), name
        combined.extend(rep)
        combined.extend(verify_lemma(cfg, ctx))
    elapsed = time.perf_counter() - t0

    assert _names(combined) >= {
        "lemma_raising_kills_dominant",
        "lemma_lowering_vanishes",
        "lemma_lowering_step",
    }
    _gate("highest-weight vectors, ranks 2-3", combined, elapsed, 120.0)


def test_classical_limits():
    t0 = time.perf_counter()
    bases = [HalfExponent.quarter(1), HalfExponent.half(1), HalfExponent.half(-1)]
    for d in bases:
        for m in range(-4, 5):
            assert classical_limit(q_int(m, d)) == m, (m, d)
        for m in range(0, 5):
            assert classical_limit(q_factorial(m, d)) == math.factorial(m)
            for r in range(0, m + 1):
                assert classical_limit(q_binom(m, r, d)) == math.comb(m, r), (m, r, d)
    for a in (Fraction(1, 2), Fraction(-1, 2), Fraction(1), Fraction(2), Fraction(-3, 2)):
        for k in (1, 2, 3):
            assert classical_limit(q_int_frac(a, k)) == a * k, (a, k)
    for quarters in range(-8, 9):
        assert classical_limit(q_power(HalfExponent.quarter(quarters))) == 1
    elapsed = time.perf_counter() - t0

    report = VerificationReport("identities")
    report.add("classical_limit_smoke", {"bases": len(bases)}, True)
    _gate("classical limits of the q-combinatorics", report, elapsed, 1.0)


def test_cocycle_translation_commutation():
    t0 = time.perf_counter()
    combined = VerificationReport("cocycle")
    for n in (2, 3):
        combined.extend(check_cocycle_commutation(n))
    elapsed = time.perf_counter() - t0
    assert "translation_commutation" in _names(combined)
    _gate("twisted-translation commutation, ranks 2-3", combined, elapsed, 5.0)
