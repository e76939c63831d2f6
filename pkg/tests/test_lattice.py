"""Lattice layer: forms, coordinates, cocycle tables, axiom sweeps."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qvertex.lattice import (
    WeightA,
    WeightC,
    alpha_coords,
    bar_parities,
    cartan,
    check_cocycle_commutation,
    check_quasi_cocycle_axioms,
    constraint_check,
    d_exp,
    eps_char,
    eps_pair,
    eps_simple,
    fundamental_weight,
    fundamental_weight_tilde,
    inner_P,
    inner_tilde,
    matching_tilde,
    simple_root,
    simple_root_tilde,
    theta,
    vertex_char,
    zero_tilde,
    zero_weight,
)


def frac(x):
    return Fraction(x)


class TestForms:
    def test_basis_normalization(self):
        e1 = WeightC((1, 0, 0))
        e2 = WeightC((0, 1, 0))
        assert inner_P(e1, e1).as_fraction() == frac("1/2")
        assert inner_P(e1, e2).as_fraction() == 0

    def test_root_lengths(self):
        n = 3
        a1, a2, a3 = (simple_root(n, i) for i in (1, 2, 3))
        assert inner_P(a1, a1).as_fraction() == 1
        assert inner_P(a3, a3).as_fraction() == 2
        assert inner_P(a1, a2).as_fraction() == frac("-1/2")
        assert inner_P(a1, a3).as_fraction() == 0
        assert inner_P(a2, a3).as_fraction() == -1

    def test_cartan_integers(self):
        for n in (2, 3, 4):
            for i in range(1, n + 1):
                assert cartan(n, i, i) == 2
        assert cartan(3, 1, 2) == -1
        assert cartan(3, 2, 1) == -1
        assert cartan(3, 2, 3) == -2
        assert cartan(3, 3, 2) == -1
        assert cartan(4, 1, 3) == 0

    def test_d_values(self):
        assert d_exp(3, 1).quarters == 2
        assert d_exp(3, 2).quarters == 2
        assert d_exp(3, 3).quarters == 4

    def test_tilde_root_pairings(self):
        assert inner_tilde(simple_root_tilde(2, 1), simple_root_tilde(2, 1)) == 1
        assert inner_tilde(simple_root_tilde(3, 1), simple_root_tilde(3, 1)) == 1
        assert inner_tilde(simple_root_tilde(3, 1), simple_root_tilde(3, 2)) == frac(
            "-1/2"
        )
        assert simple_root_tilde(3, 3).is_zero()

    def test_tilde_fundamental(self):
        n = 2
        lt1 = fundamental_weight_tilde(n, 1)
        assert inner_tilde(lt1, lt1) == frac("1/4")
        assert fundamental_weight_tilde(3, 3).is_zero()

    def test_pairing_vector_meaning(self):
        # t_j = 2 (at_j | x): pairing a tilde root against any element
        # reads off half the stored coordinate.
        n = 4
        x = WeightA((1, -2, 3))
        for i in range(1, n):
            got = inner_tilde(simple_root_tilde(n, i), x)
            assert got == Fraction(x.pairings[i - 1], 2)

    def test_theta(self):
        th = theta(3)
        assert th.coords == (2, 0, 0)
        lam = WeightC((5, 1, -2))
        assert inner_P(th, lam).as_fraction() == 5


class TestCoordinates:
    def test_alpha_coords_roundtrip(self):
        n = 3
        for coords in [(1, -1, 0), (0, 0, 2), (2, 0, 0), (1, 0, 0), (1, 1, 1)]:
            lam = WeightC(coords)
            base, r = alpha_coords(lam)
            rebuilt = zero_weight(n)
            if base:
                rebuilt = rebuilt + fundamental_weight(n, 1)
            for j, rj in enumerate(r, start=1):
                shift = simple_root(n, j)
                for _ in range(abs(rj)):
                    rebuilt = rebuilt + shift if rj > 0 else rebuilt - shift
            assert rebuilt == lam

    def test_bar_kills_long_directions(self):
        n = 3
        assert bar_parities(simple_root(n, n)) == (0, 0)
        two_a1 = simple_root(n, 1) + simple_root(n, 1)
        assert bar_parities(two_a1) == (0, 0)
        assert bar_parities(simple_root(n, 1)) == (1, 0)

    def test_matching_tilde(self):
        lam = WeightC((2, 1, 1))
        assert matching_tilde(lam) == WeightA((1, 0))
        for i in (1, 2, 3):
            lam_i = fundamental_weight(3, i)
            assert matching_tilde(lam_i) == fundamental_weight_tilde(3, i)


class TestCocycleTables:
    def test_simple_values(self):
        assert eps_simple(1, 1) == -1
        assert eps_simple(1, 2) == 1
        assert eps_simple(2, 1) == -1
        assert eps_simple(1, 3) == 1
        assert eps_simple(3, 1) == 1

    def test_char_base_cases(self):
        n = 3
        for i in (1, 2, 3):
            assert eps_char(i, zero_weight(n)) == 1
        assert eps_char(1, simple_root(n, 1)) == -1
        assert eps_char(1, simple_root(n, 1) + simple_root(n, 2)) == -1

    def test_char_matches_simple_table(self):
        for n in (2, 3, 4):
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    assert eps_char(i, simple_root(n, j)) == eps_simple(i, j)

    def test_char_multiplicative_over_root_translates(self):
        n = 3
        betas = [simple_root(n, j) for j in (1, 2, 3)]
        lams = [zero_weight(n), fundamental_weight(n, 1), WeightC((1, 1, 0))]
        for i in (1, 2, 3):
            for beta in betas:
                for lam in lams:
                    assert eps_char(i, beta + lam) == eps_char(i, beta) * eps_char(
                        i, lam
                    )

    def test_char_not_multiplicative_across_cosets(self):
        # eps(alpha_n, .) picks up the long-root coefficient of the
        # root-lattice part, which is not additive across the coset section.
        n = 3
        lam1 = fundamental_weight(n, 1)
        assert eps_char(n, lam1) == 1
        assert eps_char(n, lam1 + lam1) == -1

    def test_pair_extension_consistent(self):
        n = 3
        betas = [
            simple_root(n, 1),
            simple_root(n, 3),
            simple_root(n, 1) + simple_root(n, 2),
        ]
        for i in (1, 2, 3):
            for beta in betas:
                assert eps_pair(simple_root(n, i), beta) == eps_char(i, beta)

    def test_pair_rejects_non_root_arguments(self):
        n = 2
        with pytest.raises(ValueError):
            eps_pair(fundamental_weight(n, 1), simple_root(n, 1))
        with pytest.raises(ValueError):
            eps_pair(simple_root(n, 1), fundamental_weight(n, 1))


class TestVertexChar:
    def test_raising_family(self):
        n = 3
        for j in range(1, n + 1):
            assert vertex_char(1, 1, simple_root(n, j)) == 1
        for i in range(2, n + 1):
            for j in range(1, n + 1):
                expected = -1 if j == i - 1 else 1
                assert vertex_char(1, i, simple_root(n, j)) == expected

    def test_own_root_fixed(self):
        for n in (2, 3, 4):
            for i in range(1, n + 1):
                assert vertex_char(1, i, simple_root(n, i)) == 1
                assert vertex_char(-1, i, simple_root(n, i)) == 1

    def test_lowering_twist(self):
        n = 2
        lam1 = fundamental_weight(n, 1)
        assert vertex_char(1, 1, lam1) == 1
        assert vertex_char(-1, 1, lam1) == -1
        lam_n = fundamental_weight(n, n)
        assert vertex_char(-1, n, lam_n) == vertex_char(1, n, lam_n) == -1

    def test_matches_cocycle_char_off_diagonal(self):
        for n in (2, 3):
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    got = vertex_char(1, i, simple_root(n, j))
                    if i == j:
                        assert got == -eps_simple(i, j)
                    else:
                        assert got == eps_simple(i, j)

    def test_character_property(self):
        n = 3
        pts = [WeightC(c) for c in [(1, 0, 0), (0, 1, -1), (1, 1, 1), (-1, 0, 2)]]
        for sign in (1, -1):
            for i in range(1, n + 1):
                for a in pts:
                    for b in pts:
                        assert vertex_char(sign, i, a + b) == vertex_char(
                            sign, i, a
                        ) * vertex_char(sign, i, b)


class TestConstraint:
    def test_examples(self):
        n = 2
        assert constraint_check(zero_weight(n), zero_tilde(n))
        lam1 = fundamental_weight(n, 1)
        assert not constraint_check(lam1, zero_tilde(n))
        assert constraint_check(lam1, fundamental_weight_tilde(n, 1))

    def test_matching_tilde_always_admissible(self):
        for coords in [(0, 0), (1, 0), (2, -1), (3, 3)]:
            lam = WeightC(coords)
            assert constraint_check(lam, matching_tilde(lam))

    @given(
        st.tuples(*(st.integers(-3, 3) for _ in range(3))),
        st.tuples(st.integers(-2, 2), st.integers(-2, 2)),
        st.integers(1, 3),
        st.sampled_from([1, -1]),
    )
    @settings(max_examples=80, deadline=None)
    def test_closure_under_paired_translation(self, coords, tshift, j, direction):
        n = 3
        lam = WeightC(coords)
        lt = matching_tilde(lam) + WeightA((2 * tshift[0], 2 * tshift[1]))
        assert constraint_check(lam, lt)
        root = simple_root(n, j)
        troot = simple_root_tilde(n, j)
        if direction > 0:
            assert constraint_check(lam + root, lt + troot)
        else:
            assert constraint_check(lam - root, lt - troot)


class TestSuites:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_axioms(self, n):
        report = check_quasi_cocycle_axioms(n)
        assert report.ok, report.render_text()
        names = {c.name for c in report.checks}
        assert names == {
            "pair_products",
            "axiom_second_multiplicative",
            "axiom_first_multiplicative",
            "axiom_symmetry",
            "axiom_cocycle",
        }

    @pytest.mark.parametrize("n", [2, 3])
    def test_commutation(self, n):
        report = check_cocycle_commutation(n)
        assert report.ok, report.render_text()

    def test_report_rendering(self):
        report = check_quasi_cocycle_axioms(2)
        text = report.render_text()
        assert "summary:" in text
        data = report.to_json_dict()
        assert data["summary"]["failed"] == 0
        assert data["summary"]["total"] == len(data["checks"])


class TestHypothesisForms:
    @given(
        st.tuples(*(st.integers(-4, 4) for _ in range(3))),
        st.tuples(*(st.integers(-4, 4) for _ in range(3))),
    )
    @settings(max_examples=60, deadline=None)
    def test_inner_P_symmetric_bilinear(self, a, b):
        x, y = WeightC(a), WeightC(b)
        assert inner_P(x, y) == inner_P(y, x)
        assert (
            inner_P(x + y, x + y).as_fraction()
            == inner_P(x, x).as_fraction()
            + 2 * inner_P(x, y).as_fraction()
            + inner_P(y, y).as_fraction()
        )

    @given(
        st.tuples(st.integers(-4, 4), st.integers(-4, 4)),
        st.tuples(st.integers(-4, 4), st.integers(-4, 4)),
    )
    @settings(max_examples=60, deadline=None)
    def test_inner_tilde_symmetric(self, a, b):
        x, y = WeightA(a), WeightA(b)
        assert inner_tilde(x, y) == inner_tilde(y, x)
        assert inner_tilde(x + y, y) == inner_tilde(x, y) + inner_tilde(y, y)
