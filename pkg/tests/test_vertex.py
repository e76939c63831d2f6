"""Mode operators: pinned expansions, branch split, diagonal currents, e_0."""

from fractions import Fraction

import pytest

from qvertex.fock import (
    FockVector,
    HeisenGen,
    apply_heisenberg,
    grade,
    hw_vector,
    parse_vector,
    translate,
    vacuum,
    weight,
)
from qvertex.lattice import (
    d_exp,
    inner_P,
    simple_root,
    simple_root_tilde,
    theta,
    zero_tilde,
)
from qvertex.scalars import ExactScalar, HalfExponent, parse_scalar, q_power
from qvertex.vertex import (
    VertexContext,
    apply_e0,
    apply_k,
    apply_phi_mode,
    apply_psi_mode,
    apply_x_mode,
    apply_x_mode_split,
    chevalley_e,
    default_e0_brackets,
)

ONE = ExactScalar.from_int(1)


@pytest.fixture(scope="module")
def ctx2():
    return VertexContext(2)


@pytest.fixture(scope="module")
def ctx3():
    return VertexContext(3)


class TestPinnedExpansions:
    """Hand-expanded single-mode applications, frozen exactly."""

    def test_first_raising_mode_on_vacuum(self, ctx2):
        got = apply_x_mode(ctx2, 1, 1, -1, vacuum(2))
        assert got == parse_vector("e[1,-1] t[2] + e[1,-1] t[-2]", 2)

    def test_short_lowering_zero_mode(self, ctx2):
        got = apply_x_mode(ctx2, -1, 1, 0, hw_vector(2, 1))
        assert got == parse_vector("(q^1/4) e[0,1] t[-1]", 2)

    def test_short_raising_zero_mode_annihilates(self, ctx2):
        assert apply_x_mode(ctx2, 1, 1, 0, hw_vector(2, 1)).is_zero()

    def test_long_raising_mode_on_vacuum(self, ctx2):
        got = apply_x_mode(ctx2, 1, 2, -1, vacuum(2))
        assert got == parse_vector("e[0,2] t[0]", 2)

    def test_long_lowering_zero_mode(self, ctx2):
        got = apply_x_mode(ctx2, -1, 2, 0, hw_vector(2, 2))
        assert got == parse_vector("-(1) e[1,-1] t[0]", 2)

    def test_long_mode_with_creation(self, ctx2):
        got = apply_x_mode(ctx2, -1, 2, -2, vacuum(2))
        assert got == parse_vector("-(q^1/2) a2(-1) e[0,-2] t[0]", 2)

    def test_commutator_on_vacuum(self, ctx2):
        v0 = vacuum(2)
        lhs = apply_x_mode(ctx2, 1, 1, -1, apply_x_mode(ctx2, -1, 1, 1, v0))
        rhs = apply_x_mode(ctx2, -1, 1, 1, apply_x_mode(ctx2, 1, 1, -1, v0))
        two = q_power(HalfExponent.half(1)) + q_power(HalfExponent.half(-1))
        assert lhs - rhs == v0.scale(-two)
        lhs = apply_x_mode(ctx2, 1, 1, 1, apply_x_mode(ctx2, -1, 1, -1, v0))
        rhs = apply_x_mode(ctx2, -1, 1, -1, apply_x_mode(ctx2, 1, 1, 1, v0))
        assert lhs - rhs == v0.scale(two)

    def test_commutator_on_hw_vector(self, ctx2):
        w1 = hw_vector(2, 1)
        lhs = apply_x_mode(ctx2, 1, 1, 0, apply_x_mode(ctx2, -1, 1, 0, w1))
        rhs = apply_x_mode(ctx2, -1, 1, 0, apply_x_mode(ctx2, 1, 1, 0, w1))
        assert lhs - rhs == w1

    def test_validation(self, ctx2):
        with pytest.raises(ValueError):
            apply_x_mode(ctx2, 2, 1, 0, vacuum(2))
        with pytest.raises(ValueError):
            apply_x_mode(ctx2, 1, 3, 0, vacuum(2))


class TestGradeAndWeight:
    def test_mode_shifts_grade_by_index(self, ctx2):
        for k in (-2, -1, 0):
            got = apply_x_mode(ctx2, 1, 1, k, vacuum(2))
            if not got.is_zero():
                assert grade(got) == Fraction(k)
        v = hw_vector(2, 1)
        base = grade(v)
        got = apply_x_mode(ctx2, -1, 1, -1, v)
        assert grade(got) == base - 1

    def test_mode_shifts_weight_by_root(self, ctx2):
        n = 2
        got = apply_x_mode(ctx2, 1, 1, -1, vacuum(n))
        pairings, level = weight(got)
        alpha = simple_root(n, 1)
        assert level == 1
        for j in range(1, n + 1):
            assert pairings[j - 1] == inner_P(simple_root(n, j), alpha)


class TestBranchSplit:
    def test_short_branches_sum(self, ctx3):
        v = hw_vector(3, 2)
        for sign in (1, -1):
            for k in (-1, 0, 1):
                full = apply_x_mode(ctx3, sign, 1, k, v)
                plus = apply_x_mode_split(ctx3, sign, 1, 1, k, v)
                minus = apply_x_mode_split(ctx3, sign, -1, 1, k, v)
                assert plus + minus == full

    def test_long_single_branch(self, ctx3):
        v = vacuum(3)
        full = apply_x_mode(ctx3, 1, 3, -1, v)
        assert apply_x_mode_split(ctx3, 1, 1, 3, -1, v) == full
        assert apply_x_mode_split(ctx3, 1, -1, 3, -1, v).is_zero()

    def test_branches_translate_opposite_tilde(self, ctx2):
        v = vacuum(2)
        plus = apply_x_mode_split(ctx2, 1, 1, 1, -1, v)
        minus = apply_x_mode_split(ctx2, 1, -1, 1, -1, v)
        assert plus == parse_vector("e[1,-1] t[2]", 2)
        assert minus == parse_vector("e[1,-1] t[-2]", 2)


class TestDiagonalCurrents:
    def test_psi_zero_mode_is_k(self, ctx2):
        v = apply_heisenberg(HeisenGen("a", 1, -1), hw_vector(2, 1))
        for i in (1, 2):
            assert apply_psi_mode(ctx2, i, 0, v) == apply_k(ctx2, i, v)
            assert apply_phi_mode(ctx2, i, 0, v) == apply_k(ctx2, i, v, inverse=True)

    def test_psi_negative_modes_vanish(self, ctx2):
        v = apply_heisenberg(HeisenGen("a", 1, -1), vacuum(2))
        assert apply_psi_mode(ctx2, 1, -1, v).is_zero()
        assert apply_phi_mode(ctx2, 1, 1, v).is_zero()

    def test_psi_contraction_value(self, ctx2):
        # psi_{1,1} a_1(-1)|0> = (q - 1/q) [a_1(1), a_1(-1)] |0>
        v = apply_heisenberg(HeisenGen("a", 1, -1), vacuum(2))
        got = apply_psi_mode(ctx2, 1, 1, v)
        assert got == vacuum(2).scale(q_power(1) - q_power(-1))

    def test_phi_adds_creation(self, ctx2):
        got = apply_phi_mode(ctx2, 1, -1, vacuum(2))
        expected = apply_heisenberg(HeisenGen("a", 1, -1), vacuum(2)).scale(
            q_power(-1) - q_power(1)
        )
        assert got == expected

    def test_k_eigenvalues(self, ctx2):
        n = 2
        for i in range(1, n + 1):
            w = hw_vector(n, i)
            for j in range(1, n + 1):
                expected = q_power(d_exp(n, j)) if i == j else ONE
                assert apply_k(ctx2, j, w) == w.scale(expected)


class TestAffineOperator:
    def test_kills_highest_weight_family(self, ctx2):
        for i in (0, 1, 2):
            assert apply_e0(ctx2, hw_vector(2, i)).is_zero()

    def test_nonzero_on_highest_root_translate(self, ctx2):
        v = translate(vacuum(2), theta(2), zero_tilde(2))
        got = apply_e0(ctx2, v)
        expected = vacuum(2).scale(-(q_power(Fraction(-3, 2)) + q_power(Fraction(-5, 2))))
        assert got == expected

    def test_bracket_parameters(self, ctx2):
        assert len(default_e0_brackets(2)) == 2
        assert len(default_e0_brackets(3)) == 4
        assert default_e0_brackets(2) == [q_power(-1), ONE]
        with pytest.raises(ValueError):
            apply_e0(ctx2, vacuum(2), brackets=[ONE])

    def test_chevalley_raising(self, ctx2):
        # e_i = x^+_{i,0}: annihilates every member of the vacuum family
        for i in (0, 1, 2):
            w = hw_vector(2, i)
            for j in (1, 2):
                assert chevalley_e(ctx2, j, w).is_zero()


class TestCacheConsistency:
    def test_repeat_application_identical(self, ctx2):
        v = apply_heisenberg(HeisenGen("b", 1, -2), hw_vector(2, 1))
        first = apply_x_mode(ctx2, -1, 1, 1, v)
        second = apply_x_mode(ctx2, -1, 1, 1, v)
        assert first == second
        fresh = apply_x_mode(VertexContext(2), -1, 1, 1, v)
        assert first == fresh
