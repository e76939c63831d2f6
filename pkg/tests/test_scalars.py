"""Exact-scalar field, q-combinatorics, and the canonical text form."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qvertex.scalars import (
    ExactScalar,
    HalfExponent,
    ONE,
    ZERO,
    classical_limit,
    parse_scalar,
    q_binom,
    q_bracket,
    q_int,
    q_int_frac,
    q_power,
    scalar_text,
)

half = HalfExponent.half
quarter = HalfExponent.quarter


# ---------------------------------------------------------------------------
# HalfExponent
# ---------------------------------------------------------------------------


class TestHalfExponent:
    def test_constructors_agree(self):
        assert HalfExponent.of_int(3) == half(6) == quarter(12)
        assert HalfExponent.coerce(2) == half(4)
        assert HalfExponent.coerce(Fraction(1, 2)) == half(1)
        assert HalfExponent.coerce(Fraction(-3, 4)) == quarter(-3)

    def test_coerce_rejects_off_grid(self):
        with pytest.raises(ValueError):
            HalfExponent.coerce(Fraction(1, 3))

    def test_doubled_view(self):
        assert half(3).doubled == 3
        assert HalfExponent.of_int(-2).doubled == -4
        with pytest.raises(ValueError):
            _ = quarter(1).doubled

    def test_arithmetic(self):
        assert half(1) + half(1) == HalfExponent.of_int(1)
        assert half(3) - 1 == half(1)
        assert -quarter(5) == quarter(-5)
        assert half(1) * 4 == HalfExponent.of_int(2)
        assert half(1) * half(1) == quarter(1)
        assert quarter(1) * 2 == half(1)

    def test_product_leaving_grid_rejected(self):
        with pytest.raises(ValueError):
            _ = quarter(1) * quarter(1)

    def test_order_and_str(self):
        assert quarter(1) < half(1) < 1 <= HalfExponent.of_int(1)
        assert str(HalfExponent.of_int(2)) == "2"
        assert str(half(3)) == "3/2"
        assert str(quarter(-1)) == "-1/4"


# ---------------------------------------------------------------------------
# ExactScalar canonical representation
# ---------------------------------------------------------------------------


def s_pow(k):
    return ExactScalar.s_power(k)


class TestExactScalar:
    def test_zero_canonical(self):
        assert (ONE - ONE).num == ()
        assert (ONE - ONE).den == (1,)
        assert (ONE - ONE) == ZERO
        assert ZERO.is_zero()

    def test_content_and_sign_normalization(self):
        a = ExactScalar((2, 4), (-2,))
        assert a == ExactScalar((-1, -2), (1,))

    def test_common_s_power_stripped(self):
        a = ExactScalar((0, 0, 1, 1), (0, 2))
        b = ExactScalar((0, 1, 1), (2,))
        assert a == b

    def test_poly_gcd_reduction(self):
        # (q-1)(q+1) / (q-1) = q+1   [in the s variable: s^4 plays q]
        q = q_power(1)
        num = (q - ONE) * (q + ONE)
        frac = num / (q - ONE)
        assert frac == q + ONE

    def test_field_ops(self):
        a = q_power(half(1)) + ONE
        b = q_power(1) - q_power(-1)
        assert (a * b) / b == a
        assert a - a == ZERO
        assert (a / a) == ONE
        assert a.inverse() * a == ONE

    def test_pow(self):
        a = q_power(half(1)) + q_power(half(-1))
        assert a**0 == ONE
        assert a**2 == a * a
        assert a**-1 == a.inverse()
        assert a**-2 == (a * a).inverse()

    def test_zero_division_guards(self):
        with pytest.raises(ZeroDivisionError):
            ZERO.inverse()
        with pytest.raises(ZeroDivisionError):
            ExactScalar((1,), ())


# ---------------------------------------------------------------------------
# q-powers, brackets, q-integers
# ---------------------------------------------------------------------------


class TestQCombinat:
    def test_q_power_grid(self):
        assert q_power(1) == s_pow(4)
        assert q_power(half(1)) == s_pow(2)
        assert q_power(quarter(-3)) == s_pow(-3)
        assert q_power(0) == ONE
        assert q_power(half(1)) * q_power(half(1)) == q_power(1)

    def test_q_int_short_base(self):
        # base q**(1/2): [2] = q^(1/2)+q^(-1/2), [3] = q+1+q^(-1)
        assert q_int(2, quarter(1)) == q_power(half(1)) + q_power(half(-1))
        assert q_int(3, quarter(1)) == q_power(1) + ONE + q_power(-1)

    def test_q_int_plain_base(self):
        # base q: [2] = q+q^(-1), [3] = q^2+1+q^(-2)
        assert q_int(2, half(1)) == q_power(1) + q_power(-1)
        assert q_int(3, half(1)) == q_power(2) + ONE + q_power(-2)

    def test_q_int_antisymmetric_and_zero(self):
        assert q_int(0, half(1)) == ZERO
        for m in range(1, 7):
            assert q_int(-m, half(1)) == -q_int(m, half(1))
            assert q_int(-m, quarter(1)) == -q_int(m, quarter(1))

    def test_q_int_zero_base_rejected(self):
        with pytest.raises(ValueError):
            q_int(2, 0)

    def test_q_int_recurrence(self):
        # [m+1] = q_i*[m] + q_i^(-m) at base q_i = q**(2d)
        for d in (quarter(1), half(1), HalfExponent.of_int(1)):
            qi = q_power(d * 2)
            for m in range(0, 13):
                lhs = q_int(m + 1, d)
                rhs = qi * q_int(m, d) + qi ** (-m)
                assert lhs == rhs, (d, m)

    def test_q_bracket(self):
        assert q_bracket(0) == ZERO
        assert q_bracket(1) == ONE
        assert q_bracket(2) == q_power(1) + q_power(-1)
        # [1/2] = 1/(q^(1/2)+q^(-1/2))
        expected = (q_power(half(1)) + q_power(half(-1))).inverse()
        assert q_bracket(half(1)) == expected
        assert q_int_frac(half(1), 1) == expected
        assert q_int_frac(half(1), 2) == ONE

    def test_q_bracket_matches_q_int_on_integers(self):
        for m in range(-5, 6):
            assert q_bracket(m) == q_int(m, half(1))


class TestQBinom:
    def test_frozen_values(self):
        assert q_binom(2, 1, quarter(1)) == q_power(half(1)) + q_power(half(-1))
        assert q_binom(3, 1, quarter(1)) == q_power(1) + ONE + q_power(-1)
        assert q_binom(3, 2, quarter(1)) == q_power(1) + ONE + q_power(-1)
        assert q_binom(2, 1, half(1)) == q_power(1) + q_power(-1)

    def test_edges(self):
        for m in range(5):
            assert q_binom(m, 0, half(1)) == ONE
            assert q_binom(m, m, half(1)) == ONE
        with pytest.raises(ValueError):
            q_binom(2, 3, half(1))
        with pytest.raises(ValueError):
            q_binom(2, -1, half(1))

    def test_symmetry(self):
        for d in (quarter(1), half(1)):
            for m in range(9):
                for r in range(m + 1):
                    assert q_binom(m, r, d) == q_binom(m, m - r, d)

    def test_pascal_recurrence(self):
        # [m r] = q_i^r [m-1 r] + q_i^(r-m) [m-1 r-1]
        d = half(1)
        qi = q_power(1)
        for m in range(1, 7):
            for r in range(1, m):
                lhs = q_binom(m, r, d)
                rhs = qi**r * q_binom(m - 1, r, d) + qi ** (r - m) * q_binom(m - 1, r - 1, d)
                assert lhs == rhs, (m, r)


class TestClassicalLimit:
    def test_integers(self):
        from math import comb

        for d in (quarter(1), half(1), HalfExponent.of_int(1)):
            for m in range(0, 9):
                assert classical_limit(q_int(m, d)) == m
        assert classical_limit(q_binom(4, 2, half(1))) == comb(4, 2) == 6
        assert classical_limit(q_binom(5, 2, quarter(1))) == comb(5, 2)

    def test_fractions(self):
        a = ExactScalar.from_fraction(Fraction(3, 7))
        assert classical_limit(a) == Fraction(3, 7)

    def test_pole(self):
        pole = ONE / (q_power(1) - q_power(-1))
        with pytest.raises(ValueError, match="pole at q = 1"):
            classical_limit(pole)


# ---------------------------------------------------------------------------
# text form
# ---------------------------------------------------------------------------


class TestText:
    def test_frozen_forms(self):
        assert scalar_text(ZERO) == "0"
        assert scalar_text(ONE) == "(1)"
        assert scalar_text(q_int(3, half(1))) == "(q^2+1+q^-2)"
        assert scalar_text(q_int(3, quarter(1))) == "(q+1+q^-1)"
        assert scalar_text(q_bracket(half(1))) == "(q^1/2+q^-1/2)^-1"
        assert scalar_text(-ONE) == "(-1)"
        assert scalar_text(q_power(quarter(-3))) == "(q^-3/4)"

    def test_general_fraction_form(self):
        a = (q_power(1) + ONE) / (q_power(half(1)) + q_power(1) + ONE)
        text = scalar_text(a)
        assert text == "(q+1)*(q+q^1/2+1)^-1"
        assert parse_scalar(text) == a

    def test_round_trip_frozen(self):
        cases = [
            ZERO,
            ONE,
            -ONE,
            q_power(2),
            q_power(quarter(1)),
            q_int(5, half(1)),
            q_int(4, quarter(1)),
            q_bracket(half(1)),
            -q_bracket(half(3)),
            (q_power(1) - q_power(-1)).inverse(),
            q_binom(4, 2, half(1)) / q_int(7, quarter(1)),
        ]
        for value in cases:
            assert parse_scalar(scalar_text(value)) == value, scalar_text(value)

    def test_parser_rejects_garbage(self):
        for bad in ["", "q+", "(q", "(q))", "3//2", "(1)^-2x"]:
            with pytest.raises(ValueError):
                parse_scalar(bad)


# ---------------------------------------------------------------------------
# property tests: field axioms and text round-trip on random values
# ---------------------------------------------------------------------------


@st.composite
def scalars(draw):
    # Small Laurent polynomials in s with a nonzero denominator.
    def poly(allow_zero):
        coeffs = draw(st.lists(st.integers(-4, 4), min_size=1, max_size=4))
        if not allow_zero and not any(coeffs):
            coeffs[0] = 1
        return coeffs

    num = poly(allow_zero=True)
    den = poly(allow_zero=False)
    shift = draw(st.integers(-3, 3))
    base = ExactScalar(tuple(num), tuple(den))
    return base * ExactScalar.s_power(shift)


@settings(max_examples=60, deadline=None)
@given(scalars(), scalars(), scalars())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a - a == ZERO
    if not a.is_zero():
        assert a * a.inverse() == ONE


@settings(max_examples=60, deadline=None)
@given(scalars())
def test_text_round_trip(a):
    assert parse_scalar(scalar_text(a)) == a
