"""Multivariate Laurent polynomial arithmetic."""

import pytest

from qvertex.multipoly import MultiPoly
from qvertex.scalars import ExactScalar, ONE, ZERO, q_power

VARS = ("x", "y")


def x():
    return MultiPoly.var(VARS, "x")


def y():
    return MultiPoly.var(VARS, "y")


class TestMultiPoly:
    def test_ring_ops(self):
        p = (x() + y()) * (x() - y())
        q = x() * x() - y() * y()
        assert p == q
        assert (p - q).is_zero()

    def test_scalar_coefficients(self):
        p = q_power(1) * x() + q_power(-1) * x()
        assert p.coeff((1, 0)) == q_power(1) + q_power(-1)
        assert p.coeff((0, 0)) == ZERO

    def test_laurent_exponents(self):
        inv = MultiPoly.var(VARS, "x", -1)
        assert (inv * x()) == MultiPoly.const(VARS, 1)

    def test_var_mismatch_rejected(self):
        with pytest.raises(ValueError):
            x() + MultiPoly.var(("x", "z"), "z")
        with pytest.raises(ValueError):
            MultiPoly(VARS, {(1,): ONE})

    def test_permute_vars(self):
        p = x() * x() + 2 * y()
        swapped = p.permute_vars({"x": "y", "y": "x"})
        assert swapped == y() * y() + 2 * x()
        # permuting a subset leaves the rest alone
        three = ("x", "y", "z")
        p3 = MultiPoly.var(three, "x") * MultiPoly.var(three, "z")
        assert p3.permute_vars({"x": "y", "y": "x"}) == MultiPoly.var(three, "y") * MultiPoly.var(
            three, "z"
        )
        with pytest.raises(ValueError):
            p.permute_vars({"x": "y"})

    def test_substitute_scalar(self):
        p = x() * x() - y()
        at2 = p.substitute_scalar("x", 2)
        assert at2.vars == ("y",)
        assert at2 == MultiPoly.const(("y",), 4) - MultiPoly.var(("y",), "y")
        # Laurent substitution uses the inverse
        inv = MultiPoly.var(VARS, "x", -2)
        val = inv.substitute_scalar("x", q_power(1))
        assert val == MultiPoly.const(("y",), q_power(-2))

    def test_neg_and_int_coercion(self):
        p = x() - 1
        assert -p == 1 - x()
        assert (p + 1) == x()
