"""Truncated Laurent series over the exact scalar field.

A :class:`TruncatedSeries` stores finitely many exact coefficients of a
series in one formal variable, together with an exclusive truncation bound:
coefficients at exponents below ``trunc`` are exact, everything above is
unknown.  Operations propagate the bound honestly (a product of two series
is only known as far as the inputs allow), so an equality check between two
series is an exact statement about every coefficient in the shared window.

The module's reason for existing is the pair :func:`qpow_exp` /
:func:`qpow_product` -- two deliberately independent constructions of the
q-shifted power

    (1 - z)^a_{q^2}  :=  exp( - sum_{k>=1} [a k] / (k [k]) z^k )
                      =  (z q^{1-a}; q^2)_inf / (z q^{1+a}; q^2)_inf

(with [x] the balanced q-bracket at base q and a on the quarter-exponent
grid).  One route exponentiates the explicit logarithm; the other multiplies
the two infinite q-Pochhammer factors via their functional-equation
recursions.  Their agreement, coefficient by coefficient, is one of the
verifier's cross-checks, so the two implementations must not share code.
"""

from __future__ import annotations

from .scalars import ExactScalar, HalfExponent, ONE, ZERO, q_bracket, q_power

__all__ = [
    "TruncatedSeries",
    "series_add",
    "series_sub",
    "series_mul",
    "series_inv",
    "series_scale",
    "series_scale_var",
    "series_shift",
    "series_truncate",
    "series_coeff",
    "series_equal",
    "geometric_series",
    "qpow_exp",
    "qpow_product",
]


class TruncatedSeries:
    """Finitely many exact coefficients of a Laurent series in one variable.

    ``coeffs`` maps integer exponents to nonzero :class:`ExactScalar`
    values; every exponent in the map is below ``trunc``.  The series is
    exactly known on exponents < ``trunc`` and unknown at or above it.
    """

    __slots__ = ("coeffs", "trunc")

    def __init__(self, coeffs: dict, trunc: int):
        clean = {}
        for e, c in coeffs.items():
            if e >= trunc:
                raise ValueError(f"coefficient at {e} is at or above the truncation {trunc}")
            if not c.is_zero():
                clean[e] = c
        self.coeffs = clean
        self.trunc = trunc

    @classmethod
    def one(cls, trunc: int) -> "TruncatedSeries":
        return cls({0: ONE}, trunc)

    @classmethod
    def zero(cls, trunc: int) -> "TruncatedSeries":
        return cls({}, trunc)

    def order(self) -> int:
        """Lowest exponent carrying a nonzero coefficient.

        For the zero series the truncation bound is returned: as far as the
        series is known, its support starts no earlier than there.
        """
        return min(self.coeffs) if self.coeffs else self.trunc

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.trunc == other.trunc and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.trunc, tuple(sorted(self.coeffs.items()))))

    def __repr__(self):
        if not self.coeffs:
            body = "0"
        else:
            body = " + ".join(f"({self.coeffs[e]})*z^{e}" for e in sorted(self.coeffs))
        return f"<series {body} + O(z^{self.trunc})>"

    # operator sugar over the module functions
    def __add__(self, other):
        return series_add(self, other)

    def __sub__(self, other):
        return series_sub(self, other)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return series_scale(self, ExactScalar.coerce(other))

    __rmul__ = __mul__

    def __neg__(self):
        return series_scale(self, ExactScalar.from_int(-1))


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    trunc = min(a.trunc, b.trunc)
    out = {}
    for e, c in a.coeffs.items():
        if e < trunc:
            out[e] = c
    for e, c in b.coeffs.items():
        if e < trunc:
            out[e] = out.get(e, ZERO) + c
    return TruncatedSeries(out, trunc)


def series_sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return series_add(a, series_scale(b, ExactScalar.from_int(-1)))


def series_scale(a: TruncatedSeries, s: ExactScalar) -> TruncatedSeries:
    if s.is_zero():
        return TruncatedSeries({}, a.trunc)
    return TruncatedSeries({e: s * c for e, c in a.coeffs.items()}, a.trunc)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    # unknown tails enter the product at a.trunc + b.order() and
    # b.trunc + a.order(); everything below both is exact
    trunc = min(a.trunc + b.order(), b.trunc + a.order())
    buckets: dict = {}
    for e1, c1 in a.coeffs.items():
        for e2, c2 in b.coeffs.items():
            e = e1 + e2
            if e < trunc:
                buckets.setdefault(e, []).append(c1 * c2)
    out = {e: ExactScalar.sum_terms(terms) for e, terms in buckets.items()}
    return TruncatedSeries(out, trunc)


def series_inv(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse; requires a nonzero series.

    If ``a`` has order m and is known below ``trunc``, the inverse has
    order -m and is known below ``trunc - 2 m``.
    """
    if a.is_zero():
        raise ZeroDivisionError("inverse of a zero series")
    m = a.order()
    n = a.trunc - m  # number of known unit coefficients
    unit = [ZERO] * n
    for e, c in a.coeffs.items():
        unit[e - m] = c
    inv0 = unit[0].inverse()
    inv = [inv0]
    for k in range(1, n):
        acc = ZERO
        for j in range(1, k + 1):
            if not unit[j].is_zero():
                acc = acc + unit[j] * inv[k - j]
        inv.append(-inv0 * acc)
    return TruncatedSeries({k - m: c for k, c in enumerate(inv)}, a.trunc - 2 * m)


def series_scale_var(a: TruncatedSeries, c) -> TruncatedSeries:
    """Substitute z -> q**c z, with c on the quarter-exponent grid."""
    c = HalfExponent.coerce(c)
    return TruncatedSeries({e: q_power(c * e) * v for e, v in a.coeffs.items()}, a.trunc)


def series_shift(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """Multiply by z**k."""
    return TruncatedSeries({e + k: v for e, v in a.coeffs.items()}, a.trunc + k)


def series_truncate(a: TruncatedSeries, trunc: int) -> TruncatedSeries:
    if trunc > a.trunc:
        raise ValueError(f"cannot extend knowledge from {a.trunc} to {trunc}")
    return TruncatedSeries({e: v for e, v in a.coeffs.items() if e < trunc}, trunc)


def series_coeff(a: TruncatedSeries, e: int) -> ExactScalar:
    if e >= a.trunc:
        raise ValueError(f"coefficient at {e} is beyond the truncation {a.trunc}")
    return a.coeffs.get(e, ZERO)


def series_equal(a: TruncatedSeries, b: TruncatedSeries, upto: int | None = None) -> bool:
    """Exact equality of every coefficient in the shared known window."""
    bound = min(a.trunc, b.trunc)
    if upto is not None:
        bound = min(bound, upto)
    for e, c in a.coeffs.items():
        if e < bound and not (b.coeffs.get(e, ZERO) == c):
            return False
    for e, c in b.coeffs.items():
        if e < bound and e not in a.coeffs and not c.is_zero():
            return False
    return True


def geometric_series(ratio: ExactScalar, trunc: int) -> TruncatedSeries:
    """1/(1 - ratio*z) as a power series."""
    out = {}
    acc = ONE
    for k in range(trunc):
        out[k] = acc
        acc = acc * ratio
    return TruncatedSeries(out, trunc)


# ---------------------------------------------------------------------------
# q-shifted powers, two independent routes
# ---------------------------------------------------------------------------


def qpow_exp(a, trunc: int) -> TruncatedSeries:
    """(1 - z)^a_{q^2} via its logarithm.

    log = -sum_{k>=1} [a k] / (k [k]) z^k, exponentiated with the standard
    derivative recursion m e_m = sum_{k=1..m} k l_k e_{m-k}.
    """
    a = HalfExponent.coerce(a)
    logc = [ZERO]  # l_0 unused
    for k in range(1, trunc):
        term = q_bracket(a * k) / (ExactScalar.from_int(k) * q_bracket(k))
        logc.append(-term)
    coeffs = [ONE]
    for m in range(1, trunc):
        acc = ExactScalar.sum_terms(
            ExactScalar.from_int(k) * logc[k] * coeffs[m - k]
            for k in range(1, m + 1)
            if not logc[k].is_zero()
        )
        coeffs.append(acc / ExactScalar.from_int(m))
    return TruncatedSeries({k: c for k, c in enumerate(coeffs)}, trunc)


def _pochhammer_factor(exponent: HalfExponent, trunc: int, inverse: bool) -> TruncatedSeries:
    """(z q^e; q^2)_inf, or its reciprocal, via the functional equation.

    f(z) = (1 - z q^e) f(z q^2) gives the direct factor the recursion
    n_k = -q^{e + 2(k-1)} n_{k-1} / (1 - q^{2k}); the reciprocal satisfies
    g(z)(1 - z q^e) = g(z q^2), giving d_k = q^e d_{k-1} / (1 - q^{2k}).
    """
    coeffs = [ONE]
    for k in range(1, trunc):
        denom = ONE - q_power(2 * k)
        if inverse:
            step = q_power(exponent) / denom
        else:
            step = -q_power(exponent + 2 * (k - 1)) / denom
        coeffs.append(step * coeffs[k - 1])
    return TruncatedSeries({k: c for k, c in enumerate(coeffs)}, trunc)


def qpow_product(a, trunc: int) -> TruncatedSeries:
    """(1 - z)^a_{q^2} as (z q^{1-a}; q^2)_inf / (z q^{1+a}; q^2)_inf."""
    a = HalfExponent.coerce(a)
    one = HalfExponent.of_int(1)
    numer = _pochhammer_factor(one - a, trunc, inverse=False)
    denom = _pochhammer_factor(one + a, trunc, inverse=True)
    return series_mul(numer, denom)
