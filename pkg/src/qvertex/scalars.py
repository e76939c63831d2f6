"""Exact scalar arithmetic over the rational function field of q**(1/4).

Every coefficient in this package lives in the field Q(s) with s**4 = q:
inner products on the weight lattice produce half-integer powers of q, and
the group-sector rescalings of the vertex operators contribute exact
quarter powers, so the fourth root is the coarsest generator that keeps
all arithmetic exact.

Two public value types:

* :class:`HalfExponent` -- an exact exponent of q on the quarter-integer
  grid (1/4)Z.  Named for its dominant use (lattice inner products are
  half-integers); stored as an integer count of quarters.
* :class:`ExactScalar` -- a reduced fraction of integer-coefficient
  polynomials in s = q**(1/4).  Equality of values is equality of the
  canonical representation, so exact zero tests never involve floating
  point or truncation.

q-combinatorics built on top: :func:`q_int` (balanced q-integers at a
chosen base), :func:`q_int_frac` (q-bracket of a half-integer multiple),
:func:`q_binom` (Gaussian binomials), and :func:`classical_limit`
(evaluation at q = 1).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

__all__ = [
    "HalfExponent",
    "ExactScalar",
    "ZERO",
    "ONE",
    "q_power",
    "q_int",
    "q_int_frac",
    "q_bracket",
    "q_binom",
    "q_factorial",
    "classical_limit",
    "scalar_text",
    "parse_scalar",
]


# ---------------------------------------------------------------------------
# dense integer polynomials in s = q**(1/4)
#
# Representation: tuple of ints, lowest degree first, no trailing zeros;
# the zero polynomial is ().  These helpers are module-private plumbing for
# ExactScalar; they never allocate ExactScalar values themselves.
# ---------------------------------------------------------------------------


def _trim(c: list) -> tuple:
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def _padd(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _pneg(a: tuple) -> tuple:
    return tuple(-x for x in a)


def _psub(a: tuple, b: tuple) -> tuple:
    return _padd(a, _pneg(b))


_KRONECKER_CUTOFF = 2500
_STRIDE_CUTOFF = 400


def _stride_split(p: tuple) -> tuple:
    """(low, g): support(p) is contained in low + g*Z; g == 0 for monomials.

    The coefficients here are Laurent data in s = q**(1/4), so supports
    routinely live on a coarse arithmetic progression (integer powers of q
    occupy every fourth slot, q**2 powers every eighth); compressing by the
    stride before any quadratic or packed work shrinks it by that factor.
    """
    low = 0
    while not p[low]:
        low += 1
    i = low + 1
    n = len(p)
    while i < n and not p[i]:
        i += 1
    if i == n:
        return low, 0
    first_gap = i - low
    # The stride divides the first gap; divisors that clear every other
    # residue class are exactly the divisors of the stride, so the largest
    # passing one is the stride itself.  The residue scans ride on slices.
    for d in range(first_gap, 1, -1):
        if first_gap % d:
            continue
        if not any(any(p[low + r :: d]) for r in range(1, d)):
            return low, d
    return low, 1


def _pmul_dense(a: tuple, b: tuple) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _pmul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    if len(a) == 1:
        c = a[0]
        return tuple(c * x for x in b)
    if len(b) == 1:
        c = b[0]
        return tuple(c * x for x in a)
    if len(a) * len(b) < _STRIDE_CUTOFF:
        return _trim(_pmul_dense(a, b))
    la, ga = _stride_split(a)
    lb, gb = _stride_split(b)
    if ga == 0:
        return (0,) * la + tuple(a[la] * y for y in b)
    if gb == 0:
        return (0,) * lb + tuple(x * b[lb] for x in a)
    g = gcd(ga, gb)
    if g == 1 and not la and not lb:
        ca, cb = a, b
    else:
        ca, cb = a[la::g], b[lb::g]
    if len(ca) * len(cb) >= _KRONECKER_CUTOFF:
        prod = _pmul_kronecker(ca, cb)
    else:
        prod = _pmul_dense(ca, cb)
    if ca is a:
        return _trim(prod)
    out = [0] * (len(a) + len(b) - 1)
    base = la + lb
    for k, x in enumerate(prod):
        out[base + k * g] = x
    return _trim(out)


@lru_cache(maxsize=1024)
def _pnorm(a: tuple) -> int:
    """max |coefficient|, cached because every packed path re-asks for it."""
    return max(abs(x) for x in a)


@lru_cache(maxsize=1024)
def _pack_signed(a: tuple, bits: int) -> int:
    """a(2**bits), built from byte blobs instead of per-coefficient shifts.

    ``bits`` must be a multiple of 8 and every ``|coefficient|`` must fit in
    that many bits.  Positive and negative parts are assembled separately so
    each is a plain concatenation of fixed-width little-endian digits.
    """
    width = bits >> 3
    pos = bytearray(width * len(a))
    neg = None
    for i, x in enumerate(a):
        if x > 0:
            pos[i * width : i * width + width] = x.to_bytes(width, "little")
        elif x:
            if neg is None:
                neg = bytearray(width * len(a))
            neg[i * width : i * width + width] = (-x).to_bytes(width, "little")
    value = int.from_bytes(pos, "little")
    if neg is not None:
        value -= int.from_bytes(neg, "little")
    return value


def _unpack_balanced(value: int, bits: int, count: int) -> list:
    """Read ``count`` balanced base-2**bits digits out of ``value``.

    Inverse of the packing used by the Kronecker paths: digits are taken
    from the byte blob of ``|value|`` with a running borrow, which is exact
    whenever the true coefficients are strictly below 2**(bits-2) in
    absolute value (the callers' digit-width choices guarantee that).
    """
    width = bits >> 3
    sign = 1
    if value < 0:
        sign = -1
        value = -value
    blob = memoryview(value.to_bytes(width * count + width, "little"))
    out = []
    carry = 0
    half = 1 << (bits - 1)
    full = 1 << bits
    from_bytes = int.from_bytes
    for i in range(count):
        d = from_bytes(blob[i * width : i * width + width], "little") + carry
        if d >= half:
            d -= full
            carry = 1
        else:
            carry = 0
        out.append(sign * d)
    return out


def _pmul_kronecker(a: tuple, b: tuple) -> tuple:
    # Pack each polynomial into one big integer (Kronecker substitution) so
    # the convolution rides on CPython's fast big-integer multiply.  The
    # digit width is chosen so every signed product coefficient fits in a
    # balanced digit, rounded to whole bytes for the blob packers.
    bound = _pnorm(a) * _pnorm(b) * min(len(a), len(b))
    bits = (bound.bit_length() + 10) & ~7
    prod = _pack_signed(a, bits) * _pack_signed(b, bits)
    return _trim(_unpack_balanced(prod, bits, len(a) + len(b) - 1))


def _content(a: tuple) -> int:
    g = 0
    for x in a:
        g = gcd(g, x)
        if g == 1:
            return 1
    return g


def _low_zeros(a: tuple) -> int:
    k = 0
    for x in a:
        if x:
            break
        k += 1
    return k


_DIV_PACKED_CUTOFF = 4096


def _pdiv_long(a: tuple, b: tuple) -> tuple | None:
    """Exact quotient a / b over Z by long division from the top.

    A non-divisible leading step or a nonzero final remainder both report
    failure.  (For the primitive polynomials this is called on,
    divisibility over Q and over Z agree.)
    """
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    q = [0] * (len(a) - db)
    for top in range(len(r) - 1, db - 1, -1):
        c = r[top]
        if not c:
            continue
        if c % lb:
            return None
        m = c // lb
        q[top - db] = m
        for i in range(db):
            r[top - db + i] -= m * b[i]
        r[top] = 0
    if any(r[:db]):
        return None
    return _trim(q)


def _pdiv_packed(a: tuple, b: tuple) -> tuple | None:
    # When b divides a, the identity a(xi) = q(xi) * b(xi) holds at every
    # evaluation point, so a nonzero integer remainder refutes divisibility
    # outright, and a reconstructed quotient candidate is confirmed by one
    # packed multiply.  Anything inconclusive (digit overflow, a vanishing
    # b(xi)) escalates the digit width and ultimately falls back to long
    # division, which decides.
    norm = max(_pnorm(a), _pnorm(b))
    bits = (norm.bit_length() + len(b).bit_length() + 18) & ~7
    for _ in range(3):
        vb = _pack_signed(b, bits)
        if vb:
            va = _pack_signed(a, bits)
            vq, rem = divmod(va, vb)
            if rem:
                return None
            q = _reconstruct(vq, bits, len(a) - len(b) + 1)
            if q and _pmul(q, b) == a:
                return q
        bits *= 2
    return _pdiv_long(a, b)


def _pdiv_exact(a: tuple, b: tuple) -> tuple | None:
    """Exact quotient a / b over Z, or None when b does not divide a.

    Small cases go straight to long division.  Large ones are first
    stride-compressed (divisibility transfers both ways between Z[x] and
    the subring Z[x**g] the supports live in) and then divided on packed
    big integers.
    """
    if not a:
        return ()
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return None
    if len(a) * len(b) < _STRIDE_CUTOFF:
        return _pdiv_long(a, b)
    la, ga = _stride_split(a)
    lb, gb = _stride_split(b)
    if la < lb:
        return None
    if gb == 0:
        c = b[lb]
        out = []
        for x in a[lb:]:
            if x % c:
                return None
            out.append(x // c)
        return tuple(out)
    if ga == 0:
        return None
    g = gcd(ga, gb)
    if g == 1 and not la and not lb:
        if len(a) * len(b) < _DIV_PACKED_CUTOFF:
            return _pdiv_long(a, b)
        return _pdiv_packed(a, b)
    qc = _pdiv_exact(a[la::g], b[lb::g])
    if qc is None:
        return None
    out = [0] * (len(a) - len(b) + 1)
    base = la - lb
    for k, x in enumerate(qc):
        out[base + k * g] = x
    return tuple(out)


def _primitive(a: tuple) -> tuple:
    c = _content(a)
    if c in (0, 1):
        return a
    return tuple(x // c for x in a)


def _pgcd_prs(a: tuple, b: tuple) -> tuple:
    """Primitive polynomial gcd via a pseudo-remainder sequence."""
    a = _primitive(a)
    b = _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        # pseudo-remainder of a by b
        lb = b[-1]
        r = list(a)
        db = len(b) - 1
        while len(r) - 1 >= db:
            if not r[-1]:
                r.pop()
                continue
            lr = r[-1]
            g = gcd(lr, lb)
            scale = lb // g
            mul = lr // g
            if scale != 1:
                r = [x * scale for x in r]
            d = len(r) - 1 - db
            for i in range(len(b)):
                r[d + i] -= mul * b[i]
            r.pop()
        a, b = b, _primitive(_trim(r))
    if a and a[-1] < 0:
        a = _pneg(a)
    return a


def _reconstruct(value: int, bits: int, length_hint: int) -> tuple:
    """Balanced base-2**bits digits of ``value``, or () when too long.

    The digit count bound (``length_hint + 2``) is how the heuristic
    callers detect that an evaluation width was too narrow; the byte-blob
    reader needs one digit beyond the unsigned count to absorb the final
    borrow.
    """
    if not value:
        return ()
    needed = abs(value).bit_length() // bits + 2
    digits = _trim(_unpack_balanced(value, bits, needed))
    if len(digits) > length_hint + 2:
        return ()
    return digits


def _pgcd_core(a0: tuple, b0: tuple) -> tuple:
    # Heuristic gcd: evaluate both primitives at a power-of-two point (so
    # evaluation is the byte packer and digit reconstruction stays on
    # shift-friendly integers), take the integer gcd, reconstruct, verify
    # by exact division.  Pseudo-remainder fallback; the verification step
    # makes the fast path sound.
    norm = max(_pnorm(a0), _pnorm(b0))
    bits = (norm.bit_length() + 10) & ~7
    for _ in range(6):
        va = _pack_signed(a0, bits)
        vb = _pack_signed(b0, bits)
        vg = gcd(va, vb)
        if vg:
            cand = _primitive(_reconstruct(vg, bits, min(len(a0), len(b0))))
            if cand:
                if cand[-1] < 0:
                    cand = _pneg(cand)
                if _pdiv_exact(a0, cand) is not None and _pdiv_exact(b0, cand) is not None:
                    return cand
        bits *= 2
    return _pgcd_prs(a0, b0)


def _pgcd(a: tuple, b: tuple) -> tuple:
    """gcd of integer polynomials, primitive with positive leading term.

    The pair is first reduced by its shared monomial factor and exponent
    stride (the gcd of two polynomials supported on x**m * Z[x**g] lives in
    the same subring, by invariance under the g-th roots of unity), then
    handed to the heuristic core.
    """
    if not a:
        return _primitive(b) if not b or b[-1] > 0 else _pneg(_primitive(b))
    if not b:
        return _primitive(a) if a[-1] > 0 else _pneg(_primitive(a))
    if len(a) == 1 or len(b) == 1:
        g = gcd(_content(a), _content(b))
        return (g,)
    a0 = _primitive(a)
    b0 = _primitive(b)
    la, ga = _stride_split(a0)
    lb, gb = _stride_split(b0)
    m = min(la, lb)
    if ga == 0 or gb == 0:
        return (0,) * m + (1,)
    g = gcd(ga, gb, la - m, lb - m)
    if g == 1 and not m:
        return _pgcd_core(a0, b0)
    core = _pgcd_core(a0[m::g], b0[m::g])
    out = [0] * (m + (len(core) - 1) * g + 1)
    for k, x in enumerate(core):
        out[m + k * g] = x
    return tuple(out)


# ---------------------------------------------------------------------------
# exponents on the quarter grid
# ---------------------------------------------------------------------------


class HalfExponent:
    """An exact exponent of q on the quarter-integer grid.

    Lattice inner products are half-integers, which is where the name comes
    from; the quarter resolution additionally covers the base q**(1/2)'s own
    square root (needed as a q-integer base parameter) and the exact
    q**(t/4) factors contributed by the group sector.  The value is
    ``quarters / 4``; ``doubled`` exposes the half-grid view (``value * 2``)
    and raises when the value genuinely needs quarters.
    """

    __slots__ = ("quarters",)

    def __init__(self, quarters: int):
        if not isinstance(quarters, int):
            raise TypeError("quarters must be an integer")
        self.quarters = quarters

    # -- constructors ------------------------------------------------------

    @classmethod
    def of_int(cls, n: int) -> "HalfExponent":
        return cls(4 * n)

    @classmethod
    def half(cls, k: int) -> "HalfExponent":
        """The exponent k/2."""
        return cls(2 * k)

    @classmethod
    def quarter(cls, k: int) -> "HalfExponent":
        """The exponent k/4."""
        return cls(k)

    @classmethod
    def coerce(cls, value) -> "HalfExponent":
        if isinstance(value, HalfExponent):
            return value
        if isinstance(value, int):
            return cls(4 * value)
        if isinstance(value, Fraction):
            q = value * 4
            if q.denominator != 1:
                raise ValueError(f"{value} is not on the quarter grid")
            return cls(q.numerator)
        raise TypeError(f"cannot coerce {value!r} to HalfExponent")

    # -- views -------------------------------------------------------------

    @property
    def doubled(self) -> int:
        if self.quarters % 2:
            raise ValueError("exponent is not a half-integer")
        return self.quarters // 2

    def as_fraction(self) -> Fraction:
        return Fraction(self.quarters, 4)

    def is_integer(self) -> bool:
        return self.quarters % 4 == 0

    def as_int(self) -> int:
        if self.quarters % 4:
            raise ValueError("exponent is not an integer")
        return self.quarters // 4

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        return HalfExponent(self.quarters + HalfExponent.coerce(other).quarters)

    __radd__ = __add__

    def __sub__(self, other):
        return HalfExponent(self.quarters - HalfExponent.coerce(other).quarters)

    def __rsub__(self, other):
        return HalfExponent(HalfExponent.coerce(other).quarters - self.quarters)

    def __neg__(self):
        return HalfExponent(-self.quarters)

    def __mul__(self, other):
        if isinstance(other, int):
            return HalfExponent(self.quarters * other)
        other = HalfExponent.coerce(other)
        prod = self.quarters * other.quarters
        if prod % 4:
            raise ValueError("product leaves the quarter grid")
        return HalfExponent(prod // 4)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, HalfExponent):
            return self.quarters == other.quarters
        if isinstance(other, (int, Fraction)):
            return self.as_fraction() == other
        return NotImplemented

    def __lt__(self, other):
        return self.quarters < HalfExponent.coerce(other).quarters

    def __le__(self, other):
        return self.quarters <= HalfExponent.coerce(other).quarters

    def __gt__(self, other):
        return self.quarters > HalfExponent.coerce(other).quarters

    def __ge__(self, other):
        return self.quarters >= HalfExponent.coerce(other).quarters

    def __hash__(self):
        return hash(("HalfExponent", self.quarters))

    def __repr__(self):
        return f"HalfExponent({self.quarters})"

    def __str__(self):
        q = self.quarters
        if q % 4 == 0:
            return str(q // 4)
        if q % 2 == 0:
            return f"{q // 2}/2"
        return f"{q}/4"


# ---------------------------------------------------------------------------
# scalars
# ---------------------------------------------------------------------------


class ExactScalar:
    """A reduced fraction of integer polynomials in s = q**(1/4).

    Representation invariants (maintained by every constructor):

    * ``num`` and ``den`` are dense integer coefficient tuples, lowest
      degree first, with no trailing zeros; the zero polynomial is ``()``.
    * ``den`` is nonzero; ``gcd(num, den) = 1`` including integer content
      and common powers of s; ``den``'s leading coefficient is positive.
    * zero is canonically ``((), (1,))``.

    Because the representation is canonical, ``==`` is exact value equality
    and ``is_zero`` is a constant-time test.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: tuple, den: tuple, _reduced: bool = False, _skip_pgcd: bool = False):
        if _reduced:
            self.num = num
            self.den = den
            return
        num = _trim(list(num))
        den = _trim(list(den))
        if not den:
            raise ZeroDivisionError("scalar with zero denominator")
        if not num:
            self.num = ()
            self.den = (1,)
            return
        # strip common powers of s
        k = min(_low_zeros(num), _low_zeros(den))
        if k:
            num = num[k:]
            den = den[k:]
        # integer content
        g = gcd(_content(num), _content(den))
        if den[-1] < 0:
            g = -g
        if g != 1:
            num = tuple(x // g for x in num)
            den = tuple(x // g for x in den)
        # polynomial gcd (skip when either side is a monomial: after the
        # content and s-power strips a monomial shares no further factor;
        # callers that have already cross-reduced may skip it outright)
        if (
            not _skip_pgcd
            and len(num) - _low_zeros(num) > 1
            and len(den) - _low_zeros(den) > 1
        ):
            g = _pgcd(num, den)
            if len(g) > 1:
                num = _pdiv_exact(num, g)
                den = _pdiv_exact(den, g)
                if den[-1] < 0:
                    num = _pneg(num)
                    den = _pneg(den)
        self.num = num
        self.den = den

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_int(cls, n: int) -> "ExactScalar":
        return cls((n,) if n else (), (1,), _reduced=True)

    @classmethod
    def from_fraction(cls, f) -> "ExactScalar":
        f = Fraction(f)
        return cls((f.numerator,) if f.numerator else (), (f.denominator,))

    @classmethod
    def s_power(cls, k: int) -> "ExactScalar":
        """The monomial s**k = q**(k/4), any integer k."""
        if k >= 0:
            return cls((0,) * k + (1,), (1,), _reduced=True)
        return cls((1,), (0,) * (-k) + (1,), _reduced=True)

    @staticmethod
    def coerce(value) -> "ExactScalar":
        out = ExactScalar._try_coerce(value)
        if out is None:
            raise TypeError(f"cannot coerce {value!r} to ExactScalar")
        return out

    @staticmethod
    def _try_coerce(value):
        if isinstance(value, ExactScalar):
            return value
        if isinstance(value, int):
            return ExactScalar.from_int(value)
        if isinstance(value, Fraction):
            return ExactScalar.from_fraction(value)
        return None

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == (1,) and self.den == (1,)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = ExactScalar._try_coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            num = _padd(self.num, other.num)
            if self.den == (1,):
                return ExactScalar(num, (1,), _reduced=True) if num else ZERO
            return ExactScalar(num, self.den)
        # combine over the least common denominator: running sums keep
        # structured denominators, so dividing out gcd(d1, d2) first keeps
        # the intermediate polynomials small
        d1, d2 = self.den, other.den
        if len(d1) > 1 and len(d2) > 1:
            g = _pgcd(d1, d2)
            if len(g) > 1:
                e1 = _pdiv_exact(d1, g)
                e2 = _pdiv_exact(d2, g)
                num = _padd(_pmul(self.num, e2), _pmul(other.num, e1))
                return ExactScalar(num, _pmul(d1, e2))
        num = _padd(_pmul(self.num, d2), _pmul(other.num, d1))
        return ExactScalar(num, _pmul(d1, d2))

    __radd__ = __add__

    @classmethod
    def sum_terms(cls, terms) -> "ExactScalar":
        """Sum an iterable of scalars over one running common denominator.

        Equivalent to repeated ``+`` but with a single canonical reduction
        at the end instead of one per step; the difference matters in
        series convolutions, whose partial sums carry large structured
        denominators.
        """
        num: tuple = ()
        den: tuple = (1,)
        for t in terms:
            t = cls.coerce(t)
            if t.is_zero():
                continue
            if t.den == den:
                num = _padd(num, t.num)
                continue
            g = _pgcd(den, t.den) if len(den) > 1 and len(t.den) > 1 else (1,)
            if len(g) > 1:
                scale = _pdiv_exact(t.den, g)
                num = _padd(_pmul(num, scale), _pmul(t.num, _pdiv_exact(den, g)))
                den = _pmul(den, scale)
            else:
                num = _padd(_pmul(num, t.den), _pmul(t.num, den))
                den = _pmul(den, t.den)
        if not num:
            return ZERO
        return cls(num, den)

    def __neg__(self):
        return ExactScalar(_pneg(self.num), self.den, _reduced=True)

    def __sub__(self, other):
        other = ExactScalar._try_coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return ExactScalar.coerce(other) + (-self)

    def __mul__(self, other):
        other = ExactScalar._try_coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        if self.is_one():
            return other
        if other.is_one():
            return self
        # Cross-reduce before multiplying: with canonical inputs, any common
        # factor of the product's sides already divides a cross pair, so the
        # product of the cross-reduced parts needs no polynomial gcd.
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if len(n1) > 1 and len(d2) > 1:
            g = _pgcd(n1, d2)
            if len(g) > 1:
                n1 = _pdiv_exact(n1, g)
                d2 = _pdiv_exact(d2, g)
        if len(n2) > 1 and len(d1) > 1:
            g = _pgcd(n2, d1)
            if len(g) > 1:
                n2 = _pdiv_exact(n2, g)
                d1 = _pdiv_exact(d1, g)
        return ExactScalar(_pmul(n1, n2), _pmul(d1, d2), _skip_pgcd=True)

    __rmul__ = __mul__

    def inverse(self) -> "ExactScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        # canonical input: the swap only needs the sign/content/s-power pass
        return ExactScalar(self.den, self.num, _skip_pgcd=True)

    def __truediv__(self, other):
        return self * ExactScalar.coerce(other).inverse()

    def __rtruediv__(self, other):
        return ExactScalar.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n == 0:
            return ONE
        base = self if n > 0 else self.inverse()
        out = base
        for _ in range(abs(n) - 1):
            out = out * base
        return out

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExactScalar.coerce(other)
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"ExactScalar({scalar_text(self)})"

    def __str__(self):
        return scalar_text(self)


ZERO = ExactScalar.from_int(0)
ONE = ExactScalar.from_int(1)


# ---------------------------------------------------------------------------
# q-powers and q-combinatorics
# ---------------------------------------------------------------------------


def q_power(e) -> ExactScalar:
    """q raised to the exact exponent e (int, Fraction, or HalfExponent)."""
    e = HalfExponent.coerce(e)
    return ExactScalar.s_power(e.quarters)


def q_bracket(e) -> ExactScalar:
    """The balanced q-bracket [e] = (q**e - q**-e) / (q - q**-1).

    Defined for any exponent on the quarter grid; for non-integer e the
    value is a genuine rational function (for example [1/2] =
    1/(q**(1/2)+q**(-1/2))).
    """
    e = HalfExponent.coerce(e)
    if e.quarters == 0:
        return ZERO
    num = q_power(e) - q_power(-e)
    den = q_power(1) - q_power(-1)
    return num / den


def q_int_frac(a, n: int) -> ExactScalar:
    """The q-bracket [a*n] at base q, with a on the quarter grid."""
    return q_bracket(HalfExponent.coerce(a) * n)


def q_int(m: int, d) -> ExactScalar:
    """The balanced q-integer [m] at base q_i = q**(2d).

    The convention makes d = 1/2 the plain [m]_q and d = 1/4 the short-root
    base [m]_{q**(1/2)}.  d must be nonzero.  Antisymmetric in m; [0] = 0.
    """
    d = HalfExponent.coerce(d)
    if d.quarters == 0:
        raise ValueError("q_int base exponent d must be nonzero")
    if m == 0:
        return ZERO
    sign = 1 if m > 0 else -1
    m = abs(m)
    # geometric form: [m] = sum_{j=0}^{m-1} q_i**(m-1-2j), exponent 2d each
    out = ZERO
    for j in range(m):
        out = out + q_power(d * (2 * (m - 1 - 2 * j)))
    return out if sign > 0 else -out


def q_factorial(m: int, d) -> ExactScalar:
    """[m]! at base q_i = q**(2d)."""
    out = ONE
    for k in range(2, m + 1):
        out = out * q_int(k, d)
    return out


def q_binom(m: int, r: int, d) -> ExactScalar:
    """The Gaussian binomial [m choose r] at base q_i = q**(2d).

    Requires 0 <= r <= m; the result is a Laurent polynomial in q_i.
    """
    if not 0 <= r <= m:
        raise ValueError(f"q_binom requires 0 <= r <= m, got m={m}, r={r}")
    num = ONE
    for k in range(m - r + 1, m + 1):
        num = num * q_int(k, d)
    return num / q_factorial(r, d)


def classical_limit(s: ExactScalar) -> Fraction:
    """The value of s at q = 1; raises ValueError on a pole at q = 1."""
    den = sum(s.den)
    if den == 0:
        raise ValueError("pole at q = 1")
    return Fraction(sum(s.num), den)


# ---------------------------------------------------------------------------
# canonical text form and parser
#
# Grammar (whitespace-free canonical output; the parser also skips spaces):
#
#   scalar ::= "0" | "(" poly ")" | "(" poly ")^-1" | "(" poly ")*(" poly ")^-1"
#   poly   ::= term (("+"|"-") term)*
#   term   ::= int | [int] "q" ["^" exp]
#   exp    ::= int | int "/2" | int "/4"
#
# Exponents are printed in lowest terms on the quarter grid, e.g. "q^2",
# "q^1/2", "q^-3/4".
# ---------------------------------------------------------------------------


def _exp_text(quarters: int) -> str:
    if quarters % 4 == 0:
        return str(quarters // 4)
    if quarters % 2 == 0:
        return f"{quarters // 2}/2"
    return f"{quarters}/4"


def scalar_text(s: ExactScalar) -> str:
    """Canonical text form, e.g. "(q^2+1+q^-2)" or "(q^1/2+q^-1/2)^-1".

    Laurent polynomials print directly; a fraction with a non-trivial
    denominator prints as "(num)*(den)^-1", except that a unit numerator
    collapses to "(den)^-1".
    """
    if s.is_zero():
        return "0"
    # Fold pure s-powers of either side into Laurent exponents so that
    # monomial factors never force the general two-part form.
    kn = _low_zeros(s.num)
    kd = _low_zeros(s.den)
    num = s.num[kn:]
    den = s.den[kd:]
    shift = kn - kd
    if den == (1,):
        return "(" + _laurent_text(num, shift) + ")"
    if num == (1,):
        return "(" + _laurent_text(den, -shift) + ")^-1"
    if num == (-1,):
        return "-(" + _laurent_text(den, -shift) + ")^-1"
    return "(" + _laurent_text(num, shift) + ")*(" + _laurent_text(den, 0) + ")^-1"


def _laurent_text(p: tuple, shift: int) -> str:
    if not p:
        return "0"
    parts = []
    for deg in range(len(p) - 1, -1, -1):
        c = p[deg]
        if not c:
            continue
        e = deg + shift
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if e == 0:
            body = str(c)
        elif e == 4:
            body = "q" if c == 1 else f"{c}q"
        else:
            q_part = f"q^{_exp_text(e)}"
            body = q_part if c == 1 else f"{c}{q_part}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = (first_sign if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += sign + body
    return text


class _ScalarParser:
    def __init__(self, text: str):
        self.text = text.replace(" ", "")
        self.pos = 0

    def error(self, message: str):
        raise ValueError(f"scalar parse error at {self.pos}: {message} in {self.text!r}")

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, token: str) -> bool:
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def parse_int(self) -> int:
        start = self.pos
        if self.peek() in "+-":
            self.pos += 1
        while self.peek().isdigit():
            self.pos += 1
        if self.pos == start or (self.pos - start == 1 and self.text[start] in "+-"):
            self.error("expected integer")
        return int(self.text[start : self.pos])

    def parse_exponent_quarters(self) -> int:
        n = self.parse_int()
        if self.take("/2"):
            return 2 * n
        if self.take("/4"):
            return n
        return 4 * n

    def parse_term(self) -> ExactScalar:
        coeff = None
        if self.peek().isdigit():
            start = self.pos
            while self.peek().isdigit():
                self.pos += 1
            coeff = int(self.text[start : self.pos])
        if self.take("q"):
            quarters = 4
            if self.take("^"):
                quarters = self.parse_exponent_quarters()
            return ExactScalar.from_int(1 if coeff is None else coeff) * ExactScalar.s_power(quarters)
        if coeff is not None:
            return ExactScalar.from_int(coeff)
        self.error("expected term")

    def parse_poly(self) -> ExactScalar:
        sign = -1 if self.take("-") else 1
        out = ExactScalar.from_int(sign) * self.parse_term()
        while self.peek() in ("+", "-"):
            sign = -1 if self.take("-") else 1
            if sign == 1:
                self.take("+")
            out = out + ExactScalar.from_int(sign) * self.parse_term()
        return out

    def parse_scalar(self) -> ExactScalar:
        neg = self.take("-")
        if self.peek() == "(":
            self.take("(")
            first = self.parse_poly()
            if not self.take(")"):
                self.error("expected ')'")
            if self.take("^-1"):
                out = first.inverse()
            elif self.take("*("):
                second = self.parse_poly()
                if not self.take(")"):
                    self.error("expected ')'")
                if not self.take("^-1"):
                    self.error("expected '^-1'")
                out = first / second
            else:
                out = first
        else:
            out = self.parse_poly()
        if self.pos != len(self.text):
            self.error("trailing input")
        return -out if neg else out


def parse_scalar(text: str) -> ExactScalar:
    """Parse the canonical text form back to an ExactScalar."""
    return _ScalarParser(text).parse_scalar()
