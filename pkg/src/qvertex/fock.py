"""The level-one Fock space: Heisenberg monomials over twisted group algebras.

States are finite linear combinations, over the exact scalar field, of
monomials

    ``a_{i_1}(-k_1) ... b_{j_1}(-l_1) ... e^lam e^lt``

built from two commuting families of Heisenberg creation generators — the
``a`` family indexed by ``1..n`` attached to the symplectic weight lattice
and the ``b`` family indexed by ``1..n-1`` attached to the tilde sector —
acting on group-algebra translations ``e^lam e^lt``.  A monomial is
admissible only when the pair ``(lam, lt)`` satisfies the parity
constraint ``m_i - m_{i+1} == t_i (mod 2)``; every constructor enforces
this.

The nonzero commutators are, within each family,

    ``[g_i(k), g_j(l)] = delta_{k+l,0} [(w_i|w_j) k] [k] / k``

with ``w_i`` the simple root (``a`` family) or tilde root (``b`` family)
attached to index ``i`` — so generators at distance 2 or more commute, and
the two families commute with each other.

Vectors are graded: a monomial's degree is
``-(sum of slot levels + (lam|lam)/2 + (lt|lt)/2)``, an exact rational.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import NamedTuple

from .lattice import (
    WeightA,
    WeightC,
    constraint_check,
    inner_P,
    inner_tilde,
    simple_root,
    simple_root_tilde,
    fundamental_weight,
    fundamental_weight_tilde,
    zero_tilde,
    zero_weight,
)
from .scalars import ExactScalar, parse_scalar, q_int_frac, scalar_text

__all__ = [
    "HeisenGen",
    "FockMonomial",
    "FockVector",
    "vacuum",
    "hw_vector",
    "heis_bracket",
    "apply_heisenberg",
    "zero_mode_a",
    "zero_mode_b",
    "sign_two_a",
    "translate",
    "grade_monomial",
    "grade",
    "weight",
    "vector_text",
    "parse_vector",
]


class HeisenGen(NamedTuple):
    """One Heisenberg generator: ``family`` is ``"a"`` or ``"b"``, ``index``
    names the attached root, ``level`` is the nonzero mode (negative levels
    create, positive levels annihilate)."""

    family: str
    index: int
    level: int

    def validate(self, n: int):
        if self.family not in ("a", "b"):
            raise ValueError(f"unknown Heisenberg family {self.family!r}")
        top = n if self.family == "a" else n - 1
        if not 1 <= self.index <= top:
            raise ValueError(
                f"index {self.index} out of range for family {self.family!r}"
                f" at rank {n}"
            )
        if self.level == 0:
            raise ValueError("level-zero generators are not free modes")


class FockMonomial:
    """A normally ordered basis monomial: a multiset of creation slots (all
    levels negative, kept sorted) applied to the translation ``e^lam e^lt``."""

    __slots__ = ("slots", "lam", "lt")

    def __init__(self, slots, lam: WeightC, lt: WeightA):
        slots = tuple(sorted(HeisenGen(*s) for s in slots))
        n = lam.rank
        if lt.rank != n:
            raise ValueError("weight rank mismatch")
        for s in slots:
            s.validate(n)
            if s.level >= 0:
                raise ValueError("monomial slots must be creation generators")
        if not constraint_check(lam, lt):
            raise ValueError(
                f"inadmissible translation pair lam={lam.coords} lt={lt.pairings}"
            )
        self.slots = slots
        self.lam = lam
        self.lt = lt

    @property
    def rank(self) -> int:
        return self.lam.rank

    def with_slots(self, slots) -> "FockMonomial":
        return FockMonomial(slots, self.lam, self.lt)

    def __eq__(self, other):
        return (
            isinstance(other, FockMonomial)
            and self.slots == other.slots
            and self.lam == other.lam
            and self.lt == other.lt
        )

    def __hash__(self):
        return hash((self.slots, self.lam, self.lt))

    def sort_key(self):
        return (self.lam.coords, self.lt.pairings, self.slots)

    def __repr__(self):
        return f"FockMonomial({monomial_text(self)!r})"


class FockVector:
    """A finite exact linear combination of monomials.  All operations
    return new vectors; zero coefficients are dropped eagerly, so equality
    is plain dictionary equality."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms=None):
        self.rank = rank
        clean = {}
        if terms:
            for mono, coeff in terms.items() if isinstance(terms, dict) else terms:
                if mono.rank != rank:
                    raise ValueError("monomial rank mismatch")
                if not coeff.is_zero():
                    prev = clean.get(mono)
                    total = coeff if prev is None else prev + coeff
                    if total.is_zero():
                        clean.pop(mono, None)
                    else:
                        clean[mono] = total
        self.terms = clean

    @classmethod
    def zero(cls, rank: int) -> "FockVector":
        return cls(rank)

    @classmethod
    def from_monomial(cls, mono: FockMonomial, coeff=None) -> "FockVector":
        coeff = ExactScalar.from_int(1) if coeff is None else coeff
        return cls(mono.rank, {mono: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, FockVector) or other.rank != self.rank:
            return NotImplemented
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            prev = terms.get(mono)
            total = coeff if prev is None else prev + coeff
            if total.is_zero():
                terms.pop(mono, None)
            else:
                terms[mono] = total
        out = FockVector.__new__(FockVector)
        out.rank = self.rank
        out.terms = terms
        return out

    def __neg__(self):
        out = FockVector.__new__(FockVector)
        out.rank = self.rank
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, FockVector) or other.rank != self.rank:
            return NotImplemented
        return self + (-other)

    def scale(self, coeff: ExactScalar) -> "FockVector":
        if coeff.is_zero():
            return FockVector.zero(self.rank)
        out = FockVector.__new__(FockVector)
        out.rank = self.rank
        out.terms = {m: c * coeff for m, c in self.terms.items()}
        return out

    def __eq__(self, other):
        return (
            isinstance(other, FockVector)
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def items(self):
        return self.terms.items()

    def __repr__(self):
        return f"FockVector({vector_text(self)!r})"


# ---------------------------------------------------------------------------
# distinguished vectors


def vacuum(n: int) -> FockVector:
    return FockVector.from_monomial(FockMonomial((), zero_weight(n), zero_tilde(n)))


def hw_vector(n: int, i: int) -> FockVector:
    """``e^{lam_i} e^{lt_i}`` for ``i = 1..n``; ``i = 0`` is the vacuum."""
    if i == 0:
        return vacuum(n)
    return FockVector.from_monomial(
        FockMonomial((), fundamental_weight(n, i), fundamental_weight_tilde(n, i))
    )


# ---------------------------------------------------------------------------
# the Heisenberg action


def _family_pairing(n: int, fam: str, i: int, j: int) -> Fraction:
    if fam == "a":
        return inner_P(simple_root(n, i), simple_root(n, j)).as_fraction()
    return inner_tilde(simple_root_tilde(n, i), simple_root_tilde(n, j))


def heis_bracket(n: int, g: HeisenGen, h: HeisenGen) -> ExactScalar:
    """``[g, h]`` as an exact scalar (the central element acts as 1)."""
    g.validate(n)
    h.validate(n)
    if g.family != h.family or g.level + h.level != 0:
        return ExactScalar.from_int(0)
    pairing = _family_pairing(n, g.family, g.index, h.index)
    if pairing == 0:
        return ExactScalar.from_int(0)
    k = g.level
    return q_int_frac(pairing, k) * q_int_frac(Fraction(1), k) * ExactScalar.from_fraction(
        Fraction(1, k)
    )


def apply_heisenberg(g: HeisenGen, vec: FockVector) -> FockVector:
    """Act by a single Heisenberg generator: creation prepends a slot;
    annihilation contracts against each matching slot via the bracket."""
    n = vec.rank
    g.validate(n)
    out = FockVector.zero(n)
    for mono, coeff in vec.items():
        if g.level < 0:
            out = out + FockVector.from_monomial(
                mono.with_slots(mono.slots + (g,)), coeff
            )
            continue
        seen = set()
        for idx, slot in enumerate(mono.slots):
            if slot in seen:
                continue
            seen.add(slot)
            bracket = heis_bracket(n, g, slot)
            if bracket.is_zero():
                continue
            mult = mono.slots.count(slot)
            reduced = list(mono.slots)
            reduced.remove(slot)
            out = out + FockVector.from_monomial(
                mono.with_slots(reduced), coeff * bracket * ExactScalar.from_int(mult)
            )
    return out


def zero_mode_a(i: int, vec: FockVector) -> FockVector:
    """``a_i(0)`` acts on ``e^lam`` as the pairing ``(alpha_i | lam)``."""
    n = vec.rank
    out = FockVector.zero(n)
    alpha = simple_root(n, i)
    for mono, coeff in vec.items():
        value = inner_P(alpha, mono.lam).as_fraction()
        if value:
            out = out + FockVector.from_monomial(
                mono, coeff * ExactScalar.from_fraction(value)
            )
    return out


def zero_mode_b(i: int, vec: FockVector) -> FockVector:
    """``b_i(0)`` acts on ``e^lt`` as the pairing ``(at_i | lt) = t_i / 2``."""
    n = vec.rank
    out = FockVector.zero(n)
    for mono, coeff in vec.items():
        value = Fraction(mono.lt.pairings[i - 1], 2)
        if value:
            out = out + FockVector.from_monomial(
                mono, coeff * ExactScalar.from_fraction(value)
            )
    return out


def sign_two_a(i: int, mono: FockMonomial) -> int:
    """``(-1)^{2 (alpha_i | lam)}``: the parity the second vertex-operator
    branch reads off the translation part (always +1 for the long root)."""
    n = mono.rank
    two = (2 * inner_P(simple_root(n, i), mono.lam).as_fraction())
    if two.denominator != 1:
        raise AssertionError("doubled pairing is not an integer")
    return -1 if two.numerator % 2 else 1


def translate(vec: FockVector, dlam: WeightC, dlt: WeightA) -> FockVector:
    """Multiply by ``e^{dlam} e^{dlt}`` (no cocycle sign), staying inside the
    admissible set; raises if the shifted pair violates the constraint."""
    out = FockVector.zero(vec.rank)
    for mono, coeff in vec.items():
        out = out + FockVector.from_monomial(
            FockMonomial(mono.slots, mono.lam + dlam, mono.lt + dlt), coeff
        )
    return out


# ---------------------------------------------------------------------------
# grading


def grade_monomial(mono: FockMonomial) -> Fraction:
    levels = -sum(s.level for s in mono.slots)
    norm_c = inner_P(mono.lam, mono.lam).as_fraction() / 2
    norm_a = inner_tilde(mono.lt, mono.lt) / 2
    return -(levels + norm_c + norm_a)


def grade(vec: FockVector) -> Fraction:
    """The common degree of a homogeneous vector (error if mixed or zero)."""
    grades = {grade_monomial(m) for m in vec.terms}
    if len(grades) != 1:
        raise ValueError(f"vector is not homogeneous: grades {sorted(grades)}")
    return grades.pop()


def weight(vec: FockVector):
    """The common weight ``((alpha_1|lam), .., (alpha_n|lam))`` at level 1
    (error if mixed or zero)."""
    lams = {m.lam for m in vec.terms}
    if len(lams) != 1:
        raise ValueError("vector is not a weight vector")
    lam = lams.pop()
    n = lam.rank
    pairings = tuple(inner_P(simple_root(n, i), lam) for i in range(1, n + 1))
    return pairings, 1


# ---------------------------------------------------------------------------
# text form


def monomial_text(mono: FockMonomial) -> str:
    parts = []
    idx = 0
    slots = mono.slots
    while idx < len(slots):
        slot = slots[idx]
        count = 1
        while idx + count < len(slots) and slots[idx + count] == slot:
            count += 1
        token = f"{slot.family}{slot.index}({slot.level})"
        if count > 1:
            token += f"^{count}"
        parts.append(token)
        idx += count
    parts.append("e[" + ",".join(str(c) for c in mono.lam.coords) + "]")
    parts.append("t[" + ",".join(str(t) for t in mono.lt.pairings) + "]")
    return " ".join(parts)


def vector_text(vec: FockVector) -> str:
    if vec.is_zero():
        return "0"
    parts = []
    for mono in sorted(vec.terms, key=FockMonomial.sort_key):
        coeff = vec.terms[mono]
        prefix = "" if coeff.is_one() else scalar_text(coeff) + " "
        parts.append(prefix + monomial_text(mono))
    return " + ".join(parts)


_GEN_RE = re.compile(r"^([ab])(\d+)\((-\d+)\)(?:\^(\d+))?$")
_LAM_RE = re.compile(r"^e\[([-\d,]*)\]$")
_LT_RE = re.compile(r"^t\[([-\d,]*)\]$")


def _split_terms(text: str):
    terms = []
    depth = 0
    current = []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "+" and depth == 0:
            terms.append("".join(current))
            current = []
        else:
            current.append(ch)
    terms.append("".join(current))
    return [t.strip() for t in terms]


def parse_vector(text: str, rank: int) -> FockVector:
    """Parse the textual vector form: terms joined by ``+`` at top level,
    each ``[coeff] gen* e[coords] t[pairings]`` with generators like
    ``a1(-2)^3``; ``t[]`` means the zero tilde weight."""
    text = text.strip()
    if text == "0":
        return FockVector.zero(rank)
    out = FockVector.zero(rank)
    for term in _split_terms(text):
        if not term:
            raise ValueError("empty term in vector literal")
        coeff = ExactScalar.from_int(1)
        slots = []
        lam = None
        lt = None
        saw_coeff = False
        for token in term.split():
            m = _GEN_RE.match(token)
            if m:
                fam, idx, lvl, power = m.groups()
                slots.extend([HeisenGen(fam, int(idx), int(lvl))] * int(power or 1))
                continue
            m = _LAM_RE.match(token)
            if m:
                coords = m.group(1)
                lam = WeightC([int(c) for c in coords.split(",")] if coords else [])
                continue
            m = _LT_RE.match(token)
            if m:
                coords = m.group(1)
                lt = WeightA(
                    [int(c) for c in coords.split(",")]
                    if coords
                    else [0] * (rank - 1)
                )
                continue
            if saw_coeff:
                raise ValueError(f"unrecognized token {token!r} in vector literal")
            coeff = parse_scalar(token)
            saw_coeff = True
        if lam is None:
            raise ValueError(f"term {term!r} lacks a lattice part e[..]")
        if lam.rank != rank:
            raise ValueError(f"term {term!r} has rank {lam.rank}, expected {rank}")
        if lt is None:
            lt = zero_tilde(rank)
        if lt.rank != rank:
            raise ValueError(f"term {term!r} has tilde rank {lt.rank}, expected {rank}")
        out = out + FockVector.from_monomial(FockMonomial(slots, lam, lt), coeff)
    return out
