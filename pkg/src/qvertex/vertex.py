"""Quantum-current modes acting on the level-one Fock space.

Each raising/lowering current at index ``i`` is a normally ordered product
of three layers acting on the Fock space of :mod:`qvertex.fock`:

* a creation exponential in the ``a`` family (and, for ``i < n``, the
  ``b`` family) at index ``i``;
* an annihilation exponential in the same generators, which contracts
  against a monomial's creation slots through the central brackets;
* a group-algebra translation ``e^{±alpha_i}``, weighted by the sign
  character :func:`qvertex.lattice.vertex_char`, a power of the formal
  variable read off the zero modes, and — for short indices — a sum over
  two tilde branches ``sigma = ±1`` translating the tilde sector by
  ``±at_i`` (the second branch twisted by the parity ``(-1)^{2 a_i(0)}``).

Extracting the coefficient of ``z^{-mode-1}`` turns each current into a
mode operator on states; :func:`apply_x_mode` realizes it exactly.  The
expansion of one mode applied to one monomial is memoized per
:class:`VertexContext`, so relation sweeps that revisit the same states pay
for each expansion once.

The diagonal currents ``psi``/``phi`` (:func:`apply_psi_mode`,
:func:`apply_phi_mode`) are exponentials in the ``a`` family alone over the
Cartan scaling ``q^{±(alpha_i|lam)}``, and :func:`apply_e0` builds the
affine raising operator as a twisted iterated commutator of lowering modes
against the translation ``K``-operator of the highest root.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from math import comb, factorial

from .fock import FockMonomial, FockVector, HeisenGen, heis_bracket
from .lattice import (
    inner_P,
    simple_root,
    simple_root_tilde,
    theta,
    vertex_char,
)
from .scalars import ExactScalar, HalfExponent, q_bracket, q_power

__all__ = [
    "VertexContext",
    "apply_x_mode",
    "apply_x_mode_split",
    "apply_psi_mode",
    "apply_phi_mode",
    "apply_k",
    "chevalley_e",
    "apply_e0",
    "default_e0_brackets",
]

_ONE = ExactScalar.from_int(1)


class VertexContext:
    """Rank-specific caches: root data, coefficient tables, and the
    memoized expansion of a mode applied to a monomial."""

    def __init__(self, rank: int):
        if rank < 2:
            raise ValueError("rank must be at least 2")
        self.rank = rank
        self.roots = {i: simple_root(rank, i) for i in range(1, rank + 1)}
        self.troots = {i: simple_root_tilde(rank, i) for i in range(1, rank + 1)}
        self._mode_cache = {}
        self._creation_cache = {}
        self._gamma_cache = {}
        self._beta_cache = {}

    # -- coefficient tables --------------------------------------------------

    def gamma(self, fam: str, sign: int, sigma: int, k: int) -> ExactScalar:
        """Annihilation-exponential coefficient at positive level ``k``."""
        key = (fam, sign if fam == "a" else sigma, k)
        out = self._gamma_cache.get(key)
        if out is None:
            if fam == "a":
                out = -ExactScalar.from_int(sign) * q_power(
                    HalfExponent.half(-sign * k)
                ) / q_bracket(k)
            elif sigma == 1:
                out = -q_power(HalfExponent.half(-k)) / q_bracket(k)
            else:
                out = q_power(HalfExponent.half(k)) / q_bracket(k)
            self._gamma_cache[key] = out
        return out

    def beta(self, fam: str, sign: int, sigma: int, k: int) -> ExactScalar:
        """Creation-exponential coefficient at positive level ``k``."""
        key = (fam, sign if fam == "a" else sigma, k)
        out = self._beta_cache.get(key)
        if out is None:
            if fam == "a":
                out = ExactScalar.from_int(sign) * q_power(
                    HalfExponent.half(-sign * k)
                ) / q_bracket(k)
            elif sigma == 1:
                out = q_power(HalfExponent.half(k)) / q_bracket(k)
            else:
                out = -q_power(HalfExponent.half(-k)) / q_bracket(k)
            self._beta_cache[key] = out
        return out

    def creation_terms(self, i: int, sign: int, sigma: int, total: int):
        """All ways the creation exponential at index ``i`` contributes
        ``total`` to the degree: tuples ``(slots, coefficient)`` over both
        available families."""
        key = (i, sign, sigma, total)
        out = self._creation_cache.get(key)
        if out is not None:
            return out
        families = ("a", "b") if i < self.rank else ("a",)
        results = []
        for levels in _partitions(total):
            per_level = []
            for k, count in sorted(levels.items()):
                choices = []
                if len(families) == 1:
                    splits = [(count,)]
                else:
                    splits = [(p, count - p) for p in range(count + 1)]
                for split in splits:
                    slots = []
                    coeff = _ONE
                    for fam, p in zip(families, split):
                        if p:
                            slots.extend([HeisenGen(fam, i, -k)] * p)
                            coeff = coeff * self.beta(fam, sign, sigma, k) ** p
                            coeff = coeff / ExactScalar.from_int(factorial(p))
                    choices.append((tuple(slots), coeff))
                per_level.append(choices)
            for combo in itertools.product(*per_level):
                slots = tuple(s for part, _ in combo for s in part)
                coeff = _ONE
                for _, c in combo:
                    coeff = coeff * c
                results.append((slots, coeff))
        out = tuple(results)
        self._creation_cache[key] = out
        return out


def _partitions(total: int, max_part: int | None = None):
    """Plain integer partitions as ``{part: count}`` dictionaries."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield {}
        return
    for k in range(min(total, max_part), 0, -1):
        for c in range(total // k, 0, -1):
            for rest in _partitions(total - k * c, k - 1):
                d = {k: c}
                d.update(rest)
                yield d


def _mode_terms(ctx: VertexContext, sign: int, i: int, mode: int, mono: FockMonomial, branch):
    """Expansion of one mode applied to one monomial, as (monomial, coeff)
    pairs; ``branch`` restricts to one tilde branch (None for the full sum)."""
    key = (sign, i, mode, branch, mono)
    cached = ctx._mode_cache.get(key)
    if cached is not None:
        return cached

    n = ctx.rank
    if i == n:
        branches = [0] if branch in (None, 1) else []
    elif branch is None:
        branches = [1, -1]
    else:
        branches = [branch]

    lam, lt = mono.lam, mono.lt
    m = lam.coords
    alpha = ctx.roots[i]
    alpha_lam = inner_P(alpha, lam).as_fraction()
    slot_counts = sorted(Counter(mono.slots).items())
    acc: dict = {}

    for sigma in branches:
        ti = lt.pairings[i - 1] if i < n else 0
        p0f = sign * alpha_lam + Fraction(sigma * ti, 2)
        if p0f.denominator != 1:
            raise AssertionError("zero-mode exponent is not an integer")
        p0 = int(p0f)

        scalar = ExactScalar.from_int(vertex_char(sign, i, lam))
        if sigma == -1 and (m[i - 1] - m[i]) % 2:
            scalar = -scalar
        if i < n:
            scalar = scalar * q_power(HalfExponent.quarter(ti))

        new_lam = lam + alpha if sign > 0 else lam - alpha
        if sigma == 0:
            new_lt = lt
        else:
            new_lt = lt + ctx.troots[i] if sigma > 0 else lt - ctx.troots[i]

        # contraction options against the monomial's creation slots
        options = []
        for slot, r in slot_counts:
            if slot.family == "b" and i == n:
                continue
            k = -slot.level
            bracket = heis_bracket(n, HeisenGen(slot.family, i, k), slot)
            if bracket.is_zero():
                continue
            options.append((slot, r, ctx.gamma(slot.family, sign, sigma, k) * bracket))

        for counts in itertools.product(*(range(r + 1) for _, r, _ in options)):
            factor = scalar
            degree = 0
            removed: Counter = Counter()
            for (slot, r, weight), s in zip(options, counts):
                if s:
                    factor = factor * ExactScalar.from_int(comb(r, s)) * weight**s
                    degree += s * (-slot.level)
                    removed[slot] = s
            total = -mode - 1 - p0 + degree
            if total < 0:
                continue
            if removed:
                base_slots = []
                for slot in mono.slots:
                    if removed.get(slot, 0):
                        removed[slot] -= 1
                    else:
                        base_slots.append(slot)
                base_slots = tuple(base_slots)
            else:
                base_slots = mono.slots
            for add_slots, cfactor in ctx.creation_terms(i, sign, sigma, total):
                new_mono = FockMonomial(base_slots + add_slots, new_lam, new_lt)
                coeff = factor * cfactor
                prev = acc.get(new_mono)
                total_coeff = coeff if prev is None else prev + coeff
                if total_coeff.is_zero():
                    acc.pop(new_mono, None)
                else:
                    acc[new_mono] = total_coeff

    out = tuple(acc.items())
    ctx._mode_cache[key] = out
    return out


def _apply_mode_terms(ctx, vec, expand):
    items = []
    for mono, coeff in vec.items():
        for new_mono, c in expand(mono):
            items.append((new_mono, coeff * c))
    return FockVector(ctx.rank, items)


def apply_x_mode(ctx: VertexContext, sign: int, i: int, mode: int, vec: FockVector) -> FockVector:
    """Apply the mode ``x^{sign}_{i, mode}`` to a state."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if not 1 <= i <= ctx.rank:
        raise ValueError(f"index {i} out of range for rank {ctx.rank}")
    return _apply_mode_terms(
        ctx, vec, lambda mono: _mode_terms(ctx, sign, i, mode, mono, None)
    )


def apply_x_mode_split(
    ctx: VertexContext, sign: int, branch: int, i: int, mode: int, vec: FockVector
) -> FockVector:
    """One tilde branch of ``x^{sign}_{i, mode}``: ``branch = +1`` keeps the
    ``+at_i`` translation, ``branch = -1`` the twisted ``-at_i`` one.  The
    long index has a single branch, carried entirely by ``branch = +1``."""
    if sign not in (1, -1) or branch not in (1, -1):
        raise ValueError("sign and branch must be +1 or -1")
    if not 1 <= i <= ctx.rank:
        raise ValueError(f"index {i} out of range for rank {ctx.rank}")
    return _apply_mode_terms(
        ctx, vec, lambda mono: _mode_terms(ctx, sign, i, mode, mono, branch)
    )


# ---------------------------------------------------------------------------
# diagonal currents


def apply_k(ctx: VertexContext, i: int, vec: FockVector, inverse: bool = False) -> FockVector:
    """``K_i``: scaling by ``q^{(alpha_i|lam)}`` on each monomial."""
    alpha = ctx.roots[i]
    items = []
    for mono, coeff in vec.items():
        e = inner_P(alpha, mono.lam)
        if inverse:
            e = -e
        items.append((mono, coeff * q_power(e)))
    return FockVector(ctx.rank, items)


def apply_psi_mode(ctx: VertexContext, i: int, mode: int, vec: FockVector) -> FockVector:
    """Mode ``mode >= 0`` of the diagonal current
    ``psi_i(z) = K_i exp((q - q^{-1}) sum_{k>0} a_i(k) z^{-k})``; negative
    modes vanish identically."""
    if mode < 0:
        return FockVector.zero(ctx.rank)
    n = ctx.rank
    alpha = ctx.roots[i]
    qdiff = q_power(1) - q_power(-1)
    items = []
    for mono, coeff in vec.items():
        base = coeff * q_power(inner_P(alpha, mono.lam))
        options = []
        for slot, r in sorted(Counter(mono.slots).items()):
            if slot.family != "a":
                continue
            k = -slot.level
            bracket = heis_bracket(n, HeisenGen("a", i, k), slot)
            if bracket.is_zero():
                continue
            options.append((slot, r, qdiff * bracket))
        for counts in itertools.product(*(range(r + 1) for _, r, _ in options)):
            degree = sum(
                s * (-slot.level) for (slot, _, _), s in zip(options, counts)
            )
            if degree != mode:
                continue
            factor = base
            removed: Counter = Counter()
            for (slot, r, weight), s in zip(options, counts):
                if s:
                    factor = factor * ExactScalar.from_int(comb(r, s)) * weight**s
                    removed[slot] = s
            slots = []
            for slot in mono.slots:
                if removed.get(slot, 0):
                    removed[slot] -= 1
                else:
                    slots.append(slot)
            items.append((mono.with_slots(tuple(slots)), factor))
    return FockVector(ctx.rank, items)


def apply_phi_mode(ctx: VertexContext, i: int, mode: int, vec: FockVector) -> FockVector:
    """Mode ``mode <= 0`` of the diagonal current
    ``phi_i(z) = K_i^{-1} exp(-(q - q^{-1}) sum_{k>0} a_i(-k) z^k)``;
    positive modes vanish identically."""
    if mode > 0:
        return FockVector.zero(ctx.rank)
    n = ctx.rank
    alpha = ctx.roots[i]
    neg_qdiff = q_power(-1) - q_power(1)
    items = []
    for mono, coeff in vec.items():
        base = coeff * q_power(-inner_P(alpha, mono.lam))
        for levels in _partitions(-mode):
            factor = base
            added = []
            for k, p in sorted(levels.items()):
                factor = factor * neg_qdiff**p / ExactScalar.from_int(factorial(p))
                added.extend([HeisenGen("a", i, -k)] * p)
            items.append((mono.with_slots(mono.slots + tuple(added)), factor))
    return FockVector(ctx.rank, items)


# ---------------------------------------------------------------------------
# Chevalley operators


def chevalley_e(ctx: VertexContext, i: int, vec: FockVector) -> FockVector:
    """The finite-type raising operator ``e_i = x^+_{i,0}`` for ``i = 1..n``."""
    return apply_x_mode(ctx, 1, i, 0, vec)


def default_e0_brackets(n: int):
    """The twisting parameters of the iterated commutator defining the
    affine operator: innermost first,
    ``q^{-1/2}`` (n-2 times), ``q^{-1}``, ``q^{-1/2}`` (n-2 times), ``1``."""
    half = q_power(HalfExponent.half(-1))
    return (
        [half] * (n - 2)
        + [q_power(-1)]
        + [half] * (n - 2)
        + [_ONE]
    )


def apply_e0(ctx: VertexContext, vec: FockVector, brackets=None) -> FockVector:
    """The affine raising operator

    ``e_0 = [x^-_1(0), x^-_2(0), .., x^-_n(0), x^-_{n-1}(0), .., x^-_2(0),
    x^-_1(1)]  *  q K_theta^{-1}``

    where the iterated commutator ``[a_1, .., a_N]`` nests to the right
    (``[a_1, [a_2, [...]]]``), each bracket ``[a, R]_v = a R - v R a`` taking
    its parameter from ``brackets`` innermost-first.  ``K_theta^{-1}`` scales
    a monomial by ``q^{-(theta|lam)}`` for the highest root ``theta``."""
    n = ctx.rank
    ops = (
        [(j, 0) for j in range(1, n + 1)]
        + [(j, 0) for j in range(n - 1, 1, -1)]
        + [(1, 1)]
    )
    if brackets is None:
        brackets = default_e0_brackets(n)
    if len(brackets) != len(ops) - 1:
        raise ValueError(
            f"expected {len(ops) - 1} bracket parameters, got {len(brackets)}"
        )

    def mode_op(spec):
        j, mode = spec
        return lambda w: apply_x_mode(ctx, -1, j, mode, w)

    def nest(op_specs, params):
        if len(op_specs) == 1:
            return mode_op(op_specs[0])
        inner = nest(op_specs[1:], params[:-1])
        head = mode_op(op_specs[0])
        v = params[-1]

        def bracketed(w):
            return head(inner(w)) - inner(head(w)).scale(v)

        return bracketed

    operator = nest(ops, list(brackets))

    th = theta(n)
    items = []
    for mono, coeff in vec.items():
        items.append((mono, coeff * q_power(1) * q_power(-inner_P(th, mono.lam))))
    return operator(FockVector(n, items))
