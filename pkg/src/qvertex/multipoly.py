"""Exact multivariate Laurent polynomials over the scalar field.

Small, dictionary-backed, and entirely sufficient for the combinatorial
identity checks: a handful of variables (z1, z2, z3, w, and a symbolic
parameter), a few hundred terms, exact coefficients.  Zero-testing is
structural because coefficients are canonical and zero coefficients are
never stored.
"""

from __future__ import annotations

from .scalars import ExactScalar, ONE, ZERO

__all__ = ["MultiPoly"]


class MultiPoly:
    """A Laurent polynomial in a fixed ordered tuple of variables.

    ``terms`` maps integer exponent tuples (one entry per variable,
    negatives allowed) to nonzero :class:`ExactScalar` coefficients.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple, terms: dict | None = None):
        self.vars = tuple(vars)
        clean = {}
        if terms:
            for exps, c in terms.items():
                if len(exps) != len(self.vars):
                    raise ValueError(f"exponent tuple {exps} does not match variables {self.vars}")
                if not c.is_zero():
                    clean[tuple(exps)] = c
        self.terms = clean

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, vars: tuple) -> "MultiPoly":
        return cls(vars)

    @classmethod
    def const(cls, vars: tuple, c) -> "MultiPoly":
        c = ExactScalar.coerce(c)
        if c.is_zero():
            return cls(vars)
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, vars: tuple, name: str, power: int = 1) -> "MultiPoly":
        vars = tuple(vars)
        idx = vars.index(name)
        exps = [0] * len(vars)
        exps[idx] = power
        return cls(vars, {tuple(exps): ONE})

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, tuple(sorted(self.terms.items()))))

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    def __add__(self, other):
        if isinstance(other, (int, ExactScalar)):
            other = MultiPoly.const(self.vars, other)
        self._check(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            out[exps] = out.get(exps, ZERO) + c
        return MultiPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, ExactScalar)):
            other = MultiPoly.const(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, ExactScalar)):
            c = ExactScalar.coerce(other)
            return MultiPoly(self.vars, {e: c * v for e, v in self.terms.items()})
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, ZERO) + c1 * c2
        return MultiPoly(self.vars, out)

    __rmul__ = __mul__

    # -- structure maps ------------------------------------------------------

    def permute_vars(self, mapping: dict) -> "MultiPoly":
        """Apply the substitution v -> mapping[v]; the mapping must permute
        a subset of the variables (unnamed variables stay put)."""
        positions = {self.vars.index(old): self.vars.index(new) for old, new in mapping.items()}
        if set(positions) != set(positions.values()):
            raise ValueError("mapping must be a permutation of a subset of the variables")
        out = {}
        for exps, c in self.terms.items():
            new_exps = list(exps)
            for src, dst in positions.items():
                new_exps[dst] = exps[src]
            key = tuple(new_exps)
            out[key] = out.get(key, ZERO) + c
        return MultiPoly(self.vars, out)

    def substitute_scalar(self, name: str, value) -> "MultiPoly":
        """Evaluate one variable at an exact scalar (Laurent exponents need
        the value invertible, which ExactScalar powers enforce)."""
        value = ExactScalar.coerce(value)
        idx = self.vars.index(name)
        rest = self.vars[:idx] + self.vars[idx + 1 :]
        out = {}
        for exps, c in self.terms.items():
            e = exps[idx]
            scaled = c * value**e if e else c
            key = exps[:idx] + exps[idx + 1 :]
            out[key] = out.get(key, ZERO) + scaled
        return MultiPoly(rest, out)

    def coeff(self, exps: tuple) -> ExactScalar:
        return self.terms.get(tuple(exps), ZERO)

    def __repr__(self):
        if not self.terms:
            return "MultiPoly(0)"
        bits = []
        for exps in sorted(self.terms):
            mono = "*".join(
                f"{v}^{e}" if e != 1 else v for v, e in zip(self.vars, exps) if e
            )
            bits.append(f"({self.terms[exps]}){'*' + mono if mono else ''}")
        return "MultiPoly(" + " + ".join(bits) + ")"
