"""Closed-form rules for the node family x1, x2, ... and the pole family c1, c2, ...

A family is never stored as a list; ``term(i)`` materializes the i-th member
on demand, so the truncation depth alone bounds the work.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import IndexOutOfRange
from .poly import C_FAMILY, X_FAMILY, Polynomial, Var, cvar, family_code, scalar, xvar
from .ratfun import RatFun, _as_value


def _value(x):
    return _as_value(x)


@dataclass(frozen=True)
class Symbolic:
    """Members are the indexed variables themselves (x_i or c_i)."""

    family: int = X_FAMILY

    def term(self, i):
        _check_index(i)
        return Polynomial.var(Var(family_code(self.family), i))

    def describe(self):
        return "symbolic"


@dataclass(frozen=True)
class Geometric:
    """term(i) = scale * ratio**(i-1)."""

    scale: object
    ratio: object

    def term(self, i):
        _check_index(i)
        return _value(self.scale) * _value(self.ratio) ** (i - 1)

    def describe(self):
        return f"geom:{self.scale},{self.ratio}"


@dataclass(frozen=True)
class Constant:
    value: object = 0

    def term(self, i):
        _check_index(i)
        return _value(self.value)

    def describe(self):
        return f"const:{self.value}"


@dataclass(frozen=True)
class Explicit:
    values: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))

    def term(self, i):
        _check_index(i)
        if i > len(self.values):
            raise IndexOutOfRange(f"explicit family has {len(self.values)} members, asked for {i}")
        return _value(self.values[i - 1])

    def describe(self):
        return "list:" + ";".join(str(v) for v in self.values)


def _check_index(i):
    if i < 1:
        raise IndexOutOfRange(f"family members are indexed from 1, got {i}")


def family_term(spec, i):
    return spec.term(i)


@dataclass(frozen=True)
class InterpolationContext:
    """The pair (node family, pole family) an expansion is taken against."""

    x_family: object = field(default_factory=lambda: Symbolic(X_FAMILY))
    c_family: object = field(default_factory=lambda: Symbolic(C_FAMILY))

    def x(self, i):
        return self.x_family.term(i)

    def c(self, i):
        return self.c_family.term(i)

    def xs(self, n):
        return [self.x(i) for i in range(1, n + 1)]

    def cs(self, n):
        return [self.c(i) for i in range(1, n + 1)]


def bind_context(ctx, depth):
    """Binding x1..x_{depth+1}, c1..c_depth -> family members."""
    binding = {}
    for i in range(1, depth + 1):
        binding[cvar(i)] = ctx.c(i)
    for i in range(1, depth + 2):
        binding[xvar(i)] = ctx.x(i)
    return binding


def x_binding(ctx, n):
    """Binding x1..xn only, skipping identity entries."""
    return {xvar(i): ctx.x(i) for i in range(1, n + 1) if not isinstance(ctx.x_family, Symbolic)}


def c_binding(ctx, n):
    return {cvar(i): ctx.c(i) for i in range(1, n + 1) if not isinstance(ctx.c_family, Symbolic)}


# -- the contexts used throughout --------------------------------------------


def symbolic_context():
    return InterpolationContext(Symbolic(X_FAMILY), Symbolic(C_FAMILY))


def newton_context(x_family=None):
    """Poles at infinity: c_i = 0, which gives classical Newton interpolation."""
    return InterpolationContext(x_family or Symbolic(X_FAMILY), Constant(0))


def liu_context(a=None, q=None):
    """x_i = a q^i, c_i = q^(i-1)."""
    a = scalar("a") if a is None else a
    q = scalar("q") if q is None else q
    A, Q = _value(a), _value(q)
    return InterpolationContext(Geometric(A * Q, Q), Geometric(1, Q))


def gasper_context(a=None, p=None, q=None):
    """x_i = q^(i-1), c_i = a p^i."""
    a = scalar("a") if a is None else a
    p = scalar("p") if p is None else p
    q = scalar("q") if q is None else q
    A, P, Q = _value(a), _value(p), _value(q)
    return InterpolationContext(Geometric(1, Q), Geometric(A * P, P))


def gosper_context(n, a=None, p=None, q=None):
    """x_i = p^(i-1-n)/a, c_i = q^(i-n)."""
    a = scalar("a") if a is None else a
    p = scalar("p") if p is None else p
    q = scalar("q") if q is None else q
    A, P, Q = _value(a), _value(p), _value(q)
    return InterpolationContext(Geometric(P ** (-n) / A, P), Geometric(Q ** (1 - n), Q))


# -- the two basic products ----------------------------------------------------


def newton_basis(z, nodes):
    """(z - x_1)(z - x_2)...(z - x_n) over the given nodes."""
    z = _value(z)
    acc = Polynomial.const(1)
    for x in nodes:
        acc = acc * (z - _value(x))
    return acc


def pole_basis(z, poles):
    """(1 - z c_1)(1 - z c_2)...(1 - z c_n) over the given poles."""
    z = _value(z)
    acc = Polynomial.const(1)
    for c in poles:
        acc = acc * (1 - z * _value(c))
    return acc


__all__ = [
    "Symbolic",
    "Geometric",
    "Constant",
    "Explicit",
    "InterpolationContext",
    "family_term",
    "bind_context",
    "symbolic_context",
    "newton_context",
    "liu_context",
    "gasper_context",
    "gosper_context",
    "newton_basis",
    "pole_basis",
    "RatFun",
]
