"""Divided differences acting on the right of rational functions.

``f ∂_i = (f - f^{s_i}) / (v_i - v_{i+1})`` where ``s_i`` exchanges the
variables ``v_i`` and ``v_{i+1}`` of one indexed family (X or B).
"""
from __future__ import annotations

from fractions import Fraction

from .errors import NonExactDivision
from .families import newton_basis
from .poly import B_FAMILY, X_FAMILY, Polynomial, Var, bvar, family_code, xvar
from .ratfun import RatFun, _cofactor, _lcm, as_ratfun

DEFAULT_DEPTH_BOUND = 8


def apply_divdiff(f, i, family=X_FAMILY):
    if i < 1:
        raise ValueError("divided differences are indexed from 1")
    fam = family_code(family)
    f = as_ratfun(f)
    if f.is_zero():
        return f
    a, b = Var(fam, i), Var(fam, i + 1)
    fs = f.rename({a: b, b: a}, reduce=False)
    den = _lcm(f.den, fs.den)
    num = f.num * _cofactor(den, f.den) - fs.num * _cofactor(den, fs.den)
    try:
        q = num.divexact(Polynomial.var(a) - Polynomial.var(b))
    except NonExactDivision as exc:  # pragma: no cover - antisymmetry guarantees exactness
        raise NonExactDivision(f"internal error: {a} - {b} does not divide f - f^s") from exc
    return RatFun.reduced(q, den)


def apply_chain(f, start=1, stop=1, family=X_FAMILY):
    """f ∂_start ∂_{start+1} ... ∂_stop, applied left to right."""
    f = as_ratfun(f)
    for i in range(start, stop + 1):
        f = apply_divdiff(f, i, family)
        if f.is_zero():
            break
    return f


def lemma1_check(n, i, depth_bound=DEFAULT_DEPTH_BOUND):
    """Y_n(b1, X) ∂1...∂i on the b's, then b_j -> x_j.

    The value is the Kronecker delta of (n, i).
    """
    if n < 0 or i < 0:
        raise ValueError("n and i must be nonnegative")
    if n > depth_bound or i > depth_bound:
        raise ValueError(f"n and i are limited to the depth bound {depth_bound}")
    y = newton_basis(bvar(1), [xvar(k) for k in range(1, n + 1)])
    g = apply_chain(y, 1, i, B_FAMILY)
    g = specialize_b_to_x(g, i + 1)
    return Fraction(g.constant_value())


def specialize_b_to_x(f, count):
    """The specialization b_j = x_j for j = 1..count."""
    return as_ratfun(f).rename({bvar(j): xvar(j) for j in range(1, count + 1)})
