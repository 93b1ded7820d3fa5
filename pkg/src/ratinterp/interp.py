"""Rational Newton interpolation.

For nodes x_1, x_2, ... and poles c_1, c_2, ... a function of ``x`` expands as

    f(x) = sum_n A_n * Y_n(x) / (x, C)_n

with Y_n(x) = (x - x_1)...(x - x_n), (x, C)_n = (1 - x c_1)...(1 - x c_n) and

    A_0 = f(x_1),
    A_n = f(x_1) (x_1, C)_{n-1} ∂_1...∂_n * (1 - x_{n+1} c_n).

Coefficients are computed by that formula with symbolic nodes; the context's
node values are substituted only after the divided differences are taken.
Pole values are substituted first since the c's are constants for ∂.
"""
from __future__ import annotations

from .divdiff import apply_chain, specialize_b_to_x
from .families import (
    InterpolationContext,
    Symbolic,
    c_binding,
    liu_context,
    newton_basis,
    pole_basis,
    symbolic_context,
    x_binding,
)
from .poly import B_FAMILY, X_FAMILY, Polynomial, bvar, cvar, scalar, xvar
from .qseries import pochhammer
from .ratfun import RatFun, _as_value, as_ratfun, substitute

X = scalar("x")


def _x_nodes(n):
    return [xvar(i) for i in range(1, n + 1)]


def _poles(ctx, n):
    """c_1..c_n with the context's pole values already substituted."""
    return [ctx.c(i) for i in range(1, n + 1)]


def rational_newton_coeffs(f, ctx=None, order=0, x=X):
    """[A_0, ..., A_order] for the expansion of ``f`` (a rational function of ``x``).

    ``f`` may itself involve the nodes x_i as parameters: the divided
    differences act on an auxiliary argument b1, b2, ... which is set to
    x1, x2, ... afterwards.
    """
    ctx = ctx or symbolic_context()
    f = as_ratfun(f)
    xbind = x_binding(ctx, order + 1)
    coeffs = [_specialize(substitute(f, {x: xvar(1)}), xbind)]
    fb = substitute(f, {x: bvar(1)})
    for n in range(1, order + 1):
        coeffs.append(_specialize(_raw_coefficient(fb, ctx, n), xbind))
    return coeffs


def _raw_coefficient(fb, ctx, n):
    """A_n before the nodes are specialized (x_i still symbolic).

    ``fb`` is f evaluated at b1.
    """
    poles = _poles(ctx, n)
    g = fb * pole_basis(bvar(1), poles[: n - 1])
    g = apply_chain(g, 1, n, B_FAMILY)
    if g.is_zero():
        return g
    g = specialize_b_to_x(g, n + 1)
    return g * (1 - Polynomial.var(xvar(n + 1)) * _as_value(poles[n - 1]))


def _specialize(g, xbind):
    if not xbind:
        return as_ratfun(g)
    return substitute(g, xbind)


def expansion_term(n, ctx=None, x=X):
    """Y_n(x, X) / (x, C)_n with the context's nodes and poles."""
    ctx = ctx or symbolic_context()
    xv = Polynomial.var(x)
    num = newton_basis(xv, ctx.xs(n))
    den = pole_basis(xv, ctx.cs(n))
    return as_ratfun(num) / den


def partial_terms(f, ctx=None, order=0, x=X):
    """The summands A_n * term_n for n = 0..order."""
    ctx = ctx or symbolic_context()
    coeffs = rational_newton_coeffs(f, ctx, order, x)
    return [a * expansion_term(n, ctx, x) for n, a in enumerate(coeffs)]


def reconstruct_partial(f, ctx=None, order=0, x=X):
    total = RatFun(0)
    for t in partial_terms(f, ctx, order, x):
        total = total + t
    return total


def interpolation_residuals(f, ctx=None, order=0, x=X):
    """partial_sum(order) - f evaluated at x = x_1 .. x_{order+1}.

    Substitution is a ring homomorphism, so each summand is specialized
    before adding; summands with n >= j vanish at x = x_j.
    """
    ctx = ctx or symbolic_context()
    f = as_ratfun(f)
    terms = partial_terms(f, ctx, order, x)
    out = []
    for j in range(1, order + 2):
        node = ctx.x(j)
        acc = -substitute(f, {x: node})
        for n, t in enumerate(terms):
            if n >= j:
                break
            acc = acc + substitute(t, {x: node})
        out.append(acc)
    return out


# -- orthogonality of the extraction -----------------------------------------


def orthogonality_value(n, k, ctx=None):
    """[Y_n(b1,X)/(b1,C)_n] (b1,C)_{k-1} ∂1...∂k on the b's, then b = x.

    Equals 0 for k != n and 1/(1 - x_{n+1} c_n) for k = n.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    ctx = ctx or symbolic_context()
    b1 = Polynomial.var(bvar(1))
    poles = _poles(ctx, max(n, k))
    num = newton_basis(b1, _x_nodes(n))
    common = min(k - 1, n)
    # (b1,C)_{k-1} / (b1,C)_n cancels factor by factor
    g = RatFun(num * pole_basis(b1, poles[n : k - 1]), [(1 - b1 * _as_value(c), 1) for c in poles[common:n]])
    g = apply_chain(g, 1, k, B_FAMILY)
    return specialize_b_to_x(g, k + 1)


def orthogonality_expected(n, k, ctx=None):
    ctx = ctx or symbolic_context()
    if n != k:
        return RatFun(0)
    return RatFun(1, [(1 - Polynomial.var(xvar(n + 1)) * _as_value(ctx.c(n)), 1)])


# -- the q-derivative expansion ------------------------------------------------


def q_derivative(g, x=X, q=None):
    """D_q g(x) = (g(x) - g(qx)) / x."""
    q = Polynomial.var(scalar("q")) if q is None else _as_value(q)
    xv = Polynomial.var(x)
    g = as_ratfun(g)
    return (g - substitute(g, {x: q * xv})) * xv**-1


def liu_coefficient(n, f, a=None, q=None, x=X, at=None):
    """D_q^n [f(x) (x;q)_{n-1}] evaluated at x = a q (or at ``at``)."""
    a = Polynomial.var(scalar("a")) if a is None else _as_value(a)
    qv = Polynomial.var(scalar("q")) if q is None else _as_value(q)
    xv = Polynomial.var(x)
    g = as_ratfun(f) * pochhammer(xv, qv, n - 1)
    for _ in range(n):
        g = q_derivative(g, x, qv)
    point = a * qv if at is None else _as_value(at)
    return substitute(g, {x: point})


def liu_prefactor(n, a=None, q=None):
    """(1 - a q^{2n}) / (q;q)_n, linking the bracket to the expansion coefficient."""
    a = Polynomial.var(scalar("a")) if a is None else _as_value(a)
    qv = Polynomial.var(scalar("q")) if q is None else _as_value(q)
    return as_ratfun(1 - a * qv ** (2 * n)) / pochhammer(qv, qv, n)


def liu_term(n, f, a=None, q=None, x=X):
    """The n-th summand of the q-derivative expansion as a function of x."""
    a = Polynomial.var(scalar("a")) if a is None else _as_value(a)
    qv = Polynomial.var(scalar("q")) if q is None else _as_value(q)
    xv = Polynomial.var(x)
    basis = as_ratfun(pochhammer(a * qv * xv**-1, qv, n) * xv**n) / pochhammer(xv, qv, n)
    return liu_prefactor(n, a, qv) * basis * liu_coefficient(n, f, a, qv, x)


def carlitz_term(n, f, q=None, x=X):
    """x^n / (q, x; q)_n * D_q^n [f(x) (x;q)_{n-1}] at x = 0."""
    qv = Polynomial.var(scalar("q")) if q is None else _as_value(q)
    xv = Polynomial.var(x)
    bracket = liu_coefficient(n, f, a=0, q=qv, x=x, at=0)
    return bracket * xv**n / (pochhammer(qv, qv, n) * pochhammer(xv, qv, n))


# -- the bibasic closed form ----------------------------------------------------


def bibasic_coefficient(k, u, v, ctx=None):
    """(v-u) Y_{k-1}(v, C) (1 - x_{k+1} c_k) / (v, X)_{k+1}: the closed-form A_k
    for f = (1 - u x)/(1 - v x)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    ctx = ctx or symbolic_context()
    u, v = _as_value(u), _as_value(v)
    nodes = ctx.xs(k + 1)
    poles = ctx.cs(k)
    num = (v - u) * newton_basis(v, poles[: k - 1]) * (1 - _as_value(nodes[k]) * _as_value(poles[k - 1]))
    return as_ratfun(num) / pole_basis(v, nodes)


def lemma_main_closed_form(k, u, v, ctx=None):
    """(v-u) Y_{k-1}(v, C) / (v, X)_{k+1}."""
    ctx = ctx or symbolic_context()
    u, v = _as_value(u), _as_value(v)
    num = (v - u) * newton_basis(v, ctx.cs(k - 1))
    return as_ratfun(num) / pole_basis(v, ctx.xs(k + 1))


def lemma_main_engine(k, u, v, ctx=None):
    """(1 - u x1)/(1 - v x1) (x1, C)_{k-1} ∂1...∂k by the divided-difference engine."""
    ctx = ctx or symbolic_context()
    u, v = _as_value(u), _as_value(v)
    x1 = Polynomial.var(xvar(1))
    f = as_ratfun((1 - u * x1) * pole_basis(x1, _poles(ctx, k - 1))) / (1 - v * x1)
    return apply_chain(f, 1, k, X_FAMILY)


__all__ = [
    "X",
    "InterpolationContext",
    "Symbolic",
    "rational_newton_coeffs",
    "expansion_term",
    "partial_terms",
    "reconstruct_partial",
    "interpolation_residuals",
    "orthogonality_value",
    "orthogonality_expected",
    "q_derivative",
    "liu_coefficient",
    "liu_prefactor",
    "liu_term",
    "carlitz_term",
    "liu_context",
    "bibasic_coefficient",
    "lemma_main_closed_form",
    "lemma_main_engine",
    "cvar",
]
