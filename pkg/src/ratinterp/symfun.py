"""Elementary and complete symmetric functions and multi-alphabet Schur determinants.

An alphabet is any finite sequence of values (numbers, variables,
polynomials).  S_lambda(A_1, ..., A_n) is the determinant
|S_{lambda_j + j - i}(A_j)|, one alphabet per column.
"""
from __future__ import annotations

from functools import lru_cache

from .divdiff import apply_chain
from .poly import B_FAMILY, Polynomial, bvar, scalar, xvar
from .ratfun import _as_value
from .series import TruncatedSeries

_T = scalar("_t")
_ZERO = Polynomial.const(0)
_ONE = Polynomial.const(1)


def _letters(alphabet):
    return [_as_value(a) for a in alphabet]


def elementary_series(alphabet, order):
    """prod(1 + a t) truncated at t^order."""
    out = TruncatedSeries.one(_T, order)
    for a in _letters(alphabet):
        out = out * TruncatedSeries(_T, order, [_ONE, a])
    return out


def complete_series(alphabet, order):
    """prod 1/(1 - a t) truncated at t^order."""
    out = TruncatedSeries.one(_T, order)
    for a in _letters(alphabet):
        out = out * TruncatedSeries(_T, order, [_ONE, -a]).inverse()
    return out


def elementary(i, alphabet):
    letters = _letters(alphabet)
    if i < 0 or i > len(letters):
        return _ZERO
    # e_i via the running product of (1 + a t), kept to degree i
    coeffs = [_ONE] + [_ZERO] * i
    for a in letters:
        for j in range(i, 0, -1):
            coeffs[j] = coeffs[j] + a * coeffs[j - 1]
    return coeffs[i]


def complete(i, alphabet):
    if i < 0:
        return _ZERO
    if i == 0:
        return _ONE
    return complete_series(alphabet, i).coefficient(i)


def _det(matrix):
    """Laplace expansion along the first row, memoized on the column set."""
    n = len(matrix)
    if n == 0:
        return _ONE

    @lru_cache(maxsize=None)
    def minor(row, cols):
        if row == n:
            return _ONE
        acc = _ZERO
        sign = 1
        for pos, col in enumerate(cols):
            entry = matrix[row][col]
            if entry:
                rest = cols[:pos] + cols[pos + 1 :]
                term = entry * minor(row + 1, rest)
                acc = acc + term if sign > 0 else acc - term
            sign = -sign
        return acc

    return minor(0, tuple(range(n)))


def schur_matrix(parts, alphabets):
    n = len(parts)
    if len(alphabets) != n:
        raise ValueError(f"{n} parts need {n} alphabets, got {len(alphabets)}")
    cache = {}

    def S(k, j):
        key = (k, j)
        if key not in cache:
            cache[key] = complete(k, alphabets[j])
        return cache[key]

    # rows i, columns j (0-based): S_{lambda_j + j - i}(A_j)
    return [[S(parts[j] + j - i, j) for j in range(n)] for i in range(n)]


def schur_multi(parts, alphabets):
    """S_lambda(A_1, ..., A_n); parts may be any integers (negative give zeros)."""
    return _det(schur_matrix(list(parts), list(alphabets)))


def check_flag_identity(parts, r, depth):
    """S_lambda(x2..x_{m+1}) * x1^r == S_{lambda, r}(X, ..., X, {x1}) with X = x1..x_{m+1}."""
    parts = list(parts)
    full = [xvar(i) for i in range(1, depth + 2)]
    tail = full[1:]
    x1 = Polynomial.var(xvar(1))
    lhs = schur_multi(parts, [tail] * len(parts)) * x1**r
    rhs = schur_multi(parts + [r], [full] * len(parts) + [[xvar(1)]])
    return lhs == rhs


def power_to_complete(m, k):
    """(b1^m ∂1...∂k, S_{m-k}(b1..b_{k+1})); the two agree for all m, k >= 0."""
    lhs = apply_chain(Polynomial.var(bvar(1)) ** m, 1, k, B_FAMILY)
    rhs = complete(m - k, [bvar(j) for j in range(1, k + 2)])
    return lhs, rhs
