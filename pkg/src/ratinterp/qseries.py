"""q-Pochhammer symbols, Gaussian binomials and basic hypergeometric sums.

Everything here is generic over the value type: with Fraction arguments
the results are Fractions, with symbolic arguments they are Polynomials or
RatFuns.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import IndexOutOfRange, PoleHit, TruncationUnreachable
from .poly import Polynomial, Var
from .ratfun import RatFun, _as_value
from .series import TruncatedSeries


def _val(x):
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Fraction(x)
    return _as_value(x)


def pochhammer(a, q, n):
    """(a;q)_n = (1-a)(1-aq)...(1-aq^{n-1}).

    Negative n follows (a;q)_{-m} = 1 / (a q^{-m}; q)_m.
    """
    a, q = _val(a), _val(q)
    if n >= 0:
        acc = Fraction(1) if _numeric(a, q) else Polynomial.const(1)
        qj = 1
        for _ in range(n):
            acc = acc * (1 - a * qj)
            qj = qj * q
        return acc
    acc = Fraction(1) if _numeric(a, q) else Polynomial.const(1)
    for j in range(1, -n + 1):
        acc = acc * (1 - a * q**-j)
    return 1 / acc


def multi_pochhammer(params, q, n):
    """(a_1, ..., a_m; q)_n as the product of the single symbols."""
    acc = Fraction(1)
    for a in params:
        acc = acc * pochhammer(a, q, n)
    return acc


def _numeric(*xs):
    return all(isinstance(x, Fraction) for x in xs)


def pochhammer_inf(a, q, order):
    """(a;q)_infinity as a TruncatedSeries in the variable ``q``.

    ``a`` must be a polynomial without negative powers of ``q``.  With m the
    lowest power of q in ``a``, factor j differs from 1 only from q^{j+m} on,
    so factors j > order - m are dropped.
    """
    if not isinstance(q, Var):
        raise TypeError("pochhammer_inf needs the series variable as a Var")
    a = _as_value(a)
    if isinstance(a, RatFun):
        a = a.to_polynomial()
    out = TruncatedSeries.one(q, order)
    if a.is_zero():
        return out
    low = a.min_degree_in(q)
    if low < 0:
        raise TruncationUnreachable(f"{a} has a negative power of {q}; factors never become 1 mod {q}^{order + 1}")
    qv = Polynomial.var(q)
    for j in range(0, order - low + 1):
        factor = 1 - a * qv**j
        out = out * TruncatedSeries.from_polynomial(factor, q, order)
    return out


def q_binomial(n, k, q):
    """Gaussian binomial [n over k] = (q;q)_n / ((q;q)_k (q;q)_{n-k})."""
    if not 0 <= k <= n:
        raise IndexOutOfRange(f"q_binomial needs 0 <= k <= n, got n={n}, k={k}")
    qv = _val(q)
    num = pochhammer(qv, qv, n)
    den = pochhammer(qv, qv, k) * pochhammer(qv, qv, n - k)
    if isinstance(num, Fraction):
        return num / den
    return num.divexact(den)


@dataclass(frozen=True)
class HypergeometricSpec:
    """r-phi-s with upper parameters, lower parameters, base and argument."""

    upper: tuple
    lower: tuple
    q: object
    z: object

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(self.upper))
        object.__setattr__(self, "lower", tuple(self.lower))


def hypergeometric_term(spec, n):
    """(a_1..a_r;q)_n / (q, b_1..b_s;q)_n * [(-1)^n q^{n(n-1)/2}]^{1+s-r} z^n."""
    q = _val(spec.q)
    r, s = len(spec.upper), len(spec.lower)
    num = multi_pochhammer(spec.upper, q, n)
    den = multi_pochhammer((q,) + spec.lower, q, n)
    power = 1 + s - r
    extra = (-1) ** (n * power) * q ** ((n * (n - 1) // 2) * power) if power else 1
    if den == 0:
        raise PoleHit(f"lower parameters vanish in term {n}", factor=den)
    return num * extra * _val(spec.z) ** n / den


def basic_hypergeometric(spec, terms):
    """Exact sum of the terms with index 0..terms.

    For a terminating series (an upper parameter q^{-n}) pass terms >= n.
    """
    total = Fraction(0)
    for n in range(terms + 1):
        total = total + hypergeometric_term(spec, n)
    return total
