"""Truncated formal power series in one distinguished variable."""
from __future__ import annotations

from fractions import Fraction

from .errors import NonInvertibleConstantTerm, TruncationUnreachable
from .poly import Polynomial, Var
from .ratfun import RatFun, as_ratfun

_ZERO = Polynomial.const(0)


def _is_unit(c):
    if isinstance(c, Polynomial):
        return c.is_monomial()
    if isinstance(c, RatFun):
        return not c.is_zero()
    return c != 0


class TruncatedSeries:
    """``sum(coeffs[i] * var**i for i <= order)`` modulo ``var**(order+1)``.

    Coefficients are Polynomials in the remaining variables (RatFun
    coefficients are tolerated for internal work such as symmetric-function
    generating series).
    """

    __slots__ = ("var", "order", "coeffs")

    def __init__(self, var, order, coeffs):
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = list(coeffs)[: order + 1]
        coeffs += [_ZERO] * (order + 1 - len(coeffs))
        self.var = var
        self.order = order
        self.coeffs = [Polynomial.const(c) if isinstance(c, (int, Fraction)) else c for c in coeffs]

    @classmethod
    def one(cls, var, order):
        return cls(var, order, [Polynomial.const(1)])

    @classmethod
    def from_polynomial(cls, p, var, order):
        """Split ``p`` by powers of ``var``; negative powers are rejected."""
        if isinstance(p, (int, Fraction)):
            return cls(var, order, [Polynomial.const(p)])
        if isinstance(p, RatFun):
            p = p.to_polynomial()
        parts = p.coeffs_in(var)
        if parts and min(parts) < 0:
            raise TruncationUnreachable(f"{p} has a negative power of {var}")
        coeffs = [parts.get(i, _ZERO) for i in range(order + 1)]
        return cls(var, order, coeffs)

    def coefficient(self, i):
        return self.coeffs[i] if 0 <= i <= self.order else _ZERO

    def truncate(self, order):
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return TruncatedSeries(self.var, order, self.coeffs[: order + 1])

    def _check(self, other):
        if not isinstance(other, TruncatedSeries):
            return None
        if other.var != self.var:
            raise ValueError(f"series variables differ: {self.var} vs {other.var}")
        return min(self.order, other.order)

    def _lift(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction, Polynomial, Var)):
            p = other if isinstance(other, Polynomial) else Polynomial._coerce(other)
            return TruncatedSeries.from_polynomial(p, self.var, self.order)
        if isinstance(other, RatFun):
            return series_from_ratfun(other, self.var, self.order)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        n = self._check(other)
        return TruncatedSeries(self.var, n, [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.var, self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        n = self._check(other)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = _ZERO
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    acc = acc + a[i] * b[k - i]
            out.append(acc)
        return TruncatedSeries(self.var, n, out)

    __rmul__ = __mul__

    def inverse(self):
        c0 = self.coeffs[0]
        if not _is_unit(c0):
            raise NonInvertibleConstantTerm(f"constant term {c0} is not invertible")
        inv0 = c0**-1
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = _ZERO
            for i in range(1, k + 1):
                if self.coeffs[i] and out[k - i]:
                    acc = acc + self.coeffs[i] * out[k - i]
            out.append(-(inv0 * acc))
        return TruncatedSeries(self.var, self.order, out)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = TruncatedSeries.one(self.var, self.order)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            n = self._check(other)
            return all(self.coeffs[i] == other.coeffs[i] for i in range(n + 1))
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return self == lifted

    __hash__ = None

    def first_difference(self, other):
        """Index of the first differing coefficient, or None."""
        n = self._check(other)
        for i in range(n + 1):
            if self.coeffs[i] != other.coeffs[i]:
                return i
        return None

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else (f"{self.var}" if i == 1 else f"{self.var}^{i}")
            cs = str(c)
            if not mono:
                parts.append(f"({cs})" if len(getattr(c, "terms", ())) > 1 else cs)
            else:
                parts.append(f"({cs})*{mono}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O({self.var}^{self.order + 1})"

    def __repr__(self):
        return f"TruncatedSeries({self})"


def series_from_ratfun(f, var, order):
    """Expand ``f`` in powers of ``var`` up to ``var**order``.

    Each denominator factor is expanded and inverted separately; a factor
    whose constant term in ``var`` is not a unit raises
    NonInvertibleConstantTerm.
    """
    f = as_ratfun(f)
    out = TruncatedSeries.from_polynomial(f.num, var, order)
    for fac, k in f.den.items():
        s = TruncatedSeries.from_polynomial(fac, var, order)
        if not _is_unit(s.coeffs[0]):
            raise NonInvertibleConstantTerm(f"factor {fac} has non-invertible constant term in {var}", fac)
        inv = s.inverse()
        for _ in range(k):
            out = out * inv
    return out
