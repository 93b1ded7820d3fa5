"""Rational functions with a factored denominator.

The denominator is a multiset of canonical polynomial factors.  Factors are
never expanded and never GCD-reduced: the only cancellation is trial exact
division of the numerator by each factor.  Two factors that are equal after
canonicalization (monomial content removed, leading coefficient 1) share a
multiset slot; other coincidences go unnoticed, which is harmless because
equality is decided by cross-multiplication.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZeroSymbol, MissingBinding, PoleHit
from .poly import Polynomial, Var, certainly_not_divisible, mono_pow

_ONE = Polynomial.const(1)


def normalize_factor(p):
    """Split ``p`` into ``(unit, canonical)`` with ``p == unit * canonical``.

    ``unit`` is a single-term polynomial; ``canonical`` is None when ``p``
    itself is a unit.  Canonical factors carry no monomial content and have
    constant term 1, or leading coefficient 1 when there is no constant term.
    """
    if p.is_zero():
        raise DivisionByZeroSymbol("zero denominator factor")
    if p.is_monomial():
        return p, None
    content = p.content_monomial()
    if content:
        p = p * Polynomial.monomial(mono_pow(content, -1))
    lead_c = p.terms.get(())
    if lead_c is None:
        _, lead_c = p.leading_term()
    if lead_c != 1:
        p = p / lead_c
    return Polynomial.monomial(content, lead_c), p


def _try_cancel(num, factor):
    if certainly_not_divisible(num, factor):
        return None
    return num.try_divexact(factor)


def _reduce(num, den):
    if num.is_zero():
        return num, {}
    if not den:
        return num, den
    out = {}
    for f, k in den.items():
        while k:
            q = _try_cancel(num, f)
            if q is None:
                break
            num = q
            k -= 1
        if k:
            out[f] = k
    return num, out


def _lcm(d1, d2):
    out = dict(d1)
    for f, k in d2.items():
        if out.get(f, 0) < k:
            out[f] = k
    return out


def _cofactor(full, part):
    """Product of factors of ``full`` not covered by ``part``."""
    acc = _ONE
    for f, k in full.items():
        extra = k - part.get(f, 0)
        if extra:
            acc = acc * (f if extra == 1 else f**extra)
    return acc


def as_ratfun(x):
    if isinstance(x, RatFun):
        return x
    return RatFun(x)


class RatFun:
    """``numerator / prod(factor ** multiplicity)`` with value semantics."""

    __slots__ = ("num", "den")

    def __init__(self, numerator=0, factors=(), reduce=True):
        num = _to_poly(numerator)
        den = {}
        for f, k in (factors.items() if isinstance(factors, dict) else factors):
            f = _to_poly(f)
            unit, canon = normalize_factor(f)
            num = num * unit ** (-k)
            if canon is not None and k:
                den[canon] = den.get(canon, 0) + k
        if reduce:
            num, den = _reduce(num, den)
        elif num.is_zero():
            den = {}
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, num, den):
        r = cls.__new__(cls)
        r.num = num
        r.den = den if not num.is_zero() else {}
        return r

    @classmethod
    def reduced(cls, num, den):
        """Build from canonical factors, cancelling what divides exactly."""
        num, den = _reduce(num, den)
        return cls._raw(num, den)

    # -- inspection -------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self):
        return not self.den

    def to_polynomial(self):
        if self.den:
            raise ValueError(f"{self} has a nontrivial denominator")
        return self.num

    def denominator(self):
        return _cofactor(self.den, {})

    def factors(self):
        return dict(self.den)

    def is_constant(self):
        return not self.den and self.num.is_constant()

    def constant_value(self):
        if self.den:
            raise ValueError(f"{self} is not constant")
        return self.num.constant_value()

    def variables(self):
        out = self.num.variables()
        for f in self.den:
            out |= f.variables()
        return out

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            return self
        if self.num.is_zero():
            return o
        if self.den == o.den:
            return RatFun.reduced(self.num + o.num, self.den)
        den = _lcm(self.den, o.den)
        num = self.num * _cofactor(den, self.den) + o.num * _cofactor(den, o.den)
        return RatFun.reduced(num, den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun._raw(-self.num, self.den)

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return RatFun._raw(Polynomial.const(0), {})
        n1, d2 = _reduce(self.num, o.den)
        n2, d1 = _reduce(o.num, self.den)
        den = dict(d1)
        for f, k in d2.items():
            den[f] = den.get(f, 0) + k
        return RatFun._raw(n1 * n2, den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise DivisionByZeroSymbol("inverse of zero")
        return RatFun(_cofactor(self.den, {}), [(self.num, 1)])

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise DivisionByZeroSymbol("division by zero rational function")
        unit, canon = normalize_factor(o.num)
        extra = {canon: 1} if canon is not None else {}
        inv = RatFun._raw(_cofactor(o.den, {}) * unit**-1, extra)
        return self * inv

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return RatFun(1)
        num = self.num**k
        return RatFun._raw(num, {f: m * k for f, m in self.den.items()})

    # -- equality ---------------------------------------------------------

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return self.num == o.num
        den = _lcm(self.den, o.den)
        lhs = self.num * _cofactor(den, self.den)
        rhs = o.num * _cofactor(den, o.den)
        return lhs == rhs

    __hash__ = None

    # -- substitution and evaluation --------------------------------------

    def rename(self, mapping, reduce=True):
        """Rename variables; ``reduce=False`` skips cancellation (safe for bijections)."""
        num = self.num.rename(mapping)
        return RatFun(num, [(f.rename(mapping), k) for f, k in self.den.items()], reduce=reduce)

    def substitute(self, binding):
        return substitute(self, binding)

    def evaluate(self, assignment):
        return ratfun_eval(self, assignment)

    # -- printing ---------------------------------------------------------

    def __str__(self):
        if not self.den:
            return str(self.num)
        num = str(self.num)
        if len(self.num) > 1:
            num = f"({num})"
        parts = []
        for f, k in sorted(self.den.items(), key=lambda fk: str(fk[0])):
            s = f"({f})" if len(f) > 1 else str(f)
            parts.append(s if k == 1 else f"{s}^{k}")
        if len(parts) == 1 and next(iter(self.den.values())) == 1:
            return f"{num}/{parts[0]}"
        return f"{num}/({'*'.join(parts)})"

    def __repr__(self):
        return f"RatFun({self})"


def _to_poly(x):
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, Var):
        return Polynomial.var(x)
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Polynomial.const(x)
    if isinstance(x, RatFun):
        return x.to_polynomial()
    raise TypeError(f"cannot convert {type(x).__name__} to a polynomial")


def _coerce(x):
    if isinstance(x, RatFun):
        return x
    if isinstance(x, (Polynomial, Var, int, Fraction)) and not isinstance(x, bool):
        return RatFun._raw(_to_poly(x), {})
    return None


def _as_value(x):
    """Binding values may be numbers, Vars, Polynomials or RatFuns."""
    if isinstance(x, RatFun):
        return x.num if not x.den else x
    return _to_poly(x)


def _subst_poly(p, binding):
    """Substitute into a polynomial; returns Polynomial or RatFun."""
    relevant = {v: val for v, val in binding.items() if v in p.variables()} if binding else {}
    if not relevant:
        return p
    if all(isinstance(val, Polynomial) for val in relevant.values()):
        out = p.substitute_poly(relevant)
        if out is not None:
            return out
    acc = RatFun(0)
    cache = {}
    for m, c in p.terms.items():
        t = RatFun(Polynomial.monomial(tuple((v, e) for v, e in m if v not in relevant), c))
        for v, e in m:
            if v not in relevant:
                continue
            key = (v, e)
            val = cache.get(key)
            if val is None:
                base = relevant[v]
                if e < 0 and (base.is_zero() if isinstance(base, (Polynomial, RatFun)) else base == 0):
                    raise DivisionByZeroSymbol(f"{v} bound to zero with exponent {e}")
                val = as_ratfun(base) ** e
                cache[key] = val
            t = t * val
        acc = acc + t
    return acc


def substitute(f, binding):
    """Simultaneous substitution of variables; unbound variables pass through.

    Values may be numbers, variables, polynomials or rational functions.
    A denominator factor that becomes zero raises PoleHit.
    """
    binding = {v: _as_value(val) for v, val in binding.items()}
    if isinstance(f, Polynomial):
        out = _subst_poly(f, binding)
        return out if isinstance(out, RatFun) else RatFun._raw(out, {})
    f = as_ratfun(f)
    num = _subst_poly(f.num, binding)
    if isinstance(num, Polynomial) and num.is_zero():
        return RatFun._raw(num, {})
    plain = []
    rational = []
    for fac, k in f.den.items():
        val = _subst_poly(fac, binding)
        if isinstance(val, RatFun):
            if val.is_zero():
                raise PoleHit(f"denominator factor {fac} vanishes", fac)
            rational.append((val, k))
        else:
            if val.is_zero():
                raise PoleHit(f"denominator factor {fac} vanishes", fac)
            plain.append((val, k))
    if isinstance(num, RatFun):
        out = num * RatFun(1, plain, reduce=False)
    else:
        out = RatFun(num, plain)
        if not rational:
            return out
    for val, k in rational:
        out = out / (val**k)
    return out


def ratfun_eval(f, assignment):
    """Exact rational value of ``f`` at a point covering all its variables."""
    f = as_ratfun(f)
    value = f.num.evaluate(assignment)
    for fac, k in f.den.items():
        d = fac.evaluate(assignment)
        if d == 0:
            raise PoleHit(f"denominator factor {fac} vanishes at the point", fac)
        value /= d**k
    return value


def value_of(x, assignment=None):
    """Convenience: Fraction value of a number/Polynomial/RatFun."""
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if assignment is None:
        assignment = {}
    return ratfun_eval(as_ratfun(x), assignment)


__all__ = [
    "RatFun",
    "as_ratfun",
    "substitute",
    "ratfun_eval",
    "normalize_factor",
    "value_of",
    "MissingBinding",
]
