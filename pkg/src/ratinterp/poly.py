"""Sparse Laurent polynomials over the rationals.

A monomial is a tuple of ``(Var, exponent)`` pairs sorted by variable, with
no zero exponents; ``()`` is the unit monomial.  A polynomial is a mapping
from monomials to nonzero coefficients (``int`` or ``Fraction``).  Values are
immutable once built.
"""
from __future__ import annotations

import heapq
import random
from fractions import Fraction
from typing import NamedTuple

from .errors import DivisionByZeroSymbol, MissingBinding, NonExactDivision

X_FAMILY, C_FAMILY, B_FAMILY, SCALAR = 0, 1, 2, 3
FAMILY_NAMES = {"X": X_FAMILY, "C": C_FAMILY, "B": B_FAMILY, "Scalar": SCALAR}
_PREFIX = {X_FAMILY: "x", C_FAMILY: "c", B_FAMILY: "b"}


class Var(NamedTuple):
    """A variable: an indexed family member (x1, c2, b3) or a named scalar.

    Ordering is by family (X < C < B < Scalar), then index or name.
    """

    family: int
    key: int | str

    def __str__(self):
        if self.family == SCALAR:
            return self.key
        return f"{_PREFIX[self.family]}{self.key}"

    def __repr__(self):
        return f"Var({self})"


def xvar(i):
    return Var(X_FAMILY, i)


def cvar(i):
    return Var(C_FAMILY, i)


def bvar(i):
    return Var(B_FAMILY, i)


def scalar(name):
    return Var(SCALAR, name)


def family_code(family):
    """Accept 'X'/'C'/'B'/'Scalar' or the integer code."""
    if isinstance(family, str):
        return FAMILY_NAMES[family]
    return family


def _norm_coeff(c):
    if isinstance(c, bool):
        raise TypeError("booleans are not coefficients")
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return int(c)
    raise TypeError(f"exact coefficient required, got {type(c).__name__}")


def _qdiv(a, b):
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        return q if r == 0 else Fraction(a, b)
    res = Fraction(a) / b
    return res.numerator if res.denominator == 1 else res


def mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        s = d.get(v, 0) + e
        if s:
            d[v] = s
        else:
            del d[v]
    return tuple(sorted(d.items()))


def mono_pow(m, k):
    if k == 0:
        return ()
    return tuple((v, e * k) for v, e in m)


def mono_degree(m, var):
    for v, e in m:
        if v == var:
            return e
    return 0


def mono_str(m):
    parts = []
    for v, e in m:
        parts.append(str(v) if e == 1 else f"{v}^{e}")
    return "*".join(parts)


def _coeff_str(c):
    return str(c)


class Polynomial:
    """Sparse Laurent polynomial with exact rational coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for m, c in terms.items():
                c = _norm_coeff(c)
                if c:
                    m = tuple(sorted((v, e) for v, e in m if e))
                    s = clean.get(m, 0) + c
                    if s:
                        clean[m] = s
                    else:
                        clean.pop(m, None)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c):
        c = _norm_coeff(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, v, exp=1):
        return cls._raw({((v, exp),): 1} if exp else {(): 1})

    @classmethod
    def monomial(cls, m, c=1):
        c = _norm_coeff(c)
        return cls._raw({m: c} if c else {})

    # -- inspection -------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self):
        """The value as a Fraction; raises ValueError if not constant."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and () in self.terms:
            return Fraction(self.terms[()])
        raise ValueError(f"{self} is not constant")

    def constant_term(self):
        return Fraction(self.terms.get((), 0))

    def is_monomial(self):
        """True for a single nonzero term (a unit of the Laurent ring)."""
        return len(self.terms) == 1

    def variables(self):
        out = set()
        for m in self.terms:
            for v, _ in m:
                out.add(v)
        return out

    def degree_in(self, var):
        """Largest exponent of ``var``; -inf style None for the zero polynomial."""
        if not self.terms:
            return None
        return max(mono_degree(m, var) for m in self.terms)

    def min_degree_in(self, var):
        if not self.terms:
            return None
        return min(mono_degree(m, var) for m in self.terms)

    def total_degree(self):
        if not self.terms:
            return None
        return max(sum(e for _, e in m) for m in self.terms)

    def coeffs_in(self, var):
        """Split into {exponent: Polynomial free of var}."""
        out = {}
        for m, c in self.terms.items():
            e = 0
            rest = []
            for v, k in m:
                if v == var:
                    e = k
                else:
                    rest.append((v, k))
            d = out.setdefault(e, {})
            d[tuple(rest)] = c
        return {e: Polynomial._raw(d) for e, d in out.items()}

    def leading_term(self):
        m = max(self.terms)
        return m, self.terms[m]

    def content_monomial(self):
        """Monomial of the minimal exponent of each variable over all terms."""
        if not self.terms:
            return ()
        mins = {}
        first = True
        for m in self.terms:
            d = dict(m)
            if first:
                mins = d
                first = False
                continue
            for v in list(mins):
                e = d.get(v, 0)
                if e < mins[v]:
                    mins[v] = e
            for v, e in d.items():
                if v not in mins:
                    mins[v] = min(e, 0)
        return tuple(sorted((v, e) for v, e in mins.items() if e))

    # -- equality ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(): other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, Polynomial):
            return x
        if isinstance(x, Var):
            return Polynomial.var(x)
        if isinstance(x, (int, Fraction)):
            return Polynomial.const(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if len(o.terms) > len(self.terms):
            a, b = o.terms, self.terms
        else:
            a, b = self.terms, o.terms
        res = dict(a)
        for m, c in b.items():
            s = res.get(m, 0) + c
            if s:
                res[m] = s
            else:
                res.pop(m, None)
        return Polynomial._raw(res)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        res = dict(self.terms)
        for m, c in o.terms.items():
            s = res.get(m, 0) - c
            if s:
                res[m] = s
            else:
                res.pop(m, None)
        return Polynomial._raw(res)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            c = _norm_coeff(other)
            if not c:
                return Polynomial._raw({})
            return Polynomial._raw({m: v * c for m, v in self.terms.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.terms, o.terms
        if not a or not b:
            return Polynomial._raw({})
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (m2, c2), = b.items()
            if not m2:
                return Polynomial._raw({m: c * c2 for m, c in a.items()})
            return Polynomial._raw({mono_mul(m, m2): c * c2 for m, c in a.items()})
        res = {}
        get = res.get
        for m2, c2 in b.items():
            for m1, c1 in a.items():
                m = mono_mul(m1, m2)
                s = get(m, 0) + c1 * c2
                if s:
                    res[m] = s
                else:
                    del res[m]
        return Polynomial._raw(res)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                from .ratfun import RatFun

                return RatFun(self) ** k
            (m, c), = self.terms.items()
            return Polynomial._raw({mono_pow(m, k): _qdiv(1, c) ** -k})
        if len(self.terms) == 1:
            (m, c), = self.terms.items()
            return Polynomial._raw({mono_pow(m, k): c**k})
        result = Polynomial.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Polynomial._raw({m: _qdiv(c, other) for m, c in self.terms.items()})
        o = self._coerce(other)
        if o is not None and o.is_monomial():
            return self * o ** -1
        from .ratfun import RatFun

        return RatFun(self) / other

    def __rtruediv__(self, other):
        from .ratfun import RatFun

        return RatFun(other) / RatFun(self)

    def inverse_monomial(self):
        return self ** -1

    # -- exact division ---------------------------------------------------

    def divexact(self, d):
        """Quotient ``t`` with ``t * d == self``; NonExactDivision otherwise."""
        d = self._coerce(d)
        if d is None or d.is_zero():
            raise ZeroDivisionError("exact division by the zero polynomial")
        if not self.terms:
            return Polynomial._raw({})
        if d.is_monomial():
            return self * d ** -1
        mp = self.content_monomial()
        md = d.content_monomial()
        p = self * Polynomial.monomial(mono_pow(mp, -1)) if mp else self
        dd = d * Polynomial.monomial(mono_pow(md, -1)) if md else d
        shift = Polynomial.monomial(mono_mul(mp, mono_pow(md, -1)))
        return _poly_divide(p, dd) * shift

    def try_divexact(self, d):
        try:
            return self.divexact(d)
        except NonExactDivision:
            return None

    # -- substitution and evaluation --------------------------------------

    def rename(self, mapping):
        """Rename variables (Var -> Var); like terms are merged."""
        res = {}
        for m, c in self.terms.items():
            if any(v in mapping for v, _ in m):
                d = {}
                for v, e in m:
                    w = mapping.get(v, v)
                    s = d.get(w, 0) + e
                    if s:
                        d[w] = s
                    else:
                        d.pop(w, None)
                m = tuple(sorted(d.items()))
            s = res.get(m, 0) + c
            if s:
                res[m] = s
            else:
                res.pop(m, None)
        return Polynomial._raw(res)

    def substitute_poly(self, binding):
        """Substitute Var -> Polynomial; None if an inverse would be needed.

        Negative exponents are only handled when the bound value is a
        monomial; otherwise the caller has to go through RatFun.
        """
        cache = {}
        res = Polynomial._raw({})
        groups = {}
        for m, c in self.terms.items():
            bound = []
            free = []
            for v, e in m:
                (bound if v in binding else free).append((v, e))
            groups.setdefault(tuple(bound), {})[tuple(free)] = c
        for bound, rest in groups.items():
            factor = Polynomial.const(1)
            for v, e in bound:
                key = (v, e)
                val = cache.get(key)
                if val is None:
                    base = binding[v]
                    if e < 0:
                        if base.is_zero():
                            raise DivisionByZeroSymbol(f"{v} bound to zero with exponent {e}")
                        if not base.is_monomial():
                            return None
                    val = base**e
                    cache[key] = val
                factor = factor * val
            res = res + factor * Polynomial._raw(rest)
        return res

    def evaluate(self, assignment):
        """Exact value at a rational point (all variables must be bound)."""
        total = Fraction(0)
        powers = {}
        for m, c in self.terms.items():
            t = Fraction(c)
            for v, e in m:
                key = (v, e)
                val = powers.get(key)
                if val is None:
                    try:
                        base = assignment[v]
                    except KeyError:
                        raise MissingBinding(v) from None
                    base = Fraction(base)
                    if e < 0 and base == 0:
                        raise DivisionByZeroSymbol(f"{v} = 0 with exponent {e}")
                    val = base**e
                    powers[key] = val
                t *= val
            total += t
        return total

    def eval_mod(self, residues, prime):
        """Value modulo ``prime`` with residues for every variable."""
        total = 0
        for m, c in self.terms.items():
            if type(c) is int:
                t = c % prime
            else:
                t = c.numerator * pow(c.denominator, -1, prime) % prime
            for v, e in m:
                t = t * pow(residues[v], e, prime) % prime
            total += t
        return total % prime

    # -- printing ---------------------------------------------------------

    def sorted_terms(self):
        def key(item):
            m, _ = item
            return (sum(e for _, e in m), m)

        return sorted(self.terms.items(), key=key)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            a = -c if neg else c
            ms = mono_str(m)
            if not ms:
                body = _coeff_str(a)
            elif a == 1:
                body = ms
            else:
                body = f"{_coeff_str(a)}*{ms}"
            if i == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"Polynomial({self})"


def _poly_divide(p, d):
    """Exact division of polynomials without monomial content (lex order)."""
    vars_ = sorted(p.variables() | d.variables())
    index = {v: i for i, v in enumerate(vars_)}
    n = len(vars_)

    def dense(m):
        vec = [0] * n
        for v, e in m:
            vec[index[v]] = e
        return tuple(vec)

    dterms = [(dense(m), c) for m, c in d.terms.items()]
    lead_vec, lead_c = max(dterms)
    others = [(vec, c) for vec, c in dterms if vec != lead_vec]
    rem = {dense(m): c for m, c in p.terms.items()}
    heap = [tuple(-e for e in vec) for vec in rem]
    heapq.heapify(heap)
    quotient = {}
    while rem:
        key = heapq.heappop(heap)
        vec = tuple(-e for e in key)
        c = rem.get(vec)
        if c is None:
            continue
        qvec = tuple(a - b for a, b in zip(vec, lead_vec))
        if any(e < 0 for e in qvec):
            raise NonExactDivision("remainder is nonzero")
        qc = _qdiv(c, lead_c)
        quotient[qvec] = qc
        del rem[vec]
        for ovec, oc in others:
            t = tuple(a + b for a, b in zip(qvec, ovec))
            s = rem.get(t, 0) - qc * oc
            if s:
                if t not in rem:
                    heapq.heappush(heap, tuple(-e for e in t))
                rem[t] = s
            else:
                rem.pop(t, None)
        # keys already in rem keep a stale-free heap entry; popped keys that
        # were deleted and re-added are pushed again above.
    out = {}
    for vec, c in quotient.items():
        out[tuple((vars_[i], e) for i, e in enumerate(vec) if e)] = c
    return Polynomial._raw(out)


_PRIME = (1 << 61) - 1
_rng = random.Random(0x5EED)


def certainly_not_divisible(p, d):
    """Fast modular filter: True only if ``d`` provably does not divide ``p``.

    Works when ``d`` is linear in some variable: substitute a root of ``d``
    at a random point modulo a large prime and look at the value of ``p``.
    A False answer carries no information.
    """
    if p.is_zero():
        return False
    dvars = d.variables()
    for v in sorted(dvars):
        if d.degree_in(v) == 1 and d.min_degree_in(v) == 0:
            break
    else:
        return False
    parts = d.coeffs_in(v)
    lin, const = parts[1], parts.get(0, Polynomial._raw({}))
    allvars = (p.variables() | dvars) - {v}
    residues = {w: _rng.randrange(2, _PRIME - 1) for w in allvars}
    try:
        a = lin.eval_mod(residues, _PRIME)
        if a == 0:
            return False
        b = const.eval_mod(residues, _PRIME)
        root = (-b) * pow(a, -1, _PRIME) % _PRIME
        if root == 0:
            return False
        residues[v] = root
        return p.eval_mod(residues, _PRIME) != 0
    except (ValueError, ZeroDivisionError):
        return False
