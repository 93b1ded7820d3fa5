"""End-to-end verification of the q-series and bibasic identities.

Every ``verify_*`` function returns a :class:`VerificationReport`.  Finite
identities are checked exactly at seeded random rational points (or
symbolically where requested); identities with infinite products are
compared as truncated power series in q.  Each function checks every index
from 0 (or 1) up to the bound it is given.
"""
from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .divdiff import apply_chain
from .families import (
    Constant,
    Geometric,
    InterpolationContext,
    gosper_context,
    liu_context,
    newton_basis,
    pole_basis,
    symbolic_context,
)
from .interp import (
    X,
    bibasic_coefficient,
    carlitz_term,
    expansion_term,
    lemma_main_closed_form,
    lemma_main_engine,
    liu_coefficient,
    liu_prefactor,
    rational_newton_coeffs,
)
from .poly import X_FAMILY, Polynomial, cvar, scalar, xvar
from .qseries import (
    HypergeometricSpec,
    basic_hypergeometric,
    pochhammer,
    pochhammer_inf,
    q_binomial,
)
from .ratfun import RatFun, as_ratfun, substitute, value_of
from .series import TruncatedSeries, series_from_ratfun
from .symfun import elementary, schur_multi

DEFAULT_SEED = 20040101
DEFAULT_SAMPLES = 10
RETRY_CAP = 100

SYMBOLIC = "symbolic"
MODE_SYMBOLIC = "symbolic_q"
MODE_POINTS = "rational_point"

Q = scalar("q")
q_ = Polynomial.var(Q)


class SamplingExhausted(RuntimeError):
    """Rejection sampling could not find a pole-free point within the cap."""


@dataclass
class VerificationReport:
    identity_name: str
    mode: str
    parameters: dict
    order_or_n: int
    status: str
    witness: dict | None = None
    notes: list = field(default_factory=list)

    @property
    def verified(self):
        return self.status == "verified"

    def to_dict(self):
        return asdict(self)

    def to_json(self, **kw):
        return json.dumps(self.to_dict(), **kw)

    def summary(self):
        params = ", ".join(f"{k}={v}" for k, v in self.parameters.items())
        line = f"{self.identity_name:<14} {self.status:<9} mode={self.mode} n/order={self.order_or_n} [{params}]"
        if self.witness:
            line += f" witness={json.dumps(self.witness)}"
        return line


def _fmt(x):
    if x is None:
        return SYMBOLIC
    if isinstance(x, (int, Fraction)):
        return str(Fraction(x))
    return str(x)


def _report(name, mode, params, n, failures, notes=()):
    witness = failures[0] if failures else None
    return VerificationReport(
        identity_name=name,
        mode=mode,
        parameters={k: _fmt(v) for k, v in params.items()},
        order_or_n=n,
        status="failed" if failures else "verified",
        witness=witness,
        notes=list(notes),
    )


def _rng(seed, *labels):
    return random.Random(":".join(str(s) for s in (seed,) + labels))


def random_rational(rng, bound=9):
    num = 0
    while num == 0:
        num = rng.randint(-bound, bound)
    return Fraction(num, rng.randint(1, bound))


def _sample_points(rng, names, samples, evaluate):
    """Yield (point, value) for ``samples`` pole-free points.

    ``evaluate(point)`` may raise ZeroDivisionError at a pole; such points
    are rejected, at most RETRY_CAP times in a row.
    """
    got = 0
    while got < samples:
        for _ in range(RETRY_CAP):
            point = {name: random_rational(rng) for name in names}
            try:
                value = evaluate(point)
            except ZeroDivisionError:
                continue
            break
        else:
            raise SamplingExhausted(f"no pole-free point after {RETRY_CAP} draws")
        got += 1
        yield point, value


def _point_str(point):
    return {k: str(v) for k, v in point.items()}


def _seed(seed):
    return DEFAULT_SEED if seed is None else seed


# -- q-Vandermonde --------------------------------------------------------------


def vandermonde_first(n, a, c, q):
    """Left and right side of (a/c;q)_n/(a;q)_n = 2phi1(q^-n, c; a; q, a q^n / c)."""
    lhs = pochhammer(a / c, q, n) / pochhammer(a, q, n)
    rhs = basic_hypergeometric(HypergeometricSpec((q**-n, c), (a,), q, a * q**n / c), n)
    return lhs, rhs


def vandermonde_second(n, a, c, q):
    """Left and right side of (a/c;q)_n c^n/(a;q)_n = 2phi1(q^-n, c; a; q, q)."""
    lhs = pochhammer(a / c, q, n) * c**n / pochhammer(a, q, n)
    rhs = basic_hypergeometric(HypergeometricSpec((q**-n, c), (a,), q, q), n)
    return lhs, rhs


def vandermonde_pipeline(n):
    """Re-derive the first form by expanding f(x) = (x;q)_n at nodes a q^i, poles 0.

    Returns a list of failure witnesses (empty when everything matches).
    """
    a = Polynomial.var(scalar("a"))
    xv = Polynomial.var(X)
    ctx = InterpolationContext(Geometric(a * q_, q_), Constant(0))
    coeffs = rational_newton_coeffs(pochhammer(xv, q_, n), ctx, n + 1)
    failures = []
    for k, A in enumerate(coeffs):
        if k > n:
            if not A.is_zero():
                failures.append({"n": n, "k": k, "coefficient": str(A)})
            continue
        expected = (-1) ** k * q_ ** (k * (k - 1) // 2) * q_binomial(n, k, q_) * pochhammer(a * q_ ** (k + 1), q_, n - k)
        if A != expected:
            failures.append({"n": n, "k": k, "coefficient": str(A), "expected": str(expected)})
            continue
        term = A * newton_basis(xv, ctx.xs(k))
        closed = (
            as_ratfun(pochhammer(a * q_, q_, n) * pochhammer(q_**-n, q_, k) * pochhammer(a * q_ * xv**-1, q_, k) * (xv * q_**n) ** k)
            / (pochhammer(q_, q_, k) * pochhammer(a * q_, q_, k))
        )
        if term != closed:
            failures.append({"n": n, "k": k, "term": str(term), "expected": str(closed)})
    return failures


def verify_q_vandermonde(n=8, samples=DEFAULT_SAMPLES, seed=None, mode=MODE_POINTS, pipeline_max=4):
    seed = _seed(seed)
    failures = []
    if mode == MODE_SYMBOLIC:
        a, c = Polynomial.var(scalar("a")), Polynomial.var(scalar("c"))
        for m in range(n + 1):
            for form, fn in (("first", vandermonde_first), ("second", vandermonde_second)):
                lhs, rhs = fn(m, as_ratfun(a), c, q_)
                if as_ratfun(lhs) != rhs:
                    failures.append({"n": m, "form": form, "lhs": str(lhs), "rhs": str(rhs)})
    else:
        for m in range(n + 1):
            rng = _rng(seed, "vandermonde", m)

            def both(pt, m=m):
                return vandermonde_first(m, pt["a"], pt["c"], pt["q"]), vandermonde_second(m, pt["a"], pt["c"], pt["q"])

            for pt, ((l1, r1), (l2, r2)) in _sample_points(rng, ("a", "c", "q"), samples, both):
                if l1 != r1 or l2 != r2:
                    form = "first" if l1 != r1 else "second"
                    failures.append({"n": m, "form": form, "point": _point_str(pt)})
    for m in range(min(n, pipeline_max) + 1):
        failures.extend(vandermonde_pipeline(m))
    if mode == MODE_SYMBOLIC:
        params = {"a": None, "c": None, "q": None, "pipeline_max": min(n, pipeline_max)}
    else:
        params = {"samples": samples, "seed": seed, "pipeline_max": min(n, pipeline_max)}
    return _report("q_vandermonde", mode, params, n, failures)


# -- Jackson ----------------------------------------------------------------------


def _series(poly_or_rat, order):
    return series_from_ratfun(as_ratfun(poly_or_rat), Q, order)


def jackson_sides(order, a, x, beta):
    """Both sides of Jackson's expansion as series in q.

    When a, x and beta are all rational the identity is compared as
    displayed.  Otherwise (aβx;q)_∞ has a non-unit constant term 1 - aβx,
    and both sides are multiplied by that factor first.
    """
    numeric = all(isinstance(v, (int, Fraction)) for v in (a, x, beta))
    A, Xv, B = (Polynomial.const(v) if isinstance(v, (int, Fraction)) else v for v in (a, x, beta))
    abx = A * B * Xv
    qax = q_ * (A * Xv) ** -1
    rhs = TruncatedSeries(Q, order, [])
    n = 0
    while n * (n - 1) <= order:
        num = (1 - B * q_ ** (2 * n)) * pochhammer(qax, q_, n) * pochhammer(B, q_, n) * abx**n * q_ ** (n * (n - 1))
        if numeric:
            den = pochhammer(q_, q_, n) * pochhammer(abx, q_, n)
        else:
            den = pochhammer(q_, q_, n) * (pochhammer(abx * q_, q_, n - 1) if n else 1)
            if n == 0:
                num = num * (1 - abx)
        rhs = rhs + _series(num, order) * _series(den, order).inverse()
        n += 1
    if numeric:
        lhs = pochhammer_inf(B, Q, order) * pochhammer_inf(abx, Q, order).inverse()
    else:
        lhs = pochhammer_inf(B, Q, order) * pochhammer_inf(abx * q_, Q, order).inverse()
    return lhs, rhs


def verify_jackson(order=12, a=Fraction(1, 2), x=Fraction(1, 3), beta=Fraction(1, 5)):
    """beta=None keeps beta symbolic."""
    B = Polynomial.var(scalar("beta")) if beta is None else Fraction(beta)
    lhs, rhs = jackson_sides(order, Fraction(a), Fraction(x), B)
    diff = lhs.first_difference(rhs)
    failures = []
    if diff is not None:
        failures.append({"order": diff, "lhs": str(lhs.coefficient(diff)), "rhs": str(rhs.coefficient(diff))})
    notes = [] if beta is not None else ["both sides multiplied by (1 - a*beta*x) to make the series invertible"]
    return _report("jackson", MODE_SYMBOLIC, {"a": a, "x": x, "beta": beta}, order, failures, notes)


# -- Sylvester ----------------------------------------------------------------------


def sylvester_series(order, beta):
    B = beta if isinstance(beta, Polynomial) else Polynomial.const(beta)
    total = TruncatedSeries(Q, order, [])
    n = 0
    while n * (3 * n + 1) // 2 <= order:
        num = (-1) ** n * B**n * q_ ** (n * (3 * n + 1) // 2) * (1 - B * q_ ** (2 * n + 1))
        den = _series(pochhammer(q_, q_, n), order) * pochhammer_inf(B * q_ ** (n + 1), Q, order)
        total = total + _series(num, order) * den.inverse()
        n += 1
    return total


def verify_sylvester(order=15, beta=None):
    B = Polynomial.var(scalar("beta")) if beta is None else Fraction(beta)
    s = sylvester_series(order, B)
    one = TruncatedSeries.one(Q, order)
    diff = s.first_difference(one)
    failures = [] if diff is None else [{"order": diff, "coefficient": str(s.coefficient(diff))}]
    return _report("sylvester", MODE_SYMBOLIC, {"beta": beta}, order, failures)


# -- Andrews --------------------------------------------------------------------------


def andrews_sides(N, beta, q):
    """(-βq;q)_{2N} and sum_n (-βq;q)_{n-1}(1+βq^{2n}) β^n q^{n(3n-1)/2} [N,n] (-βq^{n+N+1};q)_{N-n}."""
    lhs = pochhammer(-beta * q, q, 2 * N)
    rhs = 0
    for n in range(N + 1):
        rhs = rhs + (
            pochhammer(-beta * q, q, n - 1)
            * (1 + beta * q ** (2 * n))
            * beta**n
            * q ** (n * (3 * n - 1) // 2)
            * q_binomial(N, n, q)
            * pochhammer(-beta * q ** (n + N + 1), q, N - n)
        )
    return lhs, rhs


def verify_andrews(N=3, mode=MODE_SYMBOLIC, samples=DEFAULT_SAMPLES, seed=None):
    seed = _seed(seed)
    failures = []
    for m in range(N + 1):
        if mode == MODE_SYMBOLIC:
            lhs, rhs = andrews_sides(m, Polynomial.var(scalar("beta")), q_)
            if as_ratfun(rhs) != lhs:
                failures.append({"N": m, "lhs": str(lhs), "rhs": str(rhs)})
        else:
            rng = _rng(seed, "andrews", m)
            for pt, (lhs, rhs) in _sample_points(rng, ("beta", "q"), samples, lambda p, m=m: andrews_sides(m, p["beta"], p["q"])):
                if lhs != rhs:
                    failures.append({"N": m, "point": _point_str(pt)})
    params = {"beta": None, "q": None} if mode == MODE_SYMBOLIC else {"samples": samples, "seed": seed}
    return _report("andrews", mode, params, N, failures)


# -- Sears ------------------------------------------------------------------------------


def sears_sides(n, a, b, d, e, q):
    lhs = basic_hypergeometric(HypergeometricSpec((q**-n, a, b), (d, e), q, d * e * q**n / (a * b)), n)
    rhs = pochhammer(e / a, q, n) / pochhammer(e, q, n) * basic_hypergeometric(
        HypergeometricSpec((q**-n, a, d / b), (d, a * q ** (1 - n) / e), q, q), n
    )
    return lhs, rhs


def verify_sears(n=5, samples=DEFAULT_SAMPLES, seed=None):
    seed = _seed(seed)
    failures = []
    for m in range(n + 1):
        rng = _rng(seed, "sears", m)
        names = ("a", "b", "d", "e", "q")
        for pt, (lhs, rhs) in _sample_points(rng, names, samples, lambda p, m=m: sears_sides(m, *(p[k] for k in names))):
            if lhs != rhs:
                failures.append({"n": m, "point": _point_str(pt)})
    return _report("sears", MODE_POINTS, {"samples": samples, "seed": seed}, n, failures)


# -- the closed-form coefficient lemma and the (1 - ux)/(1 - vx) expansion -----------------------


def _sym(name):
    return Polynomial.var(scalar(name))


def lemma_main_symfun_failures(k):
    """Cross-check the expansion behind the closed form through symmetric functions."""
    u, v = _sym("u"), _sym("v")
    x1 = Polynomial.var(xvar(1))
    xs = [xvar(i) for i in range(1, k + 2)]
    tail = xs[1:]
    ucs = [u] + [Polynomial.var(cvar(i)) for i in range(1, k)]
    failures = []

    product = (1 - u * x1) * pole_basis(x1, ucs[1:]) * pole_basis(v, tail)
    expansion = Polynomial.const(0)
    for i in range(k + 1):
        for j in range(k + 1):
            expansion = expansion + (-1) ** i * (-v) ** j * elementary(i, ucs) * elementary(j, tail) * x1**i
    if product != expansion:
        failures.append({"k": k, "step": "elementary expansion"})

    for i in range(k + 1):
        for j in range(k + 1):
            piece = elementary(j, tail) * x1**i
            flag = schur_multi([1] * j + [i], [xs] * j + [[xvar(1)]])
            if piece != flag:
                failures.append({"k": k, "i": i, "j": j, "step": "flag identity"})
            image = apply_chain(piece, 1, k, X_FAMILY)
            lowered = schur_multi([1] * j + [i - k], [xs] * (j + 1))
            if image != lowered:
                failures.append({"k": k, "i": i, "j": j, "step": "power to complete"})
            expected = (-1) ** j if i + j == k else 0
            if lowered != expected:
                failures.append({"k": k, "i": i, "j": j, "step": "determinant value", "value": str(lowered)})

    collected = Polynomial.const(0)
    for i in range(k + 1):
        collected = collected + (-1) ** i * v ** (k - i) * elementary(i, ucs)
    if collected != (v - u) * newton_basis(v, ucs[1:]):
        failures.append({"k": k, "step": "collected sum"})
    return failures


def verify_lemma_main(k=5, symfun_max=4):
    u, v = _sym("u"), _sym("v")
    failures = []
    for m in range(1, k + 1):
        engine = lemma_main_engine(m, u, v)
        closed = lemma_main_closed_form(m, u, v)
        if engine != closed:
            failures.append({"k": m, "engine": str(engine), "closed_form": str(closed)})
        if not lemma_main_engine(m, u, u).is_zero():
            failures.append({"k": m, "step": "u = v"})
    for m in range(1, min(k, symfun_max) + 1):
        failures.extend(lemma_main_symfun_failures(m))
    params = {"u": None, "v": None, "symfun_max": min(k, symfun_max)}
    return _report("lemma_main", MODE_SYMBOLIC, params, k, failures)


def verify_proposition(k=5):
    u, v, xv = _sym("u"), _sym("v"), Polynomial.var(X)
    f = as_ratfun(1 - u * xv) / (1 - v * xv)
    coeffs = rational_newton_coeffs(f, symbolic_context(), k)
    failures = []
    x1 = Polynomial.var(xvar(1))
    if coeffs[0] != as_ratfun(1 - u * x1) / (1 - v * x1):
        failures.append({"k": 0, "coefficient": str(coeffs[0])})
    for m in range(1, k + 1):
        closed = bibasic_coefficient(m, u, v)
        if coeffs[m] != closed:
            failures.append({"k": m, "engine": str(coeffs[m]), "closed_form": str(closed)})
    return _report("proposition", MODE_SYMBOLIC, {"u": None, "v": None}, k, failures)


# -- Gasper -------------------------------------------------------------------------------


def gasper_term(k, a, b, p, q):
    """(1 - a p^k q^k)/(1 - a) (a;p)_k (1/b;q)_k b^k / ((q;q)_k (abp;p)_k)."""
    return (
        (1 - a * p**k * q**k)
        / (1 - a)
        * pochhammer(a, p, k)
        * pochhammer(b**-1, q, k)
        * b**k
        / (pochhammer(q, q, k) * pochhammer(a * b * p, p, k))
    )


def gasper_expansion_terms(k_max):
    """Terms of (1 - v x1)/(1 - v x) from the engine, specialized to
    x_i = q^(i-1), c_i = a p^i, v = 1, x = b."""
    v, xv = _sym("v"), Polynomial.var(X)
    a, b, p = _sym("a"), _sym("b"), _sym("p")
    x1 = Polynomial.var(xvar(1))
    coeffs = rational_newton_coeffs(as_ratfun(1) / (1 - v * xv), symbolic_context(), k_max)
    binding = {scalar("v"): 1, X: b}
    for i in range(1, k_max + 2):
        binding[xvar(i)] = q_ ** (i - 1)
        binding[cvar(i)] = a * p**i
    out = []
    for k, A in enumerate(coeffs):
        term = A * expansion_term(k, symbolic_context()) * (1 - v * x1)
        out.append(substitute(term, binding))
    return out


def verify_gasper(k_max=6, p=Fraction(1, 3), q=Fraction(1, 2), a=Fraction(1, 5), b=Fraction(1, 7), bound=Fraction(1, 1000), burn_in=1):
    failures = []
    A, B, P = _sym("a"), _sym("b"), _sym("p")
    for k, term in enumerate(gasper_expansion_terms(k_max)):
        if term != as_ratfun(gasper_term(k, A, B, P, q_)):
            failures.append({"k": k, "step": "structural", "expansion": str(term)})
    p, q, a, b = (Fraction(t) for t in (p, q, a, b))
    sums = []
    total = Fraction(0)
    for k in range(k_max + 1):
        total += gasper_term(k, a, b, p, q)
        sums.append(total)
    mags = [abs(s) for s in sums]
    half = -(-k_max // 2)
    if not mags[k_max] < mags[half]:
        failures.append({"step": "partial sums", "S_last": str(sums[k_max]), "S_half": str(sums[half])})
    for k in range(burn_in, k_max):
        if not mags[k + 1] < mags[k]:
            failures.append({"step": "monotone", "k": k + 1, "S": str(sums[k + 1])})
            break
    if not mags[k_max] < bound:
        failures.append({"step": "bound", "S_last": str(sums[k_max]), "bound": str(bound)})
    notes = [
        "per-term match with the u=0 expansion, x_i=q^(i-1), c_i=a*p^i, v=1, x=b",
        f"|S_{k_max}| = {float(mags[k_max]):.3e} (exact {sums[k_max]})",
    ]
    params = {"p": p, "q": q, "a": a, "b": b, "bound": bound}
    return _report("gasper", MODE_SYMBOLIC, params, k_max, failures, notes)


# -- Gosper --------------------------------------------------------------------------------


def gosper_first(n, a, c, p, q):
    """Both sides of the first displayed form, and the normalizing factor."""
    lhs = 0
    for k in range(n + 1):
        lhs += (
            (1 - a * p**k * q**k)
            / (1 - a)
            * pochhammer(a, p, k)
            * pochhammer(c, q, k)
            * c**-k
            / (pochhammer(q, q, k) * pochhammer(a * p / c, p, k))
        )
    rhs = pochhammer(a * p, p, n) * pochhammer(c * q, q, n) * c**-n / (pochhammer(q, q, n) * pochhammer(a * p / c, p, n))
    norm = pochhammer(q, q, n) * pochhammer(a * p / c, p, n) * c**n * (1 - a) / (pochhammer(c, q, n + 1) * pochhammer(a, p, n + 1))
    return lhs, rhs, norm


def _shifted_pochhammer_times_power(base_num, p, k, c):
    """(base_num/c; p)_k * c^k written as prod (c - base_num p^j), defined at c = 0."""
    acc = 1
    for j in range(k):
        acc = acc * (c - base_num * p**j)
    return acc


def gosper_second_terms(n, a, c, p, q):
    terms = []
    for k in range(n + 1):
        m = n - k
        num = (1 - a * p**m * q**m) * pochhammer(q ** (m + 1), q, k) * _shifted_pochhammer_times_power(a * p ** (m + 1), p, k, c)
        den = pochhammer(c * q**m, q, k + 1) * pochhammer(a * p**m, p, k + 1)
        terms.append(num / den)
    return terms


def gosper_expansion_terms(n, a, c, p, q):
    """Terms of (1 - ux)/(1 - vx) expanded with nodes p^(i-1-n)/a, poles q^(i-n),
    u = q^-n, v = 1, at x = 1/c.  Terms beyond n vanish; one extra is returned."""
    ctx = gosper_context(n, a, p, q)
    u = q**-n
    x1 = value_of(ctx.x(1))
    terms = [(1 - u * x1) / (1 - x1)]
    for k in range(1, n + 2):
        t = bibasic_coefficient(k, u, 1, ctx) * expansion_term(k, ctx)
        terms.append(value_of(substitute(t, {X: 1 / c})))
    return terms


def verify_gosper(n=6, samples=DEFAULT_SAMPLES, seed=None):
    seed = _seed(seed)
    failures = []
    names = ("p", "q", "a", "c")
    for m in range(n + 1):
        rng = _rng(seed, "gosper", m)

        def evaluate(pt, m=m):
            a, c, p, q = pt["a"], pt["c"], pt["p"], pt["q"]
            if c == 1:
                raise ZeroDivisionError
            return gosper_first(m, a, c, p, q), gosper_second_terms(m, a, c, p, q), gosper_expansion_terms(m, a, c, p, q)

        for pt, ((lhs, rhs, norm), second, expansion) in _sample_points(rng, names, samples, evaluate):
            target = 1 / (1 - pt["c"])
            if lhs != rhs:
                failures.append({"n": m, "form": "first", "point": _point_str(pt)})
            if norm * lhs != target:
                failures.append({"n": m, "form": "first, normalized", "point": _point_str(pt)})
            if sum(second) != target:
                failures.append({"n": m, "form": "second", "point": _point_str(pt)})
            scale = pt["q"] ** -m - pt["c"]
            if any(expansion[k] != scale * second[k] for k in range(m + 1)) or expansion[m + 1] != 0:
                failures.append({"n": m, "form": "expansion terms", "point": _point_str(pt)})
    notes = [
        "first form normalized by (q;q)_n (ap/c;p)_n c^n (1-a) / ((c;q)_{n+1} (a;p)_{n+1})",
        "expansion terms at u=q^-n, v=1, x=1/c equal (q^-n - c) times the second-form terms",
    ]
    return _report("gosper", MODE_POINTS, {"samples": samples, "seed": seed}, n, failures, notes)


# -- Liu and Carlitz -------------------------------------------------------------------------


def liu_test_functions(b=Fraction(1, 3)):
    xv = Polynomial.var(X)
    return {
        "1": as_ratfun(1),
        "x": as_ratfun(xv),
        "x^2": as_ratfun(xv * xv),
        f"1/(1-{b}*x)": as_ratfun(1) / (1 - Fraction(b) * xv),
    }


def verify_liu(n_max=3, b=Fraction(1, 3)):
    ctx = liu_context()
    a = scalar("a")
    failures = []
    for name, f in liu_test_functions(b).items():
        coeffs = rational_newton_coeffs(f, ctx, n_max)
        for n, A in enumerate(coeffs):
            liu = liu_prefactor(n) * liu_coefficient(n, f)
            if A != liu:
                failures.append({"f": name, "n": n, "engine": str(A), "liu": str(liu)})
            limit = substitute(A * expansion_term(n, ctx), {a: 0})
            carlitz = carlitz_term(n, f)
            if limit != carlitz:
                failures.append({"f": name, "n": n, "step": "carlitz", "limit": str(limit), "carlitz": str(carlitz)})
    return _report("liu", MODE_SYMBOLIC, {"a": None, "q": None, "b": b}, n_max, failures)


# -- the full suite ----------------------------------------------------------------------------

JACKSON_TRIPLES = (
    (Fraction(1, 2), Fraction(1, 3), Fraction(1, 5)),
    (Fraction(2, 3), Fraction(-3, 7), Fraction(5, 11)),
    (Fraction(-1, 4), Fraction(2, 5), Fraction(3, 8)),
)


def suite(seed=None):
    """(name, callable, kwargs) for every check in the default suite."""
    checks = [
        ("andrews", verify_andrews, {"N": 3}),
        ("gasper", verify_gasper, {"k_max": 6}),
        ("gosper", verify_gosper, {"n": 6, "seed": seed}),
    ]
    for a, x, beta in JACKSON_TRIPLES:
        checks.append(("jackson", verify_jackson, {"order": 12, "a": a, "x": x, "beta": beta}))
    checks.append(("jackson", verify_jackson, {"order": 10, "beta": None}))
    checks += [
        ("lemma_main", verify_lemma_main, {"k": 5}),
        ("liu", verify_liu, {"n_max": 3}),
        ("proposition", verify_proposition, {"k": 5}),
        ("q_vandermonde", verify_q_vandermonde, {"n": 8, "seed": seed}),
        ("sears", verify_sears, {"n": 5, "seed": seed}),
        ("sylvester", verify_sylvester, {"order": 15}),
    ]
    return checks


def _run(check):
    _, fn, kwargs = check
    return fn(**kwargs)


def verify_all(seed=None, parallel=True):
    """Run the default suite; reports come back in suite order (sorted by name)."""
    checks = suite(seed)
    if parallel:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor() as pool:
            reports = list(pool.map(_run, checks))
    else:
        reports = [_run(c) for c in checks]
    return reports


IDENTITIES = {
    "andrews": verify_andrews,
    "gasper": verify_gasper,
    "gosper": verify_gosper,
    "jackson": verify_jackson,
    "lemma_main": verify_lemma_main,
    "liu": verify_liu,
    "proposition": verify_proposition,
    "q_vandermonde": verify_q_vandermonde,
    "sears": verify_sears,
    "sylvester": verify_sylvester,
}
