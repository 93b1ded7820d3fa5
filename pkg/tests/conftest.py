from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ratinterp.poly import Polynomial, bvar, cvar, scalar, xvar

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

VARS = [xvar(1), xvar(2), cvar(1), bvar(1), scalar("q"), scalar("a")]

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
nonzero_rationals = rationals.filter(lambda r: r != 0)


@st.composite
def monomials(draw, laurent=False):
    low = -2 if laurent else 0
    picks = draw(st.lists(st.sampled_from(VARS), max_size=3, unique=True))
    out = Polynomial.const(1)
    for v in picks:
        out = out * Polynomial.var(v, draw(st.integers(low, 3)))
    return out


@st.composite
def polynomials(draw, laurent=False, max_terms=4):
    n = draw(st.integers(0, max_terms))
    out = Polynomial.const(0)
    for _ in range(n):
        out = out + draw(monomials(laurent)) * draw(nonzero_rationals)
    return out


def points(draw_vars=VARS):
    return st.fixed_dictionaries({v: nonzero_rationals for v in draw_vars})


def F(n, d=1):
    return Fraction(n, d)
