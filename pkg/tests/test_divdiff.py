from fractions import Fraction
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import complete_brute
from ratinterp.divdiff import apply_chain, apply_divdiff, lemma1_check
from ratinterp.families import newton_basis
from ratinterp.poly import B_FAMILY, X_FAMILY, Polynomial, bvar, scalar, xvar
from ratinterp.ratfun import RatFun, as_ratfun, ratfun_eval, substitute
from ratinterp.symfun import complete, power_to_complete

b1, b2, b3 = (Polynomial.var(bvar(i)) for i in (1, 2, 3))
x1, x2, x3 = (Polynomial.var(xvar(i)) for i in (1, 2, 3))
V = scalar("v")
v = Polynomial.var(V)


def test_linear():
    assert apply_divdiff(b1, 1, B_FAMILY) == 1


def test_square():
    assert apply_divdiff(b1 * b1, 1, B_FAMILY) == b1 + b2


def test_simple_pole():
    g = apply_divdiff(as_ratfun(1) / (1 - v * b1), 1, B_FAMILY)
    expected = RatFun(v, [(1 - v * b1, 1), (1 - v * b2, 1)])
    assert g == expected
    rng = random.Random(4)
    for _ in range(20):
        pt = {V: Fraction(rng.randint(-9, 9), rng.randint(1, 9)), bvar(1): Fraction(rng.randint(-9, 9), 7), bvar(2): Fraction(rng.randint(-9, 9), 5)}
        try:
            assert ratfun_eval(g, pt) == ratfun_eval(expected, pt)
        except ZeroDivisionError:
            pass


def test_power_chain_is_one():
    for k in range(6):
        assert apply_chain(b1**k, 1, k, B_FAMILY) == 1


def test_constants_annihilated():
    for k in range(1, 4):
        assert apply_chain(Polynomial.const(7), 1, k).is_zero()


def test_y2_chain_specialized():
    y2 = newton_basis(b1, [xvar(1), xvar(2)])
    g = apply_chain(y2, 1, 2, B_FAMILY)
    assert substitute(g, {bvar(i): Polynomial.var(xvar(i)) for i in (1, 2, 3)}) == 1


def test_lemma1_examples():
    assert lemma1_check(2, 1) == 0
    assert lemma1_check(2, 2) == 1
    assert lemma1_check(0, 0) == 1
    with pytest.raises(ValueError):
        lemma1_check(9, 0)


def test_lemma1_table():
    for n in range(7):
        for i in range(7):
            assert lemma1_check(n, i) == (1 if n == i else 0)


def test_index_must_be_positive():
    with pytest.raises(ValueError):
        apply_divdiff(x1, 0)


_letters = [xvar(1), xvar(2), xvar(3), scalar("v")]


@st.composite
def rational_functions(draw):
    num = Polynomial.const(draw(st.integers(-3, 3)))
    for _ in range(draw(st.integers(1, 3))):
        mono = Polynomial.const(draw(st.integers(-4, 4)) or 1)
        for var in draw(st.lists(st.sampled_from(_letters), max_size=3)):
            mono = mono * Polynomial.var(var)
        num = num + mono
    if draw(st.booleans()):
        return as_ratfun(num)
    var = draw(st.sampled_from(_letters[:3]))
    return as_ratfun(num) / (1 - v * Polynomial.var(var))


def _swap(f, i):
    return as_ratfun(f).rename({xvar(i): xvar(i + 1), xvar(i + 1): xvar(i)})


@given(rational_functions(), st.integers(1, 2))
def test_nilpotent(f, i):
    assert apply_divdiff(apply_divdiff(f, i), i).is_zero()


@given(rational_functions(), st.integers(1, 2))
def test_result_is_symmetric(f, i):
    g = apply_divdiff(f, i)
    assert _swap(g, i) == g


@given(rational_functions(), rational_functions())
def test_leibniz(f, g):
    lhs = apply_divdiff(f * g, 1)
    rhs = f * apply_divdiff(g, 1) + apply_divdiff(f, 1) * _swap(g, 1)
    assert lhs == rhs


def _shift(f, by):
    """f(x1) -> f(x_{1+by}) for a function of x1 only."""
    return as_ratfun(f).rename({xvar(1): xvar(1 + by)})


@settings(max_examples=10)
@given(st.integers(0, 4), st.integers(-3, 3), st.integers(-3, 3), st.integers(1, 4))
def test_iterated_leibniz(a, b, c, n):
    """(f g)∂1..∂n = sum_k f(x1)∂1..∂k * g(x_{k+1})∂_{k+1}..∂n for f, g in x1 only."""
    f = as_ratfun(x1**a + b * x1 + 1)
    g = as_ratfun(1) / (1 - c * x1) if c else as_ratfun(x1**3 - x1)
    lhs = apply_chain(f * g, 1, n)
    rhs = RatFun(0)
    for k in range(n + 1):
        rhs = rhs + apply_chain(f, 1, k) * apply_chain(_shift(g, k), k + 1, n)
    assert lhs == rhs


def test_degree_drop():
    for d in range(4):
        f = sum((Polynomial.var(xvar(1)) ** e * (e + 1) for e in range(d + 1)), Polynomial.const(0))
        for k in range(d + 1, d + 3):
            assert apply_chain(f, 1, k).is_zero()
        assert not apply_chain(f, 1, d).is_zero()


def test_power_to_complete():
    for m in range(9):
        for k in range(m + 1):
            lhs, rhs = power_to_complete(m, k)
            assert lhs == rhs
            pt = [Fraction(j + 2, 3) for j in range(k + 1)]
            assert ratfun_eval(lhs, {bvar(j + 1): pt[j] for j in range(k + 1)}) == complete_brute(m - k, pt)
