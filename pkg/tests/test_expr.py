import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ratinterp.errors import ExprSyntaxError, UnknownSymbol
from ratinterp.expr import (
    BinOp,
    Call,
    Neg,
    Num,
    Sym,
    evaluate,
    parse_expression,
    parse_family,
    parse_rational,
    parse_value,
    to_text,
)
from ratinterp.families import Constant, Explicit, Geometric, Symbolic
from ratinterp.poly import C_FAMILY, Polynomial, cvar, scalar, xvar
from ratinterp.qseries import pochhammer
from ratinterp.ratfun import as_ratfun

x, q, u, v, a, p = (Polynomial.var(scalar(s)) for s in "xquvap")


def test_literal():
    assert parse_expression("1") == Num(1)


def test_proposition_function():
    tree = parse_expression("(1-u*x)/(1-v*x)")
    assert tree == BinOp("/", BinOp("-", Num(1), BinOp("*", Sym("u"), Sym("x"))), BinOp("-", Num(1), BinOp("*", Sym("v"), Sym("x"))))
    assert evaluate(tree) == as_ratfun(1 - u * x) / (1 - v * x)


def test_builtin_call():
    tree = parse_expression("poch(x, q, 3)")
    assert tree == Call("poch", (Sym("x"), Sym("q"), Num(3)))
    assert evaluate(tree) == pochhammer(x, q, 3)


def test_precedence():
    assert parse_expression("-x^2") == Neg(BinOp("^", Sym("x"), Num(2)))
    assert parse_expression("a+b*c") == BinOp("+", Sym("a"), BinOp("*", Sym("b"), Sym("c")))
    assert parse_expression("a-b-c") == BinOp("-", BinOp("-", Sym("a"), Sym("b")), Sym("c"))
    assert parse_expression("x^q^2") == BinOp("^", Sym("x"), BinOp("^", Sym("q"), Num(2)))
    assert parse_expression("-a*b") == BinOp("*", Neg(Sym("a")), Sym("b"))


def test_values():
    assert parse_value("q^-2*q^2") == 1
    assert parse_value("p^-3/a") == as_ratfun(p**-3) / a
    assert parse_value("2^(1+1)") == 4


def test_indexed_symbols():
    assert parse_value("x1*c2") == Polynomial.var(xvar(1)) * Polynomial.var(cvar(2))
    assert parse_value("beta") == Polynomial.var(scalar("beta"))


@pytest.mark.parametrize(
    "text, line, column",
    [("1 +", 1, 4), ("(x", 1, 3), ("x $ 2", 1, 3), ("x\n  + )", 2, 5), ("poch(x, q)", 1, 1), ("2^(1/2)", 1, 2), ("poch(a, q, x)", 1, 1)],
)
def test_syntax_errors_carry_location(text, line, column):
    with pytest.raises(ExprSyntaxError) as info:
        parse_value(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_unknown_symbol():
    with pytest.raises(UnknownSymbol) as info:
        parse_expression("1 + foo")
    assert info.value.name == "foo" and info.value.column == 5
    with pytest.raises(UnknownSymbol):
        parse_expression("x0")


def test_families():
    assert parse_family("geom:1,q") == Geometric(Polynomial.const(1), q)
    assert parse_family("geom:a*p,p") == Geometric(a * p, p)
    assert parse_family("geom:poch(a,q,2),q").scale == pochhammer(a, q, 2)
    assert parse_family("const:0") == Constant(Polynomial.const(0))
    assert parse_family("list:1;q;q^2") == Explicit((1, q, q * q))
    assert parse_family("symbolic", C_FAMILY) == Symbolic(C_FAMILY)
    for bad in ("geom:1", "poly:3", "symbolic:1"):
        with pytest.raises(ExprSyntaxError):
            parse_family(bad)


def test_rationals():
    from fractions import Fraction

    assert parse_rational("1/7") == Fraction(1, 7)
    assert parse_rational("-3") == -3
    for bad in ("0.5", "1/0", "a", "1/-2"):
        with pytest.raises(ExprSyntaxError):
            parse_rational(bad)


NAMES = ["x", "q", "p", "a", "u", "v", "beta", "x1", "c2"]


def random_tree(rng, depth):
    if depth == 0 or rng.random() < 0.25:
        return Num(rng.randint(0, 9)) if rng.random() < 0.4 else Sym(rng.choice(NAMES))
    kind = rng.choice(["+", "-", "*", "/", "^", "neg", "poch"])
    if kind == "neg":
        return Neg(random_tree(rng, depth - 1))
    if kind == "poch":
        return Call("poch", (random_tree(rng, depth - 1), random_tree(rng, depth - 1), Num(rng.randint(0, 3))))
    return BinOp(kind, random_tree(rng, depth - 1), random_tree(rng, depth - 1))


def test_round_trip_corpus():
    rng = random.Random(50)
    for _ in range(50):
        tree = random_tree(rng, 5)
        assert parse_expression(to_text(tree)) == tree


trees = st.recursive(
    st.one_of(st.builds(Num, st.integers(0, 99)), st.builds(Sym, st.sampled_from(NAMES))),
    lambda kids: st.one_of(
        st.builds(Neg, kids),
        st.builds(BinOp, st.sampled_from(["+", "-", "*", "/", "^"]), kids, kids),
        st.builds(lambda a, b, c: Call("poch", (a, b, c)), kids, kids, kids),
    ),
    max_leaves=12,
)


@settings(max_examples=200)
@given(trees)
def test_round_trip_property(tree):
    text = to_text(tree)
    assert parse_expression(text) == tree
    assert to_text(parse_expression(text)) == text
