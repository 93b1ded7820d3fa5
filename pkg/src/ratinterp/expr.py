"""A small expression language for rational functions, and the family mini-syntax.

Grammar, loosest to tightest::

    expr   := expr ('+' | '-') expr
            | expr ('*' | '/') expr
            | '-' expr
            | expr '^' expr            (right associative)
            | atom
    atom   := integer | name | 'poch' '(' expr ',' expr ',' expr ')' | '(' expr ')'

Names are x, q, p, a, b, c, d, e, u, v, z, beta and the indexed x<i>, c<i>,
b<i>.  Exponents must evaluate to integer constants.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ExprSyntaxError, UnknownSymbol
from .families import Constant, Explicit, Geometric, Symbolic
from .poly import C_FAMILY, X_FAMILY, Polynomial, bvar, cvar, family_code, scalar, xvar
from .qseries import pochhammer
from .ratfun import RatFun, _as_value, as_ratfun

SCALARS = ("x", "q", "p", "a", "b", "c", "d", "e", "u", "v", "z", "beta")
_INDEXED = re.compile(r"([xcb])([1-9][0-9]*)\Z")
_INDEXED_VARS = {"x": xvar, "c": cvar, "b": bvar}
BUILTINS = {"poch": 3}


# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Sym:
    name: str
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Neg:
    operand: object
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    pos: int = field(default=0, compare=False, repr=False)


# binding powers: (left, right)
_INFIX = {"+": (10, 11), "-": (10, 11), "*": (20, 21), "/": (20, 21), "^": (41, 40)}
_PREFIX_BP = 30


# -- lexer ---------------------------------------------------------------------

_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S)")


@dataclass
class _Tok:
    kind: str  # "num", "name", "op", "end"
    text: str
    pos: int


def _location(text, pos):
    line = text.count("\n", 0, pos) + 1
    column = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, column


def _tokenize(text):
    toks = []
    for m in _TOKEN.finditer(text):
        num, name, ch = m.groups()
        if num is not None:
            toks.append(_Tok("num", num, m.start()))
        elif name is not None:
            toks.append(_Tok("name", name, m.start()))
        elif ch in "+-*/^(),":
            toks.append(_Tok("op", ch, m.start()))
        else:
            line, col = _location(text, m.start())
            raise ExprSyntaxError(f"unexpected character {ch!r}", line, col)
    toks.append(_Tok("end", "", len(text)))
    return toks


# -- parser ------------------------------------------------------------------------


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def advance(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        line, col = _location(self.text, tok.pos)
        return ExprSyntaxError(message, line, col)

    def expect(self, text):
        tok = self.peek()
        if tok.kind != "op" or tok.text != text:
            found = tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        return self.advance()

    def parse(self):
        node = self.expr(0)
        if self.peek().kind != "end":
            raise self.error(f"unexpected {self.peek().text!r}")
        return node

    def expr(self, min_bp):
        left = self.prefix()
        while True:
            tok = self.peek()
            if tok.kind != "op" or tok.text not in _INFIX:
                break
            lbp, rbp = _INFIX[tok.text]
            if lbp < min_bp:
                break
            self.advance()
            right = self.expr(rbp)
            left = BinOp(tok.text, left, right, tok.pos)
        return left

    def prefix(self):
        tok = self.advance()
        if tok.kind == "num":
            return Num(int(tok.text), tok.pos)
        if tok.kind == "name":
            if tok.text in BUILTINS:
                return self.call(tok)
            _check_symbol(tok.text, self.text, tok.pos)
            return Sym(tok.text, tok.pos)
        if tok.kind == "op" and tok.text == "-":
            return Neg(self.expr(_PREFIX_BP), tok.pos)
        if tok.kind == "op" and tok.text == "(":
            node = self.expr(0)
            self.expect(")")
            return node
        found = tok.text or "end of input"
        raise self.error(f"expected an operand, found {found!r}", tok)

    def call(self, tok):
        self.expect("(")
        args = [self.expr(0)]
        while self.peek().kind == "op" and self.peek().text == ",":
            self.advance()
            args.append(self.expr(0))
        self.expect(")")
        if len(args) != BUILTINS[tok.text]:
            raise self.error(f"{tok.text} takes {BUILTINS[tok.text]} arguments, got {len(args)}", tok)
        return Call(tok.text, tuple(args), tok.pos)


def _check_symbol(name, text="", pos=0):
    if name in SCALARS or _INDEXED.match(name):
        return
    line, col = _location(text, pos)
    raise UnknownSymbol(name, line, col)


def parse_expression(text):
    return _Parser(text).parse()


# -- printer -------------------------------------------------------------------------


def _prec(node):
    if isinstance(node, BinOp):
        return _INFIX[node.op][0]
    if isinstance(node, Neg):
        return _PREFIX_BP
    return 100


def to_text(node):
    """Render with the fewest parentheses that parse back to the same tree."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Call):
        return f"{node.name}({', '.join(to_text(a) for a in node.args)})"
    if isinstance(node, Neg):
        return "-" + _wrap(node.operand, _prec(node.operand) < _PREFIX_BP)
    lbp, _ = _INFIX[node.op]
    if node.op == "^":
        left = _wrap(node.left, _prec(node.left) <= lbp)
        right = _wrap(node.right, _prec(node.right) < _PREFIX_BP)
        return f"{left}^{right}"
    left = _wrap(node.left, _prec(node.left) < lbp)
    right = _wrap(node.right, _prec(node.right) <= lbp)
    sep = f" {node.op} " if node.op in "+-" else node.op
    return f"{left}{sep}{right}"


def _wrap(node, paren):
    s = to_text(node)
    return f"({s})" if paren else s


# -- evaluation --------------------------------------------------------------------------


def symbol_value(name):
    m = _INDEXED.match(name)
    if m:
        return Polynomial.var(_INDEXED_VARS[m.group(1)](int(m.group(2))))
    _check_symbol(name)
    return Polynomial.var(scalar(name))


def _integer(node, text, at):
    """The integer value of ``node``; errors point at position ``at``."""
    value = as_ratfun(_eval(node, text))
    if value.is_constant():
        c = value.constant_value()
        if c.denominator == 1:
            return int(c)
    line, col = _location(text, at)
    raise ExprSyntaxError("exponent must be an integer constant", line, col)


def _eval(node, text):
    if isinstance(node, Num):
        return RatFun(node.value)
    if isinstance(node, Sym):
        return as_ratfun(symbol_value(node.name))
    if isinstance(node, Neg):
        return -_eval(node.operand, text)
    if isinstance(node, Call):
        a, q = (_eval(arg, text) for arg in node.args[:2])
        return as_ratfun(pochhammer(_as_value(a), _as_value(q), _integer(node.args[2], text, node.pos)))
    if node.op == "^":
        return _eval(node.left, text) ** _integer(node.right, text, node.pos)
    left, right = _eval(node.left, text), _eval(node.right, text)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if right.is_zero():
        line, col = _location(text, node.pos)
        raise ExprSyntaxError("division by zero", line, col)
    return left / right


def evaluate(node, text=""):
    """The value of an AST as a RatFun."""
    return _eval(node, text)


def parse_value(text):
    """Parse and evaluate; returns a Polynomial when there is no denominator."""
    return _as_value(evaluate(parse_expression(text), text))


# -- flags and family specs -----------------------------------------------------------------

_RATIONAL = re.compile(r"\s*(-?\d+)(?:\s*/\s*(\d+))?\s*\Z")


def parse_rational(text):
    """A flag value of the form "p/q" or "p" (no decimals)."""
    m = _RATIONAL.match(text)
    if not m:
        raise ExprSyntaxError(f"expected a rational p/q, got {text!r}", 1, 1)
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ExprSyntaxError("zero denominator", 1, 1)
    return Fraction(int(m.group(1)), den)


def _split_top(text, sep):
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return parts


def parse_family(text, family=X_FAMILY):
    """geom:<scale>,<ratio> | const:<value> | list:<v1>;<v2>;... | symbolic."""
    text = text.strip()
    kind, _, body = text.partition(":")
    if kind == "symbolic" and not body:
        return Symbolic(family_code(family))
    if kind == "geom":
        parts = _split_top(body, ",")
        if len(parts) != 2:
            raise ExprSyntaxError(f"geom needs <scale>,<ratio>, got {body!r}", 1, len("geom:") + 1)
        return Geometric(parse_value(parts[0]), parse_value(parts[1]))
    if kind == "const":
        return Constant(parse_value(body))
    if kind == "list":
        return Explicit(tuple(parse_value(v) for v in _split_top(body, ";")))
    raise ExprSyntaxError(f"unknown family spec {text!r}", 1, 1)


__all__ = [
    "Num",
    "Sym",
    "Neg",
    "BinOp",
    "Call",
    "parse_expression",
    "to_text",
    "evaluate",
    "parse_value",
    "parse_rational",
    "parse_family",
    "symbol_value",
    "C_FAMILY",
    "X_FAMILY",
]
