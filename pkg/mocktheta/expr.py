"""Expression grammar for `expand`: a small recursive-descent parser and an evaluator.

    expr  := term (("+" | "-") term)*
    term  := unary (("*" | "/") unary)*
    unary := ("-" | "+") unary | power
    power := atom ("^" exponent)?
    atom  := INT | NAME | NAME "(" expr ("," expr)* ")" | "(" expr ")"

NAME is q, a named constant (i, omega, alpha, sqrt2, sqrt3, zeta) or a constructor:
j, J, Jbar, phi, psi, g, G, f, m, subst, twist.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from mocktheta.algebra.cyclotomic import ZERO, CycNum, as_cyc, embed
from mocktheta.algebra.mock import AppellSpec, G_rank, appell_m, f_a, g_mock
from mocktheta.algebra.series import Monomial, QSeries, at_order, subst_q_power, twist
from mocktheta.algebra.thetas import J, Jbar, Jm, ThetaSpec, phi, psi, theta_j_product
from mocktheta.errors import ParseError, UnknownConstant

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")
_OPERATORS = set("+-*/^(),")

# name -> allowed argument counts
FUNCTIONS: dict[str, tuple[int, ...]] = {
    "j": (1, 2, 3),
    "J": (1, 2),
    "Jbar": (2,),
    "phi": (0,),
    "psi": (0,),
    "g": (1, 2),
    "G": (1, 2),
    "f": (1, 2),
    "m": (2, 3),
    "subst": (2,),
    "twist": (2,),
}


# -- AST -------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int
    pos: int = 0

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Name:
    name: str
    pos: int = 0

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Neg:
    operand: Node
    pos: int = 0

    def __str__(self) -> str:
        return f"-({self.operand})"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: Node
    right: Node
    pos: int = 0

    def __str__(self) -> str:
        return f"({self.left} {self.op} {self.right})"


@dataclass(frozen=True)
class Pow:
    base: Node
    exponent: int
    pos: int = 0

    def __str__(self) -> str:
        exponent = str(self.exponent) if self.exponent >= 0 else f"({self.exponent})"
        return f"({self.base})^{exponent}"


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple[Node, ...]
    pos: int = 0

    def __str__(self) -> str:
        if not self.args:
            return self.name
        return f"{self.name}({', '.join(map(str, self.args))})"


Node = Union[Num, Name, Neg, BinOp, Pow, Call]


# -- parser ----------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None or match.end() == pos:
            break
        number, name, other = match.groups()
        start = match.start(match.lastindex) if match.lastindex else pos
        if number is not None:
            tokens.append(Token("int", number, start))
        elif name is not None:
            tokens.append(Token("name", name, start))
        elif other is not None:
            if other not in _OPERATORS:
                raise ParseError(f"unexpected character {other!r}", start)
            tokens.append(Token("op", other, start))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        token = self.tokens[self.i]
        self.i += 1
        return token

    def accept(self, op: str) -> bool:
        if self.current.kind == "op" and self.current.text == op:
            self.i += 1
            return True
        return False

    def expect(self, op: str) -> None:
        if not self.accept(op):
            found = self.current.text or "end of input"
            raise ParseError(f"expected {op!r}, found {found!r}", self.current.pos)

    def parse(self) -> Node:
        if self.current.kind == "end":
            raise ParseError("empty expression", 0)
        node = self.expr()
        if self.current.kind != "end":
            raise ParseError(f"unexpected {self.current.text!r}", self.current.pos)
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.current.kind == "op" and self.current.text in "+-":
            token = self.advance()
            node = BinOp(token.text, node, self.term(), token.pos)
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.current.kind == "op" and self.current.text in "*/":
            token = self.advance()
            node = BinOp(token.text, node, self.unary(), token.pos)
        return node

    def unary(self) -> Node:
        token = self.current
        if self.accept("-"):
            return Neg(self.unary(), token.pos)
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        token = self.current
        if self.accept("^"):
            return Pow(base, self.exponent(), token.pos)
        return base

    def exponent(self) -> int:
        wrapped = self.accept("(")
        sign = -1 if self.accept("-") else 1
        token = self.current
        if token.kind != "int":
            raise ParseError("exponent must be an integer", token.pos)
        self.advance()
        if wrapped:
            self.expect(")")
        return sign * int(token.text)

    def atom(self) -> Node:
        token = self.current
        if token.kind == "int":
            self.advance()
            return Num(int(token.text), token.pos)
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        if token.kind == "name":
            self.advance()
            if token.text in FUNCTIONS:
                return self.call(token)
            return Name(token.text, token.pos)
        found = token.text or "end of input"
        raise ParseError(f"unexpected {found!r}", token.pos)

    def call(self, token: Token) -> Call:
        args: list[Node] = []
        if self.accept("("):
            if not self.accept(")"):
                args.append(self.expr())
                while self.accept(","):
                    args.append(self.expr())
                self.expect(")")
        if len(args) not in FUNCTIONS[token.text]:
            allowed = " or ".join(map(str, FUNCTIONS[token.text]))
            raise ParseError(f"{token.text} takes {allowed} argument(s), got {len(args)}", token.pos)
        return Call(token.text, tuple(args), token.pos)


def parse(text: str) -> Node:
    return Parser(text).parse()


# -- evaluation ------------------------------------------------------------

Value = Union[CycNum, Monomial, QSeries]


def _series(value: Value, work: int) -> QSeries:
    if isinstance(value, QSeries):
        return value
    if isinstance(value, Monomial):
        return value.to_series(work)
    return QSeries.constant(value, work)


def _monomial(value: Value, node: Node) -> Monomial:
    if isinstance(value, Monomial):
        return value
    if isinstance(value, CycNum) and value:
        return Monomial(value)
    raise ParseError(f"expected a nonzero monomial c*q^e, got {node}", node.pos)


def _scalar(value: Value, node: Node) -> CycNum:
    if isinstance(value, CycNum):
        return value
    if isinstance(value, Monomial) and value.e == 0:
        return value.c
    raise ParseError(f"expected a constant, got {node}", node.pos)


def _integer(value: Value, node: Node) -> int:
    c = _scalar(value, node)
    if not c.is_rational() or c.to_fraction().denominator != 1:
        raise ParseError(f"expected an integer, got {node}", node.pos)
    return int(c.to_fraction())


def _positive(value: Value, node: Node) -> int:
    k = _integer(value, node)
    if k < 1:
        raise ParseError(f"expected a positive integer, got {node}", node.pos)
    return k


def _name(node: Name) -> Value:
    if node.name == "q":
        return Monomial(1, 1)
    try:
        return embed(node.name)
    except UnknownConstant as exc:
        raise ParseError(f"unknown name {node.name!r}", node.pos) from exc


def _multiply(a: Value, b: Value, work: int) -> Value:
    if isinstance(a, QSeries) or isinstance(b, QSeries):
        if isinstance(a, QSeries):
            return a * b
        return b * a
    if isinstance(a, CycNum) and not a or isinstance(b, CycNum) and not b:
        return ZERO
    if isinstance(a, Monomial) or isinstance(b, Monomial):
        return a * b if isinstance(a, Monomial) else b * a
    return a * b


def _divide(a: Value, b: Value, work: int) -> Value:
    if isinstance(b, QSeries):
        return _series(a, work) / b
    if isinstance(a, QSeries):
        return a / b
    if isinstance(a, CycNum) and not a:
        return ZERO
    if isinstance(a, Monomial) or isinstance(b, Monomial):
        return Monomial(as_cyc(1)) * a / b if isinstance(a, CycNum) else a / b
    return a / b


def _binop(node: BinOp, work: int) -> Value:
    a = _eval(node.left, work)
    b = _eval(node.right, work)
    if node.op == "*":
        return _multiply(a, b, work)
    if node.op == "/":
        return _divide(a, b, work)
    if isinstance(a, CycNum) and isinstance(b, CycNum):
        return a + b if node.op == "+" else a - b
    left, right = _series(a, work), _series(b, work)
    return left + right if node.op == "+" else left - right


def _call(node: Call, work: int) -> Value:
    name, args = node.name, node.args
    if name == "phi":
        return phi(work)
    if name == "psi":
        return psi(work)
    if name == "subst":
        k = _positive(_eval(args[1], work), args[1])
        inner = _series(_eval(args[0], (work + k - 1) // k), (work + k - 1) // k)
        return subst_q_power(inner, k)
    if name == "twist":
        c = _scalar(_eval(args[1], work), args[1])
        if not c:
            raise ParseError("twist needs a nonzero constant", args[1].pos)
        return twist(_series(_eval(args[0], work), work), c)
    values = [_eval(arg, work) for arg in args]
    if name == "j":
        if len(args) == 3:
            c = _scalar(values[0], args[0])
            if not c:
                raise ParseError("theta argument must be nonzero", args[0].pos)
            spec = ThetaSpec(Monomial(c, _integer(values[1], args[1])), _positive(values[2], args[2]))
        else:
            modulus = _positive(values[1], args[1]) if len(args) == 2 else 1
            spec = ThetaSpec(_monomial(values[0], args[0]), modulus)
        return theta_j_product(spec, work)
    if name == "J":
        if len(args) == 1:
            return Jm(_positive(values[0], args[0]), work)
        return J(_integer(values[0], args[0]), _positive(values[1], args[1]), work)
    if name == "Jbar":
        return Jbar(_integer(values[0], args[0]), _positive(values[1], args[1]), work)
    modulus = _positive(values[-1], args[-1]) if len(args) == max(FUNCTIONS[name]) else 1
    if name == "g":
        return g_mock(_monomial(values[0], args[0]), work, modulus=modulus)
    if name == "G":
        return G_rank(_monomial(values[0], args[0]), work, modulus=modulus)
    if name == "f":
        return f_a(_scalar(values[0], args[0]), work, modulus=modulus)
    # m(x, z[, M])
    spec = AppellSpec(_monomial(values[0], args[0]), _monomial(values[1], args[1]), work, modulus)
    return appell_m(spec)


def _eval(node: Node, work: int) -> Value:
    if isinstance(node, Num):
        return as_cyc(node.value)
    if isinstance(node, Name):
        return _name(node)
    if isinstance(node, Neg):
        value = _eval(node.operand, work)
        return -value
    if isinstance(node, BinOp):
        return _binop(node, work)
    if isinstance(node, Pow):
        value = _eval(node.base, work)
        if isinstance(value, CycNum) and not value and node.exponent < 0:
            raise ParseError("zero to a negative power", node.pos)
        if isinstance(value, CycNum) and not value:
            return ZERO if node.exponent else as_cyc(1)
        return value**node.exponent
    if isinstance(node, Call):
        return _call(node, work)
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(node: Node, order: int) -> QSeries:
    """The expression as a q-series known to ``order``."""

    def build(work: int) -> QSeries:
        return _series(_eval(node, work), work)

    return at_order(build, order)


def parse_monomial(text: str) -> Monomial:
    """Parse c*q^e, e.g. "zeta^6", "-q^3*alpha", "zeta*q"."""
    node = parse(text)
    value = _eval(node, 0)
    return _monomial(value, node)
