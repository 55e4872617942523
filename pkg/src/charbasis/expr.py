"""A small expression language for the command line.

Grammar (whitespace is ignored)::

    kron    := product ('@' product)*
    product := factor ('*' factor)*
    factor  := atom | INTEGER | '(' kron ')'
    atom    := ('h' | 'ht' | 's' | 'st' | 'p') '[' partition ']'

``*`` is the ordinary product and binds tighter than the Kronecker product ``@``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .partitions import Partition, format_partition, is_partition
from .symfunc import Basis, SymExpr, change_basis, kronecker_product, scale


class ExprError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")


@dataclass(frozen=True)
class Atom:
    basis: Basis
    partition: Partition

    def __str__(self) -> str:
        return f"{self.basis.value}{format_partition(self.partition)}"


@dataclass(frozen=True)
class IntegerLiteral:
    value: int

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Scale:
    coeff: int
    expr: "Expr"

    def __str__(self) -> str:
        return f"{self.coeff}*({self.expr})"


@dataclass(frozen=True)
class Product:
    factors: tuple["Expr", ...]

    def __str__(self) -> str:
        return "*".join(f"({f})" if isinstance(f, Kronecker) else str(f) for f in self.factors)


@dataclass(frozen=True)
class Kronecker:
    left: "Expr"
    right: "Expr"

    def __str__(self) -> str:
        return f"{self.left}@{self.right}"


Expr = Union[Atom, IntegerLiteral, Scale, Product, Kronecker]

_TOKEN = re.compile(
    r"\s*(?:(?P<atom>ht|st|h|s|p)\s*\[(?P<body>[^\]]*)\]|(?P<int>\d+)|(?P<op>[*@()]))"
)


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = len(text) - len(text[pos:].lstrip())
            raise ExprError(f"unexpected character {text[start]!r}", start)
        start = m.start() + (len(m.group(0)) - len(m.group(0).lstrip()))
        if m.group("atom"):
            body = m.group("body").strip()
            try:
                parts = tuple(int(x) for x in body.split(",")) if body else ()
            except ValueError:
                raise ExprError(f"bad partition literal [{body}]", start) from None
            if not is_partition(parts):
                raise ExprError(f"index {list(parts)} is not a partition", start)
            tokens.append(("atom", Atom(Basis(m.group("atom")), parts), start))
        elif m.group("int"):
            tokens.append(("int", int(m.group("int")), start))
        else:
            tokens.append((m.group("op"), None, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, object, int]:
        return self.tokens[self.i]

    def take(self, kind: str) -> tuple[str, object, int]:
        tok = self.peek()
        if tok[0] != kind:
            found = "end of input" if tok[0] == "end" else repr(tok[0])
            raise ExprError(f"expected {kind!r}, found {found}", tok[2])
        self.i += 1
        return tok

    def kron(self) -> Expr:
        left = self.product()
        while self.peek()[0] == "@":
            self.i += 1
            left = Kronecker(left, self.product())
        return left

    def product(self) -> Expr:
        factors = [self.factor()]
        while self.peek()[0] == "*":
            self.i += 1
            factors.append(self.factor())
        coeff = 1
        rest = []
        for f in factors:
            if isinstance(f, IntegerLiteral):
                coeff *= f.value
            else:
                rest.append(f)
        if not rest:
            return IntegerLiteral(coeff)
        body = rest[0] if len(rest) == 1 else Product(tuple(rest))
        if len(rest) == len(factors):
            return body
        return Scale(coeff, body)

    def factor(self) -> Expr:
        kind, value, pos = self.peek()
        if kind == "atom":
            self.i += 1
            return value  # type: ignore[return-value]
        if kind == "int":
            self.i += 1
            return IntegerLiteral(value)  # type: ignore[arg-type]
        if kind == "(":
            self.i += 1
            inner = self.kron()
            self.take(")")
            return inner
        found = "end of input" if kind == "end" else repr(kind)
        raise ExprError(f"expected an atom, integer or '(', found {found}", pos)


def parse_expr(text: str) -> Expr:
    parser = _Parser(text)
    out = parser.kron()
    kind, _, pos = parser.peek()
    if kind != "end":
        raise ExprError(f"unexpected {kind!r}", pos)
    return out


def parse_atom(text: str) -> Atom:
    e = parse_expr(text)
    if not isinstance(e, Atom):
        raise ExprError(f"{text!r} is not a single basis element")
    return e


def _degrees(f: SymExpr) -> set[int]:
    return {sum(la) for la in change_basis(f, Basis.H).terms}


def evaluate(e: Expr) -> SymExpr:
    """Evaluate to a SymExpr. Products are formed in h; a lone atom keeps its basis."""
    if isinstance(e, Atom):
        return SymExpr.atom(e.basis, e.partition)
    if isinstance(e, IntegerLiteral):
        return SymExpr.one(Basis.H) * e.value
    if isinstance(e, Scale):
        return scale(e.coeff, evaluate(e.expr))
    if isinstance(e, Product):
        out = SymExpr.one(Basis.H)
        for f in e.factors:
            out = out * change_basis(evaluate(f), Basis.H)
        return out
    if isinstance(e, Kronecker):
        f, g = evaluate(e.left), evaluate(e.right)
        df, dg = _degrees(f), _degrees(g)
        if len(df) > 1 or len(dg) > 1:
            raise ExprError(f"'@' needs homogeneous operands, got degrees {sorted(df)} and {sorted(dg)}")
        if df and dg and df != dg:
            raise ExprError(f"'@' needs equal degrees, got {df.pop()} and {dg.pop()}")
        return kronecker_product(f, g)
    raise TypeError(f"not an expression node: {e!r}")


def evaluate_text(text: str, basis: Basis | None = None) -> SymExpr:
    f = evaluate(parse_expr(text))
    return f if basis is None else change_basis(f, basis)


def coefficient(text: str, of: str) -> Fraction:
    atom = parse_atom(of)
    return evaluate_text(text, atom.basis).coeff(atom.partition)
