"""Parser for skew polynomial / rational expressions.

Grammar (whitespace is insignificant, ``*`` is noncommutative)::

    expr   := term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := atom ("^" "-"? integer)?
    atom   := "T" | "{" element "}" | integer | "(" expr ")"

Element literals go inside braces because quaternion literals contain signs.
"""

from dataclasses import dataclass

from .errors import ExprSyntaxError, UnknownLiteral, ZeroInverse
from .rational import SkewRationalFunction, rat_add, rat_inv, rat_mul
from .skewpoly import SkewPolynomial


@dataclass(frozen=True)
class Var:
    offset: int = 0

    def __eq__(self, other):
        return isinstance(other, Var)

    def __hash__(self):
        return hash("T")


@dataclass(frozen=True, eq=False)
class Const:
    text: str
    offset: int = 0

    def __eq__(self, other):
        return isinstance(other, Const) and self.text.strip() == other.text.strip()

    def __hash__(self):
        return hash(self.text.strip())


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True, eq=False)
class Pow:
    base: object
    exponent: int
    offset: int = 0

    def __eq__(self, other):
        return isinstance(other, Pow) and (self.base, self.exponent) == (other.base, other.exponent)

    def __hash__(self):
        return hash((self.base, self.exponent))


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise ExprSyntaxError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def integer(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ExprSyntaxError("expected an integer", start)
        return int(self.text[start:self.pos])

    def expr(self):
        node = self.term()
        while self.peek() in ("+", "-") and self.peek():
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self):
        node = self.factor()
        while self.peek() == "*":
            self.pos += 1
            node = Mul(node, self.factor())
        return node

    def factor(self):
        node = self.atom()
        if self.peek() == "^":
            start = self.pos
            self.pos += 1
            sign = 1
            if self.peek() == "-":
                self.pos += 1
                sign = -1
            node = Pow(node, sign * self.integer(), start)
        return node

    def atom(self):
        ch = self.peek()
        start = self.pos
        if ch == "T":
            self.pos += 1
            return Var(start)
        if ch == "{":
            end = self.text.find("}", start)
            if end < 0:
                raise ExprSyntaxError("unterminated element literal", start)
            self.pos = end + 1
            return Const(self.text[start + 1:end], start + 1)
        if ch == "(":
            self.pos += 1
            node = self.expr()
            self.expect(")")
            return node
        if ch.isdigit():
            return Const(str(self.integer()), start)
        raise ExprSyntaxError(f"unexpected {ch or 'end of input'!r}", start)


def parse_expr(text):
    p = _Parser(text)
    node = p.expr()
    if p.peek():
        raise ExprSyntaxError(f"unexpected {p.peek()!r}", p.pos)
    return node


_PREC = {Add: 1, Sub: 1, Mul: 2}


def format_ast(node):
    """Text that parses back to the same tree."""
    if isinstance(node, Var):
        return "T"
    if isinstance(node, Const):
        return "{" + node.text.strip() + "}"
    if isinstance(node, Pow):
        base = format_ast(node.base)
        if not isinstance(node.base, (Var, Const)):
            base = f"({base})"
        return f"{base}^{node.exponent}"
    prec = _PREC[type(node)]
    left = format_ast(node.left)
    right = format_ast(node.right)
    if type(node.left) in _PREC and _PREC[type(node.left)] < prec:
        left = f"({left})"
    # both operator families are left-associative
    if type(node.right) in _PREC and _PREC[type(node.right)] <= prec:
        right = f"({right})"
    op = {Add: " + ", Sub: " - ", Mul: "*"}[type(node)]
    return left + op + right


def lower(node, field):
    """Evaluate the tree in K(T; sigma, delta)."""
    if isinstance(node, Var):
        return SkewRationalFunction.from_poly(SkewPolynomial.T(field))
    if isinstance(node, Const):
        try:
            return SkewRationalFunction.constant(field.parse(node.text))
        except UnknownLiteral as exc:
            raise UnknownLiteral(f"{exc} (offset {node.offset})") from None
    if isinstance(node, Pow):
        base = lower(node.base, field)
        if node.exponent < 0:
            try:
                base = rat_inv(base)
            except ZeroInverse:
                raise ZeroInverse(f"inverse of zero at offset {node.offset}") from None
        out = SkewRationalFunction.constant(field.one)
        for _ in range(abs(node.exponent)):
            out = rat_mul(out, base)
        return out
    left, right = lower(node.left, field), lower(node.right, field)
    if isinstance(node, Add):
        return rat_add(left, right)
    if isinstance(node, Sub):
        return rat_add(left, -right)
    return rat_mul(left, right)


def parse_function(text, field):
    return lower(parse_expr(text), field)
