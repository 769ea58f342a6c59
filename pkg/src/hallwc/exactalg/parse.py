"""A small recursive-descent parser for ring expressions.

Grammar (ASCII)::

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := '-' factor | '+' factor | base ('^' ['-'] int)?
    base   := int | ident | ident '[' int (',' int)* ']' | '(' expr ')'

The value semantics are supplied by the caller: ``make_int`` turns an integer
literal into a ring value and ``make_atom`` handles identifiers (optionally
with a bracketed integer list, e.g. ``s[1,-1]``).
"""
import re

from ..errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else pos
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("ident", m.group(2), start))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()[],":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", None, n))
    return tokens


class ExprParser:
    def __init__(self, text, make_int, make_atom):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.make_int = make_int
        self.make_atom = make_atom

    @property
    def tok(self):
        return self.tokens[self.i]

    def advance(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, kind):
        t = self.tok
        if t[0] != kind:
            raise ParseError(f"expected {kind!r}, found {t[1]!r}", t[2])
        return self.advance()

    def parse(self):
        if self.tok[0] == "end":
            raise ParseError("empty expression", 0)
        value = self.expr()
        if self.tok[0] != "end":
            raise ParseError(f"unexpected token {self.tok[1]!r}", self.tok[2])
        return value

    def expr(self):
        value = self.term()
        while self.tok[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.tok[0] in ("*", "/"):
            op, _, pos = self.advance()
            rhs = self.factor()
            if op == "*":
                value = value * rhs
            else:
                try:
                    value = value / rhs
                except TypeError:
                    raise ParseError("division is not supported here", pos) from None
        return value

    def signed_int(self):
        sign = 1
        if self.tok[0] in ("-", "+"):
            sign = -1 if self.advance()[0] == "-" else 1
        return sign * self.expect("int")[1]

    def factor(self):
        if self.tok[0] == "-":
            self.advance()
            return -self.factor()
        if self.tok[0] == "+":
            self.advance()
            return self.factor()
        value = self.base()
        if self.tok[0] == "^":
            _, _, pos = self.advance()
            k = self.signed_int()
            try:
                value = value**k
            except ValueError as exc:
                raise ParseError(str(exc), pos) from None
        return value

    def base(self):
        kind, val, pos = self.tok
        if kind == "int":
            self.advance()
            return self.make_int(val)
        if kind == "ident":
            self.advance()
            args = None
            if self.tok[0] == "[":
                self.advance()
                args = [self.signed_int()]
                while self.tok[0] == ",":
                    self.advance()
                    args.append(self.signed_int())
                self.expect("]")
            return self.make_atom(val, args, pos)
        if kind == "(":
            self.advance()
            value = self.expr()
            self.expect(")")
            return value
        raise ParseError(f"unexpected token {val!r}", pos)
