"""Line-oriented ideal files.

    ring: vars=u1,u2,v1,v2 char=0
    gens:
    u1*v1
    y1*z2 - y2*z1

Coefficients may be written ``c*`` or ``p/q*`` (the latter so rational
bases print losslessly); a bare integer is a constant term. Blank lines and
lines starting with ``#`` are ignored.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import BadCharacteristic, ParseError, UnknownVariable
from .field import FieldSpec
from .ring import Ideal, Polynomial, RingDescriptor, format_polynomial

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^/]))")
_HEADER = re.compile(r"^ring:\s+vars=(?P<vars>\S+)\s+char=(?P<char>-?\d+)\s*$")


def _tokens(text: str, line: int):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {text[col - 1]!r}", line, col)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    return out


class _PolyParser:
    def __init__(self, ring: RingDescriptor, text: str, line: int):
        self.ring = ring
        self.toks = _tokens(text, line)
        self.k = 0
        self.line = line
        self.index = {name: i for i, name in enumerate(ring.var_names)}

    def peek(self):
        return self.toks[self.k] if self.k < len(self.toks) else (None, None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None:
            col = self.toks[-1][2] + len(self.toks[-1][1]) if self.toks else 1
            raise ParseError("unexpected end of line", self.line, col)
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ParseError(f"unexpected {tok[1]!r}", self.line, tok[2])
        self.k += 1
        return tok

    def parse(self) -> Polynomial:
        terms = {}
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            sign = -1 if tok[1] == "-" else 1
            self.take()
        while True:
            mono, coeff = self.term()
            coeff *= sign
            terms[mono] = terms.get(mono, 0) + coeff
            tok = self.peek()
            if tok[0] is None:
                break
            if tok[0] == "op" and tok[1] in "+-":
                sign = -1 if tok[1] == "-" else 1
                self.take()
            else:
                raise ParseError(f"expected '+' or '-', got {tok[1]!r}", self.line, tok[2])
        return Polynomial(self.ring, terms)

    def term(self):
        n = self.ring.num_vars
        exps = [0] * n
        coeff = Fraction(1)
        kind, value, _ = self.peek()
        if kind == "int":
            self.take()
            coeff = Fraction(int(value))
            if self.peek()[1] == "/":
                self.take()
                den = int(self.take("int")[1])
                if den == 0:
                    raise ParseError("zero denominator", self.line, self.toks[self.k - 1][2])
                coeff /= den
            if self.peek()[1] != "*":
                return tuple(exps), coeff
            self.take("op", "*")
        while True:
            self.factor(exps)
            if self.peek()[1] == "*":
                self.take()
            else:
                return tuple(exps), coeff

    def factor(self, exps):
        _, name, col = self.take("name")
        if name not in self.index:
            raise UnknownVariable(f"line {self.line}, column {col}: unknown variable {name!r}")
        e = 1
        if self.peek()[1] == "^":
            self.take()
            e = int(self.take("int")[1])
        exps[self.index[name]] += e


def parse_polynomial(ring: RingDescriptor, text: str, line: int = 1) -> Polynomial:
    return _PolyParser(ring, text, line).parse()


def parse_ideal(text: str) -> Ideal:
    lines = text.splitlines()
    body = [(k + 1, ln) for k, ln in enumerate(lines) if ln.strip() and not ln.lstrip().startswith("#")]
    if not body:
        raise ParseError("empty ideal file", 1, 1)
    lineno, header = body[0]
    m = _HEADER.match(header.strip())
    if not m:
        raise ParseError("expected 'ring: vars=... char=...'", lineno, 1)
    names = m.group("vars").split(",")
    for name in names:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
            raise ParseError(f"bad variable name {name!r}", lineno, header.index(name) + 1 if name in header else 1)
    try:
        field = FieldSpec.from_characteristic(int(m.group("char")))
    except BadCharacteristic as exc:
        raise BadCharacteristic(f"line {lineno}: {exc}") from None
    try:
        ring = RingDescriptor(tuple(names), field)
    except ValueError as exc:
        raise ParseError(str(exc), lineno, 1) from None
    if len(body) < 2 or body[1][1].strip() != "gens:":
        where = body[1][0] if len(body) > 1 else lineno + 1
        raise ParseError("expected 'gens:'", where, 1)
    gens = [parse_polynomial(ring, ln, k) for k, ln in body[2:]]
    for g, (k, _) in zip(gens, body[2:]):
        if not g.is_homogeneous():
            raise ParseError("generator is not homogeneous", k, 1)
    return Ideal(ring, gens)


def format_ideal(I: Ideal) -> str:
    ring = I.ring
    lines = [f"ring: vars={','.join(ring.var_names)} char={ring.field.characteristic}", "gens:"]
    lines += [format_polynomial(g) for g in I.generators]
    return "\n".join(lines) + "\n"
