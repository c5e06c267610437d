"""Parser for the ASCII polynomial grammar used on the command line.

    poly   := term (('+' | '-') term)*
    term   := ['+' | '-'] factor ('*'? factor)*
    factor := INT ['/' INT] | ('x' | 'y') ['^' INT]

Whitespace is insignificant. Every term must have the same total degree.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .binform import BinaryForm, from_raw_coeffs
from .errors import HomogeneityError, ParseError, ZeroFormError

_TOKEN = re.compile(r"\s*(?:(\d+)|([xy])|(\^)|(\*)|(/)|([+-]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            offset = len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[pos + offset]!r}", pos + offset)
        start = m.start(m.lastindex)
        kind = ("int", "var", "pow", "mul", "div", "sign")[m.lastindex - 1]
        tokens.append((kind, m.group(m.lastindex), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            want = {"int": "an integer", "end": "end of input"}.get(kind, kind)
            raise ParseError(f"expected {want}, found {tok[1] or 'end of input'!r}", tok[2])
        self.i += 1
        return tok

    def poly(self) -> list[tuple[Fraction, int, int, int]]:
        terms = [self.term(first=True)]
        while self.peek()[0] == "sign":
            terms.append(self.term(first=False))
        self.take("end")
        return terms

    def term(self, first: bool):
        sign = 1
        tok = self.peek()
        if tok[0] == "sign":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        elif not first:
            raise ParseError("expected '+' or '-'", tok[2])
        start = self.peek()[2]
        coeff = Fraction(sign)
        i = j = 0
        nfactors = 0
        while True:
            tok = self.peek()
            if tok[0] == "mul":
                if nfactors == 0:
                    raise ParseError("'*' before any factor", tok[2])
                self.take()
                tok = self.peek()
                if tok[0] not in ("int", "var"):
                    raise ParseError("expected a factor after '*'", tok[2])
            if tok[0] == "int":
                self.take()
                value = Fraction(int(tok[1]))
                if self.peek()[0] == "div":
                    div = self.take()
                    den = int(self.take("int")[1])
                    if den == 0:
                        raise ParseError("zero denominator", div[2])
                    value /= den
                coeff *= value
            elif tok[0] == "var":
                self.take()
                exp = 1
                if self.peek()[0] == "pow":
                    self.take()
                    exp = int(self.take("int")[1])
                if tok[1] == "x":
                    i += exp
                else:
                    j += exp
            else:
                break
            nfactors += 1
        if nfactors == 0:
            tok = self.peek()
            raise ParseError(f"expected a term, found {tok[1] or 'end of input'!r}", tok[2])
        return coeff, i, j, start


def parse_poly(text: str) -> BinaryForm:
    """Parse a homogeneous polynomial in x, y into a :class:`BinaryForm`."""
    terms = _Parser(text).poly()
    degree = max(i + j for _, i, j, _ in terms)
    for _, i, j, pos in terms:
        if i + j != degree:
            raise HomogeneityError(
                f"term of degree {i + j} in a polynomial of degree {degree}", pos
            )
    if degree == 0:
        raise ParseError("constant polynomial is not a binary form", 0)
    raw = [Fraction(0)] * (degree + 1)
    for coeff, i, _, _ in terms:
        raw[i] += coeff
    if not any(raw):
        raise ZeroFormError("polynomial is identically zero")
    return from_raw_coeffs(raw)
