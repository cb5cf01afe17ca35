"""Text formats: bundle expressions and Laurent matrices.

Bundle grammar (``*`` binds tighter than ``+``)::

    expr   := term ('+' term)*
    term   := factor ('*' factor)*
    factor := 'O' '(' int ')' | 'O' | '(' expr ')'

``+`` is direct sum and ``*`` is tensor product, so ``O(1)*(O+O(2))`` is
``O(1)+O(3)``.

Laurent matrix grammar::

    matrix := row (';' row)*
    row    := poly (',' poly)*
    poly   := ['-'] mono (('+' | '-') mono)*
    mono   := coeff ['*'] var | coeff | var
    coeff  := int ['/' int]
    var    := 't' ['^' ['-'] int]

for example ``3/2 t^-1 + 1 - 2 t^3; 0, t``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .bundle_p1 import SplitBundle, direct_sum, tensor
from .laurent import LaurentMatrix, LaurentPoly


class ParseError(ValueError):
    def __init__(self, message: str, offset: int, text: str = ""):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
        self.text = text


_TOKEN = re.compile(r"\s*(?:(\d+)|(\S))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        if m.group(1) is not None:
            toks.append(("int", m.group(1), m.start(1)))
        else:
            toks.append((m.group(2), m.group(2), m.start(2)))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _BundleParser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind: str, what: str):
        tok = self.peek()
        if tok[0] != kind:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {what}, found {found}", tok[2], self.text)
        self.i += 1
        return tok

    def parse(self) -> SplitBundle:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0, self.text)
        e = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2], self.text)
        return e

    def expr(self) -> SplitBundle:
        e = self.term()
        while self.peek()[0] == "+":
            self.i += 1
            e = direct_sum(e, self.term())
        return e

    def term(self) -> SplitBundle:
        e = self.factor()
        while self.peek()[0] == "*":
            self.i += 1
            e = tensor(e, self.factor())
        return e

    def factor(self) -> SplitBundle:
        tok = self.peek()
        if tok[0] == "(":
            self.i += 1
            e = self.expr()
            self.take(")", "')'")
            return e
        self.take("O", "'O' or '('")
        if self.peek()[0] != "(":
            return SplitBundle.line(0)
        self.i += 1
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take(self.peek()[0], "sign")[1] == "-" else 1
        d = sign * int(self.take("int", "integer")[1])
        self.take(")", "')'")
        return SplitBundle.line(d)


def parse_bundle(text: str) -> SplitBundle:
    """Parse a bundle expression into its canonical split form."""
    return _BundleParser(text).parse()


_MONO = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<num>\d+)(?:\s*/\s*(?P<den>\d+))?)?
        \s*\*?\s*
        (?P<var>t(?:\s*\^\s*(?P<exp>-?\d+))?)?\s*""",
    re.VERBOSE,
)


def parse_poly(text: str, base_offset: int = 0) -> LaurentPoly:
    """Parse one Laurent polynomial such as ``3/2 t^-1 + 1 - 2 t^3``."""
    pos = 0
    out = LaurentPoly()
    first = True
    if not text.strip():
        raise ParseError("empty entry", base_offset, text)
    while pos < len(text):
        m = _MONO.match(text, pos)
        if m.group("num") is None and m.group("var") is None:
            if m.end() >= len(text) and not first and m.group("sign") is None:
                break
            raise ParseError("expected a term", base_offset + m.end(), text)
        if not first and m.group("sign") is None:
            raise ParseError("expected '+' or '-'", base_offset + m.start(), text)
        den = int(m.group("den") or 1)
        if den == 0:
            raise ParseError("zero denominator", base_offset + m.start("den"), text)
        coeff = Fraction(int(m.group("num") or 1), den)
        if m.group("sign") == "-":
            coeff = -coeff
        exp = 0
        if m.group("var"):
            exp = int(m.group("exp")) if m.group("exp") is not None else 1
        out = out + LaurentPoly.monomial(exp, coeff)
        first = False
        pos = m.end()
    return out


def parse_matrix(text: str) -> LaurentMatrix:
    """Parse ``row; row; ...`` with comma-separated entries."""
    rows = []
    offset = 0
    for row_text in text.split(";"):
        row = []
        col_off = offset
        for entry in row_text.split(","):
            row.append(parse_poly(entry, col_off))
            col_off += len(entry) + 1
        rows.append(row)
        offset += len(row_text) + 1
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise ParseError(f"matrix is not square ({n} rows, a row of length {len(r)})", 0, text)
    return LaurentMatrix(rows)


def parse_degrees(text: str) -> SplitBundle:
    """Bundle given either as an expression or as a bare list like ``-1,0,1``."""
    if re.fullmatch(r"\s*-?\d+(\s*,\s*-?\d+)*\s*", text):
        return SplitBundle(int(x) for x in text.split(","))
    return parse_bundle(text)
