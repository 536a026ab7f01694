"""Canonical plain-text forms for rationals, maps, elements and pairs.

Grammar, whitespace-insensitive between tokens:

    rational := ['-'] digits ['/' digits]
    pl       := 'aff(' rational ',' rational ')'
              | 'pl(' rational ';' knot {',' knot} ';' rational ')'
    knot     := '(' rational ',' rational ')'
    elem     := 'phom(' pl ';' '{' [rational {',' rational}] '}' ')'
    pair     := 'pair(' pl ';' '{' [rational {',' rational}] '}' ')'

``aff`` lists slope then intercept; ``pl`` lists left tail slope, knots,
right tail slope.  Printing always emits the canonical minimal-knot form
with no spaces, so parse(format(x)) == x and format(parse(s)) is a
normal form of s.  Parsing reports the first offending position; semantic
violations (zero slope, unsorted knots, duplicate points) surface as the
corresponding domain errors, not parse errors.
"""

from __future__ import annotations

from fractions import Fraction

from .congruence import GSPair
from .errors import ParseError
from .phom import CofinSet, PHom
from .plcore import PLHomeo, Rat

_WS = " \t\r\n"


class _Cursor:
    __slots__ = ("text", "pos")

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in _WS:
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        if self.pos >= len(self.text):
            return ""
        return self.text[self.pos]

    def take(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected '{ch}'")
        self.pos += 1

    def try_take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def take_word(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected a keyword")
        return self.text[start:self.pos]

    def take_digits(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected digits")
        return self.text[start:self.pos]

    def expect_end(self) -> None:
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("trailing input")


def _rational(cur: _Cursor) -> Rat:
    negative = cur.try_take("-")
    numerator = int(cur.take_digits())
    denominator = 1
    if cur.try_take("/"):
        cur.skip_ws()
        at = cur.pos
        denominator = int(cur.take_digits())
        if denominator == 0:
            raise ParseError("zero denominator", at)
    value = Fraction(numerator, denominator)
    return -value if negative else value


def _point_set(cur: _Cursor) -> CofinSet:
    cur.take("{")
    points: list[Rat] = []
    if not cur.try_take("}"):
        points.append(_rational(cur))
        while cur.try_take(","):
            points.append(_rational(cur))
        cur.take("}")
    return CofinSet(points)


def _knot(cur: _Cursor) -> tuple[Rat, Rat]:
    cur.take("(")
    b = _rational(cur)
    cur.take(",")
    v = _rational(cur)
    cur.take(")")
    return b, v


def _map(cur: _Cursor) -> PLHomeo:
    cur.skip_ws()
    at = cur.pos
    word = cur.take_word()
    if word == "aff":
        cur.take("(")
        slope = _rational(cur)
        cur.take(",")
        intercept = _rational(cur)
        cur.take(")")
        return PLHomeo.affine(slope, intercept)
    if word == "pl":
        cur.take("(")
        left = _rational(cur)
        cur.take(";")
        knots = [_knot(cur)]
        while cur.try_take(","):
            knots.append(_knot(cur))
        cur.take(";")
        right = _rational(cur)
        cur.take(")")
        return PLHomeo.from_knots(left, knots, right)
    raise ParseError(f"expected 'aff' or 'pl', got '{word}'", at)


def _element(cur: _Cursor) -> PHom:
    cur.skip_ws()
    at = cur.pos
    word = cur.take_word()
    if word != "phom":
        raise ParseError(f"expected 'phom', got '{word}'", at)
    cur.take("(")
    extension = _map(cur)
    cur.take(";")
    excluded = _point_set(cur)
    cur.take(")")
    return PHom(extension, excluded)


def _pair(cur: _Cursor) -> GSPair:
    cur.skip_ws()
    at = cur.pos
    word = cur.take_word()
    if word != "pair":
        raise ParseError(f"expected 'pair', got '{word}'", at)
    cur.take("(")
    unit = _map(cur)
    cur.take(";")
    lattice = _point_set(cur)
    cur.take(")")
    return GSPair(unit, lattice)


def _complete(cur: _Cursor, value):
    cur.expect_end()
    return value


def parse_rational(text: str) -> Rat:
    cur = _Cursor(text)
    return _complete(cur, _rational(cur))


def parse_map(text: str) -> PLHomeo:
    cur = _Cursor(text)
    return _complete(cur, _map(cur))


def parse_element(text: str) -> PHom:
    cur = _Cursor(text)
    return _complete(cur, _element(cur))


def parse_pair(text: str) -> GSPair:
    cur = _Cursor(text)
    return _complete(cur, _pair(cur))


def format_rational(q: Rat) -> str:
    return str(q)


def format_map(f: PLHomeo) -> str:
    return str(f)


def format_element(a: PHom) -> str:
    return str(a)


def format_pair(p: GSPair) -> str:
    return str(p)
