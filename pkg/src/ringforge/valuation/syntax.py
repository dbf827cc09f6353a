"""Text syntax for value groups, cuts, elements and valuation quotients.

This is the single grammar shared by the CLI and the JSON formats::

    group    := "Z" | "Q" | "Z2lex"
    int      := ["-"] digits
    rational := int ["/" digits]
    value    := int                       (group Z)
              | rational                  (group Q)
              | "(" int "," int ")"       (group Z2lex)
    cut      := "zero" | "full" | "closed:" value | "open:" value | "row:" int
    element  := "0" | [rational "*"] "t^" value | rational
    valq     := "valq:" group [":" cut]

A bare rational element ``c`` means the unit ``c*t^0``.  ``valq:Z`` with
no cut is the domain itself.  Whitespace is not allowed inside a token.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .cuts import Cut
from .elements import ValElement
from .groups import GroupElement, GroupKind
from .quotient import ValQuotient

_KINDS = {k.value: k for k in GroupKind}
_INT = re.compile(r"-?\d+")
_RATIONAL = re.compile(r"-?\d+(?:/\d+)?")
_PAIR = re.compile(r"\((-?\d+),(-?\d+)\)")


class ParseError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


class _Reader:
    def __init__(self, text: str, offset: int = 0):
        self.text = text
        self.pos = offset

    def fail(self, message: str):
        raise ParseError(message, self.text, self.pos)

    def match(self, pattern: re.Pattern) -> re.Match | None:
        m = pattern.match(self.text, self.pos)
        if m:
            self.pos = m.end()
        return m

    def literal(self, s: str) -> bool:
        if self.text.startswith(s, self.pos):
            self.pos += len(s)
            return True
        return False

    def done(self):
        if self.pos != len(self.text):
            self.fail("unexpected trailing input")


def _rational(r: _Reader) -> Fraction:
    m = r.match(_RATIONAL)
    if not m:
        r.fail("expected a number")
    try:
        return Fraction(m.group())
    except ZeroDivisionError:
        r.pos = m.start()
        r.fail("zero denominator")


def _value(r: _Reader, kind: GroupKind) -> GroupElement:
    if kind is GroupKind.LEX_Z2:
        m = r.match(_PAIR)
        if not m:
            r.fail("expected a pair (a,b)")
        return GroupElement.of(kind, int(m.group(1)), int(m.group(2)))
    if kind is GroupKind.DISCRETE_Z:
        m = r.match(_INT)
        if not m:
            r.fail("expected an integer")
        if r.text.startswith("/", r.pos):
            r.fail("group Z takes integer values")
        return GroupElement.of(kind, int(m.group()))
    return GroupElement.of(kind, _rational(r))


def _cut(r: _Reader, kind: GroupKind) -> Cut:
    if r.literal("zero"):
        return Cut.zero(kind)
    if r.literal("full"):
        return Cut.full(kind)
    if r.literal("closed:"):
        return Cut.closed(_value(r, kind))
    if r.literal("open:"):
        return Cut.open(_value(r, kind))
    start = r.pos
    if r.literal("row:"):
        if kind is not GroupKind.LEX_Z2:
            r.pos = start
            r.fail("row cuts need group Z2lex")
        m = r.match(_INT)
        if not m:
            r.fail("expected a row index")
        return Cut.row_cut(int(m.group()))
    r.fail("expected zero, full, closed:, open: or row:")


def _element(r: _Reader, kind: GroupKind) -> ValElement:
    coeff = Fraction(1)
    if not r.text.startswith("t^", r.pos):
        start = r.pos
        coeff = _rational(r)
        if not r.literal("*"):
            if coeff == 0:
                return ValElement.zero(kind)
            return ValElement.term(GroupElement.zero(kind), coeff)
        if coeff == 0:
            r.pos = start
            r.fail("zero coefficient")
    if not r.literal("t^"):
        r.fail("expected t^")
    start = r.pos
    value = _value(r, kind)
    if value.sign() < 0:
        r.pos = start
        r.fail("element values must be nonnegative")
    return ValElement.term(value, coeff)


def _whole(text: str, fn, *args):
    r = _Reader(text)
    out = fn(r, *args)
    r.done()
    return out


def parse_kind(text: str) -> GroupKind:
    try:
        return _KINDS[text]
    except KeyError:
        raise ParseError("unknown value group (use Z, Q or Z2lex)", text, 0) from None


def parse_value(kind: GroupKind, text: str) -> GroupElement:
    return _whole(text, _value, kind)


def parse_cut(kind: GroupKind, text: str) -> Cut:
    return _whole(text, _cut, kind)


def parse_element(kind: GroupKind, text: str) -> ValElement:
    return _whole(text, _element, kind)


def parse_valq(text: str) -> ValQuotient:
    if not text.startswith("valq:"):
        raise ParseError("valuation quotients start with valq:", text, 0)
    rest = text[5:]
    name, sep, _ = rest.partition(":")
    if name not in _KINDS:
        raise ParseError("unknown value group (use Z, Q or Z2lex)", text, 5)
    kind = _KINDS[name]
    if not sep:
        return ValQuotient(kind, Cut.zero(kind))
    r = _Reader(text, 5 + len(name) + 1)
    cut = _cut(r, kind)
    r.done()
    if cut.is_full:
        raise ParseError("modulus must be a proper ideal", text, 5 + len(name) + 1)
    return ValQuotient(kind, cut)


def format_value(v: GroupElement) -> str:
    return str(v)


def format_cut(c: Cut) -> str:
    return str(c)


def format_element(x: ValElement) -> str:
    return str(x)


def format_valq(ring: ValQuotient) -> str:
    if ring.modulus.is_zero:
        return f"valq:{ring.kind.value}"
    return f"valq:{ring.kind.value}:{ring.modulus}"
