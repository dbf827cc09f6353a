"""Leading-term arithmetic in a valuation domain.

An element is kept as ``c * t^g``: a nonzero rational coefficient and a
value ``g >= 0``.  Products, divisibility and ideal membership depend only
on this data.  Sums are exact when the values differ; when leading terms
cancel the true value is unknown, and we refuse to guess.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .groups import GroupElement, GroupKind, check_kind


class AmbiguousCancellation(ArithmeticError):
    pass


@dataclass(frozen=True, slots=True)
class ValElement:
    kind: GroupKind
    coeff: Fraction = Fraction(0)
    value: GroupElement | None = None

    def __post_init__(self):
        if self.value is None:
            if self.coeff != 0:
                raise ValueError("zero element must have coefficient 0")
            return
        check_kind(self.kind, self.value.kind)
        if self.coeff == 0:
            raise ValueError("nonzero element needs a nonzero coefficient")
        if self.value.sign() < 0:
            raise ValueError(f"value {self.value} is negative; not an element of D")

    @classmethod
    def zero(cls, kind: GroupKind) -> ValElement:
        return cls(kind)

    @classmethod
    def term(cls, value: GroupElement, coeff=1) -> ValElement:
        return cls(value.kind, Fraction(coeff), value)

    @classmethod
    def one(cls, kind: GroupKind) -> ValElement:
        return cls.term(GroupElement.zero(kind))

    @property
    def is_zero(self) -> bool:
        return self.value is None

    @property
    def is_unit(self) -> bool:
        return self.value is not None and self.value.sign() == 0

    def __mul__(self, other: ValElement) -> ValElement:
        return val_mul(self, other)

    def __add__(self, other: ValElement) -> ValElement:
        return val_add(self, other)

    def __neg__(self) -> ValElement:
        if self.is_zero:
            return self
        return ValElement(self.kind, -self.coeff, self.value)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        if self.coeff == 1:
            return f"t^{self.value}"
        return f"{self.coeff}*t^{self.value}"


def val_mul(x: ValElement, y: ValElement) -> ValElement:
    check_kind(x.kind, y.kind)
    if x.is_zero or y.is_zero:
        return ValElement.zero(x.kind)
    return ValElement(x.kind, x.coeff * y.coeff, x.value + y.value)


def val_add(x: ValElement, y: ValElement) -> ValElement:
    check_kind(x.kind, y.kind)
    if x.is_zero:
        return y
    if y.is_zero:
        return x
    if x.value < y.value:
        return x
    if y.value < x.value:
        return y
    c = x.coeff + y.coeff
    if c == 0:
        raise AmbiguousCancellation(
            f"{x} + {y}: leading terms cancel, the value of the sum is not determined"
        )
    return ValElement(x.kind, c, x.value)
