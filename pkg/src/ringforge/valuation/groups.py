"""Totally ordered value groups.

Three groups are supported: the integers, the rationals, and ``Z x Z``
ordered lexicographically.  Elements carry their group so that mixing
groups is caught instead of silently compared.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction]


class GroupKind(enum.Enum):
    DISCRETE_Z = "Z"
    DENSE_Q = "Q"
    LEX_Z2 = "Z2lex"

    @property
    def rank(self) -> int:
        return 2 if self is GroupKind.LEX_Z2 else 1

    def __str__(self) -> str:
        return self.value


class KindMismatch(TypeError):
    """Raised when values or cuts from different value groups meet."""


def check_kind(expected: GroupKind, got: GroupKind) -> None:
    if expected is not got:
        raise KindMismatch(f"value group mismatch: {expected} vs {got}")


def _coerce(kind: GroupKind, x) -> Scalar:
    if kind is GroupKind.DENSE_Q:
        if isinstance(x, float):
            raise TypeError("floats are not exact; pass a Fraction or a string")
        return Fraction(x)
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise ValueError(f"{x} is not an integer")
        return int(x)
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"expected an integer coordinate, got {x!r}")
    return x


@dataclass(frozen=True, slots=True)
class GroupElement:
    kind: GroupKind
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.kind.rank:
            raise ValueError(f"{self.kind} needs {self.kind.rank} coordinate(s)")

    @classmethod
    def of(cls, kind: GroupKind, *coords) -> GroupElement:
        return cls(kind, tuple(_coerce(kind, c) for c in coords))

    @classmethod
    def zero(cls, kind: GroupKind) -> GroupElement:
        return cls.of(kind, *(0,) * kind.rank)

    def __add__(self, other: GroupElement) -> GroupElement:
        check_kind(self.kind, other.kind)
        return GroupElement(self.kind, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: GroupElement) -> GroupElement:
        check_kind(self.kind, other.kind)
        return GroupElement(self.kind, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> GroupElement:
        return GroupElement(self.kind, tuple(-a for a in self.coords))

    def scale(self, n: int) -> GroupElement:
        """Return ``n * self`` for an integer ``n``."""
        return GroupElement(self.kind, tuple(n * a for a in self.coords))

    def _cmp_key(self, other: GroupElement):
        check_kind(self.kind, other.kind)
        return self.coords, other.coords

    def __lt__(self, other: GroupElement) -> bool:
        a, b = self._cmp_key(other)
        return a < b

    def __le__(self, other: GroupElement) -> bool:
        a, b = self._cmp_key(other)
        return a <= b

    def __gt__(self, other: GroupElement) -> bool:
        a, b = self._cmp_key(other)
        return a > b

    def __ge__(self, other: GroupElement) -> bool:
        a, b = self._cmp_key(other)
        return a >= b

    def sign(self) -> int:
        for c in self.coords:
            if c:
                return 1 if c > 0 else -1
        return 0

    def is_nonnegative(self) -> bool:
        return self.sign() >= 0

    def __str__(self) -> str:
        if self.kind is GroupKind.LEX_Z2:
            return f"({self.coords[0]},{self.coords[1]})"
        return str(self.coords[0])

    def __repr__(self) -> str:
        return f"GroupElement({self.kind.value}, {self})"


def smallest_positive(kind: GroupKind) -> GroupElement | None:
    """The least positive value, or None for a dense group."""
    if kind is GroupKind.DISCRETE_Z:
        return GroupElement(kind, (1,))
    if kind is GroupKind.LEX_Z2:
        return GroupElement(kind, (0, 1))
    return None
