"""Ideals of a valuation domain as upward-closed subsets of the value cone.

An ideal ``I`` of a valuation domain ``D`` is determined by the set of
values ``{v(x) : x in I, x != 0}``, an upward-closed subset of the
nonnegative cone.  Five shapes cover everything the supported groups
need::

    ZERO          the zero ideal (no values at all)
    FULL          the unit ideal (the whole cone)
    CLOSED(v)     {g >= v}, the principal ideal of an element of value v
    OPEN(v)       {g > v}; only survives normalization over Q
    ROW(a)        {(g1, g2) : g1 >= a}; Z2lex only, never principal

Construction always normalizes, so two cuts describe the same ideal iff
they compare equal.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .groups import GroupElement, GroupKind, check_kind, smallest_positive


class CutVariant(enum.Enum):
    ZERO = "zero"
    FULL = "full"
    CLOSED = "closed"
    OPEN = "open"
    ROW = "row"


@dataclass(frozen=True, slots=True)
class Cut:
    kind: GroupKind
    variant: CutVariant
    bound: GroupElement | None = None
    row: int | None = None

    def __post_init__(self):
        v = self.variant
        if v in (CutVariant.CLOSED, CutVariant.OPEN):
            if self.bound is None:
                raise ValueError(f"{v.value} cut needs a bound")
            check_kind(self.kind, self.bound.kind)
            if v is CutVariant.CLOSED and self.bound.sign() <= 0:
                raise ValueError("unnormalized cut: closed bound must be positive")
            if v is CutVariant.OPEN and (
                self.kind is not GroupKind.DENSE_Q or self.bound.sign() < 0
            ):
                raise ValueError("unnormalized cut: open cuts only over Q with bound >= 0")
        elif v is CutVariant.ROW:
            if self.kind is not GroupKind.LEX_Z2:
                raise ValueError("row cuts exist only in Z2lex")
            if self.row is None or self.row < 1:
                raise ValueError("unnormalized cut: row index must be >= 1")

    # -- normalizing constructors -------------------------------------------------

    @classmethod
    def zero(cls, kind: GroupKind) -> Cut:
        return cls(kind, CutVariant.ZERO)

    @classmethod
    def full(cls, kind: GroupKind) -> Cut:
        return cls(kind, CutVariant.FULL)

    @classmethod
    def closed(cls, v: GroupElement) -> Cut:
        if v.sign() <= 0:
            return cls(v.kind, CutVariant.FULL)
        return cls(v.kind, CutVariant.CLOSED, bound=v)

    @classmethod
    def open(cls, v: GroupElement) -> Cut:
        if v.kind is GroupKind.DENSE_Q:
            if v.sign() < 0:
                return cls(v.kind, CutVariant.FULL)
            return cls(v.kind, CutVariant.OPEN, bound=v)
        # discrete groups: the successor of v exists
        if v.kind is GroupKind.DISCRETE_Z:
            return cls.closed(GroupElement(v.kind, (v.coords[0] + 1,)))
        return cls.closed(GroupElement(v.kind, (v.coords[0], v.coords[1] + 1)))

    @classmethod
    def row_cut(cls, a: int) -> Cut:
        if a <= 0:
            return cls(GroupKind.LEX_Z2, CutVariant.FULL)
        return cls(GroupKind.LEX_Z2, CutVariant.ROW, row=a)

    # -- ordering -----------------------------------------------------------------

    def key(self) -> tuple:
        """Sort key: a larger key is a smaller ideal.  Cuts are totally ordered."""
        v = self.variant
        if v is CutVariant.FULL:
            return (0,)
        if v is CutVariant.ZERO:
            return (2,)
        if v is CutVariant.ROW:
            return (1, (self.row, 0, 0), 0)
        return (1, boundary_key(self.bound), 1 if v is CutVariant.OPEN else 0)

    def __le__(self, other: Cut) -> bool:
        """Ideal inclusion: ``self <= other`` iff self is a subset of other."""
        check_kind(self.kind, other.kind)
        return self.key() >= other.key()

    def __lt__(self, other: Cut) -> bool:
        check_kind(self.kind, other.kind)
        return self.key() > other.key()

    def __ge__(self, other: Cut) -> bool:
        return other <= self

    def __gt__(self, other: Cut) -> bool:
        return other < self

    @property
    def is_full(self) -> bool:
        return self.variant is CutVariant.FULL

    @property
    def is_zero(self) -> bool:
        return self.variant is CutVariant.ZERO

    def __str__(self) -> str:
        v = self.variant
        if v in (CutVariant.ZERO, CutVariant.FULL):
            return v.value
        if v is CutVariant.ROW:
            return f"row:{self.row}"
        return f"{v.value}:{self.bound}"

    def __repr__(self) -> str:
        return f"Cut({self.kind.value}, {self})"


def boundary_key(v: GroupElement) -> tuple:
    if v.kind is GroupKind.LEX_Z2:
        return (v.coords[0], 1, v.coords[1])
    return (v.coords[0],)


def cut_member(g: GroupElement, c: Cut) -> bool:
    check_kind(c.kind, g.kind)
    if g.sign() < 0:
        raise ValueError(f"value {g} lies outside the nonnegative cone")
    v = c.variant
    if v is CutVariant.ZERO:
        return False
    if v is CutVariant.FULL:
        return True
    if v is CutVariant.CLOSED:
        return g >= c.bound
    if v is CutVariant.OPEN:
        return g > c.bound
    return g.coords[0] >= c.row


def cut_quotient(c: Cut, g: GroupElement) -> Cut:
    """The colon ideal ``(C : x)`` for any ``x`` of value ``g``."""
    check_kind(c.kind, g.kind)
    if g.sign() < 0:
        raise ValueError(f"value {g} lies outside the nonnegative cone")
    v = c.variant
    if v in (CutVariant.ZERO, CutVariant.FULL):
        return c
    if v is CutVariant.CLOSED:
        return Cut.closed(c.bound - g)
    if v is CutVariant.OPEN:
        return Cut.open(c.bound - g)
    return Cut.row_cut(c.row - g.coords[0])


def cut_sum(c1: Cut, c2: Cut) -> Cut:
    check_kind(c1.kind, c2.kind)
    return c1 if c1.key() <= c2.key() else c2


def cut_intersection(c1: Cut, c2: Cut) -> Cut:
    check_kind(c1.kind, c2.kind)
    return c1 if c1.key() >= c2.key() else c2


def cut_is_principal(c: Cut) -> tuple[bool, GroupElement | None]:
    """Finite generation test: in a valuation domain f.g. means principal.

    The zero ideal is principal with no generator value; the unit ideal is
    generated by a unit (value 0).
    """
    v = c.variant
    if v is CutVariant.ZERO:
        return True, None
    if v is CutVariant.FULL:
        return True, GroupElement.zero(c.kind)
    if v is CutVariant.CLOSED:
        return True, c.bound
    return False, None


def cut_is_prime(c: Cut) -> bool:
    if c.is_full:
        raise ValueError("the unit ideal is not a proper ideal")
    v = c.variant
    if v is CutVariant.ZERO:
        return True
    if v is CutVariant.CLOSED:
        # only the maximal ideal of a discrete group: Closed(eps)
        return c.bound == smallest_positive(c.kind)
    if v is CutVariant.OPEN:
        return c.bound.sign() == 0
    return c.row == 1


def maximal_ideal(kind: GroupKind) -> Cut:
    eps = smallest_positive(kind)
    if eps is None:
        return Cut.open(GroupElement.zero(kind))
    return Cut.closed(eps)
