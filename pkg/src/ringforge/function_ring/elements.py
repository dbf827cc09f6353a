"""Elements of S(I, D): functions I -> D constant off a finite set.

The index set is the positive integers.  An element is its constant value
(``default``) plus finitely many overrides; overrides equal to the default
are dropped so equal functions have equal representations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from ..valuation import GroupKind, ValElement
from ..valuation.groups import check_kind


@dataclass(frozen=True)
class FunElement:
    default: ValElement
    overrides: tuple[tuple[int, ValElement], ...] = ()

    @classmethod
    def build(cls, default: ValElement, overrides: Mapping[int, ValElement] | None = None):
        items = []
        for i, x in sorted((overrides or {}).items()):
            if not isinstance(i, int) or i < 1:
                raise ValueError(f"index {i!r} is not a positive integer")
            check_kind(default.kind, x.kind)
            if x != default:
                items.append((i, x))
        return cls(default, tuple(items))

    @classmethod
    def constant(cls, x: ValElement) -> FunElement:
        """``x * 1``."""
        return cls(x)

    @classmethod
    def basis(cls, i: int, x: ValElement) -> FunElement:
        """``x * e_i``."""
        return cls.build(ValElement.zero(x.kind), {i: x})

    @property
    def kind(self) -> GroupKind:
        return self.default.kind

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.overrides)

    def at(self, i: int) -> ValElement:
        for j, x in self.overrides:
            if j == i:
                return x
        return self.default

    def __mul__(self, other: FunElement) -> FunElement:
        idx = set(self.support) | set(other.support)
        return FunElement.build(
            self.default * other.default,
            {i: self.at(i) * other.at(i) for i in idx},
        )

    def __str__(self) -> str:
        if not self.overrides:
            return f"{self.default}*1"
        parts = ", ".join(f"{i}: {x}" for i, x in self.overrides)
        return f"{self.default}*1 with {{{parts}}}"
