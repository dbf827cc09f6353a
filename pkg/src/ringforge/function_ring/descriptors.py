"""Finitely described submodules of S(I, D).

A descriptor prescribes one ideal of D for the constant part and one for
each index ``n >= 1``::

    f in M  iff  v(f.default) in const  and  v(f(n)) in cut_at(n) for all n

``cut_at(n)`` comes from an explicit override or from a tail rule.  The
tail rules are a closed family: a uniform cut, ``Closed(base + n*step)``,
or (over Q) ``Closed(limit + amp * 2**-n)``.

Every question about all indices at once is decided by one device: the
boundary of each tail cut is ``alpha + beta*n + gamma*2**-n`` per
coordinate, so pairwise comparisons between boundaries change sign only
finitely often, and we can compute an index past which they are frozen
(:func:`stable_from`).  Checking indices up to that point decides the
question for every index.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Union

from ..valuation import Cut, CutVariant, GroupElement, GroupKind, cut_quotient
from ..valuation.groups import check_kind

# -- tail rules -----------------------------------------------------------------


@dataclass(frozen=True)
class Uniform:
    cut: Cut

    @property
    def kind(self) -> GroupKind:
        return self.cut.kind

    def at(self, n: int) -> Cut:
        return self.cut

    def quotient(self, g: GroupElement) -> Uniform:
        return Uniform(cut_quotient(self.cut, g))

    def __str__(self) -> str:
        return f"uniform {self.cut}"


@dataclass(frozen=True)
class Arithmetic:
    """Index ``n`` carries ``Closed(base + n*step)``."""

    base: GroupElement
    step: GroupElement

    def __post_init__(self):
        check_kind(self.base.kind, self.step.kind)
        if self.step.sign() < 0:
            raise ValueError("arithmetic tail needs step >= 0")

    @property
    def kind(self) -> GroupKind:
        return self.base.kind

    def at(self, n: int) -> Cut:
        return Cut.closed(self.base + self.step.scale(n))

    def quotient(self, g: GroupElement) -> Arithmetic:
        return Arithmetic(self.base - g, self.step)

    def forms(self):
        return tuple((Fraction(a), Fraction(b), Fraction(0)) for a, b in zip(self.base.coords, self.step.coords))

    def __str__(self) -> str:
        return f"closed:{self.base} + n*{self.step}"


@dataclass(frozen=True)
class GeometricToLimit:
    """Index ``n`` carries ``Closed(limit + amp * 2**-n)`` over Q."""

    limit: Fraction
    amp: Fraction

    def __post_init__(self):
        if self.amp <= 0:
            raise ValueError("geometric tail needs amp > 0")

    kind = GroupKind.DENSE_Q

    def at(self, n: int) -> Cut:
        return Cut.closed(GroupElement(GroupKind.DENSE_Q, (self.limit + self.amp / 2**n,)))

    def quotient(self, g: GroupElement) -> GeometricToLimit:
        check_kind(GroupKind.DENSE_Q, g.kind)
        return GeometricToLimit(self.limit - g.coords[0], self.amp)

    def forms(self):
        return ((Fraction(self.limit), Fraction(0), Fraction(self.amp)),)

    def __str__(self) -> str:
        return f"closed:{self.limit} + {self.amp}*2^-n"


TailRule = Union[Uniform, Arithmetic, GeometricToLimit]


def _normalize_tail(rule: TailRule) -> tuple[TailRule, dict[int, Cut]]:
    """Rewrite degenerate moving rules as uniform ones (plus finitely many
    explicit indices), so that equal tails get equal representations."""
    if isinstance(rule, Arithmetic):
        if rule.step.sign() == 0:
            return Uniform(Cut.closed(rule.base)), {}
        if rule.kind is GroupKind.LEX_Z2 and rule.step.coords[0] == 0 and rule.base.coords[0] < 0:
            return Uniform(Cut.full(rule.kind)), {}
    if isinstance(rule, GeometricToLimit) and rule.limit < 0:
        extra = {}
        n = 1
        while rule.limit + rule.amp / 2**n > 0:
            extra[n] = rule.at(n)
            n += 1
        return Uniform(Cut.full(GroupKind.DENSE_Q)), extra
    return rule, {}


# -- stabilization ---------------------------------------------------------------


def _form_threshold(alpha: Fraction, beta: Fraction, gamma: Fraction) -> int:
    """Least N >= 1 past which ``alpha + beta*n + gamma*2**-n`` has a fixed,
    nonzero sign (or 1 when the form vanishes identically)."""
    if beta:
        return int((abs(alpha) + abs(gamma)) // abs(beta)) + 1
    if alpha:
        n = 1
        while abs(gamma) >= abs(alpha) * 2**n:
            n += 1
        return n
    return 1


def _bound(obj):
    """Boundary data of a cut or tail rule used for the threshold search."""
    if isinstance(obj, Uniform):
        obj = obj.cut
    if isinstance(obj, Cut):
        if obj.variant in (CutVariant.ZERO, CutVariant.FULL):
            return None
        if obj.variant is CutVariant.ROW:
            return ("row", Fraction(obj.row))
        return ("pt", tuple((Fraction(c), Fraction(0), Fraction(0)) for c in obj.bound.coords))
    return ("pt", obj.forms())


def _diff(f, g):
    return tuple(a - b for a, b in zip(f, g))


def _pair_threshold(b1, b2) -> int:
    if b1 is None or b2 is None:
        return 1
    if b1[0] == "row" and b2[0] == "row":
        return 1
    if b1[0] == "row" or b2[0] == "row":
        row, pt = (b1, b2) if b1[0] == "row" else (b2, b1)
        return _form_threshold(*_diff(pt[1][0], (row[1], 0, 0)))
    forms = [_diff(f, g) for f, g in zip(b1[1], b2[1])]
    for f in forms:
        if any(f):
            return _form_threshold(*f)
    return 1


def stable_from(objs: Iterable, indices: Iterable[int] = ()) -> int:
    """An index N such that, for every n >= N, all order relations among the
    cuts ``obj.at(n)`` (tail rules) and the constant cuts in ``objs`` are the
    same as at N.  Also exceeds every index in ``indices``."""
    bounds = [_bound(o) for o in objs]
    kinds = {o.kind for o in objs}
    for kind in kinds:
        # normalization to FULL is a comparison against the origin
        bounds.append(("pt", tuple((Fraction(0),) * 3 for _ in range(kind.rank))))
    n0 = max([1, *(i + 1 for i in indices)])
    for b1, b2 in combinations(bounds, 2):
        n0 = max(n0, _pair_threshold(b1, b2))
    return n0


# -- descriptors -------------------------------------------------------------------


@dataclass(frozen=True)
class SubmoduleDescriptor:
    const: Cut
    tail: TailRule
    overrides: tuple[tuple[int, Cut], ...] = ()

    @classmethod
    def build(
        cls, const: Cut, tail: TailRule, overrides: Mapping[int, Cut] | None = None
    ) -> SubmoduleDescriptor:
        """Normalizing constructor; use this rather than the raw dataclass."""
        check_kind(const.kind, tail.kind)
        tail, extra = _normalize_tail(tail)
        merged = dict(extra)
        merged.update(overrides or {})
        items = []
        for i, c in sorted(merged.items()):
            if not isinstance(i, int) or i < 1:
                raise ValueError(f"index {i!r} is not a positive integer")
            check_kind(const.kind, c.kind)
            if c != tail.at(i):
                items.append((i, c))
        desc = cls(const, tail, tuple(items))
        n0 = stable_from([const, tail])
        for n in range(1, n0 + 1):
            if not const <= tail.at(n):
                raise ValueError(
                    f"constant part {const} is not contained in the tail cut {tail.at(n)} at index {n}"
                )
        return desc

    @classmethod
    def full(cls, kind: GroupKind) -> SubmoduleDescriptor:
        return cls.build(Cut.full(kind), Uniform(Cut.full(kind)))

    @property
    def kind(self) -> GroupKind:
        return self.const.kind

    @property
    def override_map(self) -> dict[int, Cut]:
        return dict(self.overrides)

    @property
    def override_indices(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.overrides)

    def cut_at(self, n: int) -> Cut:
        for i, c in self.overrides:
            if i == n:
                return c
        return self.tail.at(n)

    @property
    def is_full(self) -> bool:
        return self == SubmoduleDescriptor.full(self.kind)

    def __str__(self) -> str:
        s = f"const {self.const}, tail {self.tail}"
        if self.overrides:
            s += ", overrides {" + ", ".join(f"{i}: {c}" for i, c in self.overrides) + "}"
        return s


def check_range(*descs: SubmoduleDescriptor, extra: Iterable = ()) -> int:
    """Largest index that must be inspected to decide an all-index question
    about ``descs`` (and the constant cuts in ``extra``)."""
    objs = [d.tail for d in descs] + [d.const for d in descs] + list(extra)
    indices = [i for d in descs for i in d.override_indices]
    return stable_from(objs, indices)


def desc_contains(big: SubmoduleDescriptor, small: SubmoduleDescriptor) -> bool:
    """``small`` is a submodule of ``big`` (componentwise inclusion)."""
    check_kind(big.kind, small.kind)
    if not small.const <= big.const:
        return False
    n0 = check_range(big, small)
    return all(small.cut_at(n) <= big.cut_at(n) for n in range(1, n0 + 1))


def desc_equal(a: SubmoduleDescriptor, b: SubmoduleDescriptor) -> bool:
    return desc_contains(a, b) and desc_contains(b, a)
