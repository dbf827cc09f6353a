"""Quotients ``D/A`` of a valuation domain: annihilators, lambda chains,
and the coherence / fp-injectivity classification."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .cuts import (
    Cut,
    CutVariant,
    cut_is_principal,
    cut_member,
    cut_quotient,
)
from .elements import ValElement
from .groups import GroupElement, GroupKind, check_kind, smallest_positive


class ContainmentError(ValueError):
    """A submodule was expected to contain another one and does not."""


@dataclass(frozen=True)
class ValQuotient:
    kind: GroupKind
    modulus: Cut

    def __post_init__(self):
        check_kind(self.kind, self.modulus.kind)
        if self.modulus.is_full:
            raise ValueError("modulus must be a proper ideal")

    def is_zero(self, x: ValElement) -> bool:
        return x.is_zero or cut_member(x.value, self.modulus)

    def __str__(self) -> str:
        if self.modulus.is_zero:
            return f"D[{self.kind}]"
        return f"D[{self.kind}]/{self.modulus}"


def ann_quotient(ring: ValQuotient, x: ValElement) -> Cut:
    """``(0 : x)`` in ``D/A``, returned as the ideal ``(A : x)`` of ``D``."""
    check_kind(ring.kind, x.kind)
    if ring.is_zero(x):
        return Cut.full(ring.kind)
    return cut_quotient(ring.modulus, x.value)


def cut_fg_mod(b: Cut, a: Cut) -> tuple[bool, GroupElement | None]:
    """Is ``B/A`` a finitely generated ideal of ``D/A``?

    Returns the generator value when ``B`` is principal and strictly larger
    than ``A``.  ``B == A`` is the zero module: finitely generated, no
    generator.
    """
    check_kind(a.kind, b.kind)
    if not a <= b:
        raise ContainmentError(f"{a} is not contained in {b}")
    if a == b:
        return True, None
    return cut_is_principal(b)


# -- lambda chains ----------------------------------------------------------------


class LambdaReason(enum.Enum):
    NOT_FG = "NotFG"
    PERIODIC = "Periodic"
    ZERO_OR_UNIT = "ZeroOrUnit"
    DEPTH_CAP = "DepthCap"
    NON_CYCLIC = "NonCyclic"


@dataclass(frozen=True)
class LambdaResult:
    """Outcome of following the annihilator chain of a cyclic module ``R/xR``.

    ``status`` is ``"finite"``, ``"infinite"`` or ``"at_least"``; ``bound``
    is the lambda value (finite) or the proven lower bound (at_least).
    A cyclic module is always finitely presented, so finite values start
    at 1: lambda is ``k + 1`` when the k-th annihilator (counting from 0)
    is the first one that is not finitely generated.
    """

    status: str
    bound: int | None
    reason: LambdaReason
    chain: tuple = field(default=())

    @classmethod
    def finite(cls, k, chain):
        return cls("finite", k, LambdaReason.NOT_FG, tuple(chain))

    @classmethod
    def infinite(cls, reason, chain):
        return cls("infinite", None, reason, tuple(chain))

    @classmethod
    def at_least(cls, k, reason, chain):
        return cls("at_least", k, reason, tuple(chain))

    def label(self) -> str:
        if self.status == "finite":
            return f"Finite({self.bound})"
        if self.status == "infinite":
            return "Infinite"
        return f"AtLeast({self.bound})"

    def __str__(self) -> str:
        return f"{self.label()} [{self.reason.value}]"


def lambda_cyclic(ring: ValQuotient, x: ValElement, depth: int) -> LambdaResult:
    """Follow ``x, (0:x) = y1 R, (0:y1) = y2 R, ...`` in ``R = D/A``."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    a = ring.modulus
    chain: list[Cut] = []
    y = x
    for k in range(depth):
        c = ann_quotient(ring, y)
        if c.is_full or c == a:
            # y = 0 (R/yR free) or y regular (0 -> R -> R -> R/yR)
            chain.append(c)
            return LambdaResult.infinite(LambdaReason.ZERO_OR_UNIT, chain)
        if c in chain:
            return LambdaResult.infinite(LambdaReason.PERIODIC, chain)
        chain.append(c)
        fg, gen = cut_fg_mod(c, a)
        if not fg:
            return LambdaResult.finite(k + 1, chain)
        y = ValElement.term(gen)
    return LambdaResult.at_least(depth + 1, LambdaReason.DEPTH_CAP, chain)


# -- classification ----------------------------------------------------------------


class ZClass(enum.Enum):
    Z_IS_ZERO = "ZIsZero"
    Z_PROPER_NONZERO = "ZProperNonzero"
    Z_IS_MAX = "ZIsMax"


class Verdict(enum.Enum):
    COHERENT = "Coherent"
    LAMBDA_DIM_TWO = "LambdaDimTwo"
    LAMBDA_DIM_AT_MOST_TWO_SELF_FP_INJECTIVE = "LambdaDimAtMostTwo_SelfFpInjective"


@dataclass(frozen=True)
class Classification:
    zclass: ZClass
    verdict: Verdict
    m_flat: bool
    self_fp_injective: bool
    coherent: bool
    # (value g, annihilator (A : g)) with (A : g)/A not finitely generated
    coherence_witness: tuple[GroupElement, Cut] | None = None
    # a nonzero nonunit regular value, when one exists
    regular_witness: GroupElement | None = None
    # a nonzero zero-divisor value, when one exists
    zero_divisor_witness: GroupElement | None = None


def _half(v: GroupElement) -> GroupElement:
    return GroupElement(v.kind, (v.coords[0] / 2,))


def _survey(a: Cut):
    """Case analysis of the value classes ``0 < g, g not in A``.

    Returns (regular, zero_divisor, fg_zd, non_fg): a representative regular
    value, a representative zero-divisor value, whether zero divisors have
    finitely generated annihilators mod A, and a value whose annihilator is
    not finitely generated mod A (or None).  Within each cut shape the
    annihilator ``(A : g)`` has the same shape for every g in a class, so
    one representative per class decides the whole class.
    """
    kind = a.kind
    eps = smallest_positive(kind)
    v = a.variant
    if v is CutVariant.ZERO:
        # a domain: every nonzero value is regular
        return eps or GroupElement.of(kind, 1), None, None, None
    if v is CutVariant.CLOSED:
        b = a.bound
        g = _half(b) if eps is None else eps
        if eps is not None and g >= b:
            return None, None, None, None  # D/A is the residue field
        # (A : g) = Closed(b - g) strictly contains A and is principal
        return None, g, True, None
    if v is CutVariant.OPEN:
        b = a.bound
        if b.sign() == 0:
            return None, None, None, None  # A = N
        # (A : g) = Open(b - g) for 0 < g <= b: strictly larger, never principal
        g = _half(b)
        return None, g, False, g
    # ROW(r): (0, k) is regular; (g1, k) with 1 <= g1 < r has annihilator Row(r - g1)
    regular = GroupElement.of(kind, 0, 1)
    if a.row == 1:
        return regular, None, None, None
    zd = GroupElement.of(kind, 1, 0)
    return regular, zd, False, zd


def classify_valuation_quotient(ring: ValQuotient) -> Classification:
    a = ring.modulus
    regular, zd, fg_zd, non_fg = _survey(a)
    if zd is None:
        zclass = ZClass.Z_IS_ZERO
    elif regular is None:
        zclass = ZClass.Z_IS_MAX
    else:
        zclass = ZClass.Z_PROPER_NONZERO
    verdict = {
        ZClass.Z_IS_ZERO: Verdict.COHERENT,
        ZClass.Z_PROPER_NONZERO: Verdict.LAMBDA_DIM_TWO,
        ZClass.Z_IS_MAX: Verdict.LAMBDA_DIM_AT_MOST_TWO_SELF_FP_INJECTIVE,
    }[zclass]
    witness = None
    if non_fg is not None:
        witness = (non_fg, cut_quotient(a, non_fg))
    return Classification(
        zclass=zclass,
        verdict=verdict,
        m_flat=zd is None or fg_zd is False,
        self_fp_injective=regular is None,
        coherent=non_fg is None,
        coherence_witness=witness,
        regular_witness=regular,
        zero_divisor_witness=zd,
    )
