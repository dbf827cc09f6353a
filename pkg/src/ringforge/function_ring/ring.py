"""Quotients R = S/A of the finite-support function ring and their
annihilator chains, including the four worked examples."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..valuation import (
    Cut,
    GroupElement,
    GroupKind,
    LambdaReason,
    LambdaResult,
    ValElement,
    cut_fg_mod,
    cut_member,
    cut_quotient,
    cut_sum,
    maximal_ideal,
)
from ..valuation.groups import check_kind
from ..valuation.quotient import ContainmentError
from .descriptors import (
    Arithmetic,
    GeometricToLimit,
    SubmoduleDescriptor,
    Uniform,
    check_range,
    desc_contains,
    desc_equal,
)
from .elements import FunElement


@dataclass(frozen=True)
class SRingQuotient:
    kind: GroupKind
    modulus: SubmoduleDescriptor

    def __post_init__(self):
        check_kind(self.kind, self.modulus.kind)
        if self.modulus.const.is_full:
            raise ValueError("modulus must be a proper submodule")


def _in_cut(x: ValElement, c: Cut) -> bool:
    return x.is_zero or cut_member(x.value, c)


def _elem_quotient(c: Cut, x: ValElement) -> Cut:
    if x.is_zero:
        return Cut.full(c.kind)
    return cut_quotient(c, x.value)


def desc_member(f: FunElement, a: SubmoduleDescriptor) -> bool:
    check_kind(a.kind, f.kind)
    if not _in_cut(f.default, a.const):
        return False
    for i in set(f.support) | set(a.override_indices):
        if not _in_cut(f.at(i), a.cut_at(i)):
            return False
    return True


def desc_quotient(b: SubmoduleDescriptor, x: FunElement) -> SubmoduleDescriptor:
    """``(B : x) = {f : f*x in B}``, computed index by index."""
    check_kind(b.kind, x.kind)
    d = x.default
    if d.is_zero:
        const, tail = Cut.full(b.kind), Uniform(Cut.full(b.kind))
    else:
        const, tail = cut_quotient(b.const, d.value), b.tail.quotient(d.value)
    idx = set(b.override_indices) | set(x.support)
    overrides = {i: _elem_quotient(b.cut_at(i), x.at(i)) for i in idx}
    return SubmoduleDescriptor.build(const, tail, overrides)


def ann_cyclic(ring: SRingQuotient, x: FunElement) -> SubmoduleDescriptor:
    """The annihilator of the class of ``x`` in ``S/A``, as ``(A : x)``.

    When ``x`` lies in ``A`` the annihilator is the whole ring.
    """
    if desc_member(x, ring.modulus):
        return SubmoduleDescriptor.full(ring.kind)
    return desc_quotient(ring.modulus, x)


@dataclass(frozen=True)
class FgCertificate:
    """Verdict of :func:`desc_fg_mod`.

    When finitely generated, ``generators`` together with A generate B.
    Otherwise the failure is located: a non-f.g. constant part, exceptional
    indices whose cut is not principal over A, or the infinite family
    ``exceptional`` plus every index ``>= exceptional_from``.
    """

    finitely_generated: bool
    generators: tuple[FunElement, ...] = ()
    exceptional: tuple[int, ...] = ()
    exceptional_from: int | None = None
    const_fg: bool = True
    failing_indices: tuple[int, ...] = ()

    @property
    def cyclic_constant(self) -> bool:
        """B = A + S*(g*1) for a constant generator (or B = A)."""
        return (
            self.finitely_generated
            and not self.exceptional
            and len(self.generators) <= 1
        )


def desc_fg_mod(b: SubmoduleDescriptor, a: SubmoduleDescriptor) -> tuple[bool, FgCertificate]:
    """Is ``B/A`` a finitely generated submodule of ``S/A``?

    Finitely many generators only change finitely many indices away from
    the pattern ``cut_sum(B.const, A(n))``; so B/A is f.g. iff that pattern
    fails at finitely many indices, the constant part is f.g. over A's, and
    each exceptional index is f.g. over A's cut there.
    """
    if not desc_contains(b, a):
        raise ContainmentError("B does not contain A")
    n0 = check_range(b, a)

    def exceptional(n):
        return b.cut_at(n) != cut_sum(b.const, a.cut_at(n))

    exc = tuple(n for n in range(1, n0) if exceptional(n))
    if exceptional(n0):
        return False, FgCertificate(False, exceptional=exc, exceptional_from=n0)

    const_fg, g0 = cut_fg_mod(b.const, a.const)
    gens: list[FunElement] = []
    failing = []
    if g0 is not None:
        zero = ValElement.zero(b.kind)
        gens.append(FunElement.build(ValElement.term(g0), {n: zero for n in exc}))
    for n in exc:
        ok, gn = cut_fg_mod(b.cut_at(n), a.cut_at(n))
        if not ok:
            failing.append(n)
        elif gn is not None:
            gens.append(FunElement.basis(n, ValElement.term(gn)))
    fg = const_fg and not failing
    cert = FgCertificate(
        fg,
        generators=tuple(gens) if fg else (),
        exceptional=exc,
        const_fg=const_fg,
        failing_indices=tuple(failing),
    )
    return fg, cert


def lambda_cyclic_S(ring: SRingQuotient, x: FunElement, depth: int) -> LambdaResult:
    """Annihilator chain of ``R/xR`` in ``R = S/A``.

    The chain continues only while each annihilator is generated over A by
    a constant function ``g*1``; any other finitely generated annihilator
    stops the walk with a ``NonCyclic`` lower bound.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    a = ring.modulus
    chain: list[SubmoduleDescriptor] = []
    y = x
    for k in range(depth):
        c = ann_cyclic(ring, y)
        if c.is_full or desc_equal(c, a):
            chain.append(c)
            return LambdaResult.infinite(LambdaReason.ZERO_OR_UNIT, chain)
        if any(desc_equal(c, seen) for seen in chain):
            return LambdaResult.infinite(LambdaReason.PERIODIC, chain)
        chain.append(c)
        fg, cert = desc_fg_mod(c, a)
        if not fg:
            return LambdaResult.finite(k + 1, chain)
        if not cert.cyclic_constant:
            return LambdaResult.at_least(k + 2, LambdaReason.NON_CYCLIC, chain)
        y = FunElement.constant(cert.generators[0].default)
    return LambdaResult.at_least(depth + 1, LambdaReason.DEPTH_CAP, chain)


def jacobson_descriptor(kind: GroupKind) -> SubmoduleDescriptor:
    """J(S) = SN: every index and the constant part lie in N."""
    n = maximal_ideal(kind)
    return SubmoduleDescriptor.build(n, Uniform(n))


# -- the worked examples -------------------------------------------------------------


@dataclass(frozen=True)
class NamedExample:
    name: str
    ring: SRingQuotient
    elements: dict = field(default_factory=dict)
    summary: str = ""


def _lex(a, b):
    return GroupElement.of(GroupKind.LEX_Z2, a, b)


def noncoherent_b(n: int) -> ValElement:
    """``b_n`` of value ``2**-n``: each one is outside ``D*b_{n-1}``."""
    return ValElement.term(GroupElement.of(GroupKind.DENSE_Q, Fraction(1, 2**n)))


def build_named_example(name: str) -> NamedExample:
    if name == "dim3":
        a, b = ValElement.term(_lex(0, 1)), ValElement.term(_lex(1, 0))
        modulus = SubmoduleDescriptor.build(Cut.closed(_lex(1, 1)), Uniform(Cut.row_cut(1)))
        return NamedExample(
            name,
            SRingQuotient(GroupKind.LEX_Z2, modulus),
            {"a": a, "b": b, "a1": FunElement.constant(a), "b1": FunElement.constant(b)},
            "S/(D ab 1 + sum J e_i) with a in N\\J, b in J: lambda(R/Ra1) = 2",
        )
    if name == "reduced":
        a = ValElement.term(_lex(0, 1))
        modulus = SubmoduleDescriptor.build(Cut.zero(GroupKind.LEX_Z2), Uniform(maximal_ideal(GroupKind.LEX_Z2)))
        return NamedExample(
            name,
            SRingQuotient(GroupKind.LEX_Z2, modulus),
            {"a": a, "a1": FunElement.constant(a)},
            "S/(sum N e_i): reduced, (0 : a1) = sum R e_i not finitely generated",
        )
    if name == "noncoherent":
        q = GroupKind.DENSE_Q
        a = ValElement.term(GroupElement.of(q, 1))
        modulus = SubmoduleDescriptor.build(
            Cut.closed(GroupElement.of(q, 2)), GeometricToLimit(Fraction(1), Fraction(1))
        )
        return NamedExample(
            name,
            SRingQuotient(q, modulus),
            {"a": a, "a1": FunElement.constant(a), "b0": noncoherent_b(0)},
            "S/(D a b0 1 + sum D a b_n e_n) over Q: Krull dimension 0, locally coherent, not coherent",
        )
    if name == "padic":
        z = GroupKind.DISCRETE_Z
        p = ValElement.term(GroupElement.of(z, 1))
        modulus = SubmoduleDescriptor.build(
            Cut.zero(z), Arithmetic(GroupElement.of(z, 0), GroupElement.of(z, 1))
        )
        return NamedExample(
            name,
            SRingQuotient(z, modulus),
            {"p": p, "p1": FunElement.constant(p)},
            "S/(sum D p^n e_n) over a discrete valuation domain",
        )
    raise KeyError(f"unknown example {name!r} (choose dim3, reduced, noncoherent, padic)")


EXAMPLE_NAMES = ("dim3", "reduced", "noncoherent", "padic")
