"""Bezout, Hermite, adequate and Kaplansky-style constructions over
``Z``, ``Z/m`` and products of residue rings.

In ``Z/m`` the prime ideals are ``(p)`` for ``p | m``, the nilradical is
generated by ``rad(m)``, and ``D(x)`` is the set of primes where ``x`` is
a unit.  Idempotents are exactly the CRT lifts of 0/1 choices per
prime-power component, so every idempotent the proofs ask for can be
written down exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import NamedTuple

from .rings import ExactRing, IntegerRing, ResidueRing


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, u, v)`` with ``u*a + v*b = g = gcd(a, b) >= 0``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


class BezoutTriple(NamedTuple):
    d: int
    a1: int
    b1: int
    u: int
    v: int


@dataclass(frozen=True)
class HermiteCertificate:
    """``a = d*a1``, ``b = d*b1`` and ``u*a1 + v*b1 = 1``."""

    d: int
    a1: int
    b1: int
    u: int
    v: int


@dataclass(frozen=True)
class AdequateFactorization:
    """``a = r*s`` with ``(r, b) = R``; ``e`` is the idempotent with ``D(e) = D(b)``."""

    r: int
    s: int
    e: int


def _require_finite(ring, what: str) -> ResidueRing:
    if not isinstance(ring, ResidueRing):
        raise TypeError(f"{what} needs a finite ring Z/m or a product of residue rings")
    return ring


def bezout_triple(ring: ExactRing, a: int, b: int) -> BezoutTriple:
    """``a = d*a1``, ``b = d*b1``, ``u*a + v*b = d``.

    ``d`` is the integer gcd of the canonical representatives.  The
    cofactors are made deterministic: ``u`` is reduced modulo ``b/d`` and,
    in ``Z/m``, ``v`` is the least residue that still works.
    """
    a, b = ring.normalize(a), ring.normalize(b)
    if a == 0 and b == 0:
        return BezoutTriple(0, 1, 1, 0, 0)
    d, u, v = ext_gcd(a, b)
    a1, b1 = a // d, b // d
    if b1:
        u_red = u % abs(b1)
        t = (u - u_red) // b1
        u, v = u_red, v + t * a1
    if isinstance(ring, ResidueRing):
        v %= ring.m // _gcd(b, ring.m)
    n = ring.normalize
    return BezoutTriple(n(d), n(a1), n(b1), n(u), n(v))


def _gcd(x: int, y: int) -> int:
    while y:
        x, y = y, x % y
    return abs(x)


def idempotents(ring: ResidueRing) -> list[int]:
    ring = _require_finite(ring, "idempotents")
    return sorted(ring.crt(bits) for bits in product((0, 1), repeat=len(ring.components)))


def support_idempotent(ring: ResidueRing, b: int) -> int:
    """The idempotent ``e`` with ``D(e) = D(b)``: 1 on each component where
    ``b`` is a unit, 0 where it is not."""
    ring = _require_finite(ring, "support_idempotent")
    return ring.crt([1 if b % p else 0 for p, _, _ in ring.components])


def _nil_colon_trivial(ring: ExactRing, c: int) -> bool:
    """Decide ``(N : c) = N`` for the nilradical N.

    In Z/m, ``rc`` is nilpotent iff ``r`` is, exactly when ``c`` avoids every
    prime ``(p)``, i.e. when ``c`` is a unit.  In Z, ``N = 0``.
    """
    if isinstance(ring, IntegerRing):
        return c != 0
    return ring.is_unit(c)


def hermite_pair(ring: ExactRing, a: int, b: int) -> HermiteCertificate:
    """Factor ``a = d*a1``, ``b = d*b1`` with ``a1``, ``b1`` comaximal.

    First a Bezout triple with cofactors ``m, n`` and ``c = m*a1 + n*b1``.
    If ``(N : c) != N``, the idempotent ``e`` with ``(0 : c) = (1-e)`` modulo
    N moves the pair to ``a1*e``, ``b1*e + (1-e)`` (same ``d``), after which
    ``(N : c) = N``.  A second Bezout round on the cofactors then yields a
    unit combination.
    """
    a, b = ring.normalize(a), ring.normalize(b)
    if b == 0:
        return HermiteCertificate(a, 1, 0, 1, 0)
    if a == 0:
        return HermiteCertificate(b, 0, 1, 0, 1)
    d, a1, b1, m, n = bezout_triple(ring, a, b)
    mul, add = ring.mul, ring.add
    c = add(mul(m, a1), mul(n, b1))
    if not _nil_colon_trivial(ring, c):
        e = support_idempotent(ring, c)
        f = ring.sub(1, e)
        a1, b1 = mul(a1, e), add(mul(b1, e), f)
        m, n = mul(m, e), add(mul(n, e), f)
        c = add(mul(m, a1), mul(n, b1))
        if not _nil_colon_trivial(ring, c):
            raise ArithmeticError(f"idempotent correction failed for {a}, {b} in {ring}")
    d2, a2, b2, m2, n2 = bezout_triple(ring, a1, b1)
    w = add(mul(m2, a2), mul(n2, b2))
    if not ring.is_unit(w):
        raise ArithmeticError(f"second Bezout round left a nonunit {w} in {ring}")
    winv = ring.inverse(w)
    return HermiteCertificate(mul(d, d2), a2, b2, mul(m2, winv), mul(n2, winv))


def adequate_factor(ring: ResidueRing, a: int, b: int) -> AdequateFactorization:
    """``a = r*s`` with ``(r, b) = R`` and every nonunit divisor of ``s``
    sharing a maximal ideal with ``b``.

    With ``D(b) = D(e)``: ``r = (1-e) + a*e`` and ``s = a*(1-e) + e``.
    """
    ring = _require_finite(ring, "adequate_factor")
    a, b = ring.normalize(a), ring.normalize(b)
    if a == 0:
        raise ValueError("adequate factorization needs a != 0")
    e = support_idempotent(ring, b)
    f = ring.sub(1, e)
    r = ring.add(f, ring.mul(a, e))
    s = ring.add(ring.mul(a, f), e)
    return AdequateFactorization(r, s, e)


def gh_witness(ring: ResidueRing, a: int, b: int, c: int) -> tuple[int, int]:
    """``(p, q)`` with ``(p*a, p*b + q*c) = R`` for a unimodular ``(a, b, c)``.

    Take ``p = 1``.  Where ``(a, b)`` is already the unit ideal ``q = 0``
    works; elsewhere (a local component where a and b are nonunits) c must
    be a unit and ``q = 1`` works.  So ``q = 1 - e`` with ``D(e) = D(gcd(a, b))``
    is a witness; we return the least ``q`` not exceeding it.
    """
    ring = _require_finite(ring, "gh_witness")
    a, b, c = (ring.normalize(x) for x in (a, b, c))
    if not ring.unit_ideal(a, b, c):
        raise ValueError(f"({a}, {b}, {c}) does not generate {ring}")
    d = bezout_triple(ring, a, b).d
    q0 = ring.sub(1, support_idempotent(ring, d))
    for q in range(q0 + 1):
        if ring.unit_ideal(a, b + q * c):
            return 1, q
    # not reached for Z/m; kept so a wrong construction cannot go unnoticed
    for p, q in product(ring.elements(), repeat=2):
        if ring.unit_ideal(p * a, p * b + q * c):
            return p, q
    raise ArithmeticError(f"no witness for ({a}, {b}, {c}) in {ring}")


@dataclass(frozen=True)
class MinPrimeReport:
    unique: bool
    condition2: bool
    # (d, x) with d outside J(R), x in (0 : d), x outside J(R)
    witness: tuple[int, int] | None = None


def unique_min_prime_report(ring: ResidueRing) -> MinPrimeReport:
    """Compare "one minimal prime" with "(0:d) lies in J(R) for all d outside J(R)".

    The first is read off the factorization; the second is checked over all
    pairs.  They must agree.
    """
    ring = _require_finite(ring, "unique_min_prime_report")
    m, rad = ring.m, ring.radical
    unique = ring.is_local
    outside = [x for x in range(m) if x % rad]
    witness = None
    for x in outside:
        for d in outside:
            if d * x % m == 0:
                witness = (d, x)
                break
        if witness:
            break
    report = MinPrimeReport(unique, witness is None, witness)
    if report.unique != report.condition2:
        raise AssertionError(f"minimal-prime criteria disagree for {ring}: {report}")
    return report


def _valuation(x: int, p: int, cap: int) -> int:
    v = 0
    while v < cap and x % p == 0:
        x //= p
        v += 1
    return v


def canonical_form(ring: ResidueRing, entries: list[int]) -> list[int]:
    """Rewrite ``R/a_1 + ... + R/a_n`` as ``R/I_1 + ... + R/I_k`` with
    ``I_1 <= ... <= I_k != R``.

    Returns canonical generators of the ``I_j`` (0 for the zero ideal).
    Works prime by prime: the p-parts of the summands are cyclic of orders
    ``p**v``, regrouped largest with largest.
    """
    ring = _require_finite(ring, "canonical_form")
    entries = [ring.normalize(a) for a in entries]
    for a in entries:
        if ring.is_unit(a):
            raise ValueError(f"{a} is a unit: R/aR = 0 is not allowed")
    columns = []
    for p, e, _ in ring.components:
        vals = sorted((_valuation(a, p, e) if a else e for a in entries), reverse=True)
        columns.append([v for v in vals if v])
    length = max((len(c) for c in columns), default=0)
    gens = []
    for j in range(length):
        g = 1
        for (p, _, _), col in zip(ring.components, columns):
            if j < len(col):
                g *= p ** col[j]
        gens.append(g % ring.m)
    return gens
