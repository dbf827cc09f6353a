"""Exact rings: the integers, Z/m, and products of residue rings.

Elements are plain Python ints in canonical form: any integer for ``Z``,
a residue in ``[0, m)`` otherwise.  A product ``Z/m1 x ... x Z/mk`` of
pairwise coprime moduli is identified with ``Z/(m1...mk)`` through the
Chinese remainder theorem, so every finite ring here is some ``Z/m``
carrying its prime factorization.
"""

from __future__ import annotations

from functools import cached_property
from math import gcd, prod
from typing import Iterator, Mapping

from sympy import factorint, isprime


class IntegerRing:
    finite = False

    def normalize(self, x: int) -> int:
        return int(x)

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def is_unit(self, x: int) -> bool:
        return x in (1, -1)

    def inverse(self, x: int) -> int:
        if not self.is_unit(x):
            raise ZeroDivisionError(f"{x} is not a unit of Z")
        return x

    def unit_ideal(self, *xs: int) -> bool:
        """Do the ``xs`` generate the whole ring?"""
        return gcd(*xs) == 1

    def divides(self, x: int, y: int) -> bool:
        return y == 0 if x == 0 else y % x == 0

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("Z")

    def __str__(self):
        return "Z"

    __repr__ = __str__


class ResidueRing:
    """``Z/m`` together with the factorization of ``m``."""

    finite = True

    def __init__(self, m: int, factorization: Mapping[int, int]):
        if m < 2:
            raise ValueError("modulus must be >= 2")
        fac = {int(p): int(e) for p, e in factorization.items() if e}
        if prod(p**e for p, e in fac.items()) != m:
            raise ValueError(f"factorization {fac} does not multiply to {m}")
        if not all(isprime(p) and e > 0 for p, e in fac.items()):
            raise ValueError(f"factorization {fac} is not into primes")
        self.m = m
        self.factorization = dict(sorted(fac.items()))

    @classmethod
    def of(cls, m: int) -> ResidueRing:
        return cls(m, factorint(m))

    # -- arithmetic --------------------------------------------------------------

    def normalize(self, x: int) -> int:
        return int(x) % self.m

    def add(self, x, y):
        return (x + y) % self.m

    def sub(self, x, y):
        return (x - y) % self.m

    def mul(self, x, y):
        return (x * y) % self.m

    def neg(self, x):
        return (-x) % self.m

    def is_unit(self, x: int) -> bool:
        return gcd(x, self.m) == 1

    def inverse(self, x: int) -> int:
        return pow(x, -1, self.m)

    def unit_ideal(self, *xs: int) -> bool:
        return gcd(self.m, *xs) == 1

    def divides(self, x: int, y: int) -> bool:
        return y % gcd(x, self.m) == 0

    def elements(self) -> Iterator[int]:
        return iter(range(self.m))

    # -- prime-power components ----------------------------------------------------

    @cached_property
    def components(self) -> tuple[tuple[int, int, int], ...]:
        """``(p, e, p**e)`` for each prime dividing m."""
        return tuple((p, e, p**e) for p, e in self.factorization.items())

    @cached_property
    def crt_basis(self) -> tuple[int, ...]:
        """Idempotents ``E_i`` with ``E_i = 1 mod q_i`` and ``0 mod q_j``."""
        out = []
        for _, _, q in self.components:
            rest = self.m // q
            out.append(rest * pow(rest, -1, q) % self.m)
        return tuple(out)

    def crt(self, residues) -> int:
        return sum(r * e for r, e in zip(residues, self.crt_basis)) % self.m

    def split(self, x: int) -> tuple[int, ...]:
        return tuple(x % q for _, _, q in self.components)

    @cached_property
    def radical(self) -> int:
        return prod(self.factorization)

    @property
    def is_local(self) -> bool:
        return len(self.factorization) == 1

    def spec(self) -> str:
        return f"Z/{self.m}"

    def __eq__(self, other):
        return isinstance(other, ResidueRing) and other.m == self.m

    def __hash__(self):
        return hash(("Z/", self.m))

    def __str__(self):
        return self.spec()

    __repr__ = __str__


class ProductRing(ResidueRing):
    """``Z/m1 x ... x Z/mk`` with pairwise coprime moduli, stored as
    ``Z/(m1*...*mk)``.  Elements convert with :meth:`split_product` and
    :meth:`join_product`."""

    def __init__(self, parts: list[ResidueRing]):
        if not parts:
            raise ValueError("empty product")
        for i, a in enumerate(parts):
            for b in parts[i + 1 :]:
                if gcd(a.m, b.m) != 1:
                    raise ValueError(f"{a} and {b} are not independent (moduli share a factor)")
        fac: dict[int, int] = {}
        for r in parts:
            fac.update(r.factorization)
        super().__init__(prod(r.m for r in parts), fac)
        self.parts = tuple(parts)

    def split_product(self, x: int) -> tuple[int, ...]:
        return tuple(x % r.m for r in self.parts)

    def join_product(self, xs) -> int:
        total = 0
        for x, r in zip(xs, self.parts):
            rest = self.m // r.m
            total += x * rest * pow(rest, -1, r.m)
        return total % self.m

    def spec(self) -> str:
        return "x".join(r.spec() for r in self.parts)


ExactRing = IntegerRing | ResidueRing


def parse_ring(text: str) -> ExactRing:
    """``Z``, ``Z/<m>`` or ``Z/<m1>xZ/<m2>x...``."""
    text = text.strip()
    if text == "Z":
        return IntegerRing()
    parts = []
    for piece in text.split("x"):
        if not piece.startswith("Z/") or not piece[2:].isdigit():
            raise ValueError(f"malformed ring spec {text!r}: expected Z, Z/<m> or Z/<m>xZ/<n>...")
        m = int(piece[2:])
        if m < 2:
            raise ValueError(f"malformed ring spec {text!r}: modulus must be >= 2")
        parts.append(ResidueRing.of(m))
    if len(parts) == 1:
        return parts[0]
    return ProductRing(parts)
