"""Brute-force verifiers.

Everything here works from definitions only: ideals of ``Z/m`` are
enumerated as sets of multiples, determinants are expanded by permutations,
and cut membership is read straight off a cut's boundary.  None of the
algorithms under test are called to decide a verdict; they are only the
thing being checked.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field, is_dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .exact.rings import ExactRing, IntegerRing, ResidueRing
from .function_ring import FunElement, SRingQuotient, SubmoduleDescriptor, ann_cyclic, desc_fg_mod, desc_member
from .valuation import Cut, CutVariant, GroupElement, GroupKind, ValElement, cut_fg_mod, cut_quotient, cut_sum
from .valuation.cuts import cut_intersection

MAX_ENUMERATION = 10_000


class MalformedCertificate(ValueError):
    pass


@dataclass
class OracleReport:
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, inputs, expected, got) -> None:
        self.checked += 1
        if not ok:
            self.failures.append((_show(inputs), _show(expected), _show(got)))

    def merge(self, other: OracleReport) -> OracleReport:
        self.checked += other.checked
        self.failures.extend(other.failures)
        return self

    def to_json(self) -> dict:
        return {
            "checked": self.checked,
            "passed": self.passed,
            "failures": [{"input": i, "expected": e, "got": g} for i, e, g in self.failures],
        }

    def __str__(self) -> str:
        head = f"{'pass' if self.passed else 'FAIL'}: {self.checked} checks, {len(self.failures)} failures"
        lines = [head] + [f"  {i}: expected {e}, got {g}" for i, e, g in self.failures[:10]]
        return "\n".join(lines)


def _show(x) -> str:
    if isinstance(x, (tuple, list)):
        return "(" + ", ".join(_show(y) for y in x) + ")"
    return str(x)


# -- finite rings by enumeration -------------------------------------------------------


class IdealTable:
    """Ideals of ``Z/m`` as explicit sets.

    Principal ideals are the sets of multiples; sums are formed element by
    element and registered as they appear, so nothing here assumes the ring
    is Bezout.
    """

    def __init__(self, m: int):
        if m > MAX_ENUMERATION:
            raise ValueError(f"Z/{m} is too large to enumerate (limit {MAX_ENUMERATION})")
        self.m = m
        self._by_set: dict[frozenset, int] = {}
        self.ideals: list[frozenset] = []
        self.id_of = [self._register(frozenset(x * r % m for r in range(m))) for x in range(m)]
        self.unit_id = self.id_of[1]
        self._sums: dict[tuple[int, int], int] = {}
        self._above: dict[int, list[int]] = {}

    def _register(self, s: frozenset) -> int:
        if s not in self._by_set:
            self._by_set[s] = len(self.ideals)
            self.ideals.append(s)
        return self._by_set[s]

    def sum_id(self, i: int, j: int) -> int:
        key = (min(i, j), max(i, j))
        if key not in self._sums:
            m = self.m
            self._sums[key] = self._register(frozenset((x + y) % m for x in self.ideals[i] for y in self.ideals[j]))
        return self._sums[key]

    def ideal(self, x: int) -> frozenset:
        return self.ideals[self.id_of[x % self.m]]

    def is_unit(self, x: int) -> bool:
        return 1 in self.ideal(x)

    def generates(self, *xs: int) -> bool:
        """Is 1 in the ideal generated by ``xs``?"""
        acc = self.id_of[0]
        for x in xs:
            acc = self.sum_id(acc, self.id_of[x % self.m])
        return 1 in self.ideals[acc]

    def comaximal(self, x: int, y: int) -> bool:
        return self.generates(x, y)

    def divides(self, x: int, y: int) -> bool:
        return y % self.m in self.ideal(x)

    def multiples_above(self, x: int) -> list[int]:
        """Elements ``s'`` with ``s' | x``, one per principal ideal."""
        i = self.id_of[x % self.m]
        if i not in self._above:
            small = self.ideals[i]
            seen, out = set(), []
            for y in range(self.m):
                j = self.id_of[y]
                if j not in seen and small <= self.ideals[j]:
                    seen.add(j)
                    out.append(y)
            self._above[i] = out
        return self._above[i]


@lru_cache(maxsize=64)
def ideal_table(m: int) -> IdealTable:
    return IdealTable(m)


def _finite(ring) -> ResidueRing:
    if not isinstance(ring, ResidueRing):
        raise TypeError("this check needs a finite ring")
    return ring


def brute_annihilator(ring: ResidueRing, a: int) -> frozenset[int]:
    """``{x : a*x = 0}`` by enumeration."""
    m = _finite(ring).m
    if m > MAX_ENUMERATION:
        raise ValueError(f"Z/{m} is too large to enumerate")
    return frozenset(x for x in range(m) if a * x % m == 0)


def determinant(a) -> int:
    """Leibniz expansion, exact over Z."""
    n = len(a)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i, j in enumerate(perm):
            term *= a[i][j]
            if not term:
                break
        total += term
    return total


def _mat_product(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


# -- certificate verification -----------------------------------------------------------


def _as_tuple(cert, names: tuple[str, ...]) -> tuple[int, ...]:
    if is_dataclass(cert):
        cert = asdict(cert)
    if isinstance(cert, dict):
        try:
            cert = [cert[n] for n in names]
        except KeyError as exc:
            raise MalformedCertificate(f"certificate lacks field {exc}") from None
    try:
        vals = tuple(cert)[: len(names)]
    except TypeError:
        raise MalformedCertificate(f"cannot read certificate {cert!r}") from None
    if len(vals) != len(names) or not all(isinstance(v, int) for v in vals):
        raise MalformedCertificate(f"expected integers {names}, got {cert!r}")
    return vals


def _verify_hermite(ring, inputs, cert, report):
    a, b = inputs
    d, a1, b1, u, v = _as_tuple(cert, ("d", "a1", "b1", "u", "v"))
    if isinstance(ring, IntegerRing):
        eq = lambda x, y: x == y  # noqa: E731
    else:
        eq = lambda x, y: (x - y) % ring.m == 0  # noqa: E731
    where = (str(ring), a, b)
    report.check(eq(a, d * a1), where, f"a = d*a1", (d, a1))
    report.check(eq(b, d * b1), where, f"b = d*b1", (d, b1))
    report.check(eq(u * a1 + v * b1, 1), where, "u*a1 + v*b1 = 1", u * a1 + v * b1)


def _verify_adequate(ring, inputs, cert, report):
    t = ideal_table(_finite(ring).m)
    a, b = inputs
    r, s = _as_tuple(cert, ("r", "s"))
    where = (str(ring), a, b)
    report.check(a % t.m != 0, where, "a != 0", a)
    report.check((r * s - a) % t.m == 0, where, "a = r*s", (r, s))
    report.check(t.comaximal(r, b), where, "(r, b) = R", (r, b))
    bad = [d for d in t.multiples_above(s) if not t.is_unit(d) and t.comaximal(d, b)]
    report.check(not bad, where, "(s', b) != R for nonunit s' | s", f"comaximal divisors {bad}")


def _read_matrix(m, what) -> list[list[int]]:
    try:
        rows = [list(r) for r in m]
    except TypeError:
        raise MalformedCertificate(f"{what} is not a matrix") from None
    if not rows or not rows[0] or any(len(r) != len(rows[0]) for r in rows):
        raise MalformedCertificate(f"{what} is not rectangular")
    if not all(isinstance(x, int) for r in rows for x in r):
        raise MalformedCertificate(f"{what} has non-integer entries")
    return rows


def _verify_smith(ring, inputs, cert, report):
    if is_dataclass(cert):
        cert = asdict(cert)
    if not isinstance(cert, dict) or not {"P", "D", "Q"} <= set(cert):
        raise MalformedCertificate("smith certificate needs P, D, Q")
    a = _read_matrix(inputs, "A")
    p, d, q = (_read_matrix(cert[k], k) for k in ("P", "D", "Q"))
    n, w = len(a), len(a[0])
    shapes = (len(p), len(p[0]), len(d), len(d[0]), len(q), len(q[0]))
    if shapes != (n, n, n, w, w, w):
        raise MalformedCertificate(f"sizes {shapes} do not fit a {n}x{w} matrix")
    finite = isinstance(ring, ResidueRing)
    red = (lambda x: x % ring.m) if finite else (lambda x: x)
    where = (str(ring), a)
    pad = [[red(x) for x in row] for row in _mat_product(_mat_product(p, a), q)]
    report.check(pad == [[red(x) for x in row] for row in d], where, "P*A*Q = D", pad)
    off = [(i, j) for i in range(n) for j in range(w) if i != j and red(d[i][j])]
    report.check(not off, where, "D diagonal", off)
    if finite:
        t = ideal_table(ring.m)
        unit, div = t.is_unit, t.divides
    else:
        unit = lambda x: x in (1, -1)  # noqa: E731
        div = lambda x, y: y == 0 if x == 0 else y % x == 0  # noqa: E731
    for name, mat in (("P", p), ("Q", q)):
        det = determinant(mat)
        report.check(unit(det), where, f"det {name} a unit", det)
    diag = [d[i][i] for i in range(min(n, w))]
    for x, y in zip(diag, diag[1:]):
        report.check(div(x, y), where, f"{x} | {y}", diag)


def _torsion_count(t: IdealTable, a: int, r: int) -> int:
    """Number of elements of ``R/aR`` killed by ``r``."""
    ideal = t.ideal(a)
    return sum(1 for x in range(t.m) if r * x % t.m in ideal) // len(ideal)


def _verify_canonical(ring, inputs, cert, report):
    t = ideal_table(_finite(ring).m)
    try:
        gens = [int(g) for g in cert]
    except (TypeError, ValueError):
        raise MalformedCertificate(f"canonical form must be a list of generators, got {cert!r}") from None
    where = (str(ring), list(inputs))
    for g in gens:
        report.check(not t.is_unit(g), where, "proper ideals", g)
    for g, h in zip(gens, gens[1:]):
        report.check(t.ideal(g) <= t.ideal(h), where, f"{g}R <= {h}R", gens)
    for r in range(t.m):
        lhs = rhs = 1
        for a in inputs:
            lhs *= _torsion_count(t, a, r)
        for g in gens:
            rhs *= _torsion_count(t, g, r)
        report.check(lhs == rhs, where, f"r={r} torsion {lhs}", rhs)


def _verify_gh(ring, inputs, cert, report):
    t = ideal_table(_finite(ring).m)
    a, b, c = inputs
    p, q = _as_tuple(cert, ("p", "q"))
    where = (str(ring), a, b, c)
    report.check(t.generates(a, b, c), where, "unimodular input", (a, b, c))
    report.check(t.generates(p * a, p * b + q * c), where, "(pa, pb+qc) = R", (p, q))


_VERIFIERS = {
    "hermite": _verify_hermite,
    "adequate": _verify_adequate,
    "smith": _verify_smith,
    "canonical": _verify_canonical,
    "gh": _verify_gh,
}


def verify_certificate(kind: str, ring: ExactRing, inputs, certificate) -> OracleReport:
    """Re-check a certificate by direct multiplication and enumeration."""
    if kind not in _VERIFIERS:
        raise ValueError(f"unknown certificate kind {kind!r}; expected one of {sorted(_VERIFIERS)}")
    report = OracleReport()
    _VERIFIERS[kind](ring, inputs, certificate, report)
    return report


# -- cuts by definition -------------------------------------------------------------------


def in_cut(g: GroupElement, c: Cut) -> bool:
    """Membership read off the boundary, without the library's case analysis."""
    v = c.variant
    if v is CutVariant.FULL:
        return True
    if v is CutVariant.ZERO:
        return False
    if g.kind is not c.kind:
        raise TypeError(f"value group mismatch: {g.kind} vs {c.kind}")
    # tuples compare lexicographically, which is the order of every group here
    if v is CutVariant.CLOSED:
        return g.coords >= c.bound.coords
    if v is CutVariant.OPEN:
        return g.coords > c.bound.coords
    return g.coords[0] >= c.row


_EPS = {
    GroupKind.DISCRETE_Z: (1,),
    GroupKind.DENSE_Q: (Fraction(1, 32),),
    GroupKind.LEX_Z2: (0, 1),
}


def random_value(kind: GroupKind, rng: random.Random, hi: int = 8) -> GroupElement:
    """A value in the cone, coordinates within ``[-hi, hi]``, denominators <= 16."""
    if kind is GroupKind.DISCRETE_Z:
        return GroupElement.of(kind, rng.randint(0, hi))
    if kind is GroupKind.DENSE_Q:
        den = rng.randint(1, 16)
        return GroupElement.of(kind, Fraction(rng.randint(0, hi * den), den))
    a = rng.randint(0, hi)
    return GroupElement.of(kind, a, rng.randint(-hi if a else 0, hi))


def random_cut(kind: GroupKind, rng: random.Random) -> Cut:
    choices = ["zero", "full", "closed", "closed", "open", "open"]
    if kind is GroupKind.LEX_Z2:
        choices += ["row", "row"]
    pick = rng.choice(choices)
    if pick == "zero":
        return Cut.zero(kind)
    if pick == "full":
        return Cut.full(kind)
    if pick == "row":
        return Cut.row_cut(rng.randint(0, 8))
    v = random_value(kind, rng)
    return Cut.closed(v) if pick == "closed" else Cut.open(v)


def _grid(kind, rng, cuts) -> list[GroupElement]:
    eps = GroupElement.of(kind, *_EPS[kind])
    zero = GroupElement.zero(kind)
    pts = [random_value(kind, rng) for _ in range(2)] + [zero]
    for c in cuts:
        if c.bound is not None:
            pts += [c.bound, c.bound + eps]
            if c.bound - eps >= zero:
                pts.append(c.bound - eps)
        elif c.row is not None:
            pts += [GroupElement.of(kind, c.row, -8), GroupElement.of(kind, c.row - 1, 8)]
    return [p for p in pts if p >= zero]


def sample_cut_laws(kind: GroupKind, trials: int, seed: int) -> OracleReport:
    """Quotient composition, sum and intersection membership, and fg-transfer,
    compared pointwise on sampled membership grids."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    report = OracleReport()
    for _ in range(trials):
        c, c2 = random_cut(kind, rng), random_cut(kind, rng)
        g, h = random_value(kind, rng, 4), random_value(kind, rng, 4)
        cg, cgh = cut_quotient(c, g), cut_quotient(c, g + h)
        nested = cut_quotient(cg, h)
        where = (c, g, h)
        report.check(nested == cgh, where, cgh, nested)
        total, meet = cut_sum(c, c2), cut_intersection(c, c2)
        for x in _grid(kind, rng, (c, c2, cg, cgh)):
            in_c = in_cut(x, c)
            report.check(in_cut(x, cg) == in_cut(x + g, c), (*where, x), "quotient by definition", cg)
            report.check(in_cut(x, nested) == in_cut(x + g + h, c), (*where, x), "composition", nested)
            either = in_c or in_cut(x, c2)
            both = in_c and in_cut(x, c2)
            report.check(in_cut(x, total) == either, (c, c2, x), either, total)
            report.check(in_cut(x, meet) == both, (c, c2, x), both, meet)
        # fg-transfer: (A:g) and (A:g+h) are f.g. mod A together
        if c.is_full or in_cut(g, c) or in_cut(g + h, c) or cg == c:
            continue
        fg1, gen1 = cut_fg_mod(cg, c)
        fg2, _ = cut_fg_mod(cgh, c)
        report.check(fg1 == fg2, where, fg1, fg2)
        if gen1 is not None:
            for x in _grid(kind, rng, (c, cg)):
                spanned = x >= gen1 or in_cut(x, c)
                report.check(in_cut(x, cg) == spanned, (cg, gen1, x), spanned, "generator span")
    return report


# -- the function ring by definition --------------------------------------------------------


def _val_in(x: ValElement, c: Cut) -> bool:
    return x.is_zero or in_cut(x.value, c)


def in_descriptor(f: FunElement, d: SubmoduleDescriptor, window: int) -> bool:
    """Pointwise membership on the constant part and indices ``1..window``."""
    if not _val_in(f.default, d.const):
        return False
    return all(_val_in(f.at(n), d.cut_at(n)) for n in range(1, window + 1))


_SMALL_VALUES = {
    GroupKind.DISCRETE_Z: [(k,) for k in range(7)],
    GroupKind.DENSE_Q: [(Fraction(k, 4),) for k in range(13)] + [(1 + Fraction(1, 2**k),) for k in range(1, 6)],
    GroupKind.LEX_Z2: [(0, 0), (0, 1), (0, 2)] + [(a, b) for a in (1, 2) for b in range(-2, 3)],
}


def _random_element(kind, rng) -> ValElement:
    if rng.random() < 0.15:
        return ValElement.zero(kind)
    return ValElement.term(GroupElement.of(kind, *rng.choice(_SMALL_VALUES[kind])))


def random_fun_element(kind: GroupKind, rng: random.Random, window: int) -> FunElement:
    overrides = {rng.randint(1, window): _random_element(kind, rng) for _ in range(rng.randint(0, 3))}
    return FunElement.build(_random_element(kind, rng), overrides)


def sample_annihilator_consistency(ring: SRingQuotient, trials: int, seed: int, window: int = 40) -> OracleReport:
    """``f in ann(x)`` must agree with ``f*x in A`` checked pointwise.

    Sampled values are small, so every tail cut has settled well before
    ``window`` and the pointwise check covers all indices that matter.
    """
    rng = random.Random(seed)
    report = OracleReport()
    kind = ring.kind
    for _ in range(trials):
        x = random_fun_element(kind, rng, 8)
        f = random_fun_element(kind, rng, 8)
        if in_descriptor(x, ring.modulus, window):
            continue
        ann = ann_cyclic(ring, x)
        expected = in_descriptor(f * x, ring.modulus, window)
        report.check(desc_member(f, ann) == expected, (str(f), str(x)), expected, str(ann))
    return report


def _boundary_values(c: Cut) -> list[GroupElement]:
    """Values at (or, for unattained cuts, just above) the bottom of ``c``."""
    kind = c.kind
    if c.variant is CutVariant.ZERO:
        return []
    if c.variant is CutVariant.FULL:
        return [GroupElement.zero(kind)]
    if c.variant is CutVariant.CLOSED:
        return [c.bound]
    if c.variant is CutVariant.OPEN:
        return [c.bound + GroupElement.of(kind, Fraction(1, 2**k)) for k in (2, 6, 12, 24, 48)]
    return [GroupElement.of(kind, c.row, -(10**6))]


def _covered(value: GroupElement, a_cut: Cut, gen_values: list) -> bool:
    return in_cut(value, a_cut) or any(g is not None and value >= g for g in gen_values)


def _gen_value(g: FunElement, n: int | None):
    x = g.default if n is None else g.at(n)
    return None if x.is_zero else x.value


def fg_membership_oracle(
    b: SubmoduleDescriptor, a: SubmoduleDescriptor, trials: int, seed: int, window: int = 24
) -> OracleReport:
    """Cross-check ``desc_fg_mod(b, a)`` against explicit generator sets.

    An element ``f`` lies in ``A + S*g_1 + ... + S*g_k`` iff at the constant
    part and at every index its value lies in A's cut there or above some
    ``v(g_j)`` (coefficients in S may differ index by index).  When the
    verdict is f.g. the certificate's generators must cover random elements
    of B; otherwise random candidate sets drawn from B must each miss some
    element of B found among the bottom values of its cuts.
    """
    rng = random.Random(seed)
    report = OracleReport()
    fg, cert = desc_fg_mod(b, a)
    kind = b.kind
    if fg:
        gens = list(cert.generators)
        for g in gens:
            report.check(in_descriptor(g, b, window), str(g), "generator in B", False)
        probes = [(None, v) for v in _boundary_values(b.const)]
        probes += [(n, v) for n in range(1, window + 1) for v in _boundary_values(b.cut_at(n))]
        for _ in range(trials):
            n, v = rng.choice(probes)
            a_cut = a.const if n is None else a.cut_at(n)
            ok = _covered(v, a_cut, [_gen_value(g, n) for g in gens])
            report.check(ok, (n, str(v)), "covered by generators", [str(g) for g in gens])
        return report
    for _ in range(trials):
        cands = [_sample_in(b, rng, window) for _ in range(rng.randint(1, 3))]
        support = {n for g in cands for n in g.support}
        missed = False
        for v in _boundary_values(b.const):
            if not _covered(v, a.const, [_gen_value(g, None) for g in cands]):
                missed = True
        for n in range(1, window + 1):
            if missed:
                break
            for v in _boundary_values(b.cut_at(n)):
                if not _covered(v, a.cut_at(n), [_gen_value(g, n) for g in cands]):
                    missed = True
        report.check(missed, [str(g) for g in cands], "a missed element", f"nothing missed; support {sorted(support)}")
    return report


def _value_in(c: Cut, rng: random.Random) -> ValElement:
    kind = c.kind
    bottom = _boundary_values(c)
    if not bottom:
        return ValElement.zero(kind)
    return ValElement.term(rng.choice(bottom) + random_value(kind, rng, 2))


def _sample_in(d: SubmoduleDescriptor, rng: random.Random, window: int) -> FunElement:
    idx = set(rng.sample(range(1, window + 1), rng.randint(0, 3)))
    idx |= {n for n in d.override_indices if n <= window}
    return FunElement.build(_value_in(d.const, rng), {n: _value_in(d.cut_at(n), rng) for n in idx})


def report_json(report: OracleReport) -> str:
    return json.dumps(report.to_json(), indent=2)
