import math
import random

import pytest

from ringforge.exact import (
    adequate_factor,
    bezout_triple,
    canonical_form,
    ext_gcd,
    gh_witness,
    hermite_pair,
    idempotents,
    parse_ring,
    smith_form,
    support_idempotent,
    unique_min_prime_report,
)
from ringforge.oracle import brute_annihilator, determinant, ideal_table, verify_certificate

Z12 = parse_ring("Z/12")


# --- ring specs ----------------------------------------------------------------


@pytest.mark.parametrize("spec,m", [("Z/12", 12), ("Z/4xZ/9", 36), ("Z/2xZ/3xZ/5", 30)])
def test_parse_finite_rings(spec, m):
    assert parse_ring(spec).m == m


@pytest.mark.parametrize("spec", ["Z/1", "Z/2xZ/2", "Q", "Z/x", "", "Z/12x"])
def test_malformed_ring_specs(spec):
    with pytest.raises(ValueError):
        parse_ring(spec)


# --- Bezout and idempotents ----------------------------------------------------


def test_bezout_examples():
    assert tuple(bezout_triple(Z12, 4, 6)) == (2, 2, 3, 2, 1)
    assert tuple(bezout_triple(Z12, 0, 0)) == (0, 1, 1, 0, 0)
    assert tuple(bezout_triple(Z12, 5, 7)) == (1, 5, 7, 3, 10)


@pytest.mark.parametrize("m", [2, 6, 8, 12, 30])
def test_bezout_identities_exhaustive(m):
    ring = parse_ring(f"Z/{m}")
    for a in range(m):
        for b in range(m):
            d, a1, b1, u, v = bezout_triple(ring, a, b)
            assert (d * a1 - a) % m == 0 and (d * b1 - b) % m == 0
            assert (u * a + v * b - d) % m == 0


def test_bezout_over_integers():
    rng = random.Random(0)
    ring = parse_ring("Z")
    for _ in range(500):
        a, b = rng.randint(-200, 200), rng.randint(-200, 200)
        d, a1, b1, u, v = bezout_triple(ring, a, b)
        assert d == math.gcd(a, b)
        if d:
            assert (d * a1, d * b1) == (a, b)
        assert u * a + v * b == d


def test_ext_gcd():
    g, u, v = ext_gcd(-12, 18)
    assert g == 6 and -12 * u + 18 * v == 6


@pytest.mark.parametrize("m", [6, 8, 12, 30, 36, 60, 97])
def test_idempotents_match_enumeration(m):
    want = sorted(e for e in range(m) if e * e % m == e)
    assert sorted(idempotents(parse_ring(f"Z/{m}"))) == want


def test_idempotent_examples():
    assert sorted(idempotents(Z12)) == [0, 1, 4, 9]
    assert sorted(idempotents(parse_ring("Z/8"))) == [0, 1]
    assert sorted(idempotents(parse_ring("Z/6"))) == [0, 1, 3, 4]


@pytest.mark.parametrize("m", [12, 30, 36])
def test_support_idempotent_is_one_exactly_where_b_is_a_unit(m):
    ring = parse_ring(f"Z/{m}")
    for b in range(m):
        e = support_idempotent(ring, b)
        assert e * e % m == e
        # b + (1 - e) is a unit and b(1 - e) is nilpotent
        assert math.gcd((b + 1 - e) % m, m) == 1
        assert pow(b * (1 - e) % m, m, m) == 0


# --- Hermite, adequate --------------------------------------------------------


def test_hermite_examples():
    h = hermite_pair(Z12, 4, 6)
    assert (h.d, h.a1, h.b1) == (2, 2, 3) and (h.u * h.a1 + h.v * h.b1) % 12 == 1
    h = hermite_pair(Z12, 8, 6)
    assert (h.d, h.a1, h.b1) == (2, 4, 3)
    h = hermite_pair(Z12, 5, 0)
    assert (h.d, h.a1, h.b1) == (5, 1, 0)


def test_hermite_oracle_examples():
    assert verify_certificate("hermite", Z12, (4, 6), hermite_pair(Z12, 4, 6)).passed
    assert verify_certificate("hermite", Z12, (4, 6), (2, 2, 3, 2, 3)).passed


def test_hermite_over_integers():
    ring = parse_ring("Z")
    rng = random.Random(1)
    for _ in range(500):
        a, b = rng.randint(-100, 100), rng.randint(-100, 100)
        h = hermite_pair(ring, a, b)
        assert (h.d * h.a1, h.d * h.b1) == (a, b)
        assert h.u * h.a1 + h.v * h.b1 == 1


def test_hermite_on_product_ring():
    ring = parse_ring("Z/4xZ/9")
    for a in range(0, 36, 5):
        for b in range(36):
            assert verify_certificate("hermite", ring, (a, b), hermite_pair(ring, a, b)).passed


def test_adequate_examples():
    def triple(a, b):
        f = adequate_factor(Z12, a, b)
        return f.r, f.s, f.e

    assert triple(2, 3) == (10, 5, 9)
    assert triple(4, 2) == (1, 4, 4)
    assert triple(7, 5) == (7, 1, 1)
    assert verify_certificate("adequate", Z12, (2, 3), (10, 5)).passed


def test_adequate_rejects_zero():
    with pytest.raises(ValueError):
        adequate_factor(Z12, 0, 3)


# --- Smith ----------------------------------------------------------------------


def test_smith_examples():
    cert = smith_form(parse_ring("Z"), [[2, 4], [6, 8]])
    assert [cert.D[i][i] for i in range(2)] == [2, 4]
    eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    cert = smith_form(parse_ring("Z"), eye)
    assert [list(r) for r in cert.P] == eye and [list(r) for r in cert.Q] == eye
    cert = smith_form(Z12, [[4, 0], [0, 6]])
    assert [cert.D[i][i] for i in range(2)] == [2, 0]


def test_smith_integer_invariants_by_minors():
    # d1 = gcd of entries, d1*d2 = |det| for 2x2 integer matrices
    rng = random.Random(2)
    ring = parse_ring("Z")
    for _ in range(200):
        a = [[rng.randint(-30, 30) for _ in range(2)] for _ in range(2)]
        cert = smith_form(ring, a)
        d1, d2 = cert.D[0][0], cert.D[1][1]
        assert d1 == math.gcd(*a[0], *a[1])
        assert d1 * d2 == abs(determinant(a))


@pytest.mark.parametrize("spec", ["Z/12", "Z/16", "Z/360", "Z/4xZ/9", "Z/7"])
def test_smith_oracle_random(spec):
    ring = parse_ring(spec)
    rng = random.Random(3)
    for _ in range(100):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        a = [[rng.randrange(ring.m) for _ in range(cols)] for _ in range(rows)]
        report = verify_certificate("smith", ring, a, smith_form(ring, a))
        assert report.passed, report.failures


def test_smith_rejects_ragged_matrix():
    with pytest.raises(ValueError):
        smith_form(Z12, [[1, 2], [3]])


# --- canonical form -------------------------------------------------------------


def test_canonical_examples():
    assert canonical_form(Z12, [4, 6]) == [0, 2]
    assert canonical_form(Z12, [4]) == [4]
    assert canonical_form(parse_ring("Z/6"), [2, 3]) == [0]


def test_canonical_oracle_exhaustive_pairs():
    for m in (12, 30, 36):
        ring = parse_ring(f"Z/{m}")
        nonunits = [x for x in range(m) if math.gcd(x, m) != 1]
        for x in nonunits:
            for y in nonunits:
                report = verify_certificate("canonical", ring, [x, y], canonical_form(ring, [x, y]))
                assert report.passed, report.failures


def test_canonical_rejects_units():
    with pytest.raises(ValueError):
        canonical_form(Z12, [5])


# --- GH witness and minimal primes -----------------------------------------------


@pytest.mark.parametrize("triple,want", [((3, 4, 0), (1, 0)), ((4, 2, 3), (1, 1)), ((2, 3, 0), (1, 0))])
def test_gh_examples(triple, want):
    assert tuple(gh_witness(Z12, *triple)) == want


def test_gh_witness_generates():
    table = ideal_table(12)
    p, q = gh_witness(Z12, 4, 2, 3)
    assert table.generates(p * 4 % 12, (p * 2 + q * 3) % 12)


def test_gh_rejects_non_unimodular():
    with pytest.raises(ValueError):
        gh_witness(Z12, 2, 4, 0)


def test_minprime_examples():
    r8 = unique_min_prime_report(parse_ring("Z/8"))
    assert r8.unique and r8.condition2
    r12 = unique_min_prime_report(Z12)
    assert not r12.unique and r12.witness == (4, 3)
    assert 3 in brute_annihilator(Z12, 4)
    assert unique_min_prime_report(parse_ring("Z/7")).unique


@pytest.mark.parametrize("m", range(2, 61))
def test_unique_min_prime_iff_prime_power(m):
    # Z/m has a unique minimal prime exactly when m is a prime power
    primes = [p for p in range(2, m + 1) if m % p == 0 and all(p % q for q in range(2, p))]
    assert unique_min_prime_report(parse_ring(f"Z/{m}")).unique == (len(primes) == 1)
