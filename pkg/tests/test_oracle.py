import json

import pytest

from ringforge.exact import parse_ring
from ringforge.oracle import (
    MalformedCertificate,
    OracleReport,
    brute_annihilator,
    determinant,
    ideal_table,
    in_cut,
    report_json,
    sample_cut_laws,
    verify_certificate,
)
from ringforge.valuation import Cut, GroupElement, GroupKind, KindMismatch

Z12 = parse_ring("Z/12")


def test_brute_annihilator_examples():
    assert brute_annihilator(Z12, 4) == frozenset({0, 3, 6, 9})
    assert brute_annihilator(Z12, 0) == frozenset(range(12))
    assert brute_annihilator(Z12, 5) == frozenset({0})


def test_ideal_table_of_z12():
    t = ideal_table(12)
    assert t.ideal(4) == frozenset({0, 4, 8})
    assert t.generates(4, 3) and not t.generates(4, 6)
    assert t.is_unit(5) and not t.is_unit(6)


def test_leibniz_determinant():
    assert determinant([[2, 4], [6, 8]]) == -8
    assert determinant([[1, 2, 3], [4, 5, 6], [7, 8, 10]]) == -3


def test_verify_smith_pass_and_fail():
    good = {"P": [[1, 0], [0, 1]], "D": [[4, 0], [0, 6]], "Q": [[1, 0], [0, 1]]}
    # not a divisibility chain: 4 does not divide 6 in Z/12
    assert not verify_certificate("smith", Z12, [[4, 0], [0, 6]], good).passed
    wrong = {"P": [[1, 0], [0, 1]], "D": [[2, 0], [0, 0]], "Q": [[1, 0], [0, 1]]}
    assert not verify_certificate("smith", Z12, [[4, 0], [0, 6]], wrong).passed
    eye = {"P": [[1, 0], [0, 1]], "D": [[1, 0], [0, 1]], "Q": [[1, 0], [0, 1]]}
    assert verify_certificate("smith", Z12, [[1, 0], [0, 1]], eye).passed


def test_verify_examples():
    assert verify_certificate("adequate", Z12, (2, 3), (10, 5)).passed
    assert verify_certificate("hermite", Z12, (4, 6), (2, 2, 3, 2, 3)).passed
    assert not verify_certificate("hermite", Z12, (4, 6), (2, 2, 3, 1, 1)).passed
    # (2,3) with s = 6: the divisor 3 of 6 still generates R with b
    assert not verify_certificate("adequate", Z12, (6, 3), (1, 6)).passed
    assert verify_certificate("gh", Z12, (4, 2, 3), (1, 1)).passed
    assert not verify_certificate("gh", Z12, (4, 2, 3), (0, 1)).passed
    assert verify_certificate("canonical", Z12, [4, 6], [0, 2]).passed
    assert not verify_certificate("canonical", Z12, [4, 6], [2]).passed


@pytest.mark.parametrize(
    "kind,cert",
    [
        ("smith", {"P": [[1]], "D": [[1]]}),
        ("smith", [[1, 2]]),
        ("hermite", (1, 2)),
        ("adequate", "x"),
        ("gh", (1,)),
    ],
)
def test_malformed_certificates(kind, cert):
    inputs = {"smith": [[1]], "hermite": (1, 1), "adequate": (1, 1), "gh": (1, 1, 1)}[kind]
    with pytest.raises(MalformedCertificate):
        verify_certificate(kind, Z12, inputs, cert)


def test_unknown_kind_is_rejected():
    with pytest.raises(ValueError):
        verify_certificate("nope", Z12, (1,), (1,))


def test_report_bookkeeping():
    r = OracleReport()
    r.check(True, "a", 1, 1)
    r.check(False, "b", 1, 2)
    assert r.checked == 2 and not r.passed
    assert json.loads(report_json(r))["failures"] == [{"input": "b", "expected": "1", "got": "2"}]


def test_in_cut_is_definitional():
    L = GroupKind.LEX_Z2
    assert in_cut(GroupElement.of(L, 1, -100), Cut.row_cut(1))
    assert not in_cut(GroupElement.of(L, 0, 100), Cut.row_cut(1))
    with pytest.raises((TypeError, KindMismatch)):
        in_cut(GroupElement.of(GroupKind.DISCRETE_Z, 1), Cut.row_cut(1))


@pytest.mark.parametrize("kind", list(GroupKind))
def test_cut_laws_seed_1(kind):
    report = sample_cut_laws(kind, 10_000, seed=1)
    assert report.passed, report.failures[:3]


def test_cut_laws_single_trial():
    assert sample_cut_laws(GroupKind.DISCRETE_Z, 1, seed=5).passed


def test_determinism():
    a = sample_cut_laws(GroupKind.DENSE_Q, 500, seed=7)
    b = sample_cut_laws(GroupKind.DENSE_Q, 500, seed=7)
    assert a.to_json() == b.to_json()
