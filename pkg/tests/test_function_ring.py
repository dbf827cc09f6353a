import json
from fractions import Fraction

import pytest

from ringforge.function_ring import (
    EXAMPLE_NAMES,
    Arithmetic,
    FunElement,
    GeometricToLimit,
    SubmoduleDescriptor,
    Uniform,
    ann_cyclic,
    build_named_example,
    desc_contains,
    desc_equal,
    desc_fg_mod,
    desc_member,
    descriptor_from_json,
    descriptor_to_json,
    element_from_json,
    element_to_json,
    jacobson_descriptor,
    lambda_cyclic_S,
    ring_from_json,
    ring_to_json,
)
from ringforge.oracle import fg_membership_oracle, in_descriptor, sample_annihilator_consistency
from ringforge.valuation import Cut, GroupElement, GroupKind, ValElement

Z, Q, L = GroupKind.DISCRETE_Z, GroupKind.DENSE_Q, GroupKind.LEX_Z2


def g(kind, *c):
    return GroupElement.of(kind, *c)


def term(kind, *c):
    return ValElement.term(g(kind, *c))


@pytest.fixture(scope="module")
def examples():
    return {name: build_named_example(name) for name in EXAMPLE_NAMES}


def test_named_moduli(examples):
    dim3 = examples["dim3"].ring.modulus
    assert dim3 == SubmoduleDescriptor.build(Cut.closed(g(L, 1, 1)), Uniform(Cut.row_cut(1)))
    reduced = examples["reduced"].ring.modulus
    assert reduced == SubmoduleDescriptor.build(Cut.zero(L), Uniform(Cut.closed(g(L, 0, 1))))
    nc = examples["noncoherent"].ring.modulus
    for n in range(1, 10):
        assert nc.cut_at(n) == Cut.closed(g(Q, 1 + Fraction(1, 2**n)))
    padic = examples["padic"].ring.modulus
    for n in range(1, 10):
        assert padic.cut_at(n) == Cut.closed(g(Z, n))


def test_dim3_membership(examples):
    ex = examples["dim3"]
    a1, b1 = ex.elements["a1"], ex.elements["b1"]
    A = ex.ring.modulus
    assert desc_member(a1 * b1, A)
    assert not desc_member(b1, A)
    assert desc_member(FunElement.basis(1, ex.elements["b"]), A)


def test_dim3_annihilators(examples):
    ex = examples["dim3"]
    R = ex.ring
    ann_a = ann_cyclic(R, ex.elements["a1"])
    assert ann_a == SubmoduleDescriptor.build(Cut.closed(g(L, 1, 0)), Uniform(Cut.row_cut(1)))
    ann_b = ann_cyclic(R, ex.elements["b1"])
    assert ann_b == SubmoduleDescriptor.build(Cut.closed(g(L, 0, 1)), Uniform(Cut.full(L)))
    fg, cert = desc_fg_mod(ann_a, R.modulus)
    assert fg and cert.generators == (ex.elements["b1"],)
    fg, cert = desc_fg_mod(ann_b, R.modulus)
    assert not fg


def test_reduced_annihilator(examples):
    ex = examples["reduced"]
    ann = ann_cyclic(ex.ring, ex.elements["a1"])
    assert ann == SubmoduleDescriptor.build(Cut.zero(L), Uniform(Cut.full(L)))
    assert not desc_fg_mod(ann, ex.ring.modulus)[0]


def test_noncoherent_annihilator(examples):
    ex = examples["noncoherent"]
    ann = ann_cyclic(ex.ring, ex.elements["a1"])
    assert ann.const == Cut.closed(g(Q, 1))
    assert ann.tail == GeometricToLimit(Fraction(0), Fraction(1))
    for n in range(1, 17):
        assert ann.cut_at(n) == Cut.closed(g(Q, Fraction(1, 2**n)))
    assert not desc_fg_mod(ann, ex.ring.modulus)[0]


@pytest.mark.parametrize(
    "name,want",
    [("dim3", "Finite(2)"), ("reduced", "Finite(1)"), ("noncoherent", "Finite(1)")],
)
def test_lambda_examples(examples, name, want):
    ex = examples[name]
    assert lambda_cyclic_S(ex.ring, ex.elements["a1"], 8).label() == want


def test_padic_annihilators_against_formula(examples):
    ex = examples["padic"]
    for k in range(0, 13):
        ann = ann_cyclic(ex.ring, FunElement.constant(term(Z, k)))
        for n in range(1, 13):
            want = Cut.full(Z) if n <= k else Cut.closed(g(Z, n - k))
            assert ann.cut_at(n) == want


@pytest.mark.parametrize(
    "kind,want",
    [
        (L, (Cut.closed(g(L, 0, 1)), Cut.closed(g(L, 0, 1)))),
        (Z, (Cut.closed(g(Z, 1)), Cut.closed(g(Z, 1)))),
        (Q, (Cut.open(g(Q, 0)), Cut.open(g(Q, 0)))),
    ],
)
def test_jacobson(kind, want):
    assert jacobson_descriptor(kind) == SubmoduleDescriptor.build(want[0], Uniform(want[1]))


@pytest.mark.parametrize("name", EXAMPLE_NAMES)
def test_annihilator_consistency(examples, name):
    # desc_member(f, ann x) <=> f*x in A, on 10^3 random pairs per ring
    report = sample_annihilator_consistency(examples[name].ring, 1000, seed=0)
    assert report.passed, report.failures[:3]


@pytest.mark.parametrize("name", EXAMPLE_NAMES)
def test_fg_verdicts_agree_with_pointwise_oracle(examples, name):
    ex = examples[name]
    A = ex.ring.modulus
    for x in ex.elements.values():
        if isinstance(x, FunElement):
            report = fg_membership_oracle(ann_cyclic(ex.ring, x), A, trials=200, seed=0)
            assert report.passed, report.failures[:3]


def test_fg_of_a_over_itself(examples):
    for ex in examples.values():
        A = ex.ring.modulus
        assert desc_fg_mod(A, A)[0]


def test_overrides_and_containment():
    base = SubmoduleDescriptor.build(Cut.zero(Z), Arithmetic(g(Z, 0), g(Z, 1)))
    bigger = SubmoduleDescriptor.build(Cut.zero(Z), Uniform(Cut.closed(g(Z, 1))), {1: Cut.closed(g(Z, 1))})
    assert desc_contains(bigger, base)
    assert not desc_contains(base, bigger)
    assert desc_equal(base, base)
    f = FunElement.basis(3, term(Z, 2))
    assert desc_member(f, bigger) and not desc_member(f, base)
    assert in_descriptor(f, bigger, 10) and not in_descriptor(f, base, 10)


@pytest.mark.parametrize("name", EXAMPLE_NAMES)
def test_serialization_round_trip(examples, name):
    ex = examples[name]
    kind = ex.ring.kind
    obj = json.loads(json.dumps(ring_to_json(ex.ring)))
    assert ring_from_json(obj).modulus == ex.ring.modulus
    d = ex.ring.modulus
    assert descriptor_from_json(kind, descriptor_to_json(d)) == d
    for x in ex.elements.values():
        if isinstance(x, FunElement):
            assert element_from_json(kind, element_to_json(x)) == x


def test_element_products_are_pointwise():
    f = FunElement.build(term(Z, 1), {2: term(Z, 5)})
    h = FunElement.build(term(Z, 2), {3: term(Z, 0)})
    p = f * h
    assert p.at(1) == term(Z, 3)
    assert p.at(2) == term(Z, 7)
    assert p.at(3) == term(Z, 1)
