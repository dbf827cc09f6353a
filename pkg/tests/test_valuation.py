from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringforge.oracle import in_cut, random_cut, random_value
from ringforge.valuation import (
    AmbiguousCancellation,
    Cut,
    GroupElement,
    GroupKind,
    KindMismatch,
    LambdaReason,
    ParseError,
    ValQuotient,
    Verdict,
    ZClass,
    ann_quotient,
    classify_valuation_quotient,
    cut_fg_mod,
    cut_intersection,
    cut_is_prime,
    cut_is_principal,
    cut_member,
    cut_quotient,
    cut_sum,
    format_valq,
    maximal_ideal,
    lambda_cyclic,
    parse_cut,
    parse_element,
    parse_valq,
    smallest_positive,
    val_add,
    val_mul,
)

Z, Q, L = GroupKind.DISCRETE_Z, GroupKind.DENSE_Q, GroupKind.LEX_Z2


def g(kind, *c):
    return GroupElement.of(kind, *c)


# --- groups and cuts -------------------------------------------------------


def test_cut_member_examples():
    assert cut_member(g(L, 1, 0), Cut.row_cut(1))
    assert not cut_member(g(Q, Fraction(1, 2)), Cut.open(g(Q, Fraction(1, 2))))
    assert cut_member(g(L, 0, 5), Cut.closed(g(L, 0, 1)))


def test_cut_quotient_examples():
    assert cut_quotient(Cut.closed(g(Z, 5)), g(Z, 2)) == Cut.closed(g(Z, 3))
    assert cut_quotient(Cut.row_cut(1), g(L, 0, 1)) == Cut.row_cut(1)
    assert cut_quotient(Cut.closed(g(Q, 1)), g(Q, 1)) == Cut.full(Q)


def test_cut_sum_examples():
    assert cut_sum(Cut.closed(g(Z, 3)), Cut.closed(g(Z, 5))) == Cut.closed(g(Z, 3))
    assert cut_sum(Cut.closed(g(L, 1, 1)), Cut.row_cut(1)) == Cut.row_cut(1)
    half = g(Q, Fraction(1, 2))
    assert cut_sum(Cut.open(half), Cut.closed(half)) == Cut.closed(half)


def test_cut_principal_and_prime_examples():
    assert cut_is_principal(Cut.closed(g(Z, 7))) == (True, g(Z, 7))
    assert cut_is_principal(Cut.open(g(Q, 0)))[0] is False
    assert cut_is_principal(Cut.row_cut(1))[0] is False
    assert cut_is_prime(Cut.open(g(Q, 0)))
    assert cut_is_prime(Cut.row_cut(1))
    assert not cut_is_prime(Cut.closed(g(Z, 2)))


def test_open_normalizes_to_closed_in_discrete_group():
    assert Cut.open(g(Z, 1)) == Cut.closed(g(Z, 2))
    assert maximal_ideal(Z) == Cut.closed(g(Z, 1))
    assert maximal_ideal(L) == Cut.closed(g(L, 0, 1))
    assert smallest_positive(Z) == g(Z, 1)


def test_kind_mismatch_raises():
    with pytest.raises(KindMismatch):
        cut_member(g(Z, 1), Cut.closed(g(Q, 1)))


def test_cut_fg_mod_examples():
    half, quarter, third = (g(Q, Fraction(1, k)) for k in (2, 4, 3))
    assert cut_fg_mod(Cut.open(half), Cut.open(half))[0]
    assert not cut_fg_mod(Cut.open(quarter), Cut.open(half))[0]
    assert cut_fg_mod(Cut.closed(third), Cut.open(half)) == (True, third)


# Membership laws checked against the boundary-reading oracle.

kinds = st.sampled_from([Z, Q, L])


@st.composite
def cut_and_values(draw):
    import random

    kind = draw(kinds)
    rng = random.Random(draw(st.integers(0, 2**32)))
    return kind, random_cut(kind, rng), random_cut(kind, rng), random_value(kind, rng), random_value(kind, rng)


@settings(max_examples=300, deadline=None)
@given(cut_and_values())
def test_membership_agrees_with_oracle(data):
    kind, c1, c2, x, _ = data
    assert cut_member(x, c1) == in_cut(x, c1)
    assert in_cut(x, cut_sum(c1, c2)) == (in_cut(x, c1) or in_cut(x, c2))
    assert in_cut(x, cut_intersection(c1, c2)) == (in_cut(x, c1) and in_cut(x, c2))


@settings(max_examples=300, deadline=None)
@given(cut_and_values())
def test_quotient_is_definitional(data):
    kind, c, _, x, y = data
    if not in_cut(y, Cut.full(kind)):
        return
    q = cut_quotient(c, y)
    assert in_cut(x, q) == in_cut(x + y, c)


# --- elements ---------------------------------------------------------------


def test_element_arithmetic_examples():
    assert val_mul(parse_element(L, "t^(0,1)"), parse_element(L, "t^(1,0)")) == parse_element(L, "t^(1,1)")
    assert val_add(parse_element(Z, "2*t^1"), parse_element(Z, "3*t^2")) == parse_element(Z, "2*t^1")
    with pytest.raises(AmbiguousCancellation):
        val_add(parse_element(Z, "2*t^1"), parse_element(Z, "-2*t^1"))


# --- quotients ---------------------------------------------------------------


def test_ann_quotient_examples():
    r5 = ValQuotient(Z, Cut.closed(g(Z, 5)))
    assert ann_quotient(r5, parse_element(Z, "t^2")) == Cut.closed(g(Z, 3))
    r11 = ValQuotient(L, Cut.closed(g(L, 1, 1)))
    assert ann_quotient(r11, parse_element(L, "t^(0,1)")) == Cut.closed(g(L, 1, 0))
    assert ann_quotient(ValQuotient(Z, Cut.zero(Z)), parse_element(Z, "t^3")) == Cut.zero(Z)


def test_lambda_periodic_over_closed():
    res = lambda_cyclic(parse_valq("valq:Z:closed:5"), parse_element(Z, "t^2"), 8)
    assert res.label() == "Infinite"
    assert res.reason is LambdaReason.PERIODIC
    assert res.chain == (Cut.closed(g(Z, 3)), Cut.closed(g(Z, 2)))


def test_lambda_first_annihilator_not_fg():
    res = lambda_cyclic(parse_valq("valq:Q:open:1"), parse_element(Q, "t^1/2"), 8)
    assert res.label() == "Finite(1)"
    assert res.chain[0] == Cut.open(g(Q, Fraction(1, 2)))


@pytest.mark.parametrize("spec,unit", [("valq:Z:closed:5", "t^0"), ("valq:Q:open:1", "t^0"), ("valq:Z2lex:row:2", "t^(0,0)")])
def test_lambda_of_unit_is_infinite(spec, unit):
    r = parse_valq(spec)
    assert lambda_cyclic(r, parse_element(r.kind, unit), 8).label() == "Infinite"


def test_classification_trichotomy():
    d = classify_valuation_quotient(parse_valq("valq:Z:zero"))
    assert d.zclass is ZClass.Z_IS_ZERO and d.verdict is Verdict.COHERENT
    assert d.coherent and not d.self_fp_injective
    c5 = classify_valuation_quotient(parse_valq("valq:Z:closed:5"))
    assert c5.zclass is ZClass.Z_IS_MAX and c5.self_fp_injective and c5.coherent
    row = classify_valuation_quotient(parse_valq("valq:Z2lex:row:2"))
    assert row.zclass is ZClass.Z_PROPER_NONZERO and row.verdict is Verdict.LAMBDA_DIM_TWO and row.m_flat
    op = classify_valuation_quotient(parse_valq("valq:Q:open:1"))
    assert not op.coherent and op.coherence_witness is not None


def test_row_quotient_witnesses_are_regular_and_zero_divisor():
    r = parse_valq("valq:Z2lex:row:2")
    c = classify_valuation_quotient(r)
    # a regular element has annihilator equal to A, a zero divisor a larger one
    assert cut_quotient(r.modulus, c.regular_witness) == r.modulus
    assert cut_quotient(r.modulus, c.zero_divisor_witness) != r.modulus


@pytest.mark.parametrize("n", range(1, 17))
def test_closed_quotients_over_q_are_coherent(n):
    cut = Cut.closed(g(Q, 1 + Fraction(1, 2**n)))
    assert classify_valuation_quotient(ValQuotient(Q, cut)).coherent


# --- syntax ------------------------------------------------------------------


@pytest.mark.parametrize("text", ["valq:Z:closed:5", "valq:Q:open:1/2", "valq:Z2lex:row:2", "valq:Z"])
def test_valq_round_trip(text):
    assert format_valq(parse_valq(text)) == text


def test_zero_modulus_is_the_domain():
    assert parse_valq("valq:Z:zero") == parse_valq("valq:Z")


@pytest.mark.parametrize("text,pos", [("valq:Z:clsed:5", 7), ("valq:W:zero", 5), ("valq:Q:full", 7)])
def test_parse_error_reports_position(text, pos):
    with pytest.raises(ParseError) as err:
        parse_valq(text)
    assert err.value.position == pos


def test_parse_cut_lex():
    assert parse_cut(L, "closed:(1,1)") == Cut.closed(g(L, 1, 1))
    assert parse_cut(L, "row:1") == Cut.row_cut(1)
