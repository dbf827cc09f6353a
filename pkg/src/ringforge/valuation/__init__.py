"""Valuation domains presented by an ordered value group, and their quotients."""

from .cuts import (
    Cut,
    CutVariant,
    cut_intersection,
    cut_is_prime,
    cut_is_principal,
    cut_member,
    cut_quotient,
    cut_sum,
    maximal_ideal,
)
from .elements import AmbiguousCancellation, ValElement, val_add, val_mul
from .groups import GroupElement, GroupKind, KindMismatch, smallest_positive
from .quotient import (
    Classification,
    ContainmentError,
    LambdaReason,
    LambdaResult,
    ValQuotient,
    Verdict,
    ZClass,
    ann_quotient,
    classify_valuation_quotient,
    cut_fg_mod,
    lambda_cyclic,
)
from .syntax import (
    ParseError,
    format_valq,
    parse_cut,
    parse_element,
    parse_kind,
    parse_valq,
    parse_value,
)

__all__ = [
    "AmbiguousCancellation",
    "Classification",
    "ContainmentError",
    "Cut",
    "CutVariant",
    "GroupElement",
    "GroupKind",
    "KindMismatch",
    "LambdaReason",
    "LambdaResult",
    "ParseError",
    "ValElement",
    "ValQuotient",
    "Verdict",
    "ZClass",
    "ann_quotient",
    "classify_valuation_quotient",
    "cut_fg_mod",
    "cut_intersection",
    "cut_is_prime",
    "cut_is_principal",
    "cut_member",
    "cut_quotient",
    "cut_sum",
    "format_valq",
    "lambda_cyclic",
    "maximal_ideal",
    "parse_cut",
    "parse_element",
    "parse_kind",
    "parse_valq",
    "parse_value",
    "smallest_positive",
    "val_add",
    "val_mul",
]
