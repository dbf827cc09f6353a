"""Acceptance criteria 1-11: one pass/fail line each, with the time limit enforced.

Run with ``pytest tests/test_acceptance.py -s`` (the lines are printed
either way, since output capture is bypassed for them).
"""

import pytest

from ringforge.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("number", [num for num, *_ in CRITERIA], ids=[f"c{num:02d}-{name.replace(' ', '-')}" for num, name, *_ in CRITERIA])
def test_criterion(number, capsys):
    result = run_criterion(number)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.elapsed <= result.limit, f"criterion {number} took {result.elapsed:.2f}s, limit {result.limit}s"
    assert result.passed, result.detail


def test_all_criteria_listed():
    assert [num for num, *_ in CRITERIA] == list(range(1, 12))
