"""One test per acceptance criterion; each prints a PASS/FAIL line.

Tolerances are exact throughout: every check compares integers, exact
rationals or symbolic verdicts.
"""

import pytest

from q6threefolds.acceptance import CRITERIA

NUMBERS = sorted(CRITERIA)


@pytest.mark.parametrize("number", NUMBERS, ids=[f"criterion_{n:02d}" for n in NUMBERS])
def test_criterion(number, record_line):
    res = CRITERIA[number]()
    line = res.line()
    print(line)
    record_line(line)
    assert res.number == number
    assert res.passed, line


def test_suite_covers_thirteen_criteria():
    assert NUMBERS == list(range(1, 14))
