from __future__ import annotations

import pytest

from stanley_depth.core import IdealPair, parse_ideal_pair

TWO_VARS = "n = 4\nI: x1, x2\nJ: x1*x2\n"
TWO_VARS_F = "n = 4\nI: x1, x2\nJ: x1*x2, x1*x3, x1*x4\n"
THREE_VARS = "n = 4\nI: x1, x2, x3\nJ: x1*x3\n"
PIVOT_QUADRIC = "n = 3\nI: x1, x2*x3\nJ: 0\n"

_acceptance_lines: list[str] = []


@pytest.fixture
def two_vars() -> IdealPair:
    return parse_ideal_pair(TWO_VARS)


@pytest.fixture
def two_vars_f() -> IdealPair:
    return parse_ideal_pair(TWO_VARS_F)


@pytest.fixture
def three_vars() -> IdealPair:
    return parse_ideal_pair(THREE_VARS)


@pytest.fixture
def pivot_quadric() -> IdealPair:
    return parse_ideal_pair(PIVOT_QUADRIC)


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion."""

    def record(number: int, ok: bool, detail: str) -> None:
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
        _acceptance_lines.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
