"""Shared test helpers: acceptance criteria report their verdicts here.

test_acceptance.py records one line per criterion through `record`;
the terminal-summary hook prints them after the run so the verdicts
are visible whether or not output capture is on.
"""

import pytest

_CRITERION_LINES: dict[int, str] = {}


@pytest.fixture
def criterion():
    return record_criterion


def record_criterion(number: int, passed: bool, detail: str = "") -> bool:
    verdict = "PASS" if passed else "FAIL"
    line = f"criterion {number}: {verdict}"
    if detail:
        line += f"  [{detail}]"
    _CRITERION_LINES[number] = line
    return passed


def pytest_terminal_summary(terminalreporter):
    if not _CRITERION_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERION_LINES):
        terminalreporter.write_line(_CRITERION_LINES[number])
