"""Collects one verdict line per acceptance criterion and prints them at the end of the run."""

import pytest

ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture
def criterion():
    def record(number: int, title: str, ok: bool, detail: str = "") -> bool:
        verdict = "PASS" if ok else "FAIL"
        line = f"[{verdict}] criterion {number:2d}: {title}"
        if detail:
            line += f" -- {detail}"
        ACCEPTANCE_LINES[number] = line
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
