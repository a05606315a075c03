from __future__ import annotations

import pytest

_LINES: dict[int, list[str]] = {}


@pytest.fixture(scope="session")
def criterion_report():
    """Record and print one pass/fail line for an acceptance criterion."""

    def report(k: int, ok: bool, detail: str = "") -> None:
        line = f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}" + (f"  {detail}" if detail else "")
        _LINES.setdefault(k, []).append(line)
        print(line)

    return report


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_LINES):
        for line in _LINES[k]:
            terminalreporter.write_line(line)
