from __future__ import annotations


def pytest_terminal_summary(terminalreporter):
    from tests.test_acceptance import LEVEL, LINES

    if LINES:
        terminalreporter.section(f"acceptance criteria ({LEVEL})")
        for line in LINES:
            terminalreporter.write_line(line)
