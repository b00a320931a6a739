from __future__ import annotations


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS, verdict_lines

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in verdict_lines():
            terminalreporter.write_line(line)
