"""Shared pytest plumbing.

The acceptance tests record one line per criterion; the summary hook
prints them after the run, outside per-test capture, so the pass/fail
ledger is always visible in plain `pytest` output.
"""

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
