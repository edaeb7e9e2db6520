"""Shared test plumbing: acceptance verdict lines in the terminal summary."""

VERDICTS = []


def record_verdict(line):
    VERDICTS.append(line)
    print(line)  # visible inline under pytest -s


def pytest_terminal_summary(terminalreporter):
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in VERDICTS:
            terminalreporter.write_line(line)
