"""Shared pytest wiring: surfaces the acceptance-criterion result lines in
the terminal summary, where output capture cannot hide them."""

criterion_lines: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if criterion_lines:
        terminalreporter.section("acceptance criteria")
        for line in criterion_lines:
            terminalreporter.line(line)
