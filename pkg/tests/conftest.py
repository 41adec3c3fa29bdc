import sys

# The reference interpreter and the traversals recurse once per term node.
sys.setrecursionlimit(max(sys.getrecursionlimit(), 20_000))

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
