import pytest

from helpers import ACCEPTANCE_LINES, build_example


@pytest.fixture
def example():
    return build_example()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
