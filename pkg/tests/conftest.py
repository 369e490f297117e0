import pytest

from leavitt import catalog

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def graphs():
    return {name: catalog.load(name) for name in catalog.NAMES}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
