import pytest

from weakhopf.gallery import build_example
from weakhopf.linalg import GF, QQ

F2, F3 = GF(2), GF(3)

# criterion lines collected by the acceptance suite, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def example():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = build_example(name)
        return cache[name]

    return get


@pytest.fixture
def qq():
    return QQ
