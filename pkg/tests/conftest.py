import pytest

from qschubert.cartan import builtin_cartan


@pytest.fixture(scope="session")
def A2():
    return builtin_cartan("A", 2)


@pytest.fixture(scope="session")
def A3():
    return builtin_cartan("A", 3)


@pytest.fixture(scope="session")
def B2():
    return builtin_cartan("B", 2)


@pytest.fixture(scope="session")
def G2():
    return builtin_cartan("G", 2)


# lines appended by the acceptance gate, shown after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
