import pytest

from pythapotent import make_curve
from pythapotent.known import GENERATORS


@pytest.fixture(scope="session")
def c3():
    return make_curve(3, 4, 3)


@pytest.fixture(scope="session")
def c4():
    return make_curve(3, 4, 4)


@pytest.fixture(scope="session")
def c9():
    return make_curve(3, 4, 9)


@pytest.fixture(scope="session")
def gen3():
    return GENERATORS[3][0]


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import REPORT

    if REPORT:
        terminalreporter.section("acceptance criteria")
        for line in REPORT:
            terminalreporter.write_line(line)
