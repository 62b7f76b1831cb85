import pytest

from rieszsep.dissociate import make_letters
from rieszsep.dualgroup import DirectSumOrderTwo, IntegerGroup


@pytest.fixture(scope="session")
def Z():
    return IntegerGroup()


@pytest.fixture(scope="session")
def Z2sum():
    return DirectSumOrderTwo()


def lacunary(G, count, base=3):
    return make_letters(G, [G.element(base ** k) for k in range(1, count + 1)])


def ints(G, values):
    return make_letters(G, [G.element(v) for v in values])


def rademacher(G, count):
    return make_letters(G, [G.basis(i) for i in range(1, count + 1)])


SEEDS = [
    "prefix=0,period=1",
    "prefix=01,period=0",
    "period=01",
    "period=1",
    "prefix=10,period=0",
]


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
