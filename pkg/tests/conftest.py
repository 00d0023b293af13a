import random

import pytest

from hambypass import build_digraph
from oracles import ACCEPTANCE_LINES


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def c3():
    return build_digraph(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def path3():
    return build_digraph(3, [(0, 1), (1, 2)])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
