import random

import pytest

from ggc.galois import gf_make_ctx
from helpers import ACCEPTANCE_LINES


@pytest.fixture
def rng():
    return random.Random(20261015)


@pytest.fixture(scope="session")
def gf4():
    return gf_make_ctx(2)


@pytest.fixture(scope="session")
def gf2():
    return gf_make_ctx(1)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
