from pathlib import Path

import numpy as np
import pytest

from setpentagon.groups import build_corpus, cyclic, klein_four, symmetric

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def z6():
    return cyclic(6)


@pytest.fixture(scope="session")
def s3():
    return symmetric(3)


@pytest.fixture(scope="session")
def v4():
    return klein_four()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
