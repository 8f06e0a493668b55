import sys
import numpy as np
import pytest

from harmw import DiskGrid, EpsilonSample


@pytest.fixture(scope="session")
def grid():
    return DiskGrid()


@pytest.fixture(scope="session")
def coarse_grid():
    return DiskGrid(0.999, 24, 180)


@pytest.fixture(scope="session")
def eps():
    return EpsilonSample()


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(lines):
        terminalreporter.write_line(lines[key])
