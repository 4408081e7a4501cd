import numpy as np
import pytest


def disk(rng, radius, n):
    """n points uniform in the disk of the given radius."""
    r = radius * np.sqrt(rng.uniform(size=n))
    return r * np.exp(2j * np.pi * rng.uniform(size=n))


def separated(rng, n, radius, gap):
    """n points in the disk with pairwise distance >= gap (rejection sampling)."""
    while True:
        z = disk(rng, radius, n)
        d = np.abs(z[:, None] - z[None, :])
        np.fill_diagonal(d, np.inf)
        if d.min() >= gap:
            return z


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
