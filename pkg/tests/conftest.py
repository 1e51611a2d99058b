import sys

import numpy as np
import pytest
from scipy.stats import unitary_group


def haar_unitary(rng, n=4):
    return unitary_group.rvs(n, random_state=rng)


def haar_su2(rng):
    u = unitary_group.rvs(2, random_state=rng)
    return u / np.sqrt(np.linalg.det(u))


def random_local(rng):
    return np.kron(haar_su2(rng), haar_su2(rng))


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
