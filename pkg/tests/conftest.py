import numpy as np
import pytest

from spintheta import algebra
from spintheta.spinor import new_basis_operators

UNITAL = ["octonion", "gen-octonion-e1", "quaternion-analog", "gen-octonion-e4",
          "octonion-noncanonical"]


@pytest.fixture(scope="session")
def ops():
    return new_basis_operators()


@pytest.fixture(scope="session")
def tables():
    return {name: algebra.builtin(name) for name in algebra.BUILTIN_NAMES}


@pytest.fixture
def rng():
    return np.random.default_rng(20121)


def random_orthogonal(rng, n=8):
    q, r = np.linalg.qr(rng.normal(size=(n, n)))
    return q * np.sign(np.diag(r))


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
