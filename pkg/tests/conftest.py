import json
from pathlib import Path

import numpy as np
import pytest

from app.models.distribution import Distribution
from app.services.toyuniv import enumerate_programs

FIXTURES_DIR = Path(__file__).parent / "fixtures"


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def uniform2():
    return Distribution.uniform(2)


@pytest.fixture
def dyadic():
    return Distribution.from_probs([0.5, 0.25, 0.25], ["a", "b", "c"])


@pytest.fixture
def skewed():
    return Distribution.from_probs([0.75, 0.25], ["a", "b"])


def random_distributions(rng, count, n_max):
    """Dirichlet draws with support sizes 1..n_max."""
    out = []
    for _ in range(count):
        n = int(rng.integers(1, n_max + 1))
        out.append(Distribution.from_probs(rng.dirichlet(np.ones(n)).tolist()))
    return out


@pytest.fixture(scope="session")
def report7():
    return enumerate_programs(7)


@pytest.fixture(scope="session")
def report12():
    return enumerate_programs(12)


@pytest.fixture(scope="session")
def report16():
    return enumerate_programs(16)


@pytest.fixture(scope="session")
def recorded_values():
    return json.loads((FIXTURES_DIR / "recorded_values.json").read_text(encoding="utf-8"))
