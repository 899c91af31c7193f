"""Shared fixtures for the gghecke test suite."""

import random
import sys
from pathlib import Path

import pytest

# Add src directory to path
src_dir = Path(__file__).parent.parent / "src"
sys.path.insert(0, str(src_dir))

from gghecke.algebra.coeffring import param_constants  # noqa: E402
from gghecke.algebra.heckealg import HeckeParams  # noqa: E402
from gghecke.constants import CaseTag  # noqa: E402


@pytest.fixture
def rng():
    """Seeded RNG so randomized panels are reproducible."""
    return random.Random(20240611)


@pytest.fixture
def consts_121():
    """(t, r, s) = (1, 2, 1): b = v^4 - 1, c = v^3 - v."""
    return param_constants(1, 2, 1)


@pytest.fixture
def params_c2():
    return HeckeParams(CaseTag.C, 2, 1, 2, 1)


@pytest.fixture
def params_c1():
    return HeckeParams(CaseTag.C, 1, 1, 2, 1)


@pytest.fixture
def params_a3():
    return HeckeParams(CaseTag.A, 3, 1)


@pytest.fixture
def isolated_config(tmp_path):
    """Config path that does not exist yet."""
    return tmp_path / "config.yaml"
