import sys
from pathlib import Path

import numpy as np
import pytest

# make tests/oracles.py importable as a plain module
sys.path.insert(0, str(Path(__file__).parent))

from qriesz.field import random_field  # noqa: E402
from qriesz.spectral import paired_part  # noqa: E402

ACCEPTANCE_SHAPES = [(64,), (16, 16), (64, 64), (8, 8, 8)]


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def paired_real(shape, seed):
    """Seeded real scalar field with its DC and unpaired Nyquist content removed."""
    return paired_part(random_field(shape, np.random.default_rng(seed)))


def rel(a, b):
    """Relative l2 distance of two coefficient arrays."""
    a = np.asarray(a)
    b = np.asarray(b)
    return float(np.linalg.norm(a - b) / max(np.linalg.norm(b), 1e-300))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
