import random
from itertools import product

import pytest

from semimagic.core import PERMUTATION_MATRICES, validate_square

ACCEPTANCE_RESULTS = []


def brute_force_squares(rho):
    """All 3x3 non-negative integer matrices with every line sum rho.

    Enumerates the free top-left 2x2 block directly; shares no code with the
    sextuple machinery.
    """
    out = []
    for m11, m12, m21, m22 in product(range(rho + 1), repeat=4):
        m13 = rho - m11 - m12
        m23 = rho - m21 - m22
        m31 = rho - m11 - m21
        m32 = rho - m12 - m22
        m33 = rho - m31 - m32
        grid = [[m11, m12, m13], [m21, m22, m23], [m31, m32, m33]]
        if min(min(r) for r in grid) < 0 or m13 + m23 + m33 != rho:
            continue
        out.append(validate_square(grid))
    return out


def random_word_square(rng, max_rho):
    """Entrywise sum of a random word in the six permutation matrices."""
    grid = [[0] * 3 for _ in range(3)]
    for _ in range(rng.randint(0, max_rho)):
        P = rng.choice(PERMUTATION_MATRICES)
        for i in range(3):
            for j in range(3):
                grid[i][j] += P[i][j]
    return validate_square(grid)


@pytest.fixture
def rng():
    return random.Random(20240917)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
