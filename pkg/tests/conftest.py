import itertools
from math import gcd

import pytest

from unimodular.rings import Integers


def leibniz_det(rows):
    """Permutation-expansion determinant; only for tiny integer matrices."""
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for a, b in itertools.combinations(range(n), 2) if perm[a] > perm[b])
        term = -1 if inv % 2 else 1
        for i in range(n):
            term *= rows[i][perm[i]]
        total += term
    return total


def minor_gcd(rows, size):
    """gcd of all size x size minors of an integer matrix."""
    g = 0
    for rs in itertools.combinations(range(len(rows)), size):
        for cs in itertools.combinations(range(len(rows[0])), size):
            g = gcd(g, leibniz_det([[rows[r][c] for c in cs] for r in rs]))
    return g


@pytest.fixture
def Z():
    return Integers()


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[number])
