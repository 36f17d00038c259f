import random

import pytest

from unimodular.errors import DimensionMismatch
from unimodular.fixtures import all_fixtures
from unimodular.invariants import (are_E_equivalent, det_invariant, orbit_count,
                                   unit_class_representatives)
from unimodular.modules import CyclicModule, InvariantFactorModule, canonical_row
from unimodular.oracle import enumerate_unimodular
from unimodular.rings import Integers
from unimodular.scripts import ElementaryScript

Z = Integers()
Z5x5 = InvariantFactorModule(Z, (5, 5))
Z2x4 = InvariantFactorModule(Z, (2, 4))


def test_det_examples():
    d = det_invariant(Z2x4, Z2x4.row([(1, 1), (0, 1)]))
    assert d.quotient.generator == 2 and d.value == 1
    assert det_invariant(Z5x5, Z5x5.row([(0, 1), (1, 0)])).value == 4
    for delta in (1, 2, 3, 4):
        assert det_invariant(Z5x5, canonical_row(Z5x5, delta, 2)).value == delta


def test_det_needs_square_row():
    with pytest.raises(DimensionMismatch):
        det_invariant(Z5x5, Z5x5.row([(1, 0), (0, 1), (0, 0)]))


def test_det_on_cyclic_decomposition():
    # Z2 x Z3 written with coprime factors; the det lives in R / (2 + 3) = 0
    cyc = CyclicModule(Z, (2, 3))
    d = det_invariant(cyc, cyc.row([(1, 1), (0, 1)]))
    assert d.quotient.is_whole()


def test_det_invariant_under_random_scripts():
    rng = random.Random(9)
    m = InvariantFactorModule(Z, (3, 9))
    rows = enumerate_unimodular(m, 2)
    for _ in range(500):
        row = rng.choice(rows)
        triples = [(s, 1 - s, rng.randint(-9, 9)) for s in (rng.randrange(2) for _ in range(5))]
        moved = row.replay(ElementaryScript.from_triples(Z, 2, triples))
        assert det_invariant(m, moved) == det_invariant(m, row)


def test_equivalence_examples():
    a = Z5x5.row([(1, 0), (0, 1)])
    b = Z5x5.row([(2, 0), (0, 1)])
    c = Z5x5.row([(1, 0), (0, 2)])
    assert are_E_equivalent(a, b) == (False, None)
    ok, w = are_E_equivalent(b, c)
    assert ok and b.replay(w) == c
    ok, w = are_E_equivalent(a, a)
    assert ok and a.replay(w) == a


def test_orbit_counts():
    assert orbit_count(Z5x5, 2) == 4
    assert orbit_count(Z2x4, 2) == 1
    assert orbit_count(Z5x5, 3) == 1
    assert orbit_count(InvariantFactorModule(Z, (0, 0)), 2) == 2


def test_unit_class_representatives():
    assert unit_class_representatives(Z5x5) == [1, 2, 3, 4]
    assert unit_class_representatives(Z2x4) == [1]
    assert unit_class_representatives(InvariantFactorModule(Z, (0, 0))) == [1, -1]


@pytest.mark.parametrize("name", ["Z2xZ4", "ZxZ/(2,3)x(2,3)", "GF2[x]/(x)x(x^2)"])
def test_long_rows_are_all_equivalent(name):
    m = all_fixtures()[name]
    rng = random.Random(4)
    rows = enumerate_unimodular(m, m.rank + 1)
    for _ in range(30):
        a, b = rng.choice(rows), rng.choice(rows)
        ok, w = are_E_equivalent(a, b)
        assert ok and a.replay(w) == b
