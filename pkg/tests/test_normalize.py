import random

import pytest

from unimodular.errors import IdealChainViolation, NotUnimodular, RowTooShort
from unimodular.fixtures import all_fixtures
from unimodular.invariants import det_invariant
from unimodular.matrices import ExactMatrix, script_matrix
from unimodular.modules import InvariantFactorModule, canonical_row
from unimodular.normalize import diagonal_units_ok, normalize_row, triangularize, unit_transfer
from unimodular.oracle import enumerate_unimodular
from unimodular.rings import Integers

Z = Integers()
Z5x5 = InvariantFactorModule(Z, (5, 5))
Z5 = InvariantFactorModule(Z, (5,))
Z2x4 = InvariantFactorModule(Z, (2, 4))


def test_normalize_examples():
    res = normalize_row(Z5x5.row([(2, 0), (0, 1)]))
    assert res.delta == 2 and res.canonical.entries == ((2, 0), (0, 1))

    res = normalize_row(Z5.row([(2,), (1,)]))
    assert res.delta == 1 and res.canonical.entries == ((1,), (0,))

    row = Z2x4.row([(1, 1), (0, 1), (0, 0)])
    res = normalize_row(row)
    assert res.delta == 1 and res.canonical.entries == ((1, 0), (0, 1), (0, 0))
    assert row.replay(res.script) == res.canonical


def test_triangularize_examples():
    script, tri = triangularize(Z5.row([(2,), (1,)]))
    assert tri.entries == ((1,), (0,))
    canon = canonical_row(Z5x5, 3, 2)
    script, tri = triangularize(canon)
    assert tri == canon and script.is_trivial()
    row = Z2x4.row([(1, 1), (0, 1)])
    script, tri = triangularize(row)
    assert row.replay(script) == tri and diagonal_units_ok(tri)


def test_normalize_errors():
    with pytest.raises(RowTooShort):
        normalize_row(Z5x5.row([(1, 0)]))
    with pytest.raises(NotUnimodular):
        normalize_row(Z5x5.row([(1, 0), (2, 0)]))


@pytest.mark.parametrize("name", sorted(all_fixtures()))
def test_idempotent_and_methods_agree(name):
    m = all_fixtures()[name]
    rng = random.Random(name)
    for n in (m.rank, m.rank + 1):
        rows = enumerate_unimodular(m, n)
        for row in rng.sample(rows, min(40, len(rows))):
            res = normalize_row(row)
            again = normalize_row(res.canonical)
            assert again.canonical == res.canonical and again.delta == res.delta
            assert normalize_row(row, method="whitehead").canonical == res.canonical
            if n == m.rank:
                assert det_invariant(m, row).value == m.ring.reduce(res.delta, m.factors[0])


def test_unit_transfer_examples():
    row = Z5x5.row([(2, 0), (0, 3)])
    script, out = unit_transfer(row, 0, 1)
    assert out.entries == ((1, 0), (0, 1))
    assert row.replay(script) == out and len(script) == 6

    row = Z5x5.row([(1, 0), (0, 1)])
    script, out = unit_transfer(row, 0, 1, 1)
    assert out == row
    assert script_matrix(script) == ExactMatrix.identity(Z, 2)


def test_unit_transfer_from_smaller_ideal():
    # unit 3 of the Z4 slot moves into the Z2 slot, where 3 = 1
    row = Z2x4.row([(1, 0), (0, 3)])
    script, out = unit_transfer(row, 1, 0)
    assert out.entries == ((1, 0), (0, 1))
    assert row.replay(script) == out


def test_unit_transfer_needs_ideal_containment():
    with pytest.raises(IdealChainViolation):
        unit_transfer(Z2x4.row([(1, 0), (0, 3)]), 0, 1)
