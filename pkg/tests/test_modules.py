import random

import pytest

from unimodular.errors import IdealChainViolation, NotAUnit, RowTooShort
from unimodular.matrices import ExactMatrix
from unimodular.modules import (CyclicModule, InvariantFactorModule, canonical_row,
                                invariant_factor_form, is_unimodular, module_from_relations,
                                relation_ideal, transport)
from unimodular.oracle import FiniteModuleTable, enumerate_unimodular, generates
from unimodular.rings import Integers

Z = Integers()


def test_module_from_relations_examples():
    m, _ = module_from_relations(ExactMatrix(Z, [[2, 0], [0, 4]]))
    assert m.factors == (2, 4)
    m, _ = module_from_relations(ExactMatrix(Z, [[2, 2], [2, -2]]))
    assert m.factors == (2, 4)
    m, _ = module_from_relations(ExactMatrix(Z, [], ncols=2))
    assert m.factors == (0, 0)


def test_unit_factors_are_dropped():
    m, cob = module_from_relations(ExactMatrix(Z, [[1, 0], [0, 6]]))
    assert m.factors == (6,)
    assert cob.shape == (2, 1)


def test_chain_is_enforced():
    with pytest.raises(IdealChainViolation):
        InvariantFactorModule(Z, (2, 3))
    with pytest.raises(IdealChainViolation):
        InvariantFactorModule(Z, (1, 4))


def _random_unimodular(rng, n):
    a = ExactMatrix.identity(Z, n)
    for _ in range(6):
        s, t = rng.sample(range(n), 2)
        rows = [list(r) for r in a.rows]
        c = rng.randint(-3, 3)
        rows[t] = [x + c * y for x, y in zip(rows[t], rows[s])]
        a = ExactMatrix(Z, rows)
    return a


def test_presentation_invariance():
    rng = random.Random(2)
    base = ExactMatrix(Z, [[2, 2, 0], [2, -2, 0], [0, 0, 3]])
    expected, _ = module_from_relations(base)
    for _ in range(50):
        u, v = _random_unimodular(rng, 3), _random_unimodular(rng, 3)
        m, _ = module_from_relations(u @ base @ v)
        assert m.factors == expected.factors


def test_transport_preserves_generation():
    cyc = CyclicModule(Z, (2, 3))
    target, cob = invariant_factor_form(cyc)
    assert target.factors == (6,)
    for row in enumerate_unimodular(cyc, 1):
        assert is_unimodular(transport(row, cob, target))


def test_is_unimodular_examples():
    m = InvariantFactorModule(Z, (2, 4))
    assert is_unimodular(m.row([(1, 1), (0, 1)]))
    assert not is_unimodular(m.row([(1, 0), (0, 2)]))
    z5 = InvariantFactorModule(Z, (5,))
    assert not is_unimodular(z5.row([(0,), (0,)]))


def test_is_unimodular_agrees_with_closure():
    m = InvariantFactorModule(Z, (2, 4))
    table = FiniteModuleTable(m)
    rng = random.Random(0)
    for _ in range(300):
        n = rng.randint(2, 3)
        row = m.row([rng.choice(table.elements) for _ in range(n)])
        assert is_unimodular(row) == generates(row)


def test_relation_ideal_examples():
    assert relation_ideal(InvariantFactorModule(Z, (2, 4))).generator == 2
    assert relation_ideal(InvariantFactorModule(Z, (0, 0))).is_zero()
    assert relation_ideal(InvariantFactorModule(Z, (6,))).generator == 6


def test_canonical_row_examples():
    assert canonical_row(InvariantFactorModule(Z, (5, 5)), 2, 2).entries == ((2, 0), (0, 1))
    assert canonical_row(InvariantFactorModule(Z, (5,)), 1, 3).entries == ((1,), (0,), (0,))
    assert canonical_row(InvariantFactorModule(Z, (2, 4)), 1, 2).entries == ((1, 0), (0, 1))
    with pytest.raises(RowTooShort):
        canonical_row(InvariantFactorModule(Z, (5, 5)), 1, 1)
    with pytest.raises(NotAUnit):
        canonical_row(InvariantFactorModule(Z, (5, 5)), 5, 2)
