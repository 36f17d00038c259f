import random

import pytest

from unimodular.errors import BudgetExceeded, NotGenerating, Unsupported
from unimodular.modules import InvariantFactorModule
from unimodular.nielsen import (I, L, are_nielsen_equivalent, euler_phi, expand_script,
                                nielsen_class_count, nielsen_classes, nielsen_witness,
                                replay_moves)
from unimodular.oracle import enumerate_unimodular
from unimodular.rings import Integers, IntegersMod
from unimodular.scripts import ElementaryScript

Z = Integers()
Z5x5 = InvariantFactorModule(Z, (5, 5))


def test_euler_phi():
    assert [euler_phi(d) for d in (0, 1, 8, 9, 12)] == [0, 1, 4, 6, 4]


def test_class_counts():
    assert nielsen_class_count(Z5x5, 2) == 2
    assert nielsen_class_count(InvariantFactorModule(Z, (0, 0)), 2) == 1
    assert nielsen_class_count(InvariantFactorModule(Z, (8,)), 1) == 2
    assert nielsen_class_count(Z5x5, 3) == 1
    report = nielsen_classes(Z5x5, 2)
    assert [r.entries for r in report.representatives] == [((1, 0), (0, 1)), ((2, 0), (0, 1))]


def test_integers_only():
    with pytest.raises(Unsupported):
        nielsen_class_count(InvariantFactorModule(IntegersMod(12), (2, 6)), 2)


def test_expand_script_examples():
    add3 = ElementaryScript.from_triples(Z, 2, [(1, 0, 3)])
    assert expand_script(add3) == [L(0, 1)] * 3
    empty = ElementaryScript.from_triples(Z, 2, [])
    assert expand_script(empty, [-1, 1]) == [I(0)]
    neg2 = ElementaryScript.from_triples(Z, 2, [(0, 1, -2)])
    assert expand_script(neg2) == [I(0), L(1, 0), L(1, 0), I(0)]


def test_expanded_moves_match_transvection():
    rng = random.Random(1)
    for _ in range(100):
        r = rng.randint(-7, 7)
        row = Z5x5.row([(rng.randrange(5), rng.randrange(5)) for _ in range(2)])
        script = ElementaryScript.from_triples(Z, 2, [(0, 1, r)])
        assert replay_moves(expand_script(script), row) == row.replay(script)


def test_equivalence_examples():
    a = Z5x5.row([(2, 0), (0, 1)])
    ok, moves = are_nielsen_equivalent(a, Z5x5.row([(3, 0), (0, 1)]))
    assert ok and replay_moves(moves, a) == Z5x5.row([(3, 0), (0, 1)])
    assert are_nielsen_equivalent(a, Z5x5.row([(1, 0), (0, 1)])) == (False, None)
    ok, moves = are_nielsen_equivalent(a, a)
    assert ok and replay_moves(moves, a) == a


def test_non_generating_vector_rejected():
    with pytest.raises(NotGenerating):
        nielsen_witness(Z5x5.row([(1, 0), (2, 0)]), Z5x5.row([(1, 0), (0, 1)]))


def test_expansion_cap():
    m = InvariantFactorModule(Z, (101,))
    rows = enumerate_unimodular(m, 2)
    a, b = m.row([(1,), (0,)]), m.row([(0,), (50,)])
    assert b in rows
    with pytest.raises(BudgetExceeded):
        are_nielsen_equivalent(a, b, cap=5)
    ok, moves = are_nielsen_equivalent(a, b)
    assert ok and replay_moves(moves, a) == b
