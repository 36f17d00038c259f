import random

from unimodular import serialize as ser
from unimodular.fixtures import all_fixtures
from unimodular.invariants import det_invariant
from unimodular.matrices import ExactMatrix, smith_normal_form
from unimodular.modules import CyclicModule
from unimodular.nielsen import I, L
from unimodular.normalize import normalize_row
from unimodular.oracle import enumerate_unimodular
from unimodular.rings import Integers


def test_round_trips_on_fixtures():
    rng = random.Random(0)
    for m in all_fixtures().values():
        assert ser.module_from_json(ser.module_to_json(m)) == m
        rows = enumerate_unimodular(m, m.rank)
        for row in rng.sample(rows, min(10, len(rows))):
            assert ser.row_from_json(m, ser.row_to_json(row)) == row
            res = normalize_row(row)
            assert ser.normalization_from_json(m, ser.normalization_to_json(res)) == res
            d = det_invariant(m, row)
            assert ser.det_from_json(m.ring, ser.det_to_json(d)) == d


def test_matrix_and_script_round_trip():
    Z = Integers()
    a = ExactMatrix(Z, [[2, 4], [6, 8]])
    assert ser.matrix_from_json(Z, ser.matrix_to_json(a)) == a
    res = normalize_row(all_fixtures()["Z5xZ5"].row([(2, 1), (3, 3)]))
    assert ser.script_from_json(Z, 2, ser.script_to_json(res.script)) == res.script
    p, _, _ = smith_normal_form(a)
    assert ser.matrix_from_json(Z, ser.matrix_to_json(p)) == p


def test_cyclic_module_and_moves_round_trip():
    cyc = CyclicModule(Integers(), (2, 3))
    assert type(ser.module_from_json(ser.module_to_json(cyc))) is CyclicModule
    moves = [I(0), L(1, 0), L(0, 2), I(2)]
    assert ser.moves_from_json(ser.moves_to_json(moves)) == moves
