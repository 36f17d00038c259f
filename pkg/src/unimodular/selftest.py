"""Finite-fixture self-test: the constructive pipeline against the BFS oracle."""
from __future__ import annotations

import random

from .fixtures import all_fixtures
from .invariants import are_E_equivalent, det_invariant, orbit_count
from .nielsen import are_nielsen_equivalent, nielsen_class_count, replay_moves
from .normalize import normalize_row
from .oracle import DEFAULT_BUDGET, orbit_partition
from .rings import Integers


def _check_fixture(name, m, n, rng, pairs, budget):
    results = []

    def record(check, ok, detail=""):
        results.append({"fixture": name, "n": n, "check": check, "ok": bool(ok),
                        "detail": detail})

    part = orbit_partition(m, n, "elementary", budget)
    expected = orbit_count(m, n)
    record("orbit_count", part.class_count == expected,
           f"bfs={part.class_count} formula={expected}")

    canon_of_class = []
    ok_replay = ok_delta = ok_class = True
    for cls in part.classes:
        seen = set()
        for entries in cls:
            row = m.row(entries)
            res = normalize_row(row)
            ok_replay &= row.replay(res.script) == res.canonical
            ok_delta &= n == m.rank or res.delta == m.ring.reduce(m.ring.one, m.factors[0])
            seen.add(res.canonical.entries)
        ok_class &= len(seen) == 1
        canon_of_class.append(seen.pop() if seen else None)
    record("witness_replay", ok_replay)
    record("delta_one_when_long", ok_delta)
    record("one_canonical_per_class", ok_class and len(set(canon_of_class)) == len(canon_of_class))

    if n == m.rank:
        dets = [{det_invariant(m, r) for r in cls} for cls in part.classes]
        constant = all(len(d) == 1 for d in dets)
        distinct = len({next(iter(d)) for d in dets}) == len(dets) if constant else False
        record("det_complete", constant and distinct)

    rows = [r for cls in part.classes for r in cls]
    ok_pairs = True
    for _ in range(pairs):
        a, b = m.row(rng.choice(rows)), m.row(rng.choice(rows))
        verdict, witness = are_E_equivalent(a, b)
        ok_pairs &= verdict == (part.class_of(a) == part.class_of(b))
        if verdict:
            ok_pairs &= a.replay(witness) == b
    record("equivalence_vs_bfs", ok_pairs)

    if m.ring == Integers():
        npart = orbit_partition(m, n, "nielsen", budget)
        formula = nielsen_class_count(m, n)
        record("nielsen_count", npart.class_count == formula,
               f"bfs={npart.class_count} formula={formula}")
        ok_moves = True
        for _ in range(pairs):
            a, b = m.row(rng.choice(rows)), m.row(rng.choice(rows))
            verdict, moves = are_nielsen_equivalent(a, b)
            ok_moves &= verdict == (npart.class_of(a) == npart.class_of(b))
            if verdict:
                ok_moves &= replay_moves(moves, a) == b
        record("nielsen_vs_bfs", ok_moves)
    return results


def run_selftest(seed: int = 0, budget: int = DEFAULT_BUDGET, pairs: int = 20,
                 max_states: int = 20_000):
    """Run every check on every fixture whose row space has at most ``max_states`` rows."""
    rng = random.Random(seed)
    results = []
    for name, m in all_fixtures().items():
        for n in (m.rank, m.rank + 1):
            if m.order() ** n > max_states:
                continue
            results.extend(_check_fixture(name, m, n, rng, pairs, budget))
    return results
