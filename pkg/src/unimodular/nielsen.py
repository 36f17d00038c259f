"""Nielsen equivalence of generating vectors of finitely generated Abelian groups.

Groups are written additively: ``L(i, j)`` replaces ``g_i`` by ``g_j + g_i``
and ``I(i)`` replaces ``g_i`` by ``-g_i``.  Over the integers Nielsen classes
are the orbits of ``GL_n(Z) = D_n({±1}) E_n(Z)``, so the decision reduces to
the elementary case after an optional sign flip of the first slot.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .errors import (BudgetExceeded, NotGenerating, NotUnimodular, RowTooShort,
                     Unsupported)
from .invariants import are_E_equivalent
from .modules import (CyclicModule, InvariantFactorModule, RowTuple,
                      canonical_row, check_same_module, invariant_factor_form)
from .rings import Integers, euler_phi
from .scripts import ElementaryScript

DEFAULT_EXPANSION_CAP = 10_000

__all__ = [
    "NielsenMove", "NielsenClassReport", "euler_phi", "nielsen_class_count",
    "nielsen_classes", "are_nielsen_equivalent", "nielsen_witness", "expand_script",
    "replay_moves", "DEFAULT_EXPANSION_CAP",
]


@dataclass(frozen=True)
class NielsenMove:
    kind: str                 # "L" or "I"
    i: int
    j: Optional[int] = None

    def __post_init__(self):
        if self.kind == "L":
            if self.j is None or self.i == self.j:
                raise ValueError("L move needs two distinct indices")
        elif self.kind == "I":
            if self.j is not None:
                raise ValueError("I move takes a single index")
        else:
            raise ValueError(f"unknown move kind {self.kind!r}")

    def __str__(self):
        return f"L({self.i},{self.j})" if self.kind == "L" else f"I({self.i})"


def L(i, j):
    return NielsenMove("L", i, j)


def I(i):  # noqa: E743
    return NielsenMove("I", i)


@dataclass(frozen=True)
class NielsenClassReport:
    group: InvariantFactorModule
    n: int
    class_count: int
    representatives: list


def _z_module(m: CyclicModule) -> InvariantFactorModule:
    if m.ring != Integers():
        raise Unsupported("Nielsen equivalence is implemented for Z-modules only")
    if not isinstance(m, InvariantFactorModule):
        m = invariant_factor_form(m)[0]
    return m


def nielsen_class_count(g: CyclicModule, n: int) -> int:
    g = _z_module(g)
    k = g.rank
    if n < k:
        raise RowTooShort(f"length {n} < rank {k}")
    if n > k or k == 0:
        return 1
    return max(euler_phi(g.factors[0]) // 2, 1)


def _sign_representatives(d1: int):
    """Least residue of each unit class modulo sign."""
    if d1 == 0:
        return [1]
    return sorted({min(u, d1 - u) for u in range(1, d1) if gcd(u, d1) == 1})


def nielsen_classes(g: CyclicModule, n: int) -> NielsenClassReport:
    """Class count plus one canonical representative per Nielsen class."""
    g = _z_module(g)
    count = nielsen_class_count(g, n)
    if n > g.rank or g.rank == 0:
        reps = [canonical_row(g, 1, n)]
    else:
        reps = [canonical_row(g, d, n) for d in _sign_representatives(g.factors[0])]
    assert len(reps) == count
    return NielsenClassReport(g, n, count, reps)


def replay_moves(moves, row: RowTuple) -> RowTuple:
    m = row.module
    entries = list(row.entries)
    for mv in moves:
        if mv.kind == "L":
            entries[mv.i] = m.add(entries[mv.j], entries[mv.i])
        else:
            entries[mv.i] = m.neg(entries[mv.i])
    return RowTuple(m, entries)


def expand_script(script: ElementaryScript, signs=None, cap: int = DEFAULT_EXPANSION_CAP):
    """Expand ``D(signs)`` followed by ``script`` into L/I moves.

    ``add r * slot s to slot t`` becomes ``|r|`` copies of ``L(t, s)``,
    conjugated by ``I(s)`` when ``r < 0``.
    """
    n = script.dimension
    signs = [1] * n if signs is None else list(signs)
    if len(signs) != n or any(s not in (1, -1) for s in signs):
        raise ValueError("signs must be a list of +1/-1 of the script's dimension")
    moves = [I(i) for i, s in enumerate(signs) if s == -1]
    for op in script.ops:
        r = op.coefficient
        if not isinstance(r, int):
            raise Unsupported("only integer scripts expand to Nielsen moves")
        block = [L(op.target, op.source)] * abs(r)
        if r < 0:
            block = [I(op.source)] + block + [I(op.source)]
        moves.extend(block)
        if len(moves) > cap:
            raise BudgetExceeded(f"expanded move list exceeds cap {cap}", cap=cap)
    return moves


def _shrink(script: ElementaryScript, exponent: int) -> ElementaryScript:
    """Reduce coefficients to the symmetric range modulo the group exponent."""
    if exponent == 0:
        return script
    half = exponent // 2
    triples = []
    for op in script.ops:
        r = op.coefficient % exponent
        if r > half:
            r -= exponent
        if r:
            triples.append((op.source, op.target, r))
    return ElementaryScript.from_triples(script.ring, script.dimension, triples)


def nielsen_witness(a: RowTuple, b: RowTuple):
    """Compressed witness: ``(verdict, signs, script)`` with ``b = a·D(signs)·E``."""
    check_same_module(a, b)
    g = _z_module(a.module)
    signs = [1] * a.length
    try:
        ok, script = are_E_equivalent(a, b)
        if not ok:
            signs[0] = -1
            flipped = RowTuple(a.module, [a.module.neg(a.entries[0])] + list(a.entries[1:]))
            ok, script = are_E_equivalent(flipped, b)
    except NotUnimodular as exc:
        raise NotGenerating(f"not a generating vector: {exc}") from None
    if not ok:
        return False, None, None
    exponent = g.factors[-1] if g.factors else 1
    return True, signs, _shrink(script, exponent)


def are_nielsen_equivalent(a: RowTuple, b: RowTuple, cap: int = DEFAULT_EXPANSION_CAP):
    """Return ``(verdict, moves)``; replaying ``moves`` on ``a`` gives ``b``."""
    ok, signs, script = nielsen_witness(a, b)
    if not ok:
        return False, None
    moves = expand_script(script, signs, cap)
    if replay_moves(moves, a) != b:
        raise AssertionError("Nielsen witness failed to replay")
    return True, moves
