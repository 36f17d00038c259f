"""Constructive normal form for unimodular rows.

Every row ``m`` of length ``n >= k`` over an invariant-factor module
``R/a_1 x ... x R/a_k`` is carried by transvections to
``(delta*e_1, e_2, ..., e_k, 0, ..., 0)`` with ``delta`` a unit modulo
``a_1``; when ``n > k`` the unit is absorbed and ``delta = 1``.

Coordinates are processed from the smallest ideal ``a_k`` up to ``a_1``.
The pivot for coordinate ``j`` is slot ``j``, so that slot ``s`` ends up
carrying ``e_s`` and no slot permutation is needed at the end.  Slots still
"active" while coordinate ``j`` is processed are ``0..j`` and ``k..n-1``.

Two routes are offered and must agree on ``delta``:

* ``"sweep"``: every pivot that has a spare active slot is turned into 1
  right away with three transvections;
* ``"whitehead"``: only the first pivot is made 1; after diagonalization the
  remaining units are pushed into slot 0 by six-transvection Whitehead
  blocks, then absorbed using slot ``k`` when ``n > k``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .errors import (IdealChainViolation, NotAUnit, NotUnimodular, RowTooShort)
from .modules import InvariantFactorModule, RowTuple, canonical_row
from .rings import cancel_triples, whitehead_triples
from .scripts import ElementaryScript


@dataclass(frozen=True)
class NormalizationResult:
    delta: Any
    script: ElementaryScript
    canonical: RowTuple


class _Work:
    def __init__(self, row: RowTuple):
        self.module = row.module
        self.ring = row.module.ring
        self.entries = list(row.entries)
        self.triples = []

    def op(self, source, target, c):
        m = self.module
        self.triples.append((source, target, c))
        self.entries[target] = m.axpy(c, self.entries[source], self.entries[target])

    def unit_residue(self, j):
        return self.ring.reduce(self.ring.one, self.module.factors[j])

    def script(self):
        return ElementaryScript.from_triples(self.ring, len(self.entries), self.triples)


def _require_if_module(row: RowTuple) -> InvariantFactorModule:
    m = row.module
    if not isinstance(m, InvariantFactorModule):
        raise TypeError("normalization needs an InvariantFactorModule; "
                        "use modules.invariant_factor_form first")
    return m


def _active_slots(j, k, n):
    return [j] + list(range(j)) + list(range(k, n))


def _make_pivot_one(w: _Work, j: int, helper: int) -> bool:
    ring = w.ring
    g = w.module.factors[j]
    d = w.entries[j][j]
    one = w.unit_residue(j)
    if d == one:
        return True
    try:
        v = ring.inverse_mod(d, g)
    except NotAUnit:
        return False
    w.op(j, helper, v)                      # helper_j = v*d = 1
    w.op(helper, j, ring.sub(ring.one, d))  # pivot = d + (1 - d) = 1
    w.op(j, helper, ring.neg(ring.one))     # helper_j = 0
    return True


def _triangularize(w: _Work, unit_pivots: str):
    k, n = w.module.rank, len(w.entries)
    ring = w.ring
    for j in reversed(range(k)):
        active = _active_slots(j, k, n)
        if len(active) < 2:
            continue
        _, triples = cancel_triples(ring, [w.entries[s][j] for s in active], canonical=False)
        for s, t, c in triples:
            w.op(active[s], active[t], c)
        if unit_pivots == "all" or j == k - 1:
            _make_pivot_one(w, j, active[1])


def triangularize(row: RowTuple, unit_pivots: str = "first"):
    """Clear each coordinate below its pivot slot.

    Returns ``(script, tri)``.  In ``tri`` slot ``s`` is supported on
    coordinates ``0..s`` and slots ``k..n-1`` vanish.  For a unimodular input
    every diagonal residue is a unit and the first processed pivot (slot
    ``k-1``) equals 1 whenever a spare slot exists.
    """
    m = _require_if_module(row)
    if unit_pivots not in ("first", "all"):
        raise ValueError("unit_pivots must be 'first' or 'all'")
    w = _Work(row)
    if m.rank:
        _triangularize(w, unit_pivots)
    return w.script(), RowTuple(m, w.entries)


def _first_non_unit(m: InvariantFactorModule, entries):
    ring = m.ring
    for j, g in enumerate(m.factors):
        try:
            ring.inverse_mod(entries[j][j], g)
        except NotAUnit:
            return j
    return None


def diagonal_units_ok(tri: RowTuple) -> bool:
    return _first_non_unit(tri.module, tri.entries) is None


def _clear_to_diagonal(w: _Work):
    ring = w.ring
    factors = w.module.factors
    k = len(factors)
    for s in range(1, k):
        for j in range(s - 1, -1, -1):
            x = w.entries[s][j]
            if ring.is_zero(x):
                continue
            inv = ring.inverse_mod(w.entries[j][j], factors[j])
            w.op(j, s, ring.reduce(ring.neg(ring.mul(x, inv)), factors[j]))


def _absorb(w: _Work):
    """Turn ``delta*e_1`` into ``e_1`` using the zero slot ``k``."""
    ring = w.ring
    a1 = w.module.factors[0]
    k = w.module.rank
    delta = w.entries[0][0]
    if delta == w.unit_residue(0):
        return
    c = ring.reduce(ring.sub(ring.inverse_mod(delta, a1), ring.one), a1)
    w.op(0, k, c)                          # slot k = (1 - delta) e_1
    w.op(k, 0, ring.one)                   # slot 0 = e_1
    w.op(0, k, ring.sub(delta, ring.one))  # slot k = 0


def _transfer_triples(m: InvariantFactorModule, entries, j, k_idx, u):
    ring = m.ring
    if j == k_idx:
        raise ValueError("source and target slots must differ")
    aj, ak = m.factors[j], m.factors[k_idx]
    if not ring.divides(ak, aj):
        raise IdealChainViolation(
            f"factor ({ring.format(aj)}) at slot {j} is not contained in "
            f"({ring.format(ak)}) at slot {k_idx}")
    v = ring.inverse_mod(u, aj)
    return whitehead_triples(ring, u, v, k_idx, j)


def unit_transfer(row: RowTuple, j: int, k_idx: int, u=None):
    """Move the diagonal unit of slot ``j`` into slot ``k_idx``.

    Slots ``j`` and ``k_idx`` must each be supported on their own coordinate.
    Afterwards slot ``j`` carries ``e_j`` and slot ``k_idx`` has its
    coordinate multiplied by ``u``.  This needs ``a_j ⊆ a_{k_idx}``, i.e.
    ``k_idx <= j`` in the stored chain.
    """
    m = _require_if_module(row)
    ring = m.ring
    for s in (j, k_idx):
        if any(not ring.is_zero(x) for c, x in enumerate(row.entries[s]) if c != s):
            raise ValueError(f"slot {s} is not diagonal")
    if u is None:
        u = row.entries[j][j]
    else:
        u = ring.reduce(ring.canonical(getattr(u, "value", u)), m.factors[j])
        if u != row.entries[j][j]:
            raise ValueError("u must be the diagonal residue at slot j")
    triples = _transfer_triples(m, row.entries, j, k_idx, u)
    w = _Work(row)
    for t in triples:
        w.op(*t)
    return w.script(), RowTuple(m, w.entries)


def normalize_row(row: RowTuple, method: str = "sweep", verify: bool = True) -> NormalizationResult:
    """Carry ``row`` to its canonical form and return the witness script."""
    m = _require_if_module(row)
    ring = m.ring
    k, n = m.rank, row.length
    if n < k:
        raise RowTooShort(f"row of length {n} cannot generate a module of rank {k}")
    if method not in ("sweep", "whitehead"):
        raise ValueError("method must be 'sweep' or 'whitehead'")
    w = _Work(row)
    if k == 0:
        delta = ring.reduce(ring.one, ring.one)
    else:
        _triangularize(w, "all" if method == "sweep" else "first")
        bad = _first_non_unit(m, w.entries)
        if bad is not None:
            raise NotUnimodular(
                f"diagonal residue {ring.format(w.entries[bad][bad])} at coordinate {bad} "
                f"is not a unit modulo {ring.format(m.factors[bad])}",
                coordinate=bad, residue=ring.format(w.entries[bad][bad]))
        _clear_to_diagonal(w)
        if method == "whitehead":
            for s in range(1, k):
                u = w.entries[s][s]
                if u != w.unit_residue(s):
                    for t in _transfer_triples(m, w.entries, s, 0, u):
                        w.op(*t)
        if n > k:
            _absorb(w)
        delta = w.entries[0][0]
    canon = canonical_row(m, delta, n)
    script = w.script()
    if verify:
        replayed = row.replay(script)
        if replayed != canon or tuple(w.entries) != canon.entries:
            raise AssertionError("normalization witness failed to replay")
    return NormalizationResult(delta, script, canon)
