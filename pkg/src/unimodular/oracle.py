"""Brute-force ground truth on small finite modules.

Nothing here calls the constructive pipeline: unimodularity is decided by
exhaustive subgroup closure and orbits by breadth-first search over rows
encoded as tuples of element indices.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

from .errors import BudgetExceeded, Unsupported
from .modules import CyclicModule, InvariantFactorModule, RowTuple

DEFAULT_BUDGET = 10 ** 7
GENERATOR_SETS = ("elementary", "elementary-full", "nielsen")


class FiniteModuleTable:
    """Index-based addition and scalar tables for a finite module."""

    def __init__(self, module: CyclicModule):
        if module.order() is None:
            raise Unsupported("orbit enumeration needs a finite module")
        ring = module.ring
        self.module = module
        self.elements = sorted(module.elements(),
                               key=lambda e: tuple(ring.sort_key(c) for c in e))
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.size = len(self.elements)
        idx, els = self.index, self.elements
        self.add = [[idx[module.add(x, y)] for y in els] for x in els]
        self.neg = [idx[module.neg(x)] for x in els]
        self.zero = idx[module.zero]
        self._scale = {}

    def scale(self, r):
        table = self._scale.get(r)
        if table is None:
            idx, m = self.index, self.module
            table = [idx[m.scale(r, x)] for x in self.elements]
            self._scale[r] = table
        return table

    def encode(self, entries):
        return tuple(self.index[self.module.element(e)] for e in entries)

    def decode(self, code):
        return tuple(self.elements[i] for i in code)

    def span_size(self, gens) -> int:
        add = self.add
        span = {self.zero}
        for g in gens:
            if g in span:
                continue
            seen = set(span)
            cur = list(span)
            while cur:
                cur = [y for y in (add[h][g] for h in cur) if y not in seen]
                seen.update(cur)
            span = seen
            if len(span) == self.size:
                break
        return len(span)


def _check_budget(table: FiniteModuleTable, n: int, budget: int):
    states = table.size ** n
    if states > budget:
        raise BudgetExceeded(f"{table.size}^{n} = {states} states exceed budget {budget}",
                             states=states, budget=budget)


def _unimodular_codes(table: FiniteModuleTable, n: int):
    scalar_tables = [table.scale(s) for s in table.module.scalar_generators()]
    out = []
    for code in itertools.product(range(table.size), repeat=n):
        gens = {t[c] for t in scalar_tables for c in code}
        if table.span_size(sorted(gens)) == table.size:
            out.append(code)
    return out


def generates(row: RowTuple) -> bool:
    """Subgroup-closure test: do the entries of ``row`` span the module?"""
    table = FiniteModuleTable(row.module)
    gens = {table.scale(s)[c] for s in row.module.scalar_generators()
            for c in table.encode(row.entries)}
    return table.span_size(sorted(gens)) == table.size


def enumerate_unimodular(m: CyclicModule, n: int, budget: int = DEFAULT_BUDGET):
    table = FiniteModuleTable(m)
    _check_budget(table, n, budget)
    return [RowTuple(m, table.decode(c)) for c in _unimodular_codes(table, n)]


def _moves(table: FiniteModuleTable, n: int, gens: str):
    """Generators as ``(target, source, table_or_None)`` triples.

    A move sets ``row[target] = row[target] + table[row[source]]``; a
    ``source`` of ``None`` means negation of ``row[target]``.
    """
    module = table.module
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    if gens == "nielsen":
        ident = list(range(table.size))
        return ([(i, j, ident) for i, j in pairs] +   # L_ij: g_i <- g_j + g_i
                [(i, None, None) for i in range(n)])  # I_i:  g_i <- -g_i
    if gens == "elementary":
        scalars = []
        for s in module.scalar_generators():
            scalars.append(s)
            scalars.append(module.ring.neg(s))
    elif gens == "elementary-full":
        ring = module.ring
        if not isinstance(module, InvariantFactorModule):
            raise Unsupported("full generator set needs an invariant-factor module")
        # the last factor annihilates the module
        ann = module.factors[-1] if module.factors else ring.one
        scalars = [r for r in ring.residues(ann) if not ring.is_zero(r)]
    else:
        raise ValueError(f"generator set must be one of {GENERATOR_SETS}")
    tables = []
    for s in scalars:
        t = table.scale(s)
        if t not in tables:
            tables.append(t)
    # e_ji(s): slot i += s * slot j
    return [(i, j, t) for i, j in pairs for t in tables]


@dataclass
class OrbitPartition:
    module: CyclicModule
    n: int
    generator_set: str
    classes: list                   # each class: sorted list of rows (tuples of coordinates)
    state_count: int                # number of unimodular rows enumerated
    _lookup: dict = field(default=None, repr=False, compare=False)

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def sizes(self):
        return [len(c) for c in self.classes]

    def representatives(self):
        return [c[0] for c in self.classes]

    def class_of(self, row) -> int:
        if self._lookup is None:
            self._lookup = {r: i for i, c in enumerate(self.classes) for r in c}
        entries = row.entries if isinstance(row, RowTuple) else tuple(
            self.module.element(e) for e in row)
        return self._lookup[entries]

    def rows(self, i):
        return [RowTuple(self.module, r) for r in self.classes[i]]


def orbit_partition(m: CyclicModule, n: int, gens: str = "elementary",
                    budget: int = DEFAULT_BUDGET) -> OrbitPartition:
    """Partition the unimodular rows of length ``n`` into orbits by BFS."""
    if gens not in GENERATOR_SETS:
        raise ValueError(f"generator set must be one of {GENERATOR_SETS}")
    table = FiniteModuleTable(m)
    _check_budget(table, n, budget)
    codes = _unimodular_codes(table, n)
    moves = _moves(table, n, gens)
    add, neg = table.add, table.neg
    unseen = set(codes)
    classes = []
    for start in codes:                 # codes come out in lexicographic order
        if start not in unseen:
            continue
        unseen.discard(start)
        orbit = [start]
        queue = deque([start])
        while queue:
            row = queue.popleft()
            for tgt, src, t in moves:
                new = list(row)
                new[tgt] = neg[row[tgt]] if src is None else add[row[tgt]][t[row[src]]]
                new = tuple(new)
                if new in unseen:
                    unseen.discard(new)
                    orbit.append(new)
                    queue.append(new)
        orbit.sort()
        classes.append([table.decode(c) for c in orbit])
    return OrbitPartition(m, n, gens, classes, len(codes))
