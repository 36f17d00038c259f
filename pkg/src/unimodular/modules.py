"""Cyclic decompositions, invariant-factor modules and rows of module elements.

A module element is a tuple of coordinates, coordinate ``j`` a canonical
residue modulo the ``j``-th factor ideal.  Factors are stored in divisibility
order: ``a_1 ⊇ a_2 ⊇ ... ⊇ a_k`` (over the integers ``d_1 | d_2 | ... | d_k``).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterator

from .errors import (DimensionMismatch, IdealChainViolation, ModuleMismatch,
                     NotAUnit, RowTooShort, Unsupported)
from .matrices import ExactMatrix, smith_normal_form
from .rings import PrincipalIdeal, Ring, RingElement


def _raw(ring: Ring, x):
    if isinstance(x, PrincipalIdeal):
        return x.generator
    if isinstance(x, RingElement):
        return x.value
    return ring.canonical(x)


@dataclass(frozen=True)
class CyclicModule:
    """``R/b_1 x ... x R/b_k`` for arbitrary ideals ``b_j`` (no chain condition)."""

    ring: Ring
    factors: tuple

    def __post_init__(self):
        ring = self.ring
        object.__setattr__(self, "factors",
                           tuple(ring.ideal_generator(_raw(ring, g)) for g in self.factors))

    @property
    def rank(self) -> int:
        return len(self.factors)

    def ideals(self):
        return [PrincipalIdeal(self.ring, g) for g in self.factors]

    @property
    def zero(self):
        return tuple(self.ring.zero for _ in self.factors)

    def basis(self, i):
        ring = self.ring
        return tuple(ring.reduce(ring.one, g) if j == i else ring.zero
                     for j, g in enumerate(self.factors))

    def element(self, coords):
        if len(coords) != len(self.factors):
            raise DimensionMismatch(f"expected {len(self.factors)} coordinates, got {len(coords)}")
        ring = self.ring
        return tuple(ring.reduce(_raw(ring, x), g) for x, g in zip(coords, self.factors))

    def add(self, x, y):
        ring = self.ring
        return tuple(ring.reduce(ring.add(a, b), g) for a, b, g in zip(x, y, self.factors))

    def neg(self, x):
        ring = self.ring
        return tuple(ring.reduce(ring.neg(a), g) for a, g in zip(x, self.factors))

    def scale(self, r, x):
        ring = self.ring
        return tuple(ring.reduce(ring.mul(r, a), g) for a, g in zip(x, self.factors))

    def axpy(self, c, x, y):
        """``y + c*x``."""
        ring = self.ring
        return tuple(ring.reduce(ring.add(b, ring.mul(c, a)), g)
                     for a, b, g in zip(x, y, self.factors))

    def order(self):
        total = 1
        for g in self.factors:
            c = self.ring.residue_count(g)
            if c is None:
                return None
            total *= c
        return total

    def elements(self) -> Iterator[tuple]:
        import itertools
        if self.order() is None:
            raise Unsupported("module is infinite")
        return itertools.product(*(list(self.ring.residues(g)) for g in self.factors))

    def scalar_generators(self):
        """Ring elements whose multiples of any generating set span the module additively."""
        seen = []
        for g in self.factors:
            for s in self.ring.additive_generators(g):
                if s not in seen:
                    seen.append(s)
        return seen or [self.ring.one]

    def row(self, entries) -> "RowTuple":
        return RowTuple(self, entries)

    def __str__(self):
        if not self.factors:
            return "0"
        return " x ".join(f"R/({self.ring.format(g)})" for g in self.factors)


@dataclass(frozen=True)
class InvariantFactorModule(CyclicModule):
    """Cyclic decomposition obeying ``R != a_1 ⊇ a_2 ⊇ ... ⊇ a_k``."""

    def __post_init__(self):
        super().__post_init__()
        ring, f = self.ring, self.factors
        if f and ring.is_unit(f[0]):
            raise IdealChainViolation("first invariant factor must be a proper ideal")
        for a, b in zip(f, f[1:]):
            if not ring.divides(a, b):
                raise IdealChainViolation(
                    f"({ring.format(a)}) does not contain ({ring.format(b)})")


@dataclass(frozen=True)
class RowTuple:
    """``n`` elements of a module, stored as an ``n x k`` residue matrix."""

    module: CyclicModule
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries",
                           tuple(self.module.element(e) for e in self.entries))

    @property
    def length(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def matrix(self) -> ExactMatrix:
        return ExactMatrix(self.module.ring, self.entries, self.module.rank)

    def replay(self, script) -> "RowTuple":
        """Apply an elementary script (acting on slots) to this row."""
        if script.ring != self.module.ring:
            from .errors import RingMismatch
            raise RingMismatch("script ring differs from module ring")
        return RowTuple(self.module, script.replay(self.entries, self.module.axpy))


def module_from_relations(a: ExactMatrix):
    """Invariant-factor module of ``R^n / rowspace(a)`` plus its change of basis.

    The returned ``n x k`` matrix ``C`` sends ambient coordinates to
    decomposition coordinates (``x -> x @ C``).
    """
    ring = a.ring
    n = a.ncols
    p, d, q = smith_normal_form(a)
    diag = d.diagonal_entries() + [ring.zero] * (n - min(a.nrows, n))
    keep = [i for i, g in enumerate(diag) if not ring.is_unit(g)]
    factors = tuple(diag[i] for i in keep)
    module = InvariantFactorModule(ring, factors)
    cob = [[ring.reduce(q.rows[r][i], g) for i, g in zip(keep, factors)] for r in range(n)]
    return module, ExactMatrix(ring, cob, len(keep))


def transport(row: RowTuple, change_of_basis: ExactMatrix, target: CyclicModule) -> RowTuple:
    """Push a row through the coordinate map ``x -> x @ C`` into ``target``."""
    ring = target.ring
    if change_of_basis.nrows != row.module.rank or change_of_basis.ncols != target.rank:
        raise DimensionMismatch("change of basis does not match modules")
    cols = list(zip(*change_of_basis.rows)) if change_of_basis.nrows else \
        [()] * change_of_basis.ncols
    out = []
    for x in row.entries:
        coords = []
        for col in cols:
            acc = ring.zero
            for a, b in zip(x, col):
                acc = ring.add(acc, ring.mul(a, b))
            coords.append(acc)
        out.append(coords)
    return RowTuple(target, out)


def invariant_factor_form(module: CyclicModule):
    """Invariant-factor module isomorphic to ``module`` and the coordinate map to it."""
    if isinstance(module, InvariantFactorModule):
        return module, ExactMatrix.identity(module.ring, module.rank)
    rel = ExactMatrix.diagonal(module.ring, module.factors)
    return module_from_relations(rel)


def relation_ideal(m: CyclicModule) -> PrincipalIdeal:
    """First invariant factor (the whole ring for the trivial module)."""
    if not isinstance(m, InvariantFactorModule):
        m = invariant_factor_form(m)[0]
    if not m.factors:
        return PrincipalIdeal(m.ring, m.ring.one)
    return PrincipalIdeal(m.ring, m.factors[0])


def canonical_row(m: InvariantFactorModule, delta: Any, n: int) -> RowTuple:
    """The row ``(delta*e_1, e_2, ..., e_k, 0, ..., 0)`` of length ``n``."""
    k = m.rank
    if n < k:
        raise RowTooShort(f"length {n} < rank {k}")
    entries = [m.zero] * n
    for i in range(k):
        entries[i] = m.basis(i)
    if k:
        ring = m.ring
        delta = _raw(ring, delta)
        a1 = m.factors[0]
        # raises NotAUnit for non-units
        try:
            ring.inverse_mod(ring.reduce(delta, a1), a1)
        except NotAUnit as exc:
            raise NotAUnit(f"delta {ring.format(delta)} is not a unit modulo "
                           f"{ring.format(a1)}", **exc.details) from None
        entries[0] = m.scale(delta, m.basis(0))
    return RowTuple(m, entries)


def check_same_module(a: RowTuple, b: RowTuple):
    if a.module != b.module:
        raise ModuleMismatch("rows belong to different modules")
    if a.length != b.length:
        raise ModuleMismatch(f"row lengths differ ({a.length} vs {b.length})")


def is_unimodular(row: RowTuple) -> bool:
    """Do the entries of ``row`` generate the module?"""
    from .normalize import diagonal_units_ok, triangularize
    m = row.module
    if not isinstance(m, InvariantFactorModule):
        m, cob = invariant_factor_form(m)
        row = transport(row, cob, m)
    if row.length < m.rank:
        return False
    if m.rank == 0:
        return True
    _, tri = triangularize(row)
    return diagonal_units_ok(tri)
