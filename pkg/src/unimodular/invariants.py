"""Determinant invariant, E_n-equivalence with witnesses, orbit counts."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .errors import DimensionMismatch, RowTooShort
from .matrices import ExactMatrix, determinant
from .modules import (CyclicModule, InvariantFactorModule, RowTuple,
                      check_same_module, invariant_factor_form, transport)
from .normalize import normalize_row
from .rings import PrincipalIdeal, Ring
from .scripts import ElementaryScript


@dataclass(frozen=True)
class DetInvariant:
    quotient: PrincipalIdeal
    value: Any

    def __str__(self):
        ring = self.quotient.ring
        return f"{ring.format(self.value)} mod {self.quotient}"


def _factors_of(m):
    if isinstance(m, CyclicModule):
        return m.ring, m.factors
    ring, gens = m
    return ring, tuple(ring.ideal_generator(ring.canonical(g)) for g in gens)


def det_invariant(m, row) -> DetInvariant:
    """Determinant of the ``k x k`` residue matrix, read modulo ``b = b_1 + ... + b_k``.

    ``m`` is a module, or a pair ``(ring, [b_1, ..., b_k])`` describing an
    arbitrary cyclic decomposition; ``row`` is a :class:`RowTuple` or a list
    of coordinate tuples.
    """
    ring, factors = _factors_of(m)
    entries = row.entries if isinstance(row, RowTuple) else row
    k = len(factors)
    if len(entries) != k or any(len(e) != k for e in entries):
        raise DimensionMismatch(f"det invariant needs a {k} x {k} residue matrix")
    if k == 0:
        return DetInvariant(PrincipalIdeal(ring, ring.one), ring.reduce(ring.one, ring.one))
    b = ring.ideal_sum(factors)
    mat = ExactMatrix(ring, [[ring.reduce(ring.canonical(x), b) for x in e] for e in entries], k)
    return DetInvariant(PrincipalIdeal(ring, b), ring.reduce(determinant(mat), b))


def _to_if_form(row_a: RowTuple, row_b: RowTuple):
    m = row_a.module
    if isinstance(m, InvariantFactorModule):
        return row_a, row_b
    target, cob = invariant_factor_form(m)
    return transport(row_a, cob, target), transport(row_b, cob, target)


def are_E_equivalent(row_a: RowTuple, row_b: RowTuple):
    """Decide E_n(R)-equivalence; returns ``(verdict, witness script or None)``.

    The witness, replayed on ``row_a``, yields ``row_b`` exactly.
    """
    check_same_module(row_a, row_b)
    a, b = _to_if_form(row_a, row_b)
    ra, rb = normalize_row(a), normalize_row(b)
    n, k = row_a.length, row_a.module.rank
    if n == k:
        verdict = det_invariant(row_a.module, row_a) == det_invariant(row_a.module, row_b)
    else:
        # more slots than the decomposition has factors: transitive whenever
        # that exceeds the true rank, otherwise the determinant is trivial
        verdict = True
    if verdict != (ra.delta == rb.delta):
        raise AssertionError("determinant invariant disagrees with normal form")
    if not verdict:
        return False, None
    witness = ra.script + rb.script.inverse()
    if row_a.replay(witness) != row_b:
        raise AssertionError("equivalence witness failed to replay")
    return True, witness


def _if_module(m) -> InvariantFactorModule:
    return m if isinstance(m, InvariantFactorModule) else invariant_factor_form(m)[0]


def orbit_count(m: CyclicModule, n: int) -> int:
    """Number of E_n(R)-orbits on unimodular rows of length ``n``."""
    m = _if_module(m)
    k = m.rank
    if n < k:
        raise RowTooShort(f"length {n} < rank {k}")
    if n > k or k == 0:
        return 1
    return m.ring.unit_count(m.factors[0])


def unit_class_representatives(m: CyclicModule):
    """One canonical residue per unit of ``R/a_1``."""
    m = _if_module(m)
    ring: Ring = m.ring
    if m.rank == 0:
        return [ring.reduce(ring.one, ring.one)]
    return sorted(ring.units(m.factors[0]), key=ring.sort_key)


def identity_script(ring: Ring, n: int) -> ElementaryScript:
    return ElementaryScript(ring, n, ())
