"""Transvection scripts: the persistent witness format for E_n(R) membership.

An :class:`ElementaryOp` ``(source, target, c)`` means "add ``c`` times slot
``source`` to slot ``target``".  Read as a matrix acting on a row vector from
the right, it is ``I + c * E[source][target]``.  A script's matrix is the
product of its ops' matrices, in order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from .errors import DimensionMismatch


@dataclass(frozen=True)
class ElementaryOp:
    source: int
    target: int
    coefficient: Any

    def __post_init__(self):
        if self.source == self.target:
            raise ValueError("transvection needs source != target")
        if self.source < 0 or self.target < 0:
            raise ValueError("negative slot index")


@dataclass(frozen=True)
class ElementaryScript:
    ring: Any
    dimension: int
    ops: tuple = field(default=())

    def __post_init__(self):
        ops = tuple(self.ops)
        object.__setattr__(self, "ops", ops)
        for op in ops:
            if op.source >= self.dimension or op.target >= self.dimension:
                raise DimensionMismatch(
                    f"op {op} out of range for dimension {self.dimension}")

    @classmethod
    def from_triples(cls, ring, dimension, triples):
        ops = [ElementaryOp(s, t, ring.canonical(c)) for s, t, c in triples]
        return cls(ring, dimension, tuple(ops))

    def __len__(self):
        return len(self.ops)

    def __iter__(self):
        return iter(self.ops)

    def __add__(self, other: "ElementaryScript") -> "ElementaryScript":
        if other.dimension != self.dimension:
            raise DimensionMismatch("cannot concatenate scripts of different dimension")
        return ElementaryScript(self.ring, self.dimension, self.ops + other.ops)

    def inverse(self) -> "ElementaryScript":
        neg = self.ring.neg
        ops = tuple(ElementaryOp(op.source, op.target, neg(op.coefficient))
                    for op in reversed(self.ops))
        return ElementaryScript(self.ring, self.dimension, ops)

    def embed(self, slots: Sequence[int], dimension: int) -> "ElementaryScript":
        """Relabel slot ``i`` as ``slots[i]`` inside a larger dimension."""
        ops = tuple(ElementaryOp(slots[op.source], slots[op.target], op.coefficient)
                    for op in self.ops)
        return ElementaryScript(self.ring, dimension, ops)

    def is_trivial(self) -> bool:
        is_zero = self.ring.is_zero
        return all(is_zero(op.coefficient) for op in self.ops)

    def replay(self, slots: Sequence, axpy: Callable) -> list:
        """Apply the script to ``slots``; ``axpy(c, x, y)`` must return ``y + c*x``."""
        if len(slots) != self.dimension:
            raise DimensionMismatch(
                f"script has dimension {self.dimension}, got {len(slots)} slots")
        out = list(slots)
        for op in self.ops:
            out[op.target] = axpy(op.coefficient, out[op.source], out[op.target])
        return out

    def replay_ring(self, values: Sequence) -> list:
        ring = self.ring
        return self.replay(values, lambda c, x, y: ring.add(y, ring.mul(c, x)))
