"""JSON encodings for rings, elements, matrices, scripts, modules, rows and results.

Slot and move indices are 0-based throughout.
"""
from __future__ import annotations

from .invariants import DetInvariant
from .matrices import ExactMatrix
from .modules import CyclicModule, InvariantFactorModule, RowTuple
from .nielsen import NielsenMove
from .normalize import NormalizationResult
from .oracle import OrbitPartition
from .rings import PrincipalIdeal, Ring, ring_from_json
from .scripts import ElementaryScript


def ring_to_json(ring: Ring):
    return ring.describe()


def matrix_to_json(m: ExactMatrix):
    return [[m.ring.to_json(x) for x in r] for r in m.rows]


def matrix_from_json(ring: Ring, obj, ncols=None) -> ExactMatrix:
    return ExactMatrix(ring, [[ring.from_json(x) for x in r] for r in obj], ncols)


def script_to_json(s: ElementaryScript):
    return [{"source": op.source, "target": op.target,
             "coefficient": s.ring.to_json(op.coefficient)} for op in s.ops]


def script_from_json(ring: Ring, dimension: int, obj) -> ElementaryScript:
    triples = [(int(o["source"]), int(o["target"]), ring.from_json(o["coefficient"]))
               for o in obj]
    return ElementaryScript.from_triples(ring, dimension, triples)


def module_to_json(m: CyclicModule):
    out = {"ring": m.ring.describe(), "factors": [m.ring.to_json(g) for g in m.factors]}
    if not isinstance(m, InvariantFactorModule):
        out["decomposition"] = "cyclic"
    return out


def module_from_json(obj) -> CyclicModule:
    ring = ring_from_json(obj["ring"])
    factors = tuple(ring.from_json(g) for g in obj["factors"])
    if obj.get("decomposition", "invariant") == "cyclic":
        return CyclicModule(ring, factors)
    return InvariantFactorModule(ring, factors)


def row_to_json(row: RowTuple):
    ring = row.module.ring
    return [[ring.to_json(x) for x in e] for e in row.entries]


def row_from_json(module: CyclicModule, obj) -> RowTuple:
    ring = module.ring
    return RowTuple(module, [[ring.from_json(x) for x in e] for e in obj])


def det_to_json(d: DetInvariant):
    ring = d.quotient.ring
    return {"modulus": ring.to_json(d.quotient.generator), "value": ring.to_json(d.value)}


def det_from_json(ring: Ring, obj) -> DetInvariant:
    return DetInvariant(PrincipalIdeal(ring, ring.from_json(obj["modulus"])),
                        ring.from_json(obj["value"]))


def normalization_to_json(r: NormalizationResult):
    ring = r.canonical.module.ring
    return {"delta": ring.to_json(r.delta), "script": script_to_json(r.script),
            "canonical": row_to_json(r.canonical)}


def normalization_from_json(module: CyclicModule, obj) -> NormalizationResult:
    ring = module.ring
    canon = row_from_json(module, obj["canonical"])
    return NormalizationResult(ring.from_json(obj["delta"]),
                               script_from_json(ring, canon.length, obj["script"]), canon)


def moves_to_json(moves):
    return [{"L": [m.i, m.j]} if m.kind == "L" else {"I": m.i} for m in moves]


def moves_from_json(obj):
    out = []
    for m in obj:
        if "L" in m:
            i, j = m["L"]
            out.append(NielsenMove("L", int(i), int(j)))
        else:
            out.append(NielsenMove("I", int(m["I"])))
    return out


def partition_to_json(p: OrbitPartition):
    ring = p.module.ring
    enc = lambda row: [[ring.to_json(x) for x in e] for e in row]  # noqa: E731
    return {"module": module_to_json(p.module), "n": p.n, "generators": p.generator_set,
            "state_count": p.state_count, "class_count": p.class_count,
            "class_sizes": p.sizes(), "representatives": [enc(r) for r in p.representatives()]}
