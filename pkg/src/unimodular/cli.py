"""Command-line entry point.

Each invocation reads one JSON document (file argument or stdin), runs one
command and writes one JSON document on a single line.  Exit status: 0 on
success, 1 on a domain error, 2 on a malformed request.
"""
from __future__ import annotations

import argparse
import json
import sys

import jsonschema

from . import serialize as ser
from .errors import AlgebraError
from .invariants import are_E_equivalent, det_invariant, orbit_count, unit_class_representatives
from .matrices import smith_normal_form
from .modules import InvariantFactorModule, canonical_row, invariant_factor_form, module_from_relations
from .nielsen import (DEFAULT_EXPANSION_CAP, expand_script, nielsen_classes,
                      nielsen_witness, replay_moves)
from .normalize import normalize_row
from .oracle import DEFAULT_BUDGET, orbit_partition
from .rings import ring_from_json
from .selftest import run_selftest

COMMANDS = ("snf", "decompose", "normalize", "det", "equiv", "nielsen-equiv",
            "classes", "orbits", "selftest")

_ELEMENT = {"type": ["string", "integer", "array"]}
_DEFS = {
    "ring": {
        "type": "object",
        "required": ["kind"],
        "properties": {
            "kind": {"enum": ["Z", "Zn", "GF_p_x", "product"]},
            "n": {"type": "integer", "minimum": 2},
            "p": {"type": "integer", "minimum": 2},
            "factors": {"type": "array", "minItems": 1, "items": {"$ref": "#/$defs/ring"}},
        },
        "allOf": [
            {"if": {"properties": {"kind": {"const": "Zn"}}}, "then": {"required": ["n"]}},
            {"if": {"properties": {"kind": {"const": "GF_p_x"}}}, "then": {"required": ["p"]}},
            {"if": {"properties": {"kind": {"const": "product"}}},
             "then": {"required": ["factors"]}},
        ],
    },
    "module": {
        "type": "object",
        "required": ["ring", "factors"],
        "properties": {
            "ring": {"$ref": "#/$defs/ring"},
            "factors": {"type": "array", "items": _ELEMENT},
            "decomposition": {"enum": ["invariant", "cyclic"]},
        },
    },
    "matrix": {"type": "array", "items": {"type": "array", "items": _ELEMENT}},
}


def _schema(required, props):
    return {"$defs": _DEFS, "type": "object", "required": required, "properties": props}


_MOD = {"$ref": "#/$defs/module"}
_ROW = {"$ref": "#/$defs/matrix"}
SCHEMAS = {
    "snf": _schema(["ring", "matrix"], {"ring": {"$ref": "#/$defs/ring"},
                                        "matrix": _ROW, "columns": {"type": "integer"}}),
    "decompose": _schema(["ring", "relations"], {"ring": {"$ref": "#/$defs/ring"},
                                                 "relations": _ROW,
                                                 "columns": {"type": "integer", "minimum": 0}}),
    "normalize": _schema(["module", "row"], {"module": _MOD, "row": _ROW,
                                            "method": {"enum": ["sweep", "whitehead"]}}),
    "det": _schema(["module", "row"], {"module": _MOD, "row": _ROW}),
    "equiv": _schema(["module", "row_a", "row_b"], {"module": _MOD, "row_a": _ROW, "row_b": _ROW}),
    "nielsen-equiv": {"$defs": _DEFS, "type": "object", "required": ["row_a", "row_b"],
                      "properties": {"module": _MOD, "group": _MOD, "row_a": _ROW, "row_b": _ROW},
                      "anyOf": [{"required": ["module"]}, {"required": ["group"]}]},
    "classes": {"$defs": _DEFS, "type": "object", "required": ["n"],
                "properties": {"module": _MOD, "group": _MOD,
                               "n": {"type": "integer", "minimum": 0},
                               "notion": {"enum": ["elementary", "nielsen"]}},
                "anyOf": [{"required": ["module"]}, {"required": ["group"]}]},
    "orbits": _schema(["module", "n"], {"module": _MOD, "n": {"type": "integer", "minimum": 0},
                                        "generators": {"enum": ["elementary", "elementary-full",
                                                                "nielsen"]}}),
    "selftest": {"type": "object"},
}


class SchemaError(Exception):
    code = "SchemaError"


def _module(doc):
    return ser.module_from_json(doc.get("module") or doc.get("group"))


def cmd_snf(doc, args):
    ring = ring_from_json(doc["ring"])
    a = ser.matrix_from_json(ring, doc["matrix"], doc.get("columns"))
    p, d, q = smith_normal_form(a)
    return {"P": ser.matrix_to_json(p), "D": ser.matrix_to_json(d), "Q": ser.matrix_to_json(q),
            "d": [ring.to_json(x) for x in d.diagonal_entries()]}


def cmd_decompose(doc, args):
    ring = ring_from_json(doc["ring"])
    rel = doc["relations"]
    a = ser.matrix_from_json(ring, rel, doc.get("columns"))
    m, cob = module_from_relations(a)
    return {"module": ser.module_to_json(m), "rank": m.rank,
            "change_of_basis": ser.matrix_to_json(cob)}


def cmd_normalize(doc, args):
    m = _module(doc)
    if not isinstance(m, InvariantFactorModule):
        raise SchemaError("normalize needs an invariant-factor module")
    res = normalize_row(ser.row_from_json(m, doc["row"]), method=doc.get("method", args.method))
    return ser.normalization_to_json(res)


def cmd_det(doc, args):
    m = _module(doc)
    return ser.det_to_json(det_invariant(m, ser.row_from_json(m, doc["row"])))


def cmd_equiv(doc, args):
    m = _module(doc)
    a, b = ser.row_from_json(m, doc["row_a"]), ser.row_from_json(m, doc["row_b"])
    ok, witness = are_E_equivalent(a, b)
    out = {"equivalent": ok, "witness": ser.script_to_json(witness) if ok else None}
    if a.length == m.rank:
        out["det_a"] = ser.det_to_json(det_invariant(m, a))
        out["det_b"] = ser.det_to_json(det_invariant(m, b))
    return out


def cmd_nielsen_equiv(doc, args):
    m = _module(doc)
    a, b = ser.row_from_json(m, doc["row_a"]), ser.row_from_json(m, doc["row_b"])
    ok, signs, script = nielsen_witness(a, b)
    out = {"equivalent": ok}
    if not ok:
        return out
    if args.expand_moves:
        moves = expand_script(script, signs, args.expansion_cap)
        if replay_moves(moves, a) != b:
            raise AssertionError("Nielsen witness failed to replay")
        out["moves"] = ser.moves_to_json(moves)
    else:
        out["signs"] = signs
        out["script"] = ser.script_to_json(script)
    return out


def cmd_classes(doc, args):
    m = _module(doc)
    n = doc["n"]
    notion = doc.get("notion", "elementary")
    if notion == "nielsen":
        rep = nielsen_classes(m, n)
        return {"notion": notion, "n": n, "count": rep.class_count,
                "representatives": [ser.row_to_json(r) for r in rep.representatives]}
    count = orbit_count(m, n)
    target = m if isinstance(m, InvariantFactorModule) else invariant_factor_form(m)[0]
    deltas = unit_class_representatives(target) if n == target.rank else [target.ring.one]
    reps = [canonical_row(target, d, n) for d in deltas]
    return {"notion": notion, "n": n, "count": count,
            "representatives": [ser.row_to_json(r) for r in reps]}


def cmd_orbits(doc, args):
    m = _module(doc)
    part = orbit_partition(m, doc["n"], doc.get("generators", "elementary"), args.budget)
    return ser.partition_to_json(part)


def cmd_selftest(doc, args):
    results = run_selftest(seed=args.seed, budget=args.budget)
    failed = [r for r in results if not r["ok"]]
    return {"passed": not failed, "checks": len(results), "failures": failed}


HANDLERS = {
    "snf": cmd_snf, "decompose": cmd_decompose, "normalize": cmd_normalize, "det": cmd_det,
    "equiv": cmd_equiv, "nielsen-equiv": cmd_nielsen_equiv, "classes": cmd_classes,
    "orbits": cmd_orbits, "selftest": cmd_selftest,
}


def build_parser():
    p = argparse.ArgumentParser(prog="unimodular", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("input", nargs="?", default="-", help="JSON request file (default: stdin)")
    p.add_argument("--output", "-o", help="write the response here instead of stdout")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="state budget for brute-force enumeration")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    p.add_argument("--expand-moves", action="store_true",
                   help="emit Nielsen witnesses as explicit L/I move lists")
    p.add_argument("--expansion-cap", type=int, default=DEFAULT_EXPANSION_CAP)
    p.add_argument("--method", choices=("sweep", "whitehead"), default="sweep")
    return p


def _read_request(args):
    if args.command == "selftest" and args.input == "-" and sys.stdin.isatty():
        return {}
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input) as fh:
            text = fh.read()
    if args.command == "selftest" and not text.strip():
        return {}
    return json.loads(text)


def run(argv=None):
    """Run one command; returns ``(exit_status, response_dict)``."""
    args = build_parser().parse_args(argv)
    try:
        doc = _read_request(args)
        jsonschema.validate(doc, SCHEMAS[args.command])
        out = HANDLERS[args.command](doc, args)
        status = 0
        if args.command == "selftest" and not out["passed"]:
            status = 1
    except AlgebraError as exc:
        return 1, {"error": exc.to_json()}, args
    except (json.JSONDecodeError, jsonschema.ValidationError, SchemaError,
            KeyError, TypeError, ValueError, OSError) as exc:
        msg = exc.message if isinstance(exc, jsonschema.ValidationError) else str(exc)
        return 2, {"error": {"code": "SchemaError", "message": msg}}, args
    return status, out, args


def main(argv=None):
    status, out, args = run(argv)
    text = json.dumps(out, sort_keys=True, separators=(",", ":")) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
