"""Exact normal forms and equivalence tests for unimodular rows of modules."""
from .errors import AlgebraError
from .invariants import are_E_equivalent, det_invariant, orbit_count, unit_class_representatives
from .matrices import ExactMatrix, determinant, smith_normal_form, whitehead_factorization
from .modules import (CyclicModule, InvariantFactorModule, RowTuple, canonical_row,
                      is_unimodular, module_from_relations, relation_ideal)
from .nielsen import are_nielsen_equivalent, expand_script, nielsen_class_count, nielsen_classes
from .normalize import normalize_row, triangularize, unit_transfer
from .oracle import enumerate_unimodular, orbit_partition
from .rings import (Integers, IntegersMod, PolynomialsOverPrimeField, Product, extended_gcd,
                    inverse_mod, row_cancel)
from .scripts import ElementaryOp, ElementaryScript

__all__ = [
    "AlgebraError", "CyclicModule", "ElementaryOp", "ElementaryScript", "ExactMatrix",
    "Integers", "IntegersMod", "InvariantFactorModule", "PolynomialsOverPrimeField",
    "Product", "RowTuple", "are_E_equivalent", "are_nielsen_equivalent", "canonical_row",
    "det_invariant", "determinant", "enumerate_unimodular", "expand_script", "extended_gcd",
    "inverse_mod", "is_unimodular", "module_from_relations", "nielsen_class_count",
    "nielsen_classes", "normalize_row", "orbit_count", "orbit_partition", "relation_ideal",
    "row_cancel", "smith_normal_form", "triangularize", "unit_class_representatives",
    "unit_transfer", "whitehead_factorization",
]
