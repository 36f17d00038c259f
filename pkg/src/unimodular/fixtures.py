"""Small finite modules used by the self-test and the acceptance suite."""
from __future__ import annotations

from .modules import InvariantFactorModule
from .rings import Integers, IntegersMod, PolynomialsOverPrimeField, Product

Z = Integers()
ZxZ = Product(Z, Z)


def integer_fixtures():
    return {
        "Z5xZ5": InvariantFactorModule(Z, (5, 5)),
        "Z2xZ4": InvariantFactorModule(Z, (2, 4)),
        "Z3xZ9": InvariantFactorModule(Z, (3, 9)),
        "Z2xZ2xZ4": InvariantFactorModule(Z, (2, 2, 4)),
        "Z6": InvariantFactorModule(Z, (6,)),
        "Z8": InvariantFactorModule(Z, (8,)),
    }


def product_fixtures():
    return {
        "ZxZ/(2,3)": InvariantFactorModule(ZxZ, ((2, 3),)),
        "ZxZ/(1,3)x(2,3)": InvariantFactorModule(ZxZ, ((1, 3), (2, 3))),
        "ZxZ/(2,3)x(2,3)": InvariantFactorModule(ZxZ, ((2, 3), (2, 3))),
    }


def other_fixtures():
    f2 = PolynomialsOverPrimeField(2)
    f3 = PolynomialsOverPrimeField(3)
    return {
        "GF3[x]/(x^2+1)": InvariantFactorModule(f3, ((1, 0, 1),)),
        "GF2[x]/(x)x(x^2)": InvariantFactorModule(f2, ((0, 1), (0, 0, 1))),
        "Z12/(2)x(6)": InvariantFactorModule(IntegersMod(12), (2, 6)),
    }


def all_fixtures():
    out = integer_fixtures()
    out.update(product_fixtures())
    out.update(other_fixtures())
    return out
