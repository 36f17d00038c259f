import pytest

from unimodular.errors import BudgetExceeded
from unimodular.fixtures import all_fixtures
from unimodular.modules import InvariantFactorModule
from unimodular.oracle import enumerate_unimodular, orbit_partition
from unimodular.rings import Integers

Z = Integers()


def test_enumerate_examples():
    assert [r.entries for r in enumerate_unimodular(InvariantFactorModule(Z, (2,)), 1)] == [((1,),)]
    z5 = enumerate_unimodular(InvariantFactorModule(Z, (5,)), 1)
    assert sorted(r.entries[0][0] for r in z5) == [1, 2, 3, 4]
    assert len(enumerate_unimodular(InvariantFactorModule(Z, (2, 2)), 2)) == 6


def test_partition_examples():
    p = orbit_partition(InvariantFactorModule(Z, (2, 2)), 2)
    assert p.class_count == 1 and p.sizes() == [6]
    z55 = InvariantFactorModule(Z, (5, 5))
    assert orbit_partition(z55, 2).class_count == 4
    assert orbit_partition(z55, 2, "nielsen").class_count == 2


def test_budget():
    with pytest.raises(BudgetExceeded):
        orbit_partition(InvariantFactorModule(Z, (5, 5)), 3, budget=1000)


def test_partition_is_deterministic():
    m = InvariantFactorModule(Z, (3, 9))
    a, b = orbit_partition(m, 2), orbit_partition(m, 2)
    assert a.classes == b.classes
    assert a.representatives() == sorted(a.representatives())


@pytest.mark.parametrize("name", ["Z3xZ9", "GF3[x]/(x^2+1)", "Z12/(2)x(6)"])
def test_unit_transvections_suffice(name):
    # the full set of transvections by every residue gives the same orbits
    m = all_fixtures()[name]
    for n in (m.rank, m.rank + 1):
        small = orbit_partition(m, n, "elementary")
        full = orbit_partition(m, n, "elementary-full")
        assert small.classes == full.classes
