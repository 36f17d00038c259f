import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import leibniz_det, minor_gcd
from unimodular.errors import DimensionMismatch, NotInverses
from unimodular.matrices import (ElementaryScript, ExactMatrix, apply_script, determinant,
                                 is_smith_form, script_matrix, smith_normal_form,
                                 whitehead_factorization)
from unimodular.rings import Integers, IntegersMod, PolynomialsOverPrimeField, Product

Z = Integers()


def M(rows, ring=Z):
    return ExactMatrix(ring, rows)


def test_apply_script_examples():
    s = ElementaryScript.from_triples(Z, 2, [(0, 1, 3), (1, 0, -2)])
    assert apply_script(ExactMatrix.identity(Z, 2), s) == script_matrix(s)
    a = M([[2, 4], [6, 8]])
    assert apply_script(a, ElementaryScript.from_triples(Z, 2, [])) == a
    # add -3 x row 0 to row 1
    row_op = ElementaryScript.from_triples(Z, 2, [(0, 1, -3)])
    assert apply_script(a, row_op, side="rows") == M([[2, 4], [0, -4]])


def test_snf_examples():
    for rows, diag in [([[1, 0], [0, 1]], [1, 1]), ([[2, 4], [6, 8]], [2, 4]),
                       ([[2, 2], [2, -2]], [2, 4])]:
        a = M(rows)
        p, d, q = smith_normal_form(a)
        assert p @ a @ q == d
        assert d.diagonal_entries() == diag


def test_determinant_examples():
    assert determinant(ExactMatrix.identity(Z, 3)) == 1
    assert determinant(M([[2, 4], [6, 8]])) == -8
    with pytest.raises(DimensionMismatch):
        determinant(M([[1, 2, 3], [4, 5, 6]]))


def _check_snf_integer(rows):
    a = M(rows)
    p, d, q = smith_normal_form(a)
    assert p @ a @ q == d
    assert abs(determinant(p)) == 1 and abs(determinant(q)) == 1
    assert is_smith_form(d)
    diag = d.diagonal_entries()
    prod = 1
    for i, x in enumerate(diag, start=1):
        prod *= x
        assert prod == minor_gcd(rows, i)
    for i in range(len(diag) + 1, min(len(rows), len(rows[0])) + 1):
        assert minor_gcd(rows, i) == 0


small_matrix = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-20, 20), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


@settings(max_examples=200, deadline=None)
@given(small_matrix)
def test_snf_matches_minor_gcds(rows):
    _check_snf_integer(rows)


@pytest.mark.parametrize("ring", [IntegersMod(12), PolynomialsOverPrimeField(3),
                                  Product(Z, Z)], ids=str)
def test_snf_other_rings(ring):
    rng = random.Random(11)

    def rand():
        if isinstance(ring, IntegersMod):
            return rng.randrange(12)
        if isinstance(ring, Product):
            return (rng.randint(-9, 9), rng.randint(-9, 9))
        return ring.canonical(tuple(rng.randrange(3) for _ in range(rng.randint(0, 3))))

    for _ in range(60):
        r, c = rng.randint(1, 3), rng.randint(1, 3)
        a = M([[rand() for _ in range(c)] for _ in range(r)], ring)
        p, d, q = smith_normal_form(a)
        assert p @ a @ q == d
        assert is_smith_form(d)
        assert ring.is_unit(determinant(p)) and ring.is_unit(determinant(q))


def test_script_matrix_has_determinant_one():
    rng = random.Random(5)
    for _ in range(100):
        n = rng.randint(2, 5)
        triples = []
        for _ in range(rng.randint(0, 8)):
            s, t = rng.sample(range(n), 2)
            triples.append((s, t, rng.randint(-9, 9)))
        assert determinant(script_matrix(ElementaryScript.from_triples(Z, n, triples))) == 1


def test_whitehead_examples():
    s = whitehead_factorization(Z.element(1), Z.element(1), 0, 1, 2)
    assert script_matrix(s) == ExactMatrix.identity(Z, 2)
    F = IntegersMod(5)
    s = whitehead_factorization(F.element(2), F.element(3), 0, 1, 2)
    assert script_matrix(s) == ExactMatrix.diagonal(F, [2, 3])
    s = whitehead_factorization(Z.element(-1), Z.element(-1), 1, 2, 3)
    assert script_matrix(s) == ExactMatrix.diagonal(Z, [1, -1, -1])
    assert len(s) == 6


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_whitehead_random_units(p):
    F = IntegersMod(p)
    rng = random.Random(p)
    for _ in range(50):
        u = rng.randrange(1, p)
        v = F.unit_inverse(u)
        n = rng.randint(2, 4)
        i, j = rng.sample(range(n), 2)
        s = whitehead_factorization(F.element(u), F.element(v), i, j, n)
        diag = [1] * n
        diag[i], diag[j] = u, v
        assert script_matrix(s) == ExactMatrix.diagonal(F, diag)


def test_whitehead_rejects_non_inverses():
    F = IntegersMod(5)
    with pytest.raises(NotInverses):
        whitehead_factorization(F.element(2), F.element(2), 0, 1, 2)


@given(st.lists(st.integers(-6, 6), min_size=9, max_size=9),
       st.lists(st.integers(-6, 6), min_size=9, max_size=9))
def test_determinant_multiplicative(a, b):
    ma = M([a[0:3], a[3:6], a[6:9]])
    mb = M([b[0:3], b[3:6], b[6:9]])
    assert determinant(ma @ mb) == determinant(ma) * determinant(mb)
    assert determinant(ma) == leibniz_det(ma.tolist())
