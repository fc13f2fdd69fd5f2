import random
from fractions import Fraction as F

import pytest
from conftest import cofactor_det
from hypothesis import given, settings
from hypothesis import strategies as st

from galoislin.errors import Inconsistent, Singular
from galoislin.linalg import Matrix, det, inverse, kernel, rank, solve
from galoislin.scalars import GF, QQ

small = st.integers(-6, 6).map(F)


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)


@settings(max_examples=120)
@given(st.integers(1, 4).flatmap(square))
def test_det_matches_cofactor(rows):
    assert det(Matrix(QQ, rows)) == cofactor_det(rows)


@settings(max_examples=60)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(square(n), square(n))))
def test_det_multiplicative(pair):
    a, b = (Matrix(QQ, r) for r in pair)
    assert det(a @ b) == det(a) * det(b)


@settings(max_examples=60)
@given(st.integers(1, 4).flatmap(square))
def test_inverse_or_singular(rows):
    m = Matrix(QQ, rows)
    n = len(rows)
    if det(m) == 0:
        with pytest.raises(Singular):
            inverse(m)
        assert rank(m) < n
    else:
        assert m @ inverse(m) == Matrix.identity(QQ, n)
        assert inverse(m) @ m == Matrix.identity(QQ, n)


@settings(max_examples=80)
@given(st.integers(1, 4), st.integers(1, 5), st.data())
def test_rank_nullity(r, c, data):
    rows = data.draw(st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))
    m = Matrix(QQ, rows)
    ker = kernel(m)
    assert rank(m) + len(ker) == c
    for v in ker:
        assert all(x == 0 for x in m @ v)


def test_prime_field_det_against_cofactor():
    K = GF(7)
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(1, 4)
        rows = [[K(rng.randrange(7)) for _ in range(n)] for _ in range(n)]
        assert det(Matrix(K, rows)) == cofactor_det(rows)


def test_gf8_det(gf8):
    t = gf8.gen()
    m = Matrix(gf8, [[t, t**2], [t**2, t**4]])
    assert det(m) == gf8.one() == cofactor_det(m.entries)


def test_identity_and_repeated_rows(gf4):
    assert det(Matrix.identity(QQ, 5)) == 1
    t = gf4.gen()
    assert not det(Matrix(gf4, [[t, t + 1], [t, t + 1]]))


def test_p5_gram_inverse():
    a = Matrix(QQ, [[4, -1, -1, -1], [-1, -1, -1, -1], [-1, -1, -1, 4], [-1, -1, 4, -1]])
    q = F(1, 5)
    expected = Matrix(QQ, [[q, -q, 0, 0], [-q, -2 * q, -q, -q], [0, -q, 0, q], [0, -q, q, 0]])
    assert inverse(a) == expected


def test_rank_with_repeated_column():
    m = Matrix(QQ, [[1, 2, 1], [3, 4, 3]])
    assert rank(m) == 2 < m.cols


def test_solve():
    v = [F(1, 2), F(-3), F(7, 9)]
    assert solve(Matrix.identity(QQ, 3), v) == v
    with pytest.raises(Inconsistent):
        solve(Matrix(QQ, [[1, 1], [1, 1]]), [1, 2])


def test_rref_pivots():
    r, piv = Matrix(QQ, [[0, 2, 4], [0, 1, 2], [1, 0, 1]]).rref()
    assert piv == [0, 1]
    assert r.row(0) == [1, 0, 1] and r.row(1) == [0, 1, 2]
