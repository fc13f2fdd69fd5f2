import random

import pytest

from galoislin.endo import (
    Endomorphism,
    dual_basis,
    dual_basis_matrix,
    rank_one,
    rank_one_extract,
    tensor_expand,
    trace_of,
)
from galoislin.errors import NotABasis, NotRankOne
from galoislin.field import trace
from galoislin.hyperplane import make_hyperplane, theta_endomorphism
from galoislin.linalg import Matrix
from galoislin.verify import random_scalar


def random_endo(field, rng):
    rows = [[random_scalar(field, rng) for _ in range(field.degree)] for _ in range(field.degree)]
    return Endomorphism(Matrix(field.ground, rows), tuple(field.power_basis()))


class TestRankOne:
    def test_gf4_example(self, gf4):
        t = gf4.gen()
        psi = rank_one(t, gf4.one())
        assert psi.matrix.columns() == [[0, 0], [0, 1]]
        assert trace_of(psi) == 1 == trace(t)

    def test_zero(self, q5):
        assert rank_one(q5.zero(), q5.gen()).rank() == 0

    def test_bilinear_rescale(self, q5):
        rng = random.Random(5)
        a, b = q5.random_nonzero(rng), q5.random_nonzero(rng)
        assert rank_one(a, b) == rank_one(a * 3, b / 3)

    def test_trace_is_tr_ab(self, small_field):
        rng = random.Random(f"r1:{small_field.name}")
        for _ in range(10):
            a, b = small_field.random_element(rng), small_field.random_element(rng)
            assert trace_of(rank_one(a, b)) == trace(a * b)


class TestTensor:
    def test_gf4_identity(self, gf4):
        t = gf4.gen()
        ident = Endomorphism.from_map(lambda x: x, field=gf4)
        form = tensor_expand(ident, gf4.power_basis())
        assert [a for a, _ in form.terms] == [t + 1, gf4.one()]
        assert trace_of(ident) == 0 == form.contraction()

    def test_identity_trace_is_degree(self, q5):
        ident = Endomorphism.from_map(lambda x: x, field=q5)
        assert trace_of(ident) == 4 == trace_of(ident, via="tensor")

    def test_rank_one_expands_to_itself(self, q5):
        rng = random.Random(9)
        a = q5.random_nonzero(rng)
        b_basis = dual_basis(q5.power_basis())[::-1]
        form = tensor_expand(rank_one(a, b_basis[0]), b_basis)
        assert form.terms[0][0] == a
        assert all(not ai for ai, _ in form.terms[1:])

    def test_zero_map(self, gf8):
        zero = Endomorphism(Matrix.zeros(gf8.ground, 3, 3), tuple(gf8.power_basis()))
        assert all(not a for a, _ in tensor_expand(zero, gf8.power_basis()).terms)

    def test_random_reconstruction(self, small_field):
        rng = random.Random(f"tens:{small_field.name}")
        other = dual_basis(small_field.power_basis())
        for _ in range(10):
            tau = random_endo(small_field, rng)
            form = tensor_expand(tau, other)
            x = small_field.random_element(rng)
            assert form(x) == tau(x)
            assert trace_of(tau) == form.contraction()

    def test_bad_basis(self, gf4):
        ident = Endomorphism.from_map(lambda x: x, field=gf4)
        with pytest.raises(NotABasis):
            tensor_expand(ident, [gf4.one(), gf4.one()])


class TestExtract:
    def test_round_trip_gf4(self, gf4):
        tau = rank_one(gf4.gen(), gf4.one())
        a, b = rank_one_extract(tau)
        assert rank_one(a, b) == tau

    def test_round_trip_random(self, small_field):
        rng = random.Random(f"ex:{small_field.name}")
        for _ in range(5):
            tau = rank_one(small_field.random_nonzero(rng), small_field.random_nonzero(rng))
            assert rank_one(*rank_one_extract(tau)) == tau

    def test_theta_functional_is_trace(self, gf8):
        _, b = rank_one_extract(theta_endomorphism(make_hyperplane(gf8.one())))
        assert b.is_scalar() and b

    def test_zero_and_full_rank(self, gf4):
        zero = Endomorphism(Matrix.zeros(gf4.ground, 2, 2), tuple(gf4.power_basis()))
        with pytest.raises(NotRankOne):
            rank_one_extract(zero)
        with pytest.raises(NotRankOne):
            rank_one_extract(Endomorphism.from_map(lambda x: x, field=gf4))


class TestDual:
    def test_gf4(self, gf4):
        t = gf4.gen()
        c = dual_basis(gf4.power_basis())
        brute = [[x for x in gf4.elements() if [trace(x), trace(x * t)] == v] for v in ([1, 0], [0, 1])]
        assert brute == [[c[0]], [c[1]]]
        assert c == [t + 1, gf4.one()]

    def test_defining_property(self, catalog_field):
        e = catalog_field.power_basis()
        c = dual_basis(e)
        for i, ci in enumerate(c):
            for k, ek in enumerate(e):
                assert trace(ci * ek) == (1 if i == k else 0)

    def test_involution(self, small_field):
        e = small_field.power_basis()
        assert dual_basis(dual_basis(e)) == e

    def test_gram_symmetric(self, q5):
        a, u = dual_basis_matrix(q5.power_basis())
        assert a == a.transpose() and u == u.transpose()
