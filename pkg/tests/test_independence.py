import itertools
import random

import pytest

from galoislin.errors import InputError, NotCyclic, TooManyElements, ZeroLeadingElement
from galoislin.field import coordinate_rank, make_cyclotomic, make_finite_field
from galoislin.independence import dependent, reduction_sign, reduction_step, s_matrix
from galoislin.linalg import Matrix
from galoislin.verify import planted_dependent, random_tuple

CYCLIC = [make_cyclotomic(5), make_cyclotomic(7), make_finite_field(2, 3), make_finite_field(3, 2),
          make_finite_field(2, 4)]


def brute_sign(k):
    # sign of the permutation that reverses k rows, times that for k-1 rows
    def rev(m):
        perm = list(range(m))[::-1]
        inv = sum(1 for i, j in itertools.combinations(range(m), 2) if perm[i] > perm[j])
        return -1 if inv % 2 else 1
    return rev(k) * rev(k - 1)


def test_s_matrix_gf8(gf8):
    t = gf8.gen()
    s = s_matrix([t, t * t])
    assert s.matrix == Matrix(gf8, [[t, t**2], [t**2, t**2 + t]])
    assert s.det() == gf8.one()
    assert not dependent([t, t * t])


def test_small_cases(gf8, q5):
    x = q5.gen() + 2
    assert s_matrix([x]).matrix == Matrix(q5, [[x]])
    assert dependent([x, x])
    m = s_matrix([x, x]).matrix
    assert m.column(0) == m.column(1)
    assert dependent([q5.zero()])
    assert not dependent([x])


def test_preconditions(q8, gf4):
    with pytest.raises(NotCyclic):
        s_matrix([q8.one()])
    with pytest.raises(TooManyElements):
        s_matrix([gf4.one()] * 3)
    with pytest.raises(InputError):
        s_matrix([])


@pytest.mark.parametrize("field", CYCLIC, ids=str)
def test_matches_oracle(field):
    rng = random.Random(f"ind:{field.name}")
    for t in range(30):
        k = rng.randint(1, field.degree)
        b = planted_dependent(field, rng, k) if t % 2 else random_tuple(field, rng, k)
        assert dependent(b) == (coordinate_rank(b) < k)
        assert dependent(b, check_oracle=True) == dependent(b)


def test_exhaustive_gf4_pairs(gf4):
    for b in itertools.product(list(gf4.elements()), repeat=2):
        assert dependent(b) == (coordinate_rank(b) < 2)


class TestReduction:
    def test_gf8_example(self, gf8):
        t = gf8.gen()
        step = reduction_step([t, t * t], verify=True)
        assert step.x_next == (t * t + t + 1,)
        assert step.x_next[0] == t * t - (t / (t * t)) * t**4

    def test_k2_form(self, q5):
        # det S = -sigma(b_1) * x_2 for k = 2
        rng = random.Random(4)
        sigma = q5.generator
        for _ in range(10):
            b1, b2 = q5.random_nonzero(rng), q5.random_element(rng)
            step = reduction_step([b1, b2])
            assert s_matrix([b1, b2]).det() == -(sigma(b1) * step.x_next[0])

    def test_scalar_multiples_collapse(self, q5):
        rng = random.Random(7)
        b1 = q5.random_nonzero(rng)
        step = reduction_step([b1, b1 * 3, b1 * -2, b1 * 5])
        assert all(not x for x in step.x_next)

    @pytest.mark.parametrize("k", range(2, 12))
    def test_sign(self, k):
        assert reduction_sign(k) == brute_sign(k)

    @pytest.mark.parametrize("field", CYCLIC, ids=str)
    def test_factorization(self, field):
        rng = random.Random(f"red:{field.name}")
        for _ in range(15):
            k = rng.randint(2, field.degree)
            b = random_tuple(field, rng, k)
            if not b[0]:
                continue
            step = reduction_step(b)
            assert s_matrix(b).det() == step.predicted_det()
            assert len(step.gamma) == k - 1
            assert step.leading == field.sigma_power(b[0], k - 1)

    def test_zero_leading(self, q5):
        with pytest.raises(ZeroLeadingElement):
            reduction_step([q5.zero(), q5.one()])
        with pytest.raises(InputError):
            reduction_step([q5.one()])
