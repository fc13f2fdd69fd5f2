import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from galoislin.errors import (
    DivisionByZero,
    FactorBoundExceeded,
    MixedGroundFields,
    NotPrime,
)
from galoislin.scalars import (
    GF,
    QQ,
    arith,
    format_scalar,
    is_prime,
    multiplicative_order,
    primitive_root,
    squarefree_part,
)


def brute_squarefree(q: Fraction) -> int:
    # largest square dividing |num * den|, by scanning every candidate root
    n = abs(q.numerator * q.denominator)
    r = max(d for d in range(1, int(n**0.5) + 1) if n % (d * d) == 0)
    return (1 if q > 0 else -1) * (n // (r * r))


def brute_order(g, p):
    k, x = 1, g % p
    while x != 1:
        x = x * g % p
        k += 1
    return k


class TestArith:
    def test_rational_add(self):
        assert arith("add", Fraction(1, 3), Fraction(1, 6)) == Fraction(1, 2)

    def test_zero_annihilates(self):
        assert arith("mul", Fraction(0), Fraction(7, 5)) == 0

    def test_prime_div(self):
        F = GF(5)
        # oracle: exhaustive inverse search
        inv4 = next(v for v in range(5) if 4 * v % 5 == 1)
        assert inv4 == 4
        assert arith("div", F(3), F(4)) == F(3 * inv4)
        assert arith("div", F(3), F(4)) == F(2)

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            arith("div", Fraction(1), Fraction(0))
        with pytest.raises(DivisionByZero):
            arith("div", GF(7)(1), GF(7)(0))

    def test_mixed_ground_fields(self):
        with pytest.raises(MixedGroundFields):
            arith("add", GF(5)(1), Fraction(1, 2))
        with pytest.raises(MixedGroundFields):
            GF(5)(1) + GF(7)(1)

    def test_canonical_rational(self):
        x = QQ.parse("6/-4".replace("-", "")) if False else Fraction(-6, 4)
        assert (x.numerator, x.denominator) == (-3, 2)
        assert QQ.zero().denominator == 1

    def test_serialization(self):
        assert format_scalar(Fraction(-3, 2)) == "-3/2"
        assert format_scalar(Fraction(4)) == "4"
        assert format_scalar(GF(5)(7)) == "2 mod 5"
        assert QQ.parse("-3/2") == Fraction(-3, 2)
        assert GF(5).parse("2 mod 5") == GF(5)(2)
        with pytest.raises(MixedGroundFields):
            GF(5).parse("2 mod 7")

    def test_not_prime(self):
        with pytest.raises(NotPrime):
            GF(9)


@pytest.mark.parametrize("ground", [QQ, GF(2), GF(3), GF(101)], ids=repr)
def test_field_axioms(ground):
    rng = random.Random(f"axioms:{ground!r}")
    for _ in range(1000):
        x, y, z = (ground.random(rng, 50) for _ in range(3))
        if ground is QQ:
            x, y, z = x / rng.randint(1, 9), y / rng.randint(1, 9), z / rng.randint(1, 9)
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + y == y + x and x * y == y * x
        assert x + ground.zero() == x and x * ground.one() == x
        assert x - x == 0
        if x:
            assert x * (ground.one() / x) == ground.one()


def test_prime_field_exhaustive_inverses():
    for p in (2, 3, 5, 7, 11, 13):
        F = GF(p)
        for v in range(1, p):
            inv = next(w for w in range(1, p) if v * w % p == 1)
            assert F(v).inverse() == F(inv)


class TestSquarefree:
    @pytest.mark.parametrize("q, expected", [(45, 5), (1, 1), (Fraction(-4, 9), -1)])
    def test_examples(self, q, expected):
        assert squarefree_part(q) == expected == brute_squarefree(Fraction(q))

    @given(st.fractions(min_value=-500, max_value=500, max_denominator=60).filter(bool))
    def test_matches_brute(self, q):
        assert squarefree_part(q) == brute_squarefree(q)

    @given(st.fractions(min_value=-50, max_value=50, max_denominator=20).filter(bool),
           st.fractions(min_value=-30, max_value=30, max_denominator=20).filter(bool))
    def test_square_invariance(self, q, r):
        assert squarefree_part(q * r * r) == squarefree_part(q)

    def test_bound(self):
        big = 1000003 * 1000033
        with pytest.raises(FactorBoundExceeded):
            squarefree_part(big, bound=1000)


class TestPrimitiveRoot:
    @pytest.mark.parametrize("p, g", [(5, 2), (7, 3), (3, 2)])
    def test_examples(self, p, g):
        assert primitive_root(p) == g
        assert min(h for h in range(2, p) if brute_order(h, p) == p - 1) == g

    @pytest.mark.parametrize("p", [q for q in range(3, 200) if is_prime(q)])
    def test_order(self, p):
        g = primitive_root(p)
        assert brute_order(g, p) == p - 1 == multiplicative_order(g, p)

    def test_not_prime(self):
        with pytest.raises(NotPrime):
            primitive_root(9)
        with pytest.raises(NotPrime):
            primitive_root(2)
