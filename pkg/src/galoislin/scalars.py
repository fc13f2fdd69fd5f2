"""Ground fields: the rationals and prime fields GF(p).

Rationals are plain :class:`fractions.Fraction` values (always in lowest
terms with a positive denominator).  Prime-field residues are
:class:`PrimeResidue` objects bound to a :class:`PrimeField`.  Both support
the usual arithmetic operators, so the rest of the package is written
against operators and a small field protocol (``zero``, ``one``,
``__call__``, ``parse``, ``format``, ``characteristic``).
"""

from __future__ import annotations

import functools
import math
import re
from fractions import Fraction

from .errors import (
    DivisionByZero,
    FactorBoundExceeded,
    InputError,
    MixedGroundFields,
    NotPrime,
)

FACTOR_BOUND = 10**6


def is_prime(n: int) -> bool:
    """Deterministic trial division."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int, bound: int = FACTOR_BOUND) -> dict[int, int]:
    """Prime factorization of ``|n|`` by trial division up to ``bound``."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        if d > bound:
            raise FactorBoundExceeded(f"trial division bound {bound} reached with cofactor {n}")
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


class RationalField:
    """The field of rational numbers; elements are ``Fraction`` instances."""

    characteristic = 0
    name = "QQ"

    def __call__(self, x) -> Fraction:
        if isinstance(x, PrimeResidue):
            raise MixedGroundFields("cannot coerce a prime residue into QQ")
        if isinstance(x, str):
            return self.parse(x)
        return Fraction(x)

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def contains(self, x) -> bool:
        return isinstance(x, (int, Fraction)) and not isinstance(x, bool)

    def parse(self, s: str) -> Fraction:
        s = s.strip()
        if not re.fullmatch(r"[+-]?\d+(/\d+)?", s):
            raise InputError(f"not a rational: {s!r}")
        try:
            return Fraction(s)
        except ZeroDivisionError:
            raise DivisionByZero(f"zero denominator in {s!r}") from None

    @staticmethod
    def format(x: Fraction) -> str:
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def random(self, rng, bound: int = 3) -> Fraction:
        return Fraction(rng.randint(-bound, bound))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PrimeResidue:
    """An element of GF(p), stored as an integer in ``[0, p)``."""

    __slots__ = ("field", "value")

    def __init__(self, value: int, field: PrimeField):
        self.value = value % field.p
        self.field = field

    def _coerce(self, other):
        if isinstance(other, PrimeResidue):
            if other.field.p != self.field.p:
                raise MixedGroundFields(f"GF({self.field.p}) and GF({other.field.p}) mixed")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        if isinstance(other, Fraction):
            raise MixedGroundFields(f"cannot mix a rational with GF({self.field.p})")
        return None

    def _new(self, v):
        return PrimeResidue(v, self.field)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._new(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._new(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._new(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._new(self.value * o)

    __rmul__ = __mul__

    def inverse(self) -> PrimeResidue:
        if self.value == 0:
            raise DivisionByZero(f"0 has no inverse in GF({self.field.p})")
        return self._new(pow(self.value, -1, self.field.p))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * self._new(o).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.inverse() * o

    def __neg__(self):
        return self._new(-self.value)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** -e
        return self._new(pow(self.value, e, self.field.p))

    def __eq__(self, other):
        if isinstance(other, PrimeResidue):
            return self.field.p == other.field.p and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return (self.value - other) % self.field.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} mod {self.field.p}"

    __str__ = __repr__


class PrimeField:
    """GF(p) for a prime ``p``; use :func:`GF` to obtain a cached instance."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"

    def __call__(self, x) -> PrimeResidue:
        if isinstance(x, PrimeResidue):
            if x.field.p != self.p:
                raise MixedGroundFields(f"GF({x.field.p}) residue given to GF({self.p})")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            if x.denominator != 1:
                return PrimeResidue(x.numerator, self) / x.denominator
            x = x.numerator
        return PrimeResidue(int(x), self)

    def zero(self) -> PrimeResidue:
        return PrimeResidue(0, self)

    def one(self) -> PrimeResidue:
        return PrimeResidue(1, self)

    def contains(self, x) -> bool:
        return isinstance(x, PrimeResidue) and x.field.p == self.p

    def elements(self):
        return [PrimeResidue(v, self) for v in range(self.p)]

    def parse(self, s: str) -> PrimeResidue:
        s = s.strip()
        m = re.fullmatch(r"([+-]?\d+)\s*mod\s*(\d+)", s)
        if m:
            if int(m.group(2)) != self.p:
                raise MixedGroundFields(f"{s!r} is not a GF({self.p}) residue")
            return PrimeResidue(int(m.group(1)), self)
        return self(QQ.parse(s))

    @staticmethod
    def format(x: PrimeResidue) -> str:
        return f"{x.value} mod {x.field.p}"

    def random(self, rng, bound: int | None = None) -> PrimeResidue:
        return PrimeResidue(rng.randrange(self.p), self)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return self.name


@functools.cache
def GF(p: int) -> PrimeField:
    return PrimeField(p)


_OPS = {
    "add": lambda x, y: x + y,
    "sub": lambda x, y: x - y,
    "mul": lambda x, y: x * y,
    "div": lambda x, y: x / y,
}


def arith(op: str, x, y):
    """Apply ``op`` in {add, sub, mul, div} to two scalars of one ground field."""
    if isinstance(x, PrimeResidue) != isinstance(y, PrimeResidue):
        raise MixedGroundFields("rational and prime residue mixed")
    if op == "div" and not y:
        raise DivisionByZero("division by zero scalar")
    try:
        return _OPS[op](x, y)
    except KeyError:
        raise InputError(f"unknown operation {op!r}") from None


def format_scalar(x) -> str:
    if isinstance(x, PrimeResidue):
        return PrimeField.format(x)
    return RationalField.format(x)


def squarefree_part(q, bound: int = FACTOR_BOUND) -> int:
    """The squarefree integer ``s`` with ``q = s * r**2`` for a rational ``r``.

    The sign of ``s`` is the sign of ``q``.
    """
    q = Fraction(q)
    if q == 0:
        raise ValueError("squarefree part of 0 is undefined")
    s = -1 if q < 0 else 1
    # q = a/b = a*b / b**2, so the squarefree part of q is that of a*b.
    for n in (q.numerator, q.denominator):
        for prime, e in factorize(n, bound).items():
            if e % 2:
                s *= prime
    return s


def multiplicative_order(g: int, p: int) -> int:
    g %= p
    if g == 0:
        raise ValueError("0 has no multiplicative order")
    order = p - 1
    for ell in factorize(p - 1):
        while order % ell == 0 and pow(g, order // ell, p) == 1:
            order //= ell
    return order


def primitive_root(p: int) -> int:
    """Smallest ``g >= 2`` of multiplicative order ``p - 1`` modulo an odd prime ``p``."""
    if p == 2 or not is_prime(p):
        raise NotPrime(f"{p} is not an odd prime")
    ells = list(factorize(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // ell, p) != 1 for ell in ells):
            return g
    raise AssertionError("unreachable: every odd prime has a primitive root")


def units_mod(n: int) -> list[int]:
    return [k for k in range(1, n) if math.gcd(k, n) == 1]
