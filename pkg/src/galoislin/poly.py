"""Dense univariate polynomials over a ground field.

A polynomial is a list of coefficients, lowest degree first, with no
trailing zeros (the zero polynomial is ``[]``).  Coefficients are ground
scalars, so every routine works over QQ and GF(p) alike.
"""

from __future__ import annotations

import functools
import itertools
from fractions import Fraction

from .errors import DivisionByZero
from .scalars import GF, QQ


def trim(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def degree(a) -> int:
    return len(a) - 1


def add(a, b):
    n = max(len(a), len(b))
    zero = (a or b or [0])[0] * 0
    return trim((a[i] if i < len(a) else zero) + (b[i] if i < len(b) else zero) for i in range(n))


def neg(a):
    return [-c for c in a]


def sub(a, b):
    return add(a, neg(b))


def mul(a, b):
    if not a or not b:
        return []
    out = [a[0] * 0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def scale(a, c):
    return trim(c * x for x in a)


def divmod_poly(a, b):
    """Quotient and remainder of ``a`` by a nonzero ``b``."""
    b = trim(b)
    if not b:
        raise DivisionByZero("polynomial division by zero")
    a = trim(a)
    if len(a) < len(b):
        return [], a
    inv_lead = 1 / b[-1] if isinstance(b[-1], (int, Fraction)) else b[-1].inverse()
    q = [b[-1] * 0] * (len(a) - len(b) + 1)
    r = list(a)
    db = len(b) - 1
    for k in range(len(a) - len(b), -1, -1):
        c = r[k + db] * inv_lead
        q[k] = c
        if c:
            for i, y in enumerate(b):
                r[k + i] -= c * y
    return trim(q), trim(r[:db])


def xgcd(a, b):
    """Return ``(g, s, t)`` with ``g = s*a + t*b`` and ``g`` monic (or zero)."""
    r0, r1 = trim(a), trim(b)
    one = (r0 or r1)[0] * 0 + 1
    s0, s1 = [one], []
    t0, t1 = [], [one]
    while r1:
        q, r = divmod_poly(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if r0:
        lead = r0[-1]
        r0, s0, t0 = (scale(p, one / lead) for p in (r0, s0, t0))
    return r0, s0, t0


def inverse_mod(a, m):
    """Inverse of ``a`` modulo ``m``, or ``None`` when they share a factor.

    Half-extended Euclid: only the cofactor of ``a`` is tracked.
    """
    r0, r1 = trim(m), trim(a)
    if not r1:
        return None
    one = r1[0] * 0 + 1
    s0, s1 = [], [one]
    while len(r1) > 1:
        q, r = divmod_poly(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
    if not r1:
        return None
    return scale(s1, one / r1[0])


def powmod(base, e: int, m):
    result = [base[0] * 0 + 1] if base else []
    if not base:
        return [] if e else result
    base = divmod_poly(base, m)[1]
    result = divmod_poly(result, m)[1]
    while e:
        if e & 1:
            result = divmod_poly(mul(result, base), m)[1]
        base = divmod_poly(mul(base, base), m)[1]
        e >>= 1
    return result


def evaluate(a, x):
    acc = x * 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def cyclotomic(n: int) -> list[Fraction]:
    """The n-th cyclotomic polynomial over QQ by iterated exact division of x^n - 1."""
    return list(_cyclotomic(n))


@functools.cache
def _cyclotomic(n: int) -> tuple:
    f = [QQ(-1)] + [QQ(0)] * (n - 1) + [QQ(1)]
    for d in range(1, n):
        if n % d == 0:
            q, r = divmod_poly(f, _cyclotomic(d))
            if r:
                raise AssertionError(f"Phi_{d} does not divide x^{n} - 1")
            f = q
    return tuple(f)


def monic_polys(field, n: int):
    """All monic polynomials of degree ``n`` over a prime field, in lexicographic order.

    The order compares coefficients from the highest degree down, i.e. by the
    integer ``sum c_i p^i``.
    """
    elems = field.elements()
    for tail in itertools.product(elems, repeat=n):
        # product varies its last entry fastest; reverse so c_0 varies fastest
        yield list(reversed(tail)) + [field.one()]


def is_irreducible_gfp(f, field) -> bool:
    """Ben-Or test: ``f`` has no factor of degree ``d <= n/2``."""
    f = trim(f)
    n = degree(f)
    if n < 1:
        return False
    if n == 1:
        return True
    x = [field.zero(), field.one()]
    h = x
    for _ in range(n // 2):
        h = powmod(h, field.p, f)
        g, _, _ = xgcd(f, sub(h, x))
        if degree(g) > 0:
            return False
    return True


def smallest_irreducible(p: int, n: int):
    field = GF(p)
    for f in monic_polys(field, n):
        if is_irreducible_gfp(f, field):
            return f
    raise AssertionError(f"no irreducible polynomial of degree {n} over GF({p})")


def format_poly(a, var: str = "x") -> str:
    from .scalars import format_scalar

    terms = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if not c:
            continue
        cs = format_scalar(c).split(" mod ")[0]
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            terms.append(cs)
        elif cs == "1":
            terms.append(mono)
        elif cs == "-1":
            terms.append("-" + mono)
        else:
            terms.append(f"{cs}*{mono}")
    return " + ".join(terms).replace("+ -", "- ") if terms else "0"
