"""Galois extensions L/K realised as polynomial quotient rings K[g]/(f).

Three constructors are provided:

* :func:`make_cyclotomic` -- QQ(zeta_n) over QQ, automorphisms zeta -> zeta^k;
* :func:`make_finite_field` -- GF(p^n) over GF(p), Frobenius powers;
* :func:`make_extension` -- any abelian Galois extension given by a modulus
  and the images of the generator, validated exhaustively.

Every context carries its ordered automorphism list, identity first; the
determinants built elsewhere index their columns by this list.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import poly
from .errors import (
    DegreeTooLarge,
    DivisionByZero,
    InputError,
    InternalInconsistency,
    InvalidGaloisGroup,
    MixedFields,
    MixedGroundFields,
    NonAbelianGroup,
    NotABasis,
    NotCyclic,
    NotIrreducible,
    NotPrime,
    SingularGram,
)
from .linalg import Matrix
from .scalars import GF, QQ, PrimeResidue, format_scalar, is_prime, units_mod

MAX_CYCLOTOMIC_DEGREE = 24
MAX_FINITE_ORDER = 2**10


class FieldElement:
    """An element of L, stored as its coefficients on the power basis 1, g, ..., g^(n-1)."""

    __slots__ = ("coeffs", "field")

    def __init__(self, field: ExtensionField, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != field.degree:
            raise InputError(f"expected {field.degree} coefficients, got {len(coeffs)}")
        self.field = field
        self.coeffs = coeffs

    def _other(self, other) -> FieldElement | None:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise MixedFields(f"{self.field.name} and {other.field.name} mixed")
            return other
        if isinstance(other, (int, Fraction, PrimeResidue)) and not isinstance(other, bool):
            return self.field.embed(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return FieldElement(self.field, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, PrimeResidue)) and not isinstance(other, bool):
            c = self.field.ground(other)
            return FieldElement(self.field, [c * a for a in self.coeffs])
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.field._mul(self, o)

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        return self.field._inverse(self)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int) -> FieldElement:
        if e < 0:
            return self.inverse() ** -e
        result, base = self.field.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return other.field is self.field and other.coeffs == self.coeffs
        if isinstance(other, (int, Fraction, PrimeResidue)) and not isinstance(other, bool):
            try:
                return self == self.field.embed(other)
            except MixedGroundFields:
                return False
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def is_scalar(self) -> bool:
        return not any(self.coeffs[1:])

    def scalar(self):
        if not self.is_scalar():
            raise InputError(f"{self} does not lie in the ground field")
        return self.coeffs[0]

    def poly(self) -> list:
        return poly.trim(self.coeffs)

    def __repr__(self):
        return poly.format_poly(self.coeffs, self.field.var)

    __str__ = __repr__


@dataclass(frozen=True, eq=False)
class Automorphism:
    """A K-automorphism of L, determined by the image of the generator g.

    ``matrix`` acts on coefficient vectors: its column j holds the
    coefficients of ``image**j``.
    """

    image: FieldElement
    matrix: tuple
    label: str

    def __call__(self, x: FieldElement) -> FieldElement:
        return apply(self, x)

    def __repr__(self):
        return f"{self.label}: {self.image.field.var} -> {self.image}"


@dataclass(frozen=True)
class TraceFunctional:
    """The K-linear functional ``x -> tr(b*x)``."""

    b: FieldElement

    def __call__(self, x: FieldElement):
        return ev(self, x)


class ExtensionField:
    """A Galois extension L = K[g]/(f) together with its ordered Galois group."""

    def __init__(self, ground, modulus, images, *, kind: str = "custom", params=None, labels=None,
                 var: str = "g", check_irreducible: bool = True):
        self.ground = ground
        modulus = [ground(c) for c in modulus]
        modulus = poly.trim(modulus)
        if len(modulus) < 2 or modulus[-1] != ground.one():
            raise InputError("modulus must be monic of degree >= 1")
        self.modulus = tuple(modulus)
        self.degree = len(modulus) - 1
        self.kind = kind
        self.params = dict(params or {})
        self.var = var
        self.name = self._make_name()
        if check_irreducible and not _irreducible(modulus, ground):
            raise NotIrreducible(f"{poly.format_poly(modulus)} is reducible over {ground.name}")
        n = self.degree
        # reduction table: g^(n+k) on the power basis, k = 0..n-2
        self._reductions = []
        row = [-c for c in self.modulus[:n]]
        for _ in range(max(n - 1, 0)):
            self._reductions.append(row)
            top = row[-1]
            row = [ground.zero()] + row[:-1]
            if top:
                row = [c - top * m for c, m in zip(row, self.modulus[:n])]
        if ground.characteristic:
            self._int_reductions = [[c.value for c in r] for r in self._reductions]
        elif all(c.denominator == 1 for c in self.modulus):
            self._int_reductions = [[c.numerator for c in r] for r in self._reductions]
        else:
            self._int_reductions = None
        labels = labels or [f"sigma{i + 1}" for i in range(len(images))]
        self.automorphisms = [self._automorphism(self.element(im), lab) for im, lab in zip(images, labels)]
        self._validate_group()
        self.cyclic_generator = self._find_generator()

    def _make_name(self) -> str:
        if self.kind == "cyclotomic":
            return f"QQ(zeta_{self.params['n']})"
        if self.kind == "finite":
            return f"GF({self.params['p']}^{self.params['n']})"
        return f"{self.ground.name}[{self.var}]/({poly.format_poly(self.modulus, self.var)})"

    # -- element construction ------------------------------------------

    @property
    def characteristic(self) -> int:
        return self.ground.characteristic

    def element(self, coeffs) -> FieldElement:
        coeffs = [self.ground(c) for c in coeffs]
        if len(coeffs) > self.degree:
            coeffs = poly.divmod_poly(coeffs, list(self.modulus))[1]
        coeffs = list(coeffs) + [self.ground.zero()] * (self.degree - len(coeffs))
        return FieldElement(self, coeffs)

    def __call__(self, x) -> FieldElement:
        if isinstance(x, FieldElement):
            if x.field is not self:
                raise MixedFields(f"element of {x.field.name} given to {self.name}")
            return x
        if isinstance(x, (list, tuple)):
            return self.element(x)
        if isinstance(x, str):
            return self.parse(x)
        return self.embed(x)

    def embed(self, c) -> FieldElement:
        return FieldElement(self, [self.ground(c)] + [self.ground.zero()] * (self.degree - 1))

    def zero(self) -> FieldElement:
        return self.embed(0)

    def one(self) -> FieldElement:
        return self.embed(1)

    def gen(self) -> FieldElement:
        if self.degree == 1:
            return self.element([-self.modulus[0]])
        return self.element([0, 1])

    def power_basis(self) -> list[FieldElement]:
        g = self.gen()
        out, x = [], self.one()
        for _ in range(self.degree):
            out.append(x)
            x = x * g
        return out

    def parse(self, s: str) -> FieldElement:
        """Comma-separated power-basis coefficients, e.g. ``"1,-1/5,0,0"``."""
        parts = [p for p in s.split(",")]
        if len(parts) != self.degree:
            raise InputError(f"{self.name} needs {self.degree} coefficients, got {len(parts)}")
        return self.element([self.ground.parse(p) for p in parts])

    def random_element(self, rng, bound: int = 3) -> FieldElement:
        return FieldElement(self, [self.ground.random(rng, bound) for _ in range(self.degree)])

    def random_nonzero(self, rng, bound: int = 3) -> FieldElement:
        while True:
            x = self.random_element(rng, bound)
            if x:
                return x

    def elements(self):
        """Every element of a finite field, in coefficient-lexicographic order."""
        if self.characteristic == 0:
            raise InputError("cannot enumerate an infinite field")
        for c in itertools.product(self.ground.elements(), repeat=self.degree):
            yield FieldElement(self, c)

    # -- arithmetic ----------------------------------------------------

    def _mul(self, x: FieldElement, y: FieldElement) -> FieldElement:
        if self._int_reductions is None:
            return self._mul_generic(x, y)
        # integer convolution, then one conversion back to the ground field
        if self.characteristic:
            xs = [c.value for c in x.coeffs]
            ys = [c.value for c in y.coeffs]
            den = 1
        else:
            dx = _lcm_den(x.coeffs)
            dy = _lcm_den(y.coeffs)
            xs = [c.numerator * (dx // c.denominator) for c in x.coeffs]
            ys = [c.numerator * (dy // c.denominator) for c in y.coeffs]
            den = dx * dy
        n = self.degree
        prod = [0] * (2 * n - 1)
        for i, a in enumerate(xs):
            if a:
                for j, b in enumerate(ys):
                    if b:
                        prod[i + j] += a * b
        out = prod[:n]
        for k, c in enumerate(prod[n:]):
            if c:
                for i, r in enumerate(self._int_reductions[k]):
                    if r:
                        out[i] += c * r
        if self.characteristic:
            K = self.ground
            return FieldElement(self, [PrimeResidue(v, K) for v in out])
        if den == 1:
            return FieldElement(self, [Fraction(v) for v in out])
        return FieldElement(self, [Fraction(v, den) for v in out])

    def _mul_generic(self, x: FieldElement, y: FieldElement) -> FieldElement:
        n = self.degree
        zero = self.ground.zero()
        prod = [zero] * (2 * n - 1)
        for i, a in enumerate(x.coeffs):
            if not a:
                continue
            for j, b in enumerate(y.coeffs):
                if b:
                    prod[i + j] += a * b
        out = prod[:n]
        for k, c in enumerate(prod[n:]):
            if c:
                red = self._reductions[k]
                for i in range(n):
                    if red[i]:
                        out[i] += c * red[i]
        return FieldElement(self, out)

    def _inverse(self, x: FieldElement) -> FieldElement:
        if not x:
            raise DivisionByZero(f"0 has no inverse in {self.name}")
        s = poly.inverse_mod(x.poly(), list(self.modulus))
        if s is None:
            raise InternalInconsistency(f"{x} shares a factor with the modulus")
        return self.element(s)

    # -- Galois structure ----------------------------------------------

    def _automorphism(self, image: FieldElement, label: str) -> Automorphism:
        cols, x = [], self.one()
        for _ in range(self.degree):
            cols.append(x.coeffs)
            x = x * image
        rows = tuple(tuple(c[i] for c in cols) for i in range(self.degree))
        return Automorphism(image, rows, label)

    def _validate_group(self):
        auts = self.automorphisms
        n = self.degree
        if len(auts) != n:
            raise InvalidGaloisGroup(f"need {n} automorphisms, got {len(auts)}")
        if auts[0].image != self.gen():
            raise InvalidGaloisGroup("the first automorphism must be the identity")
        images = [a.image for a in auts]
        if len(set(images)) != n:
            raise InvalidGaloisGroup("automorphism images are not distinct")
        f = list(self.modulus)
        for a in auts:
            if poly.evaluate(f, a.image):
                raise InvalidGaloisGroup(f"{a.image} is not a root of the modulus")
        index = {im: i for i, im in enumerate(images)}
        self._compose = [[0] * n for _ in range(n)]
        for i, a in enumerate(auts):
            for j, b in enumerate(auts):
                # (a o b)(g) = a(b(g))
                ab = apply(a, b.image)
                if ab not in index:
                    raise InvalidGaloisGroup(f"{a.label} o {b.label} is not in the group")
                self._compose[i][j] = index[ab]
        for i in range(n):
            for j in range(n):
                if self._compose[i][j] != self._compose[j][i]:
                    raise NonAbelianGroup(f"{auts[i].label} and {auts[j].label} do not commute")
        for a in auts:
            if Matrix(self.ground, a.matrix).det() == 0:
                raise InvalidGaloisGroup(f"{a.label} has a singular matrix")

    def compose(self, i: int, j: int) -> int:
        """Index of ``automorphisms[i] o automorphisms[j]``."""
        return self._compose[i][j]

    def order_of(self, i: int) -> int:
        k, cur = 1, i
        while cur != 0:
            cur = self._compose[i][cur]
            k += 1
        return k

    def _find_generator(self) -> int | None:
        if self.kind == "finite":
            return 1 if self.degree > 1 else 0
        for i in range(self.degree):
            if self.order_of(i) == self.degree:
                return i
        return None

    @property
    def generator(self) -> Automorphism:
        if self.cyclic_generator is None:
            raise NotCyclic(f"Gal({self.name}/{self.ground.name}) is not cyclic")
        return self.automorphisms[self.cyclic_generator]

    def is_cyclic(self) -> bool:
        return self.cyclic_generator is not None

    def sigma_power(self, x: FieldElement, k: int) -> FieldElement:
        """Apply the cyclic generator ``k`` times (``k`` taken mod n)."""
        sigma = self.generator
        for _ in range(k % self.degree):
            x = apply(sigma, x)
        return x

    def is_abelian(self) -> bool:
        # enforced at construction
        return True

    def involutions(self) -> list[int]:
        return [i for i in range(1, self.degree) if self._compose[i][i] == 0]

    def conjugates(self, x: FieldElement) -> list[FieldElement]:
        return [apply(s, x) for s in self.automorphisms]

    def in_ground(self, x: FieldElement) -> bool:
        return x.is_scalar()

    def descriptor(self) -> dict:
        d = {"kind": self.kind}
        if self.kind == "cyclotomic":
            d["n"] = self.params["n"]
        elif self.kind == "finite":
            d["p"] = self.params["p"]
            d["n"] = self.params["n"]
        elif self.characteristic:
            d["p"] = self.characteristic
        d["modulus"] = [format_scalar(c) for c in self.modulus]
        if self.kind == "custom":
            d["images"] = [[format_scalar(c) for c in a.image.coeffs] for a in self.automorphisms]
        return d

    def __repr__(self):
        return self.name

    @functools.cached_property
    def _trace_row(self):
        return tuple(trace_by_conjugates(b) for b in self.power_basis())

    @functools.cached_property
    def _trace_zero_basis(self):
        row = Matrix(self.ground, [[trace(b) for b in self.power_basis()]])
        return tuple(self.element(v) for v in row.kernel())


def _lcm_den(coeffs) -> int:
    d = 1
    for c in coeffs:
        q = c.denominator
        if q != 1 and d % q:
            d = d * q // math.gcd(d, q)
    return d


def _irreducible(f, ground) -> bool:
    if ground.characteristic:
        return poly.is_irreducible_gfp(f, ground)
    import sympy

    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(f))
    return sympy.Poly(expr, x, domain="QQ").is_irreducible


# -- constructors ------------------------------------------------------

def make_cyclotomic(n: int, max_degree: int = MAX_CYCLOTOMIC_DEGREE) -> ExtensionField:
    """QQ(zeta_n) over QQ with automorphisms zeta -> zeta^k ordered by increasing k."""
    if n < 3:
        raise InputError(f"cyclotomic index must be >= 3, got {n}")
    phi_n = len(units_mod(n))
    if phi_n > max_degree:
        raise DegreeTooLarge(f"phi({n}) = {phi_n} exceeds the cap {max_degree}")
    return _cyclotomic_field(n)


@functools.cache
def _cyclotomic_field(n: int) -> ExtensionField:
    units = units_mod(n)
    phi = poly.cyclotomic(n)
    # zeta^k reduced mod Phi_n
    images = [poly.divmod_poly([QQ(0)] * k + [QQ(1)], phi)[1] for k in units]
    # Phi_n is irreducible over QQ (Gauss), so skip the generic check
    return ExtensionField(QQ, phi, images, kind="cyclotomic", params={"n": n},
                          labels=[f"sigma_{k}" for k in units], var="z", check_irreducible=False)


def make_finite_field(p: int, n: int, max_order: int = MAX_FINITE_ORDER) -> ExtensionField:
    """GF(p^n) over GF(p): lexicographically smallest irreducible modulus, Frobenius powers."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 2:
        raise InputError(f"extension degree must be >= 2, got {n}")
    if p**n > max_order:
        raise DegreeTooLarge(f"{p}^{n} exceeds the cap {max_order}")
    return _finite_field(p, n)


@functools.cache
def _finite_field(p: int, n: int) -> ExtensionField:
    K = GF(p)
    f = poly.smallest_irreducible(p, n)
    x = [K.zero(), K.one()]
    images = [poly.powmod(x, p**i, f) for i in range(n)]
    labels = ["id"] + [f"frob^{i}" if i > 1 else "frob" for i in range(1, n)]
    return ExtensionField(K, f, images, kind="finite", params={"p": p, "n": n},
                          labels=labels, var="t", check_irreducible=False)


def make_extension(ground, modulus, images, var: str = "g") -> ExtensionField:
    """An abelian Galois extension from a modulus and the generator's images.

    ``images`` are coefficient lists; the first must be the identity image.
    Irreducibility, closure, order and commutativity are all checked.
    """
    return ExtensionField(ground, modulus, images, kind="custom", var=var)


# -- module-level operations -------------------------------------------

def el_arith(op: str, x: FieldElement, y: FieldElement) -> FieldElement:
    if not isinstance(x, FieldElement) or not isinstance(y, FieldElement):
        raise MixedFields("both operands must be field elements")
    if x.field is not y.field:
        raise MixedFields(f"{x.field.name} and {y.field.name} mixed")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise InputError(f"unknown operation {op!r}")


def apply(sigma: Automorphism, x: FieldElement) -> FieldElement:
    field = sigma.image.field
    if x.field is not field:
        raise MixedFields(f"automorphism of {field.name} applied to element of {x.field.name}")
    zero = field.ground.zero()
    out = []
    for row in sigma.matrix:
        acc = zero
        for m, c in zip(row, x.coeffs):
            if m and c:
                acc += m * c
        out.append(acc)
    return FieldElement(field, out)


def _to_ground(total: FieldElement, what: str):
    if not total.is_scalar():
        raise InternalInconsistency(f"{what} {total} does not lie in the ground field")
    return total.coeffs[0]


def trace(x: FieldElement):
    """``tr(x)``, the sum of all Galois conjugates of ``x``, as a ground scalar.

    Evaluated through the field's trace row ``(tr(1), tr(g), ...)``, which is
    built once from conjugate sums; see :func:`trace_by_conjugates`.
    """
    field = x.field
    acc = field.ground.zero()
    for c, t in zip(x.coeffs, field._trace_row):
        if c and t:
            acc += c * t
    return acc


def trace_by_conjugates(x: FieldElement):
    """``tr(x)`` summed directly over the automorphism list."""
    field = x.field
    total = field.zero()
    for s in field.automorphisms:
        total = total + apply(s, x)
    return _to_ground(total, "trace")


def norm(x: FieldElement):
    """Product of all Galois conjugates of ``x``, as a ground scalar."""
    field = x.field
    total = field.one()
    for s in field.automorphisms:
        total = total * apply(s, x)
    return _to_ground(total, "norm")


def trace_functional(b: FieldElement) -> TraceFunctional:
    return TraceFunctional(b)


def ev(tf: TraceFunctional, x: FieldElement):
    if tf.b.field is not x.field:
        raise MixedFields("functional and argument live in different fields")
    return trace(tf.b * x)


def coordinate_matrix(elements) -> Matrix:
    """K-matrix whose column j holds the power-basis coefficients of ``elements[j]``."""
    elements = list(elements)
    field = elements[0].field
    for e in elements:
        if e.field is not field:
            raise MixedFields("elements from different fields")
    return Matrix.from_columns(field.ground, [e.coeffs for e in elements])


def coordinate_rank(elements) -> int:
    """Dimension of the K-span of ``elements``."""
    return coordinate_matrix(elements).rank()


def check_basis(elements, field: ExtensionField | None = None) -> list[FieldElement]:
    elements = list(elements)
    if field is None:
        if not elements:
            raise NotABasis("empty list")
        field = elements[0].field
    if len(elements) != field.degree or coordinate_rank(elements) != field.degree:
        raise NotABasis(f"not a {field.ground.name}-basis of {field.name}")
    return elements


def coordinates(x: FieldElement, basis) -> list:
    """Coordinates of ``x`` with respect to a K-basis."""
    return coordinate_matrix(basis).solve(x.coeffs)


def trace_gram(basis) -> Matrix:
    """The Gram matrix ``(tr(e_i e_j))`` of the trace form."""
    basis = list(basis)
    field = basis[0].field
    return Matrix(field.ground, [[trace(a * b) for b in basis] for a in basis])


def element_of_functional(values, basis) -> FieldElement:
    """The unique ``b`` with ``tr(b * basis[i]) = values[i]`` for all i."""
    basis = check_basis(basis)
    field = basis[0].field
    values = [field.ground(v) for v in values]
    if len(values) != field.degree:
        raise InputError(f"need {field.degree} values, got {len(values)}")
    gram = trace_gram(basis)
    try:
        # tr(b e_i) = sum_j y_j tr(e_j e_i); the Gram matrix is symmetric
        y = gram.solve(values)
    except Exception as exc:
        raise SingularGram(f"trace form is degenerate on {field.name}") from exc
    total = field.zero()
    for c, e in zip(y, basis):
        total = total + e * c
    return total


def trace_zero_basis(field: ExtensionField) -> list[FieldElement]:
    """Echelon basis of the trace-zero hyperplane ker(tr)."""
    return list(field._trace_zero_basis)


def sylow2_cyclic(field: ExtensionField) -> bool:
    """Whether the Sylow 2-subgroup of the (abelian) Galois group is cyclic."""
    if not field.is_abelian():
        raise NonAbelianGroup(f"Gal({field.name}) is not abelian")
    return len(field.involutions()) <= 1


def catalog() -> list[ExtensionField]:
    """The default verification catalog."""
    fields = [make_cyclotomic(n) for n in (3, 5, 7, 8, 11, 12, 15)]
    fields += [make_finite_field(p, n) for p, n in ((2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2))]
    return fields

