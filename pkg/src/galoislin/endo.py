"""Endomorphisms of L as K-matrices and their tensor form sum a_i (x) tr.b_i.

Every endomorphism is anchored to an explicit K-basis of L: column j of
its matrix holds the coordinates of ``tau(basis[j])``.  A rank-one map
``a (x) tr.b`` sends ``x`` to ``tr(b*x) * a``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from dataclasses import field as dc_field

from .errors import InputError, InternalInconsistency, MixedFields, NotRankOne
from .field import (
    FieldElement,
    check_basis,
    coordinate_matrix,
    element_of_functional,
    trace,
    trace_gram,
)
from .linalg import Matrix


@dataclass(frozen=True, eq=False)
class Endomorphism:
    matrix: Matrix
    basis: tuple

    @property
    def field(self):
        return self.basis[0].field

    @classmethod
    def from_map(cls, fn, basis=None, field=None) -> Endomorphism:
        """Matrix of the K-linear map ``fn`` against ``basis`` (default: power basis)."""
        if basis is None:
            basis = field.power_basis()
        basis = tuple(check_basis(basis))
        to_coords = _coordinate_solver(basis)
        cols = [to_coords(fn(e)) for e in basis]
        return cls(Matrix.from_columns(basis[0].field.ground, cols), basis)

    @functools.cached_property
    def _coords(self):
        return _coordinate_solver(self.basis)

    def __call__(self, x: FieldElement) -> FieldElement:
        coords = self._coords(x)
        image = self.matrix @ coords
        return _combine(self.basis, image)

    def in_basis(self, basis) -> Endomorphism:
        """The same map expressed against another basis."""
        return Endomorphism.from_map(self, basis)

    def rank(self) -> int:
        return self.matrix.rank()

    def __eq__(self, other):
        if not isinstance(other, Endomorphism):
            return NotImplemented
        if self.basis != other.basis:
            other = other.in_basis(self.basis)
        return self.matrix == other.matrix

    __hash__ = None


@dataclass(frozen=True)
class TensorForm:
    """``sum_i a_i (x) tr.b_i`` as a list of ``(a_i, b_i)`` pairs."""

    terms: tuple = dc_field(default=())

    def __call__(self, x: FieldElement) -> FieldElement:
        total = x.field.zero()
        for a, b in self.terms:
            total = total + a * trace(b * x)
        return total

    def contraction(self):
        """``sum_i tr(a_i b_i)``, the trace of the represented endomorphism."""
        it = iter(self.terms)
        a, b = next(it)
        total = trace(a * b)
        for a, b in it:
            total = total + trace(a * b)
        return total


def _coordinate_solver(basis):
    inv = coordinate_matrix(basis).inverse()
    return lambda x: inv @ list(x.coeffs)


def _combine(basis, coords) -> FieldElement:
    total = basis[0].field.zero()
    for e, c in zip(basis, coords):
        if c:
            total = total + e * c
    return total


def rank_one(a: FieldElement, b: FieldElement, basis=None) -> Endomorphism:
    """The endomorphism ``x -> tr(b*x) * a``."""
    if a.field is not b.field:
        raise MixedFields("a and b live in different fields")
    return Endomorphism.from_map(lambda x: a * trace(b * x), basis, field=a.field)


def tensor_expand(tau: Endomorphism, b_basis) -> TensorForm:
    """The unique ``a_1..a_n`` with ``tau(x) = sum_i tr(b_i x) a_i``."""
    b_basis = check_basis(b_basis)
    field = tau.field
    if b_basis[0].field is not field:
        raise MixedFields("tensor basis lives in a different field")
    e = tau.basis
    # M[i][k] = tr(b_i e_k); power-basis coefficients satisfy C_tau = C_a M
    m = Matrix(field.ground, [[trace(b * ek) for ek in e] for b in b_basis])
    images = coordinate_matrix([tau(ek) for ek in e])
    a_coeffs = images @ m.inverse()
    a_elems = [field.element(col) for col in a_coeffs.columns()]
    form = TensorForm(tuple(zip(a_elems, b_basis)))
    for ek in e:
        if form(ek) != tau(ek):
            raise InternalInconsistency("tensor expansion failed to reconstruct the endomorphism")
    return form


def trace_of(tau: Endomorphism, via: str = "matrix", b_basis=None):
    """Trace of ``tau`` from its matrix diagonal or from its tensor expansion."""
    if via == "matrix":
        return tau.matrix.trace()
    if via == "tensor":
        if b_basis is None:
            b_basis = tau.field.power_basis()
        return tensor_expand(tau, b_basis).contraction()
    raise InputError(f"unknown trace route {via!r}")


def rank_one_extract(tau: Endomorphism) -> tuple[FieldElement, FieldElement]:
    """Recover ``(a, b)`` with ``rank_one(a, b) == tau``.

    ``a`` is the image of the first basis vector not in the kernel; the
    pair is only determined up to ``(lam*a, b/lam)`` for scalar ``lam``.
    """
    m = tau.matrix
    if m.rank() != 1:
        raise NotRankOne(f"endomorphism has rank {m.rank()}")
    j0 = next(j for j in range(m.cols) if any(m.column(j)))
    col0 = m.column(j0)
    r = next(i for i, c in enumerate(col0) if c)
    a = tau(tau.basis[j0])
    # every column is f(e_k) times the coordinates of a
    values = [m[r, k] / col0[r] for k in range(m.cols)]
    b = element_of_functional(values, tau.basis)
    return a, b


def dual_basis_matrix(e) -> tuple[Matrix, Matrix]:
    """The trace Gram matrix ``A = (tr(e_j e_k))`` and ``U = A^-1``."""
    e = check_basis(e)
    a = trace_gram(e)
    return a, a.inverse()


def dual_basis(e) -> list[FieldElement]:
    """Elements ``c_i`` with ``tr(c_i e_k) = delta_ik``, via ``c_i = sum_j U_ij e_j``."""
    e = check_basis(e)
    _, u = dual_basis_matrix(e)
    return [_combine(e, u.row(i)) for i in range(len(e))]
