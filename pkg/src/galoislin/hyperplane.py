"""Determinants built from Galois conjugates, and the hyperplane maps they define.

For x_1..x_n in L, ``B = (sigma_j(x_i))`` is invertible exactly when the
x_i form a K-basis.  For a hyperplane ``H = ker tr.a`` with basis
h_2..h_n, ``theta_H(x) = det [conj(x); conj(h_2); ...; conj(h_n)]`` is a
rank-one endomorphism, equal to ``N(a^-1) * det E_1 * tr(a*x)`` where
``E_1`` is the conjugate matrix of the trace-zero basis with the identity
column removed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .endo import Endomorphism
from .errors import (
    InternalInconsistency,
    MismatchWithOracle,
    NotABasis,
    TheoremViolation,
    ZeroElement,
)
from .field import (
    ExtensionField,
    FieldElement,
    coordinate_rank,
    norm,
    sylow2_cyclic,
    trace,
    trace_zero_basis,
)
from .linalg import Matrix

IN_K = "InK"
QUADRATIC_TIMES_K = "QuadraticTimesK"


@dataclass(frozen=True)
class DetClassification:
    case: str
    value: FieldElement
    square_in_K: object = None


@dataclass(frozen=True)
class HyperplaneContext:
    a: FieldElement
    h_basis: tuple
    extension_vector: FieldElement

    @property
    def field(self) -> ExtensionField:
        return self.a.field


@dataclass(frozen=True)
class Check:
    x: FieldElement
    lhs: FieldElement
    rhs: FieldElement

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    field: ExtensionField
    checks: tuple

    @property
    def ok(self) -> bool:
        return all(c.equal for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.equal]


def conjugate_row(x: FieldElement) -> list[FieldElement]:
    return [s(x) for s in x.field.automorphisms]


def basis_matrix(xs) -> Matrix:
    """``B[i][j] = sigma_j(x_i)``, columns in the context's automorphism order."""
    xs = list(xs)
    field = xs[0].field
    if len(xs) != field.degree:
        raise NotABasis(f"need {field.degree} elements, got {len(xs)}")
    return Matrix(field, [conjugate_row(x) for x in xs])


def is_basis(xs, check_oracle: bool = True) -> bool:
    """Whether ``det(sigma_j(x_i)) != 0``.

    With ``check_oracle`` the answer is compared against the rank of the
    K-coordinate matrix, and any disagreement raises.
    """
    xs = list(xs)
    field = xs[0].field
    if len(xs) != field.degree:
        return False
    answer = bool(basis_matrix(xs).det())
    if check_oracle and answer != (coordinate_rank(xs) == field.degree):
        raise MismatchWithOracle(f"det test and coordinate rank disagree on {xs}")
    return answer


def has_sign_character(field: ExtensionField) -> bool:
    """Whether some automorphism permutes G (by translation) with odd sign.

    For abelian G this happens iff the Sylow 2-subgroup is cyclic and
    nontrivial, i.e. G has exactly one involution.  Then det B is moved to
    its negative by that automorphism, so in odd characteristic it leaves K.
    """
    return field.characteristic != 2 and sylow2_cyclic(field) and len(field.involutions()) == 1


def classify_det(field: ExtensionField, value: FieldElement) -> DetClassification:
    """Place a nonzero conjugate determinant in one of the two cases."""
    if not value:
        raise NotABasis("determinant is zero")
    if not has_sign_character(field):
        if not value.is_scalar():
            raise TheoremViolation(f"det = {value} should lie in the ground field of {field.name}")
        return DetClassification(IN_K, value)
    square = value * value
    if value.is_scalar() or not square.is_scalar():
        raise TheoremViolation(f"det = {value} should be a non-K square root of an element of K")
    return DetClassification(QUADRATIC_TIMES_K, value, square.scalar())


def classify_basis_det(xs) -> DetClassification:
    xs = list(xs)
    if not is_basis(xs):
        raise NotABasis("elements are not a basis")
    return classify_det(xs[0].field, basis_matrix(xs).det())


def make_hyperplane(a: FieldElement) -> HyperplaneContext:
    """Context for ``H = ker tr.a = a^-1 H_0``."""
    if not a:
        raise ZeroElement("a hyperplane needs a nonzero a")
    field = a.field
    a_inv = a.inverse()
    b1 = next(e for e in field.power_basis() if trace(e))
    h = tuple(a_inv * b for b in trace_zero_basis(field))
    ext = a_inv * b1
    if any(trace(a * x) for x in h) or not trace(a * ext):
        raise InternalInconsistency("hyperplane basis does not match ker tr.a")
    if coordinate_rank(h + (ext,)) != field.degree:
        raise InternalInconsistency("hyperplane basis plus extension vector is not a basis")
    return HyperplaneContext(a, h, ext)


def theta_eval(ctx: HyperplaneContext, x: FieldElement) -> FieldElement:
    rows = [conjugate_row(x)] + [conjugate_row(h) for h in ctx.h_basis]
    return Matrix(ctx.field, rows).det()


def e1_matrix(ctx: HyperplaneContext) -> Matrix:
    return Matrix(ctx.field, [conjugate_row(h)[1:] for h in ctx.h_basis])


def e1_det(ctx: HyperplaneContext) -> FieldElement:
    if ctx.field.degree == 1:
        return ctx.field.one()
    d = e1_matrix(ctx).det()
    if not d:
        raise TheoremViolation("E_1 is singular")
    return d


def theta_endomorphism(ctx: HyperplaneContext) -> Endomorphism:
    return Endomorphism.from_map(lambda x: theta_eval(ctx, x), field=ctx.field)


def rank_one_identity_check(ctx: HyperplaneContext, trials: int = 20, seed=0, points=None) -> IdentityReport:
    """Compare ``theta_H(x)`` with ``N(a^-1) * det E_1(H_0) * tr(a*x)``.

    Evaluated on the power basis and ``trials`` seeded random x (or on
    explicit ``points``).
    """
    field = ctx.field
    one = field.one()
    c0 = e1_det(ctx if ctx.a == one else make_hyperplane(one))
    scale = c0 * norm(ctx.a.inverse())
    if points is None:
        rng = random.Random(f"{seed}:{field.name}:rank-one")
        points = field.power_basis() + [field.random_element(rng) for _ in range(trials)]
    checks = tuple(Check(x, theta_eval(ctx, x), scale * trace(ctx.a * x)) for x in points)
    return IdentityReport("corollary2" if ctx.a == one else "norm_twisted", field, checks)
