"""Determinantal independence test for cyclic extensions.

With Gal(L/K) generated by sigma, elements b_1..b_k (k <= n) are
K-linearly dependent iff ``det S = 0`` where ``S[i][j] = sigma^i(b_j)``
(rows counted from 0).  :func:`reduction_step` exposes one round of the
elimination that proves it: the tuple shrinks to
``x_j = b_j - (b_1 / sigma(b_1)) * sigma(b_j)``, j = 2..k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    InputError,
    MismatchWithOracle,
    NotCyclic,
    TooManyElements,
    ZeroLeadingElement,
)
from .field import Automorphism, FieldElement, apply, coordinate_rank
from .linalg import Matrix

CHECK_ORACLE = False


@dataclass(frozen=True)
class SMatrix:
    k: int
    matrix: Matrix
    generator: Automorphism

    def det(self) -> FieldElement:
        return self.matrix.det()


@dataclass(frozen=True)
class ReductionStep:
    gamma: tuple            # gamma[i - 1] = sigma^(k-i-1)(b_1 / sigma(b_1)), i = 1..k-1
    x_next: tuple           # x_2..x_k
    leading: FieldElement   # sigma^(k-1)(b_1)
    sign: int

    def predicted_det(self) -> FieldElement:
        """``sign * sigma^(k-1)(b_1) * det S(x_2..x_k)``."""
        return self.leading * s_matrix(self.x_next).det() * self.sign


def _orbit(sigma: Automorphism, x: FieldElement, k: int) -> list[FieldElement]:
    out = [x]
    for _ in range(k - 1):
        out.append(apply(sigma, out[-1]))
    return out


def s_matrix(b) -> SMatrix:
    """The k x k matrix with entry ``(i, j) = sigma^i(b_j)``."""
    b = list(b)
    if not b:
        raise InputError("need at least one element")
    field = b[0].field
    if not field.is_cyclic():
        raise NotCyclic(f"Gal({field.name}) has no designated cyclic generator")
    k = len(b)
    if k > field.degree:
        raise TooManyElements(f"{k} elements in a degree-{field.degree} extension")
    sigma = field.generator
    columns = [_orbit(sigma, x, k) for x in b]
    return SMatrix(k, Matrix.from_columns(field, columns), sigma)


def dependent(b, check_oracle: bool | None = None) -> bool:
    """Whether ``b`` is K-linearly dependent, decided by ``det S == 0``."""
    b = list(b)
    answer = not s_matrix(b).det()
    if CHECK_ORACLE if check_oracle is None else check_oracle:
        oracle = coordinate_rank(b) < len(b)
        if oracle != answer:
            raise MismatchWithOracle(f"det S and coordinate rank disagree on {b}")
    return answer


def reduction_sign(k: int) -> int:
    # reverse the k rows, then reverse the k-1 rows of the reduced block
    e = k * (k - 1) // 2 + (k - 1) * (k - 2) // 2
    return -1 if e % 2 else 1


def reduction_step(b, verify: bool = False) -> ReductionStep:
    """One elimination round, optionally checking the determinant factorization."""
    b = list(b)
    k = len(b)
    if k < 2:
        raise InputError("reduction needs at least two elements")
    b1 = b[0]
    if not b1:
        raise ZeroLeadingElement("b_1 must be nonzero")
    field = b1.field
    sigma = field.generator
    ratio = b1 / apply(sigma, b1)
    x_next = tuple(bj - ratio * apply(sigma, bj) for bj in b[1:])
    ratio_orbit = _orbit(sigma, ratio, k)
    gamma = tuple(ratio_orbit[k - i - 1] for i in range(1, k))
    leading = _orbit(sigma, b1, k)[-1]
    step = ReductionStep(gamma, x_next, leading, reduction_sign(k))
    if verify:
        actual = s_matrix(b).det()
        if actual != step.predicted_det():
            raise MismatchWithOracle(f"det S = {actual} but the reduction predicts {step.predicted_det()}")
    return step
