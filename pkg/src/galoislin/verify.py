"""Seeded verification suites: every check is an exact equality.

Each suite takes a field, a trial count and a root seed and returns a
:class:`SuiteResult`.  Randomness comes from a ``random.Random`` seeded by
``"{seed}:{suite}:{field}"``, so results depend only on those inputs.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from dataclasses import field as dc_field
from fractions import Fraction

from .endo import (
    Endomorphism,
    dual_basis,
    dual_basis_matrix,
    rank_one_extract,
    trace_of,
)
from .errors import GaloisLinError, NotCyclic
from .field import ExtensionField, apply, coordinate_matrix, coordinate_rank, trace
from .hyperplane import (
    IN_K,
    QUADRATIC_TIMES_K,
    classify_basis_det,
    classify_det,
    e1_det,
    has_sign_character,
    is_basis,
    make_hyperplane,
    rank_one_identity_check,
    theta_endomorphism,
    theta_eval,
)
from .independence import dependent, reduction_step
from .linalg import Matrix
from .scalars import QQ, squarefree_part

DEFAULT_SEED = 0xC0FFEE
EXHAUSTIVE_TUPLE_LIMIT = 1024


@dataclass
class SuiteResult:
    suite: str
    field: str
    total: int = 0
    failures: list = dc_field(default_factory=list)
    info: dict = dc_field(default_factory=dict)

    @property
    def passed(self) -> int:
        return self.total - len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, what: str):
        self.total += 1
        if not condition:
            self.failures.append(what)

    def guard(self, what: str, fn, *args, **kwargs):
        """Run ``fn(*args)``; a library error counts as one failed check."""
        try:
            return fn(*args, **kwargs)
        except GaloisLinError as exc:
            self.total += 1
            self.failures.append(f"{what}: {type(exc).__name__}: {exc}")
            return None

    def to_json(self) -> dict:
        return {"suite": self.suite, "field": self.field, "passed": self.passed, "total": self.total,
                "ok": self.ok, "failures": list(self.failures), "info": dict(self.info)}

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.suite:<10} {self.field:<14} {self.passed}/{self.total}"


def _rng(seed, suite: str, field: ExtensionField) -> random.Random:
    return random.Random(f"{seed}:{suite}:{field.name}")


# -- random objects ------------------------------------------------------

def random_tuple(field: ExtensionField, rng, k: int) -> list:
    return [field.random_element(rng) for _ in range(k)]


def random_scalar(field: ExtensionField, rng, nonzero: bool = False):
    while True:
        c = field.ground.random(rng, 3)
        if c or not nonzero:
            return c


def planted_dependent(field: ExtensionField, rng, k: int) -> list:
    """k elements, one of which is a K-combination of the others."""
    if k == 1:
        return [field.zero()]
    others = random_tuple(field, rng, k - 1)
    combo = field.zero()
    for x in others:
        combo = combo + x * random_scalar(field, rng)
    pos = rng.randrange(k)
    return others[:pos] + [combo] + others[pos:]


def random_basis(field: ExtensionField, rng) -> list:
    while True:
        xs = random_tuple(field, rng, field.degree)
        if coordinate_rank(xs) == field.degree:
            return xs


def quadratic_witness(field: ExtensionField):
    """Squarefree d with QQ(sqrt d) the quadratic subfield of QQ(zeta_p), p an odd prime."""
    if field.kind != "cyclotomic":
        return None
    p = field.params["n"]
    if p % 2 == 0 or len(field.automorphisms) != p - 1:
        return None
    return p if p % 4 == 1 else -p


def expected_cyclotomic_dual(p: int) -> Matrix:
    """The closed-form inverse of the power-basis trace Gram matrix of QQ(zeta_p), p >= 5."""
    n = p - 1
    q = Fraction(1, p)
    u = [[Fraction(0)] * n for _ in range(n)]
    u[0][0], u[0][1], u[1][0], u[1][1] = q, -q, -q, -2 * q
    for j in range(2, n):
        u[1][j] = u[j][1] = -q
    for i in range(2, n):
        u[i][p - i] = q
    return Matrix(QQ, u)


# -- suites ----------------------------------------------------------------

def suite_prop1(field: ExtensionField, trials: int = 100, seed=DEFAULT_SEED) -> SuiteResult:
    """Basis test by conjugate determinant against coordinate rank."""
    res = SuiteResult("prop1", field.name)
    n = field.degree
    if field.characteristic and (field.ground.p ** n) ** n <= EXHAUSTIVE_TUPLE_LIMIT:
        tuples = itertools.product(list(field.elements()), repeat=n)
        res.info["mode"] = "exhaustive"
    else:
        rng = _rng(seed, "prop1", field)
        tuples = [random_tuple(field, rng, n) if t % 2 == 0 else planted_dependent(field, rng, n)
                  for t in range(trials)]
        res.info["mode"] = "random"
    bases = 0
    for xs in tuples:
        xs = list(xs)
        by_det = is_basis(xs, check_oracle=False)
        by_rank = coordinate_rank(xs) == n
        bases += by_rank
        res.check(by_det == by_rank, f"det test {by_det} vs rank test {by_rank} on {xs}")
    res.info["bases"] = bases
    return res


def suite_thm2(field: ExtensionField, trials: int = 50, seed=DEFAULT_SEED) -> SuiteResult:
    """Case split of det B: in K, or a non-K square root of an element of K."""
    res = SuiteResult("thm2", field.name)
    rng = _rng(seed, "thm2", field)
    expected = QUADRATIC_TIMES_K if has_sign_character(field) else IN_K
    witness = quadratic_witness(field)
    res.info["expected_case"] = expected
    previous = None
    for _ in range(trials):
        xs = random_basis(field, rng)
        c = res.guard(f"classify {xs}", classify_basis_det, xs)
        if c is None:
            continue
        d = c.value
        res.check(c.case == expected, f"case {c.case} != {expected} for {xs}")
        if expected == IN_K:
            res.check(d.is_scalar(), f"det B = {d} not in K")
        else:
            res.check(not d.is_scalar() and (d * d).is_scalar(), f"det B = {d} is not sqrt of K")
            if witness is not None:
                res.check(squarefree_part((d * d).scalar()) == witness,
                          f"squarefree part of {(d * d)} is not {witness}")
        if previous is not None:
            res.check((d / previous).is_scalar(), "two basis determinants differ by a non-K factor")
        previous = d
    if witness is not None:
        res.info["quadratic_witness"] = witness
    return res


def suite_cor2(field: ExtensionField, trials: int = 20, seed=DEFAULT_SEED) -> SuiteResult:
    """theta(x) = det E_1 * tr(x) on the trace-zero hyperplane context."""
    res = SuiteResult("cor2", field.name)
    ctx = make_hyperplane(field.one())
    c = res.guard("det E_1", e1_det, ctx)
    if c is None:
        return res
    res.check(bool(c), "det E_1 is zero")
    res.guard("classification of det E_1", classify_det, field, c)
    report = rank_one_identity_check(ctx, trials=trials, seed=seed)
    for chk in report.checks:
        res.check(chk.equal, f"theta({chk.x}) = {chk.lhs} but det E_1 tr(x) = {chk.rhs}")
    for h in ctx.h_basis:
        res.check(not theta_eval(ctx, h), f"theta does not vanish on {h}")
    res.check(bool(theta_eval(ctx, ctx.extension_vector)), "theta vanishes on the extension vector")
    theta = theta_endomorphism(ctx)
    res.check(theta.rank() == 1, f"theta has rank {theta.rank()}")
    _, b = rank_one_extract(theta)
    res.check(bool(b) and b.is_scalar(), f"theta recovered with b = {b}, expected a nonzero scalar")
    res.info["det_E1"] = str(c)
    return res


def suite_norm(field: ExtensionField, trials: int = 20, seed=DEFAULT_SEED, hyperplanes: int = 10) -> SuiteResult:
    """theta_H(x) = N(a^-1) det E_1 tr(a x) for random hyperplanes ker tr.a."""
    res = SuiteResult("norm", field.name)
    rng = _rng(seed, "norm", field)
    for i in range(hyperplanes):
        a = field.random_nonzero(rng)
        ctx = make_hyperplane(a)
        report = rank_one_identity_check(ctx, trials=trials, seed=f"{seed}:{i}")
        for chk in report.checks:
            res.check(chk.equal, f"a = {a}: theta_H({chk.x}) = {chk.lhs} != {chk.rhs}")
        for h in ctx.h_basis:
            res.check(not trace(a * h), f"a = {a}: {h} not in ker tr.a")
    return res


def _require_cyclic(field: ExtensionField):
    if not field.is_cyclic():
        raise NotCyclic(f"Gal({field.name}) is not cyclic")


def independence_tuples(field: ExtensionField, trials: int, seed=DEFAULT_SEED):
    """Exhaustive power-basis subsets and scaled pairs (n <= 4), then seeded random tuples."""
    n = field.degree
    rng = _rng(seed, "indep", field)
    basis = field.power_basis()
    if n <= 4:
        for k in range(1, n + 1):
            for subset in itertools.combinations(basis, k):
                yield "subset", list(subset)
                if k < n:
                    combo = field.zero()
                    for x in subset:
                        combo = combo + x * random_scalar(field, rng, nonzero=True)
                    yield "planted-subset", list(subset) + [combo]
        lambdas = (field.ground.elements()[1:] if field.characteristic
                   else [QQ(-2), QQ(1), Fraction(1, 2), QQ(3)])
        for b in basis:
            for lam in lambdas:
                yield "scaled-pair", [b, b * lam]
    for t in range(trials):
        k = rng.randint(1, n)
        if t % 2:
            yield "planted", planted_dependent(field, rng, k)
        else:
            yield "generic", random_tuple(field, rng, k)


def suite_indep(field: ExtensionField, trials: int = 100, seed=DEFAULT_SEED) -> SuiteResult:
    """det S = 0 exactly when the tuple is K-dependent."""
    _require_cyclic(field)
    res = SuiteResult("indep", field.name)
    counts: dict[str, int] = {}
    for kind, b in independence_tuples(field, trials, seed):
        counts[kind] = counts.get(kind, 0) + 1
        by_det = dependent(b, check_oracle=False)
        by_rank = coordinate_rank(b) < len(b)
        res.check(by_det == by_rank, f"{kind}: det S says {by_det}, rank says {by_rank} on {b}")
    res.info["tuples"] = counts
    return res


def suite_reduction(field: ExtensionField, trials: int = 100, seed=DEFAULT_SEED) -> SuiteResult:
    """det S = sign * sigma^(k-1)(b_1) * det S(x_2..x_k), plus the fixed-point step."""
    _require_cyclic(field)
    res = SuiteResult("reduction", field.name)
    if field.degree < 2:
        return res
    rng = _rng(seed, "reduction", field)
    sigma = field.generator
    for t in range(trials):
        k = rng.randint(2, field.degree)
        b = planted_dependent(field, rng, k) if t % 2 else random_tuple(field, rng, k)
        if not b[0]:
            b[0] = field.random_nonzero(rng)
        step = res.guard(f"reduction of {b}", reduction_step, b, verify=True)
        if step is None:
            continue
        res.check(True, "reduction identity")
        rel = coordinate_matrix(step.x_next).kernel()
        if rel:
            # a K-relation among the x_j lifts to a sigma-fixed quotient
            coeffs = rel[0]
            num = field.zero()
            for c, bj in zip(coeffs, b[1:]):
                num = num + bj * c
            q = num / b[0]
            res.check(apply(sigma, q) == q and q.is_scalar(), f"fixed-point step fails for {b}")
    return res


def suite_trace(field: ExtensionField, trials: int = 100, seed=DEFAULT_SEED) -> SuiteResult:
    """Matrix trace equals the tensor contraction sum tr(a_i b_i)."""
    res = SuiteResult("trace", field.name)
    rng = _rng(seed, "trace", field)
    n = field.degree
    for t in range(trials):
        basis = field.power_basis() if t % 2 == 0 else random_basis(field, rng)
        m = Matrix(field.ground, [[random_scalar(field, rng) for _ in range(n)] for _ in range(n)])
        tau = Endomorphism(m, tuple(basis))
        b_basis = random_basis(field, rng)
        via_tensor = res.guard("tensor expansion", trace_of, tau, "tensor", b_basis)
        if via_tensor is not None:
            res.check(trace_of(tau) == via_tensor, f"matrix trace {trace_of(tau)} != contraction {via_tensor}")
    return res


def suite_dual(field: ExtensionField, trials: int = 5, seed=DEFAULT_SEED) -> SuiteResult:
    """tr(c_i e_k) = delta_ik for dual bases; closed form for QQ(zeta_p)."""
    res = SuiteResult("dual", field.name)
    rng = _rng(seed, "dual", field)
    bases = [field.power_basis()] + [random_basis(field, rng) for _ in range(trials)]
    for e in bases:
        c = dual_basis(e)
        for i, ci in enumerate(c):
            for k, ek in enumerate(e):
                res.check(trace(ci * ek) == (1 if i == k else 0), f"tr(c_{i+1} e_{k+1}) != delta")
        res.check(dual_basis(c) == e, "dual of the dual basis is not the original basis")
    p = quadratic_witness(field)
    if p is not None and abs(p) >= 5:
        _, u = dual_basis_matrix(field.power_basis())
        res.check(u == expected_cyclotomic_dual(abs(p)), "U differs from the closed block form")
        res.info["block_form"] = True
    return res


SUITES = {
    "prop1": suite_prop1,
    "thm2": suite_thm2,
    "cor2": suite_cor2,
    "norm": suite_norm,
    "indep": suite_indep,
    "reduction": suite_reduction,
    "trace": suite_trace,
    "dual": suite_dual,
}
CYCLIC_ONLY = {"indep", "reduction"}


def run_suite(name: str, field: ExtensionField, trials: int, seed=DEFAULT_SEED) -> SuiteResult:
    return SUITES[name](field, trials=trials, seed=seed)


def run(fields, suite: str = "all", trials: int = 20, seed=DEFAULT_SEED) -> list[SuiteResult]:
    """Run one suite (or ``"all"`` applicable suites) over several fields, in order."""
    results = []
    for field in fields:
        names = [suite] if suite != "all" else [
            s for s in SUITES if s not in CYCLIC_ONLY or field.is_cyclic()]
        for name in names:
            results.append(run_suite(name, field, trials, seed))
    return results
