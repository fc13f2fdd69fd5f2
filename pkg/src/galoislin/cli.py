"""Command-line driver.

Exit codes: 0 when every check passes, 1 when a check fails, 2 for usage
or input errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import serialize
from .endo import Endomorphism, dual_basis, dual_basis_matrix, tensor_expand, trace_of
from .errors import GaloisLinError, InputError
from .field import (
    catalog,
    coordinate_rank,
    make_cyclotomic,
    make_finite_field,
    sylow2_cyclic,
    trace,
)
from .hyperplane import (
    basis_matrix,
    classify_basis_det,
    e1_det,
    is_basis,
    make_hyperplane,
    rank_one_identity_check,
)
from .independence import s_matrix
from .linalg import Matrix
from .poly import format_poly
from .scalars import format_scalar
from .verify import (
    DEFAULT_SEED,
    expected_cyclotomic_dual,
    planted_dependent,
    quadratic_witness,
    random_tuple,
    run,
)

SUITE_CHOICES = ["prop1", "thm2", "cor2", "norm", "indep", "reduction", "trace", "dual", "all"]


class UsageError(InputError):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--cyclotomic", type=int, metavar="N", help="QQ(zeta_N) over QQ")
    g.add_argument("--finite", type=int, nargs=2, metavar=("P", "N"), help="GF(P^N) over GF(P)")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--seed", type=lambda s: int(s, 0), default=DEFAULT_SEED)
    p.add_argument("--trials", type=int, default=20)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="galoislin", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("field", parents=[common], help="describe an extension and its Galois group")
    p = sub.add_parser("dual-basis", parents=[common], help="trace Gram matrix, its inverse, dual basis")
    p.add_argument("--basis", help="elements separated by ';', coefficients by ','")
    p = sub.add_parser("det-basis", parents=[common], help="conjugate determinant of a tuple")
    p.add_argument("--basis", help="elements separated by ';' (default: power basis)")
    p = sub.add_parser("hyperplane", parents=[common], help="check theta_H = N(a^-1) det E_1 tr.a")
    p.add_argument("--a", help="hyperplane parameter a (default 1)")
    p = sub.add_parser("tensor", parents=[common], help="tensor expansion of an endomorphism")
    p.add_argument("--mul", help="expand x -> c*x for this element c (default c = 1)")
    p.add_argument("--matrix", help="power-basis matrix, rows separated by ';'")
    p.add_argument("--b-basis", help="basis for the trace functionals (default: power basis)")
    p = sub.add_parser("independence", parents=[common], help="det S independence test")
    p.add_argument("--elements", help="elements separated by ';' (default: seeded random trials)")
    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=SUITE_CHOICES, default="all")
    return parser


def _field(args, required: bool = True):
    if args.cyclotomic is not None:
        return make_cyclotomic(args.cyclotomic)
    if args.finite is not None:
        return make_finite_field(*args.finite)
    if required:
        raise UsageError("give --cyclotomic N or --finite P N")
    return None


def _elements(field, text: str):
    return [field.parse(part) for part in text.split(";")]


def _print_matrix(title: str, m: Matrix):
    print(f"{title}:")
    cells = [[format_scalar(x) if not hasattr(x, "coeffs") else str(x) for x in r] for r in m.entries]
    width = max(len(c) for r in cells for c in r)
    for r in cells:
        print("  [" + "  ".join(c.rjust(width) for c in r) + "]")


def _emit(args, payload: dict, text_fn):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        text_fn()


def cmd_field(args) -> int:
    field = _field(args)
    cyc = field.automorphisms[field.cyclic_generator].label if field.is_cyclic() else None
    payload = {
        "field": serialize.field_to_json(field),
        "degree": field.degree,
        "automorphisms": [{"label": a.label, "image": [format_scalar(c) for c in a.image.coeffs]}
                          for a in field.automorphisms],
        "cyclic_generator": cyc,
        "sylow2_cyclic": sylow2_cyclic(field),
    }

    def text():
        print(f"field      {field.name} over {field.ground.name}")
        print(f"modulus    {format_poly(field.modulus, field.var)}")
        print(f"degree     {field.degree}")
        print("automorphisms:")
        for a in field.automorphisms:
            print(f"  {a.label:<10} {field.var} -> {a.image}")
        print(f"cyclic generator  {cyc or 'none'}")
        print(f"sylow2_cyclic     {str(sylow2_cyclic(field)).lower()}")

    _emit(args, payload, text)
    return 0


def cmd_dual_basis(args) -> int:
    field = _field(args)
    e = _elements(field, args.basis) if args.basis else field.power_basis()
    a, u = dual_basis_matrix(e)
    c = dual_basis(e)
    ok = all(trace(ci * ek) == (1 if i == k else 0) for i, ci in enumerate(c) for k, ek in enumerate(e))
    block = None
    p = quadratic_witness(field)
    if not args.basis and p is not None and abs(p) >= 5:
        block = u == expected_cyclotomic_dual(abs(p))
        ok = ok and block
    payload = {"field": serialize.field_to_json(field), "A": serialize.matrix_to_json(a),
               "U": serialize.matrix_to_json(u), "dual": [serialize.element_to_json(x) for x in c],
               "block_form_match": block, "ok": ok}

    def text():
        _print_matrix("A = (tr(e_j e_k))", a)
        _print_matrix("U = A^-1", u)
        for i, ci in enumerate(c, 1):
            print(f"c_{i} = {ci}")
        if block is not None:
            print(f"closed block form: {'match' if block else 'MISMATCH'}")
        print("PASS" if ok else "FAIL")

    _emit(args, payload, text)
    return 0 if ok else 1


def cmd_det_basis(args) -> int:
    field = _field(args)
    xs = _elements(field, args.basis) if args.basis else field.power_basis()
    basis = is_basis(xs)
    d = basis_matrix(xs).det()
    cls = classify_basis_det(xs) if basis else None
    payload = {"field": serialize.field_to_json(field), "is_basis": basis, "det": serialize.element_to_json(d),
               "case": cls.case if cls else None,
               "square_in_K": format_scalar(cls.square_in_K) if cls and cls.square_in_K is not None else None}

    def text():
        print(f"det B   {d}")
        print(f"basis   {str(basis).lower()}")
        if cls:
            print(f"case    {cls.case}")
            if cls.square_in_K is not None:
                print(f"det^2   {format_scalar(cls.square_in_K)}")

    _emit(args, payload, text)
    return 0


def cmd_hyperplane(args) -> int:
    field = _field(args)
    a = field.parse(args.a) if args.a else field.one()
    ctx = make_hyperplane(a)
    report = rank_one_identity_check(ctx, trials=args.trials, seed=args.seed)
    payload = serialize.report_to_json(report)

    def text():
        print(f"hyperplane ker tr.a, a = {a}")
        print(f"det E_1 (this hyperplane) = {e1_det(ctx)}")
        agree = sum(c.equal for c in report.checks)
        print(f"{report.identity}: {agree}/{len(report.checks)} points agree")
        print("PASS" if report.ok else "FAIL")

    _emit(args, payload, text)
    return 0 if report.ok else 1


def cmd_tensor(args) -> int:
    field = _field(args)
    if args.matrix:
        rows = [[field.ground.parse(c) for c in r.split(",")] for r in args.matrix.split(";")]
        tau = Endomorphism(Matrix(field.ground, rows), tuple(field.power_basis()))
    else:
        c = field.parse(args.mul) if args.mul else field.one()
        tau = Endomorphism.from_map(lambda x: c * x, field=field)
    b_basis = _elements(field, args.b_basis) if args.b_basis else field.power_basis()
    form = tensor_expand(tau, b_basis)
    mt, tt = trace_of(tau), form.contraction()
    ok = mt == tt
    payload = {"endomorphism": serialize.endomorphism_to_json(tau), "tensor": serialize.tensor_form_to_json(form),
               "matrix_trace": format_scalar(mt), "tensor_trace": format_scalar(tt), "ok": ok}

    def text():
        for i, (ai, bi) in enumerate(form.terms, 1):
            print(f"a_{i} = {ai}    b_{i} = {bi}")
        print(f"matrix trace {format_scalar(mt)}, sum tr(a_i b_i) {format_scalar(tt)}")
        print("PASS" if ok else "FAIL")

    _emit(args, payload, text)
    return 0 if ok else 1


def cmd_independence(args) -> int:
    field = _field(args)
    if not field.is_cyclic():
        raise UsageError(f"Gal({field.name}) is not cyclic")
    if args.elements:
        tuples = [_elements(field, args.elements)]
    else:
        rng = random.Random(f"{args.seed}:independence:{field.name}")
        tuples = []
        for t in range(args.trials):
            k = rng.randint(1, field.degree)
            tuples.append(planted_dependent(field, rng, k) if t % 2 else random_tuple(field, rng, k))
    records = []
    for b in tuples:
        d = s_matrix(b).det()
        r = coordinate_rank(b)
        records.append(serialize.independence_trial_to_json(b, d, r, (not d) == (r < len(b))))
    ok = all(rec["agree"] for rec in records)

    def text():
        for rec, b in zip(records, tuples):
            verdict = "dependent" if rec["oracle_rank"] < rec["k"] else "independent"
            print(f"k={rec['k']} rank={rec['oracle_rank']} {verdict:<11} agree={rec['agree']}")
        print(f"{sum(r['agree'] for r in records)}/{len(records)} oracle agreements")

    _emit(args, {"field": serialize.field_to_json(field), "trials": records, "ok": ok}, text)
    return 0 if ok else 1


def cmd_verify(args) -> int:
    field = _field(args, required=False)
    fields = [field] if field is not None else catalog()
    if args.suite in ("indep", "reduction") and field is not None and not field.is_cyclic():
        raise UsageError(f"suite {args.suite} needs a cyclic Galois group; {field.name} is not cyclic")
    if field is None and args.suite in ("indep", "reduction"):
        fields = [f for f in fields if f.is_cyclic()]
    results = run(fields, args.suite, trials=args.trials, seed=args.seed)
    ok = all(r.ok for r in results)
    payload = {"seed": args.seed, "trials": args.trials, "suite": args.suite,
               "results": [r.to_json() for r in results], "ok": ok}

    def text():
        for r in results:
            print(r.line())
            for f in r.failures[:5]:
                print(f"    {f}")
        print("ALL PASS" if ok else "FAILURES")

    _emit(args, payload, text)
    return 0 if ok else 1


COMMANDS = {
    "field": cmd_field,
    "dual-basis": cmd_dual_basis,
    "det-basis": cmd_det_basis,
    "hyperplane": cmd_hyperplane,
    "tensor": cmd_tensor,
    "independence": cmd_independence,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.trials < 1:
        parser.error("--trials must be positive")
    try:
        return COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GaloisLinError as exc:
        print(f"check failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
