"""JSON wire formats for scalars, fields, elements, matrices and reports.

Scalars are strings: ``"a/b"`` (``"a"`` when b = 1) for rationals and
``"v mod p"`` for prime residues.  An element is
``{"field": <descriptor>, "coeffs": [scalar, ...]}``.
"""

from __future__ import annotations

from .errors import InputError
from .field import (
    ExtensionField,
    FieldElement,
    make_cyclotomic,
    make_extension,
    make_finite_field,
)
from .linalg import Matrix
from .scalars import GF, QQ, format_scalar


def field_to_json(field: ExtensionField) -> dict:
    return field.descriptor()


def field_from_json(d: dict) -> ExtensionField:
    kind = d.get("kind")
    if kind == "cyclotomic":
        field = make_cyclotomic(int(d["n"]))
    elif kind == "finite":
        field = make_finite_field(int(d["p"]), int(d["n"]))
    elif kind == "custom":
        ground = GF(int(d["p"])) if d.get("p") else QQ
        modulus = [ground.parse(c) for c in d["modulus"]]
        images = [[ground.parse(c) for c in im] for im in d["images"]]
        return make_extension(ground, modulus, images)
    else:
        raise InputError(f"unknown field kind {kind!r}")
    if "modulus" in d and [format_scalar(c) for c in field.modulus] != list(d["modulus"]):
        raise InputError(f"modulus {d['modulus']} does not match {field.name}")
    return field


def element_to_json(x: FieldElement) -> dict:
    return {"field": field_to_json(x.field), "coeffs": [format_scalar(c) for c in x.coeffs]}


def element_from_json(d: dict, field: ExtensionField | None = None) -> FieldElement:
    if field is None:
        field = field_from_json(d["field"])
    return field.element([field.ground.parse(c) for c in d["coeffs"]])


def _entry_to_json(x):
    return element_to_json(x) if isinstance(x, FieldElement) else format_scalar(x)


def matrix_to_json(m: Matrix) -> dict:
    return {"rows": m.rows, "cols": m.cols, "entries": [[_entry_to_json(x) for x in r] for r in m.entries]}


def matrix_from_json(d: dict, field) -> Matrix:
    """Rebuild a matrix over ``field`` (a ground field or an extension)."""
    if isinstance(field, ExtensionField):
        entries = [[element_from_json(x, field) for x in r] for r in d["entries"]]
    else:
        entries = [[field.parse(x) for x in r] for r in d["entries"]]
    m = Matrix(field, entries)
    if (m.rows, m.cols) != (d["rows"], d["cols"]):
        raise InputError("declared shape does not match entries")
    return m


def endomorphism_to_json(tau) -> dict:
    d = matrix_to_json(tau.matrix)
    d["basis"] = [element_to_json(e) for e in tau.basis]
    return d


def endomorphism_from_json(d: dict):
    from .endo import Endomorphism

    basis = tuple(element_from_json(e) for e in d["basis"])
    return Endomorphism(matrix_from_json(d, basis[0].field.ground), basis)


def tensor_form_to_json(form) -> list:
    return [[element_to_json(a), element_to_json(b)] for a, b in form.terms]


def tensor_form_from_json(pairs):
    from .endo import TensorForm

    return TensorForm(tuple((element_from_json(a), element_from_json(b)) for a, b in pairs))


def report_to_json(report) -> dict:
    return {
        "identity": report.identity,
        "field": field_to_json(report.field),
        "checks": [
            {"x": element_to_json(c.x), "lhs": element_to_json(c.lhs), "rhs": element_to_json(c.rhs),
             "equal": c.equal}
            for c in report.checks
        ],
    }


def independence_trial_to_json(b, det_s: FieldElement, oracle_rank: int, agree: bool) -> dict:
    return {
        "k": len(b),
        "b": [element_to_json(x) for x in b],
        "detS": element_to_json(det_s),
        "oracle_rank": oracle_rank,
        "agree": agree,
    }
