import json
import random

import pytest

from galoislin import serialize as S
from galoislin.endo import Endomorphism, dual_basis, tensor_expand
from galoislin.errors import InputError
from galoislin.field import make_extension
from galoislin.hyperplane import make_hyperplane, rank_one_identity_check
from galoislin.linalg import Matrix
from galoislin.scalars import QQ


def roundtrip(d):
    return json.loads(json.dumps(d))


def test_field_round_trip(small_field):
    assert S.field_from_json(roundtrip(S.field_to_json(small_field))) is small_field


def test_custom_field():
    L = make_extension(QQ, [1, 0, 1], [[0, 1], [0, -1]])
    back = S.field_from_json(roundtrip(S.field_to_json(L)))
    assert back.modulus == L.modulus and back.degree == 2


def test_modulus_mismatch(gf8):
    d = S.field_to_json(gf8)
    d["modulus"] = ["1", "1", "0", "1"]
    with pytest.raises(InputError):
        S.field_from_json(d)
    with pytest.raises(InputError):
        S.field_from_json({"kind": "nope"})


def test_element_round_trip(small_field):
    rng = random.Random(0)
    for _ in range(5):
        x = small_field.random_element(rng)
        assert S.element_from_json(roundtrip(S.element_to_json(x))) == x


def test_element_format(q5, gf4):
    assert S.element_to_json(q5.gen() / 5)["coeffs"] == ["0", "1/5", "0", "0"]
    assert S.element_to_json(gf4.gen())["coeffs"] == ["0 mod 2", "1 mod 2"]


def test_matrix_round_trip(q5):
    m = Matrix(QQ, [[1, -2], [3, 4]])
    assert S.matrix_from_json(roundtrip(S.matrix_to_json(m)), QQ) == m
    z = q5.gen()
    lm = Matrix(q5, [[z, q5.one()], [z * z, z + 1]])
    assert S.matrix_from_json(roundtrip(S.matrix_to_json(lm)), q5) == lm
    bad = S.matrix_to_json(m)
    bad["rows"] = 3
    with pytest.raises(InputError):
        S.matrix_from_json(bad, QQ)


def test_endomorphism_and_tensor(gf8):
    t = gf8.gen()
    tau = Endomorphism.from_map(lambda x: t * x, field=gf8)
    back = S.endomorphism_from_json(roundtrip(S.endomorphism_to_json(tau)))
    assert back == tau
    form = tensor_expand(tau, dual_basis(gf8.power_basis()))
    form2 = S.tensor_form_from_json(roundtrip(S.tensor_form_to_json(form)))
    assert form2.terms == form.terms


def test_report(q5):
    report = rank_one_identity_check(make_hyperplane(q5.one()), trials=2)
    d = roundtrip(S.report_to_json(report))
    assert d["identity"] == "corollary2"
    assert len(d["checks"]) == 6 and all(c["equal"] for c in d["checks"])
