import itertools

import pytest

from galoislin.field import catalog, make_cyclotomic, make_finite_field


def cofactor_det(rows):
    """Laplace expansion along the first row; independent of elimination."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * cofactor_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def brute_monic_irreducible(field, n):
    """Monic degree-n polynomials with no monic factor of degree 1..n-1, by trial division."""
    from galoislin import poly

    def monics(d):
        for tail in itertools.product(field.elements(), repeat=d):
            yield list(tail) + [field.one()]

    lower = [f for d in range(1, n) for f in monics(d)]
    out = []
    for f in monics(n):
        if all(poly.divmod_poly(f, g)[1] for g in lower):
            out.append(f)
    return out


@pytest.fixture(scope="session")
def gf4():
    return make_finite_field(2, 2)


@pytest.fixture(scope="session")
def gf8():
    return make_finite_field(2, 3)


@pytest.fixture(scope="session")
def q5():
    return make_cyclotomic(5)


@pytest.fixture(scope="session")
def q8():
    return make_cyclotomic(8)


SMALL_FIELDS = [("cyc", 3), ("cyc", 5), ("cyc", 8), ("cyc", 12), ("fin", (2, 2)), ("fin", (2, 3)),
                ("fin", (3, 2)), ("fin", (3, 3)), ("fin", (5, 2))]


def build(spec):
    kind, arg = spec
    return make_cyclotomic(arg) if kind == "cyc" else make_finite_field(*arg)


@pytest.fixture(params=SMALL_FIELDS, ids=lambda s: f"{s[0]}{s[1]}")
def small_field(request):
    return build(request.param)


@pytest.fixture(params=[f.name for f in catalog()])
def catalog_field(request):
    return next(f for f in catalog() if f.name == request.param)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
