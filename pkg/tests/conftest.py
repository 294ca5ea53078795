import random

import pytest

from tcone.field import make_field
from tcone.polyring import CubicCurve, IdealData, Polynomial, parse_polynomial


@pytest.fixture(scope="session")
def F2():
    return make_field(2)


@pytest.fixture(scope="session")
def F5():
    return make_field(5)


@pytest.fixture(scope="session")
def F7():
    return make_field(7)


@pytest.fixture(scope="session")
def fermat2(F2):
    return CubicCurve(parse_polynomial("x^3 + y^3 + z^3", F2), F2)


@pytest.fixture(scope="session")
def fermat5(F5):
    return CubicCurve(parse_polynomial("x^3 + y^3 + z^3", F5), F5)


@pytest.fixture(scope="session")
def fermat7(F7):
    return CubicCurve(parse_polynomial("x^3 + y^3 + z^3", F7), F7)


def pp(text, field):
    return parse_polynomial(text, field)


def ideal_of(curve, *texts):
    return IdealData(curve, [parse_polynomial(t, curve.field) for t in texts])


def random_homogeneous(curve, degree, rng):
    """Random nonzero homogeneous polynomial reduced mod the curve."""
    field = curve.field
    while True:
        terms = {}
        for m in curve.piece_monomials(degree):
            c = rng.randrange(field.q)
            if c:
                terms[m] = c
        poly = curve.nf(Polynomial(field, terms))
        if not poly.is_zero():
            return poly


def random_primary_ideal(curve, rng, n_min=2, n_max=4, max_deg=3):
    """Random irrelevant-primary ideal with small generator degrees."""
    while True:
        n = rng.randint(n_min, n_max)
        gens = [random_homogeneous(curve, rng.randint(1, max_deg), rng)
                for _ in range(n)]
        try:
            return IdealData(curve, gens)
        except ValueError:
            continue


def seeded(seed):
    return random.Random(seed)
