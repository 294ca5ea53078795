import pytest
from hypothesis import given, settings, strategies as st

from tcone.field import (Field, FieldElem, FieldError, embed,
                         find_irreducible, make_field)


# -- independent oracle: smallest irreducible by exhaustive trial division --

def _naive_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _naive_divides(d, f, p):
    f = list(f)
    inv = pow(d[-1], -1, p)
    while len(f) >= len(d):
        if f[-1] == 0:
            f.pop()
            continue
        c = f[-1] * inv % p
        off = len(f) - len(d)
        for i, di in enumerate(d):
            f[off + i] = (f[off + i] - c * di) % p
        f.pop()
    while f and f[-1] == 0:
        f.pop()
    return not f


def _naive_irreducible(f, p):
    k = len(f) - 1
    if k == 1:
        return True
    for deg in range(1, k // 2 + 1):
        for code in range(p ** deg):
            coeffs, c = [], code
            for _ in range(deg):
                coeffs.append(c % p)
                c //= p
            d = tuple(coeffs) + (1,)
            if _naive_divides(d, f, p):
                return False
    return True


def _oracle_smallest_irreducible(p, k):
    for code in range(p ** k):
        coeffs, c = [], code
        for _ in range(k):
            coeffs.append(c % p)
            c //= p
        f = tuple(coeffs) + (1,)
        if _naive_irreducible(f, p):
            return f
    raise AssertionError("no irreducible found")


def test_find_irreducible_trivial_cases():
    assert find_irreducible(2, 1) == (0, 1)
    assert find_irreducible(5, 1) == (0, 1)
    assert find_irreducible(2, 2) == (1, 1, 1)


def test_find_irreducible_derived_cases():
    # frozen values confirmed by the exhaustive oracle below
    assert find_irreducible(3, 2) == (1, 0, 1)
    assert find_irreducible(2, 3) == (1, 1, 0, 1)
    assert find_irreducible(7, 2) == (1, 0, 1)


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3),
                                 (5, 2), (7, 2), (11, 2)])
def test_find_irreducible_matches_oracle(p, k):
    assert find_irreducible(p, k) == _oracle_smallest_irreducible(p, k)


def test_make_field_errors():
    with pytest.raises(FieldError):
        make_field(4, 1)
    with pytest.raises(FieldError):
        make_field(1, 1)
    with pytest.raises(FieldError):
        make_field(5, 0)
    with pytest.raises(FieldError):
        make_field(65537, 1)  # past the 2^16 bound


def test_modulus_of_make_field():
    assert make_field(3, 2).modulus == (1, 0, 1)
    assert make_field(2, 2).modulus == (1, 1, 1)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8))
def test_field_axioms_f9(a, b, c):
    F9 = make_field(3, 2)
    x, y, z = F9.from_code(a), F9.from_code(b), F9.from_code(c)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x + y) * z == x * z + y * z
    if a:
        assert x * x.inverse() == F9.one()


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 7), st.integers(0, 7))
def test_frobenius_additive_f8(a, b):
    F8 = make_field(2, 3)
    x, y = F8.from_code(a), F8.from_code(b)
    assert (x + y).frobenius() == x.frobenius() + y.frobenius()


@pytest.mark.parametrize("p,k", [(2, 3), (3, 2), (5, 2)])
def test_frobenius_fixed_points_are_prime_field(p, k):
    F = make_field(p, k)
    fixed = [a for a in F.elements() if F.frobenius(a) == a]
    assert len(fixed) == p
    assert fixed == list(range(p))  # prime-field codes are 0..p-1


def test_elem_coeffs_roundtrip():
    F8 = make_field(2, 3)
    for code in range(8):
        e = F8.from_code(code)
        assert F8._encode(list(e.coeffs)) == code
        assert len(e.coeffs) == 3


# -- embeddings -------------------------------------------------------------

def test_embed_identity_and_prime_subfield():
    F2, F4 = make_field(2), make_field(2, 2)
    one = F2.one()
    assert embed(one, F4) == F4.one()
    assert embed(F2.zero(), F4) == F4.zero()
    for c in range(2):
        assert embed(F2.from_code(c), F4).code == c


def test_embed_generator_smallest_root():
    # derived by root enumeration: images of the F4 generator in F16 are the
    # roots of t^2+t+1; the embedding picks the smallest code
    F4, F16 = make_field(2, 2), make_field(2, 4)
    g = F4.generator()
    roots = []
    for code in range(16):
        x = F16.from_code(code)
        if x * x + x + F16.one() == F16.zero():
            roots.append(code)
    assert roots  # the quadratic splits in F16
    assert embed(g, F16).code == min(roots)


@pytest.mark.parametrize("p,ks,kt", [(2, 2, 4), (2, 3, 6), (3, 2, 4),
                                     (5, 2, 4)])
def test_embed_is_ring_embedding(p, ks, kt):
    src, tgt = make_field(p, ks), make_field(p, kt)
    rng_codes = range(src.q)
    for a in rng_codes:
        for b in (1, 2, min(5, src.q - 1)):
            x, y = src.from_code(a), src.from_code(b)
            assert embed(x * y, tgt) == embed(x, tgt) * embed(y, tgt)
            assert embed(x + y, tgt) == embed(x, tgt) + embed(y, tgt)
    images = {embed(src.from_code(a), tgt).code for a in rng_codes}
    assert len(images) == src.q  # injective


def test_embed_is_deterministic_within_process():
    F4, F16 = make_field(2, 2), make_field(2, 4)
    g = F4.generator()
    assert embed(g, F16).code == embed(g, F16).code


def test_embed_rejects_bad_degrees():
    F4, F8 = make_field(2, 2), make_field(2, 3)
    with pytest.raises(FieldError):
        embed(F4.generator(), F8)


def test_mixed_field_arithmetic_rejected():
    F5, F7 = make_field(5), make_field(7)
    with pytest.raises(FieldError):
        F5.one() + F7.one()
