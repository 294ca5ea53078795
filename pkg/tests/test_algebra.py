import numpy as np
import pytest

from tcone.algebra import (FiniteAlgebra, UndecidedError, lift_idempotents,
                           semisimple_primitive_idempotents, ufactor, umul,
                           usquarefree_decomposition)
from tcone.field import make_field


def _matrix_units_algebra(field, n):
    """M_n(field) on the basis e_11, e_12, ..., e_nn."""
    labels = [(i, j) for i in range(n) for j in range(n)]
    idx = {lab: k for k, lab in enumerate(labels)}
    dim = n * n
    table = []
    for (i, j) in labels:
        row = []
        for (k, l) in labels:
            out = [0] * dim
            if j == k:
                out[idx[(i, l)]] = 1
            row.append(out)
        table.append(row)
    unit = [0] * dim
    for i in range(n):
        unit[idx[(i, i)]] = 1
    return FiniteAlgebra(field, table, unit)


def _quotient_ring_algebra(field, modulus):
    """field[t]/(modulus) on the power basis."""
    from tcone.algebra import udivmod
    k = len(modulus) - 1
    table = []
    for i in range(k):
        row = []
        for j in range(k):
            prod = [0] * (i + j) + [1]
            rem = udivmod(prod, list(modulus), field)[1]
            row.append(list(rem) + [0] * (k - len(rem)))
        table.append(row)
    return FiniteAlgebra(field, table, [1] + [0] * (k - 1))


def test_charpoly_companion():
    F2 = make_field(2)
    A = _quotient_ring_algebra(F2, (1, 1, 1))  # F4 = F2[t]/(t^2+t+1)
    t = np.array([0, 1], dtype=np.int64)
    m = A.left_regular(t)
    assert A.charpoly(m) == [1, 1, 1]
    assert A.minpoly(t) == [1, 1, 1]


def test_charpoly_cayley_hamilton():
    F5 = make_field(5)
    A = _matrix_units_algebra(F5, 2)
    rng = np.random.RandomState(5)
    for _ in range(5):
        a = rng.randint(0, 5, size=4).astype(np.int64)
        m = A.left_regular(a)
        cp = A.charpoly(m)
        assert len(cp) == A.dim + 1 and cp[-1] == 1
        # evaluate cp at m over F5
        acc = np.zeros_like(m)
        power = np.eye(A.dim, dtype=np.int64)
        for c in cp:
            acc = (acc + c * power) % 5
            power = (power @ m) % 5
        assert not acc.any()
        # trace coefficient: cp[n-1] == -trace
        assert cp[A.dim - 1] % 5 == (-int(np.trace(m))) % 5


def test_radical_of_semisimple_is_zero():
    F2 = make_field(2)
    assert _quotient_ring_algebra(F2, (1, 1, 1)).radical().shape[0] == 0
    assert _matrix_units_algebra(F2, 2).radical().shape[0] == 0
    F5 = make_field(5)
    assert _matrix_units_algebra(F5, 2).radical().shape[0] == 0


def test_radical_of_local_ring():
    F2 = make_field(2)
    # F2[t]/(t^2 + 1) = F2[u]/(u^2): radical spanned by 1 + t
    A = _quotient_ring_algebra(F2, (1, 0, 1))
    rad = A.radical()
    assert rad.shape[0] == 1
    assert rad.tolist() == [[1, 1]]


def test_radical_of_nilpotent_power_ring():
    F5 = make_field(5)
    A = _quotient_ring_algebra(F5, (0, 0, 0, 1))  # F5[t]/(t^3)
    rad = A.radical()
    assert rad.shape[0] == 2  # spanned by t, t^2


def test_primitive_idempotents_product_of_fields():
    F5 = make_field(5)
    # t^2 - t = t(t-1): F5[t]/(t^2-t) = F5 x F5
    A = _quotient_ring_algebra(F5, (0, 4, 1))
    idems, need = semisimple_primitive_idempotents(A)
    assert need == 1
    assert len(idems) == 2
    total = A.zero()
    for e in idems:
        assert A.is_idempotent(e)
        total = A.add(total, e)
    assert np.array_equal(total, A.unit)


def test_primitive_idempotents_matrix_algebra():
    for p in (2, 5):
        field = make_field(p)
        A = _matrix_units_algebra(field, 2)
        idems, need = semisimple_primitive_idempotents(A)
        assert need == 1
        assert len(idems) == 2
        for i, e in enumerate(idems):
            assert A.is_idempotent(e)
            for j, f in enumerate(idems):
                if i != j:
                    assert not A.mul(e, f).any()


def test_nonsplit_field_detected():
    F2 = make_field(2)
    A = _quotient_ring_algebra(F2, (1, 1, 1))  # F4 over F2: residue degree 2
    idems, need = semisimple_primitive_idempotents(A)
    assert len(idems) == 1 and need == 2
    F3 = make_field(3)
    B = _quotient_ring_algebra(F3, (1, 0, 1))  # F9 over F3
    idems, need = semisimple_primitive_idempotents(B)
    assert need == 2


def test_lifting_through_radical_triangular():
    F5 = make_field(5)
    # upper triangular 2x2: basis e11, e22, e12
    labels = [(0, 0), (1, 1), (0, 1)]
    idx = {lab: k for k, lab in enumerate(labels)}

    def mm(a, b):
        out = [0] * 3
        (i, j), (k, l) = a, b
        if j == k and (i, l) in idx:
            out[idx[(i, l)]] = 1
        return out

    table = [[mm(a, b) for b in labels] for a in labels]
    A = FiniteAlgebra(F5, table, [1, 1, 0])
    rad = A.radical()
    assert rad.tolist() == [[0, 0, 1]]
    quot, proj, sect = A.quotient(rad)
    qidems, need = semisimple_primitive_idempotents(quot)
    assert need == 1 and len(qidems) == 2
    lifted = lift_idempotents(A, rad, qidems, proj, sect)
    total = A.zero()
    for e in lifted:
        assert A.is_idempotent(e)
        total = A.add(total, e)
    assert np.array_equal(total, A.unit)
    assert not A.mul(lifted[0], lifted[1]).any()
    assert not A.mul(lifted[1], lifted[0]).any()


def test_extend_scalars_preserves_structure():
    F2 = make_field(2)
    A = _quotient_ring_algebra(F2, (1, 1, 1))
    F4 = make_field(2, 2)
    A4, emb = A.extend_scalars(F4)
    assert A4.field is F4
    # over F4 the algebra F4 (x) F4 splits into two idempotents
    idems, need = semisimple_primitive_idempotents(A4)
    assert need == 1
    assert len(idems) == 2


def test_idempotent_from_nilpotent_left_ideal():
    from tcone.algebra import _idempotent_from_nilpotent
    F5 = make_field(5)
    A = _matrix_units_algebra(F5, 2)
    nu = np.array([0, 1, 0, 0], dtype=np.int64)  # e_12, nilpotent
    e = _idempotent_from_nilpotent(A, nu)
    assert e is not None
    assert A.is_idempotent(e)
    assert e.any() and not np.array_equal(e, A.unit)


def test_primitive_idempotents_mixed_product():
    # F_2 x M_2(F_2): one primitive idempotent from the field factor and
    # two from the matrix factor
    F2 = make_field(2)
    M = _matrix_units_algebra(F2, 2)
    dim = 1 + M.dim
    table = []
    for i in range(dim):
        row = []
        for j in range(dim):
            out = [0] * dim
            if i == 0 and j == 0:
                out[0] = 1
            elif i > 0 and j > 0:
                prod = M.mul(*(np.eye(M.dim, dtype=np.int64)[[k]].ravel()
                               for k in (i - 1, j - 1)))
                for k, c in enumerate(prod):
                    out[1 + k] = int(c)
            row.append(out)
        table.append(row)
    unit = [1] + [int(c) for c in M.unit]
    A = FiniteAlgebra(F2, table, unit)
    assert A.radical().shape[0] == 0
    idems, need = semisimple_primitive_idempotents(A)
    assert need == 1
    assert len(idems) == 3
    total = A.zero()
    for e in idems:
        assert A.is_idempotent(e)
        total = A.add(total, e)
    assert np.array_equal(total, A.unit)


# -- univariate factorisation --------------------------------------------------

def test_squarefree_decomposition():
    F5 = make_field(5)
    # (t+1)^2 * (t+2) over F5
    poly = umul(umul([1, 1], [1, 1], F5), [2, 1], F5)
    parts = usquarefree_decomposition(poly, F5)
    assert sorted((tuple(g), m) for g, m in parts) == [((1, 1), 2), ((2, 1), 1)]


def test_ufactor_reassembles():
    import random
    rng = random.Random(17)
    for field in (make_field(5), make_field(2), make_field(2, 2)):
        for _ in range(10):
            deg = rng.randint(1, 6)
            poly = [rng.randrange(field.q) for _ in range(deg)] + [1]
            fac = ufactor(poly, field)
            prod = [1]
            for g, m in fac:
                for _ in range(m):
                    prod = umul(prod, g, field)
            assert prod == poly
            for g, _m in fac:
                # each factor is irreducible: no root splitting further
                assert len(ufactor(g, field)) == 1


def test_ufactor_known_split():
    F5 = make_field(5)
    # t^2 - 1 = (t+1)(t+4)... i.e. (t-1)(t+1)
    fac = ufactor([4, 0, 1], F5)
    polys = sorted(tuple(g) for g, m in fac)
    assert polys == [(1, 1), (4, 1)]
    # t^2 + 1 is irreducible over F7
    F7 = make_field(7)
    assert len(ufactor([1, 0, 1], F7)) == 1
