"""Finite-dimensional associative algebras over small finite fields.

Supplies the decomposition machinery for endomorphism algebras of graded
modules: radical computation by the characteristic-p chain of iterated
characteristic-polynomial trace forms, refinement of the semisimple
quotient into a complete system of orthogonal primitive idempotents
(extending the base field when a simple factor is not split), and Newton
lifting of idempotents through the radical.

Elements are coordinate vectors over a fixed basis; the multiplication
table is the only structural input.  Everything is deterministic.
"""

from __future__ import annotations

import numpy as np

from .field import Field, embed
from .linalg import as_matrix, nullspace, rref, solve


class UndecidedError(RuntimeError):
    """Decomposition could not be certified within the configured bounds."""


# ---------------------------------------------------------------------------
# univariate polynomials over an arbitrary Field, little-endian code lists
# ---------------------------------------------------------------------------

def ustrip(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def uadd(a, b, f):
    n = max(len(a), len(b))
    return ustrip([f.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0)
                   for i in range(n)])


def usub(a, b, f):
    n = max(len(a), len(b))
    return ustrip([f.sub(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0)
                   for i in range(n)])


def umul(a, b, f):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = f.add(out[i + j], f.mul(ai, bj))
    return ustrip(out)


def umonic(a, f):
    if not a:
        return a
    inv = f.inv(a[-1])
    return [f.mul(inv, c) for c in a]


def udivmod(a, b, f):
    a = list(a)
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    db = len(b) - 1
    inv = f.inv(b[-1])
    q = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        if a[-1] == 0:
            a.pop()
            continue
        c = f.mul(a[-1], inv)
        off = len(a) - 1 - db
        q[off] = c
        for i, bi in enumerate(b):
            a[off + i] = f.sub(a[off + i], f.mul(c, bi))
        a.pop()
    return ustrip(q), ustrip(a)


def ugcd(a, b, f):
    a, b = list(a), list(b)
    while b:
        a, b = b, udivmod(a, b, f)[1]
    return umonic(a, f)


def uderiv(a, f):
    return ustrip([f.mul(c, i % f.p) for i, c in enumerate(a)][1:])


def upowmod(a, e, m, f):
    result = [1]
    a = udivmod(a, m, f)[1]
    while e:
        if e & 1:
            result = udivmod(umul(result, a, f), m, f)[1]
        a = udivmod(umul(a, a, f), m, f)[1]
        e >>= 1
    return result


def _proot(code, f):
    """p-th root in a perfect finite field: x^(p^(k-1)) when q = p^k."""
    return f.pow(code, f.p ** (f.k - 1)) if f.k > 1 else code


def _upth_root(a, f):
    """p-th root of a polynomial all of whose exponents are multiples of p."""
    out = []
    for i in range(0, len(a), f.p):
        out.append(_proot(a[i], f))
    return ustrip(out)


def usquarefree_decomposition(a, f):
    """List of (squarefree factor, multiplicity), characteristic-p aware."""
    a = umonic(list(a), f)
    out = []
    if len(a) <= 1:
        return out
    d = uderiv(a, f)
    if not d:
        # a = b^p
        for g, m in usquarefree_decomposition(_upth_root(a, f), f):
            out.append((g, m * f.p))
        return out
    g = ugcd(a, d, f)
    w = udivmod(a, g, f)[0]
    mult = 1
    while len(w) > 1:
        y = ugcd(w, g, f)
        fac = udivmod(w, y, f)[0]
        if len(fac) > 1:
            out.append((fac, mult))
        w = y
        g = udivmod(g, y, f)[0]
        mult += 1
    if len(g) > 1:
        # leftover factors all have multiplicity divisible by p, so the
        # leftover is a perfect p-th power; recurse on its root
        for gg, m in usquarefree_decomposition(_upth_root(g, f), f):
            out.append((gg, m * f.p))
    return out


def _berlekamp_split(g, f):
    """Factor a squarefree monic g into irreducibles (deterministic).

    Kernel of the Frobenius map on F_q[t]/(g) counts the factors; kernel
    elements are split off by gcds with b - c over all scalars c.
    """
    n = len(g) - 1
    if n <= 1:
        return [g]
    # matrix of x -> x^q on the power basis of F_q[t]/(g)
    mat = np.zeros((n, n), dtype=np.int64)
    tq = upowmod([0, 1], f.q, g, f)
    cur = [1]
    for i in range(n):
        for j, c in enumerate(cur):
            mat[j, i] = c
        cur = udivmod(umul(cur, tq, f), g, f)[1]
    eye = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        eye[i, i] = 1
    diff = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            diff[i, j] = f.sub(int(mat[i, j]), int(eye[i, j]))
    kernel = nullspace(diff, f)
    r = kernel.shape[0]
    if r <= 1:
        return [g]
    factors = [g]
    for kv in kernel:
        b = ustrip([int(c) for c in kv])
        if len(b) <= 1:
            continue  # constants split nothing
        new_factors = []
        for fac in factors:
            if len(fac) - 1 <= 1:
                new_factors.append(fac)
                continue
            pieces = []
            rest = fac
            for c in range(f.q):
                if len(rest) - 1 <= 0:
                    break
                h = ugcd(rest, usub(b, [c], f), f)
                if 1 <= len(h) - 1 < len(rest) - 1:
                    pieces.append(h)
                    rest = udivmod(rest, h, f)[0]
            if len(rest) > 1:
                pieces.append(umonic(rest, f))
            new_factors.extend(pieces if pieces else [fac])
        factors = new_factors
        if len(factors) == r:
            break
    return factors


def ufactor(a, f):
    """Full factorisation of a monic univariate polynomial: [(irr, mult)]."""
    out = []
    for g, m in usquarefree_decomposition(a, f):
        for irr in _berlekamp_split(g, f):
            out.append((umonic(irr, f), m))
    out.sort(key=lambda gm: (len(gm[0]), gm[0]))
    return out


def ueval_in_algebra(poly, elem, algebra):
    """Evaluate a univariate polynomial at an algebra element (Horner)."""
    acc = algebra.zero()
    for c in reversed(poly):
        acc = algebra.add(algebra.mul(acc, elem), algebra.scale(algebra.unit, c))
    return acc


# ---------------------------------------------------------------------------
# the algebra class
# ---------------------------------------------------------------------------

class FiniteAlgebra:
    """Associative unital algebra by structure constants over a Field."""

    def __init__(self, field: Field, table, unit):
        self.field = field
        self.dim = len(table)
        # table[i][j] = coordinates of b_i * b_j
        self.table = [[np.array(table[i][j], dtype=np.int64)
                       for j in range(self.dim)] for i in range(self.dim)]
        self.unit = np.array(unit, dtype=np.int64)

    # -- element arithmetic on coordinate vectors --------------------------------

    def zero(self):
        return np.zeros(self.dim, dtype=np.int64)

    def add(self, a, b):
        f = self.field
        return np.array([f.add(int(x), int(y)) for x, y in zip(a, b)],
                        dtype=np.int64)

    def sub(self, a, b):
        f = self.field
        return np.array([f.sub(int(x), int(y)) for x, y in zip(a, b)],
                        dtype=np.int64)

    def scale(self, a, c):
        f = self.field
        return np.array([f.mul(int(x), c) for x in a], dtype=np.int64)

    def mul(self, a, b):
        f = self.field
        out = [0] * self.dim
        for i, ai in enumerate(a):
            ai = int(ai)
            if not ai:
                continue
            for j, bj in enumerate(b):
                bj = int(bj)
                if not bj:
                    continue
                coef = f.mul(ai, bj)
                row = self.table[i][j]
                for k in range(self.dim):
                    t = int(row[k])
                    if t:
                        out[k] = f.add(out[k], f.mul(coef, t))
        return np.array(out, dtype=np.int64)

    def power(self, a, e):
        result = self.unit.copy()
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def is_idempotent(self, a):
        return np.array_equal(self.mul(a, a), a)

    def left_regular(self, a):
        """Matrix of left multiplication by a on the coordinate basis."""
        cols = []
        for j in range(self.dim):
            e = np.zeros(self.dim, dtype=np.int64)
            e[j] = 1
            cols.append(self.mul(a, e))
        return np.stack(cols, axis=1)

    def charpoly(self, mat):
        """Characteristic polynomial of a square matrix, division-free.

        Berkowitz' method; returns little-endian monic coefficients.
        """
        f = self.field
        n = mat.shape[0]
        if n == 0:
            return [1]

        def matmul(A, B):
            rows, inner, cols = A.shape[0], A.shape[1], B.shape[1]
            out = np.zeros((rows, cols), dtype=np.int64)
            for i in range(rows):
                for k in range(inner):
                    a = int(A[i, k])
                    if not a:
                        continue
                    for j in range(cols):
                        b = int(B[k, j])
                        if b:
                            out[i, j] = f.add(int(out[i, j]), f.mul(a, b))
            return out

        # coefficient vectors are kept highest-degree first
        poly = np.array([[1], [f.neg(int(mat[0, 0]))]], dtype=np.int64)
        for r in range(1, n):
            a = int(mat[r, r])
            row = mat[r, :r].reshape(1, r)
            col = mat[:r, r].reshape(r, 1)
            block = mat[:r, :r]
            # Toeplitz column: [1, -a, -row@col, -row@block@col, ...]
            entries = [1, f.neg(a)]
            vec = col
            for _ in range(r):
                rv = matmul(row, vec)
                entries.append(f.neg(int(rv[0, 0])))
                vec = matmul(block, vec)
            toep = np.zeros((r + 2, r + 1), dtype=np.int64)
            for j in range(r + 1):
                for i in range(j, r + 2):
                    toep[i, j] = entries[i - j]
            poly = matmul(toep, poly)
        coeffs = [int(c) for c in poly[:, 0]]
        return list(reversed(coeffs))

    def minpoly(self, a):
        """Monic minimal polynomial of an element (little-endian codes)."""
        f = self.field
        rows = [self.unit.copy()]
        power = self.unit.copy()
        while True:
            power = self.mul(power, a)
            mat = np.stack(rows + [power], axis=0)
            red, piv = rref(mat, f)
            if red.shape[0] < len(rows) + 1:
                # dependence: solve power = combo of previous rows
                coeffs = solve(np.stack(rows, axis=0).T.copy(), power, f)
                poly = [f.neg(int(c)) for c in coeffs] + [1]
                return ustrip(poly)
            rows.append(power)

    # -- radical -----------------------------------------------------------------

    def radical(self):
        """Basis of the Jacobson radical (rows), by the characteristic-p
        chain of iterated characteristic-polynomial trace forms.

        The chain starts from the ordinary trace form of the left regular
        representation and refines with the coefficient of index p^i of the
        characteristic polynomial, linearised through p^i-th roots.  The
        result is verified: nilpotency of the span and vanishing radical of
        the quotient.
        """
        f = self.field
        n = self.dim
        # current subspace basis, rows
        current = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            current[i, i] = 1
        regs = {}

        def reg(coords):
            key = tuple(int(c) for c in coords)
            m = regs.get(key)
            if m is None:
                m = self.left_regular(np.array(key, dtype=np.int64))
                regs[key] = m
            return m

        level = 0
        qexp = 1  # p^level
        while qexp <= n:
            basis = [current[i] for i in range(current.shape[0])]
            if not basis:
                break
            cond = []
            for b in basis:
                row = []
                for a in basis:
                    prod = self.mul(a, b)
                    cp = self.charpoly(reg(prod))
                    deg = len(cp) - 1
                    idx = deg - qexp  # coefficient of t^(deg - p^level)
                    c = cp[idx] if idx >= 0 else 0
                    # linearise: p^level-th root
                    for _ in range(level):
                        c = _proot(c, f)
                    row.append(c)
                cond.append(row)
            # solve sum_j x_j * cond[b][j] = 0 for all b
            mat = as_matrix(cond, len(basis))
            ker = nullspace(mat, f)
            new = []
            for kv in ker:
                vec = self.zero()
                for c, b in zip(kv, basis):
                    if int(c):
                        vec = self.add(vec, self.scale(b, int(c)))
                new.append(vec)
            current = (np.stack(new, axis=0) if new
                       else np.zeros((0, n), dtype=np.int64))
            current, _ = rref(current, f)
            level += 1
            qexp *= f.p
        rad = current
        # verification: every radical element nilpotent, ideal property
        for i in range(rad.shape[0]):
            m = self.left_regular(rad[i])
            power = m
            for _ in range(n + 1):
                power = self._matmul(power, m)
            if power.any():
                raise ArithmeticError("radical verification failed: "
                                      "non-nilpotent element")
        return rad

    def _matmul(self, A, B):
        f = self.field
        n = A.shape[0]
        out = np.zeros((n, n), dtype=np.int64)
        if f.k == 1:
            return (A @ B) % f.p
        for i in range(n):
            for k in range(n):
                a = int(A[i, k])
                if not a:
                    continue
                for j in range(n):
                    b = int(B[k, j])
                    if b:
                        out[i, j] = f.add(int(out[i, j]), f.mul(a, b))
        return out

    # -- quotient by the radical ---------------------------------------------------

    def quotient(self, rad):
        """(quotient algebra, projection, section) modulo a radical basis."""
        f = self.field
        n = self.dim
        red, pivots = rref(rad.copy(), f) if rad.shape[0] else (rad, [])
        free = [c for c in range(n) if c not in pivots]
        # section: basis vectors of the complement (unit coordinate rows)
        section_rows = []
        for c in free:
            e = np.zeros(n, dtype=np.int64)
            e[c] = 1
            section_rows.append(e)

        def project(vec):
            """Coordinates in the quotient basis (reduce by rad, take free)."""
            v = vec.copy()
            for r, pc in enumerate(pivots):
                c = int(v[pc])
                if c:
                    v = np.array([f.sub(int(x), f.mul(c, int(y)))
                                  for x, y in zip(v, red[r])], dtype=np.int64)
            return np.array([v[c] for c in free], dtype=np.int64)

        m = len(free)
        table = []
        for i in range(m):
            row = []
            for j in range(m):
                prod = self.mul(section_rows[i], section_rows[j])
                row.append(project(prod))
            table.append(row)
        quot = FiniteAlgebra(f, table, project(self.unit))
        return quot, project, section_rows

    def center(self):
        """Row basis of the centre."""
        f = self.field
        n = self.dim
        conds = []
        for j in range(n):
            e = np.zeros(n, dtype=np.int64)
            e[j] = 1
            cols = []
            for i in range(n):
                ei = np.zeros(n, dtype=np.int64)
                ei[i] = 1
                cols.append(self.sub(self.mul(ei, e), self.mul(e, ei)))
            conds.append(np.stack(cols, axis=1))
        mat = np.concatenate(conds, axis=0)
        return nullspace(mat, f)

    def extend_scalars(self, target: Field):
        """The same structure constants over a larger field."""
        emb = lambda code: embed(self.field.from_code(code), target).code
        table = [[[emb(int(c)) for c in self.table[i][j]]
                  for j in range(self.dim)] for i in range(self.dim)]
        unit = [emb(int(c)) for c in self.unit]
        return FiniteAlgebra(target, table, unit), emb


# ---------------------------------------------------------------------------
# idempotent refinement on a semisimple algebra
# ---------------------------------------------------------------------------

class _Corner:
    """A corner e*A*e of an algebra, with its own coordinate system."""

    def __init__(self, parent: FiniteAlgebra, e):
        self.parent = parent
        self.e = e
        f = parent.field
        rows = []
        for j in range(parent.dim):
            ej = np.zeros(parent.dim, dtype=np.int64)
            ej[j] = 1
            rows.append(parent.mul(parent.mul(e, ej), e))
        span, _ = rref(np.stack(rows, axis=0), f)
        self.rows = span  # basis of the corner inside the parent

    @property
    def dim(self):
        return self.rows.shape[0]

    def algebra(self):
        table = []
        f = self.parent.field
        for i in range(self.dim):
            row = []
            for j in range(self.dim):
                prod = self.parent.mul(self.rows[i], self.rows[j])
                coords = solve(self.rows.T.copy(), prod, f)
                if coords is None:
                    raise ArithmeticError("corner is not closed under product")
                row.append(coords)
            table.append(row)
        unit = solve(self.rows.T.copy(), self.e, f)
        if unit is None:
            raise ArithmeticError("corner unit missing")
        return FiniteAlgebra(f, table, unit)

    def to_parent(self, coords):
        f = self.parent.field
        out = self.parent.zero()
        for c, row in zip(coords, self.rows):
            if int(c):
                out = self.parent.add(out, self.parent.scale(row, int(c)))
        return out


def _split_by_element(B: FiniteAlgebra, z):
    """Orthogonal idempotents of B from an element whose minimal polynomial
    has at least two coprime primary components; None if it has one."""
    f = B.field
    mp = B.minpoly(z)
    fac = ufactor(mp, f)
    if len(fac) <= 1:
        return None, fac
    idems = []
    for g, m in fac:
        primary = [1]
        for _ in range(m):
            primary = umul(primary, g, f)
        rest = udivmod(mp, primary, f)[0]
        # u*primary + v*rest = 1; idempotent is (v*rest)(z)
        u, v = _uxgcd(primary, rest, f)
        idem_poly = umul(v, rest, f)
        e = ueval_in_algebra(idem_poly, z, B)
        idems.append(e)
    return idems, fac


def _uxgcd(a, b, f):
    """u, v with u*a + v*b = gcd(a, b) (gcd expected to be 1 here)."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = udivmod(r0, r1, f)
        r0, r1 = r1, r
        s0, s1 = s1, usub(s0, umul(q, s1, f), f)
        t0, t1 = t1, usub(t0, umul(q, t1, f), f)
    if len(r0) != 1:
        raise ArithmeticError("expected coprime inputs in xgcd")
    inv = f.inv(r0[0])
    return [f.mul(inv, c) for c in s0], [f.mul(inv, c) for c in t0]


def _commutative_splitter(B: FiniteAlgebra):
    """For commutative semisimple B: a splitting element, or None when B
    is a field.  Uses the Frobenius-fixed subalgebra, which is split."""
    f = B.field
    n = B.dim
    cols = []
    for j in range(n):
        e = np.zeros(n, dtype=np.int64)
        e[j] = 1
        cols.append(B.sub(B.power(e, f.q), e))
    # careful: x -> x^q is not linear on sums of basis vectors unless we
    # build the matrix from images of basis vectors, which is what we do;
    # q-power IS additive here because q is a power of the characteristic
    mat = np.stack(cols, axis=1)
    fixed = nullspace(mat, f)
    if fixed.shape[0] <= 1:
        return None
    # pick the first fixed vector independent of the unit
    unit_row = B.unit.reshape(1, -1)
    for i in range(fixed.shape[0]):
        cand = np.concatenate([unit_row, fixed[i].reshape(1, -1)], axis=0)
        if rref(cand.copy(), f)[0].shape[0] == 2:
            return fixed[i]
    return None


def _is_commutative(B: FiniteAlgebra):
    for i in range(B.dim):
        ei = np.zeros(B.dim, dtype=np.int64)
        ei[i] = 1
        for j in range(i + 1, B.dim):
            ej = np.zeros(B.dim, dtype=np.int64)
            ej[j] = 1
            if not np.array_equal(B.mul(ei, ej), B.mul(ej, ei)):
                return False
    return True


def _idempotent_from_nilpotent(B: FiniteAlgebra, nu):
    """A nontrivial idempotent from a nonzero nilpotent in semisimple B.

    The left ideal B*nu is generated by an idempotent; it is found as the
    solution of the linear right-identity conditions on that ideal.
    """
    f = B.field
    rows = []
    for j in range(B.dim):
        ej = np.zeros(B.dim, dtype=np.int64)
        ej[j] = 1
        rows.append(B.mul(ej, nu))
    ideal, _ = rref(np.stack(rows, axis=0), f)
    r = ideal.shape[0]
    if r == 0:
        return None
    # unknowns: coefficients of e on the ideal basis; conditions l*e = l
    conds = []
    rhs = []
    for i in range(r):
        l = ideal[i]
        block = []
        for jj in range(r):
            block.append(B.mul(l, ideal[jj]))
        conds.append(np.stack(block, axis=1))
        rhs.append(l)
    mat = np.concatenate(conds, axis=0)
    b = np.concatenate(rhs, axis=0)
    sol = solve(mat, b, f)
    if sol is None:
        return None
    e = B.zero()
    for c, row in zip(sol, ideal):
        if int(c):
            e = B.add(e, B.scale(row, int(c)))
    if not B.is_idempotent(e) or not e.any():
        return None
    if np.array_equal(e, B.unit):
        return None
    return e


def _find_splitter_scan(B: FiniteAlgebra, limit=4000):
    """Deterministic scan for an element splitting a simple corner."""
    f = B.field
    candidates = []
    for i in range(B.dim):
        e = np.zeros(B.dim, dtype=np.int64)
        e[i] = 1
        candidates.append(e)
    for i in range(B.dim):
        for j in range(B.dim):
            if i != j:
                ei = np.zeros(B.dim, dtype=np.int64)
                ei[i] = 1
                ej = np.zeros(B.dim, dtype=np.int64)
                ej[j] = 1
                candidates.append(B.add(ei, ej))
                candidates.append(B.mul(ei, ej))
    state = 0x9E3779B97F4A7C15
    tried = 0
    idx = 0
    while tried < limit:
        if idx < len(candidates):
            z = candidates[idx]
            idx += 1
        else:
            # deterministic pseudo-random combination
            coords = []
            for _ in range(B.dim):
                state = (state * 6364136223846793005 + 1442695040888963407) % (1 << 64)
                coords.append((state >> 33) % f.q)
            z = np.array(coords, dtype=np.int64)
        tried += 1
        if not z.any():
            continue
        idems, fac = _split_by_element(B, z)
        if idems is not None:
            return ("crt", idems)
        if fac and fac[0][1] >= 2:
            g, _m = fac[0]
            nu = ueval_in_algebra(g, z, B)
            if nu.any():
                e = _idempotent_from_nilpotent(B, nu)
                if e is not None:
                    comp = B.sub(B.unit, e)
                    return ("peirce", [e, comp])
    return None


def semisimple_primitive_idempotents(B: FiniteAlgebra, ext_bound: int = 4):
    """Complete orthogonal primitive idempotents of a semisimple algebra.

    Returns (idempotents, residue_degree_lcm); residue_degree_lcm > 1 means
    the algebra is not split and must be recomputed after extending the
    base field by that degree.
    """
    f = B.field
    work = [B.unit.copy()]
    primitive = []
    residues = []
    guard = 0
    while work:
        guard += 1
        if guard > 64 * max(B.dim, 1):
            raise UndecidedError("idempotent refinement did not terminate")
        e = work.pop(0)
        corner = _Corner(B, e)
        if corner.dim == 1:
            primitive.append(e)
            residues.append(1)
            continue
        CB = corner.algebra()
        if _is_commutative(CB):
            z = _commutative_splitter(CB)
            if z is None:
                # a genuine field of degree corner.dim: not split over f
                primitive.append(e)
                residues.append(corner.dim)
                continue
            idems, _ = _split_by_element(CB, z)
            if idems is None:
                raise UndecidedError("fixed-subalgebra splitter failed")
            for ie in idems:
                work.append(corner.to_parent(ie))
            continue
        # noncommutative corner: try the centre first, then scan
        zc = CB.center()
        split_done = False
        if zc.shape[0] > 1:
            # centre is a commutative semisimple subalgebra containing 1
            table = []
            for i in range(zc.shape[0]):
                row = []
                for j in range(zc.shape[0]):
                    prod = CB.mul(zc[i], zc[j])
                    coords = solve(zc.T.copy(), prod, f)
                    row.append(coords)
                table.append(row)
            unit = solve(zc.T.copy(), CB.unit, f)
            ZA = FiniteAlgebra(f, table, unit)
            z = _commutative_splitter(ZA)
            if z is not None:
                idems, _ = _split_by_element(ZA, z)
                if idems:
                    for ie in idems:
                        back = CB.zero()
                        for c, row in zip(ie, zc):
                            if int(c):
                                back = CB.add(back, CB.scale(row, int(c)))
                        work.append(corner.to_parent(back))
                    split_done = True
        if split_done:
            continue
        found = _find_splitter_scan(CB)
        if found is None:
            raise UndecidedError(
                "could not split a noncommutative simple corner")
        _kind, idems = found
        for ie in idems:
            work.append(corner.to_parent(ie))
    need = 1
    for r in residues:
        need = need * r // _gcd(need, r)
    return primitive, need


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def lift_idempotents(A: FiniteAlgebra, rad, quotient_idems, project, section_rows):
    """Lift a complete orthogonal idempotent system through the radical.

    Newton iteration e <- 3e^2 - 2e^3 with orthogonality corrections; the
    last idempotent is taken as 1 minus the sum of the others, preserving
    completeness exactly.
    """
    f = A.field

    def section(qcoords):
        out = A.zero()
        for c, row in zip(qcoords, section_rows):
            if int(c):
                out = A.add(out, A.scale(row, int(c)))
        return out

    c2, c3 = f.elem(2).code, f.elem(3).code

    def newton(x):
        for _ in range(64):
            if A.is_idempotent(x):
                return x
            x2 = A.mul(x, x)
            x3 = A.mul(x2, x)
            x = A.sub(A.scale(x2, c3), A.scale(x3, c2))
        raise ArithmeticError("idempotent lifting did not converge")

    lifted = []
    total = A.zero()
    for qe in quotient_idems[:-1]:
        x = newton(section(qe))
        one_minus = A.sub(A.unit, total)
        h = A.mul(A.mul(one_minus, x), one_minus)
        e = newton(h)
        lifted.append(e)
        total = A.add(total, e)
    last = A.sub(A.unit, total)
    if not A.is_idempotent(last):
        raise ArithmeticError("completeness correction is not idempotent")
    lifted.append(last)
    # verify orthogonality
    for i in range(len(lifted)):
        for j in range(len(lifted)):
            if i != j and A.mul(lifted[i], lifted[j]).any():
                raise ArithmeticError("lifted idempotents are not orthogonal")
    return lifted
