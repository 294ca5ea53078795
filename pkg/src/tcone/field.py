"""Exact arithmetic in prime fields F_p and their extensions F_{p^k}.

Elements of F_{p^k} are encoded as integers ("codes") in [0, p^k): the
element sum(c_i * t^i) with 0 <= c_i < p has code sum(c_i * p^i), where t
is the class of the variable modulo the defining polynomial.  The defining
polynomial is always the irreducible monic polynomial of degree k over F_p
whose code (leading coefficient dropped) is smallest, so every field built
from the same (p, k) is identical across runs and machines.

The code order doubles as the canonical order on field elements; "smallest
root" choices elsewhere in the library refer to it.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np


class FieldError(ValueError):
    """Invalid field construction or incompatible field operation."""


# fields with at most this many elements get full add/mul lookup tables,
# which the numpy linear algebra uses for vectorised arithmetic
_TABLE_LIMIT = 1024


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# univariate polynomials over F_p, as little-endian coefficient tuples;
# only what the irreducibility search needs
# ---------------------------------------------------------------------------

def _pstrip(a):
    while a and a[-1] == 0:
        a = a[:-1]
    return a


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pstrip(tuple(out))


def _pmod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(a) - 1 >= dm and a:
        if a[-1] == 0:
            a.pop()
            continue
        q = a[-1] * inv_lead % p
        off = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[off + i] = (a[off + i] - q * mi) % p
        a.pop()
    return _pstrip(tuple(a))


def _ppowmod(a, e, m, p):
    result = (1,)
    a = _pmod(a, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, a, p), m, p)
        a = _pmod(_pmul(a, a, p), m, p)
        e >>= 1
    return result


def _pgcd(a, b, p):
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _psub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        out[i] = (ai - bi) % p
    return _pstrip(tuple(out))


def _prime_factors(n: int):
    fs = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            fs.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        fs.append(n)
    return fs


def _is_irreducible(f, p):
    """Deterministic irreducibility test for monic f over F_p.

    Checks x^(p^k) == x mod f and gcd(x^(p^(k/l)) - x, f) == 1 for every
    prime l dividing k = deg f.
    """
    k = len(f) - 1
    if k <= 0:
        return False
    if k == 1:
        return True
    x = (0, 1)
    if _pmod(_psub(_ppowmod(x, p ** k, f, p), x, p), f, p):
        return False
    for ell in _prime_factors(k):
        g = _pgcd(f, _psub(_ppowmod(x, p ** (k // ell), f, p), x, p), p)
        if len(g) - 1 != 0:
            return False
    return True


def find_irreducible(p: int, k: int) -> tuple:
    """Smallest monic irreducible polynomial of degree k over F_p.

    "Smallest" compares the non-leading coefficient vectors by their integer
    code sum(c_i * p^i); the result is a little-endian coefficient tuple of
    length k + 1 ending in 1.  Deterministic by construction.
    """
    if not _is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if k < 1:
        raise FieldError(f"extension degree must be >= 1, got {k}")
    if k == 1:
        return (0, 1)
    for code in range(p ** k):
        coeffs = []
        c = code
        for _ in range(k):
            coeffs.append(c % p)
            c //= p
        f = tuple(coeffs) + (1,)
        if _is_irreducible(f, p):
            return f
    raise FieldError(f"no irreducible of degree {k} over F_{p}")  # unreachable


class Field:
    """The finite field F_{p^k} with its canonical defining polynomial.

    Immutable; obtain instances through :func:`make_field` so that equal
    parameters share one object (embeddings are memoised per field pair).
    """

    __slots__ = ("p", "k", "q", "modulus", "_mul_table", "_inv_table",
                 "_add_table", "_neg_table", "_embed_cache")

    def __init__(self, p: int, k: int):
        if not _is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if p >= 1 << 16:
            raise FieldError(f"characteristic {p} exceeds the 2^16 bound")
        if k < 1:
            raise FieldError(f"extension degree must be >= 1, got {k}")
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = find_irreducible(p, k)
        self._mul_table = None
        self._inv_table = None
        self._add_table = None
        self._neg_table = None
        self._embed_cache = {}
        if 1 < self.q <= _TABLE_LIMIT and k > 1:
            self._build_tables()

    # -- code-level arithmetic ------------------------------------------------

    def _decode(self, code):
        c, out = code, []
        for _ in range(self.k):
            out.append(c % self.p)
            c //= self.p
        return out

    def _encode(self, coeffs):
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + (c % self.p)
        return code

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self._add_table is not None:
            return int(self._add_table[a, b])
        ca, cb = self._decode(a), self._decode(b)
        return self._encode([(x + y) % self.p for x, y in zip(ca, cb)])

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        if self._neg_table is not None:
            return int(self._neg_table[a])
        return self._encode([(-x) % self.p for x in self._decode(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        if self._mul_table is not None:
            return int(self._mul_table[a, b])
        prod = _pmod(_pmul(tuple(self._decode(a)), tuple(self._decode(b)), self.p),
                     self.modulus, self.p)
        return self._encode(list(prod) + [0] * (self.k - len(prod)))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self.k == 1:
            return pow(a, -1, self.p)
        if self._inv_table is not None:
            return int(self._inv_table[a])
        return self.pow(a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def elements(self):
        return range(self.q)

    def _build_tables(self):
        q = self.q
        mul = np.zeros((q, q), dtype=np.int64)
        add = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            da = tuple(self._decode(a))
            for b in range(a, q):
                m = _pmod(_pmul(da, tuple(self._decode(b)), self.p),
                          self.modulus, self.p)
                mc = self._encode(list(m) + [0] * (self.k - len(m)))
                mul[a, b] = mul[b, a] = mc
                db = self._decode(b)
                ac = self._encode([(x + y) % self.p for x, y in zip(self._decode(a), db)])
                add[a, b] = add[b, a] = ac
        self._mul_table = mul
        self._add_table = add
        self._neg_table = np.zeros(q, dtype=np.int64)
        self._inv_table = np.zeros(q, dtype=np.int64)
        for a in range(q):
            self._neg_table[a] = self._encode([(-x) % self.p for x in self._decode(a)])
            if a:
                self._inv_table[a] = self.pow(a, self.q - 2)

    # -- element construction --------------------------------------------------

    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    def one(self) -> "FieldElem":
        return FieldElem(self, 1)

    def elem(self, value) -> "FieldElem":
        """Coerce an integer (reduced mod p), code, or FieldElem into this field."""
        if isinstance(value, FieldElem):
            if value.field is self:
                return value
            if value.field.p == self.p and self.k % value.field.k == 0:
                return embed(value, self)
            raise FieldError("cannot coerce element between unrelated fields")
        return FieldElem(self, value % self.p)

    def from_code(self, code: int) -> "FieldElem":
        if not 0 <= code < self.q:
            raise FieldError(f"code {code} out of range for F_{self.p}^{self.k}")
        return FieldElem(self, code)

    def generator(self) -> "FieldElem":
        """The class of t (for k = 1 this is 0, the root of the modulus t)."""
        return FieldElem(self, self.p if self.k > 1 else 0)

    def __repr__(self):
        if self.k == 1:
            return f"F_{self.p}"
        return f"F_{self.p}^{self.k}"

    def __eq__(self, other):
        return isinstance(other, Field) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash((self.p, self.k))


class FieldElem:
    """An element of a :class:`Field`, stored by its integer code."""

    __slots__ = ("field", "code")

    def __init__(self, field: Field, code: int):
        self.field = field
        self.code = code

    @property
    def coeffs(self):
        """Little-endian coefficients over F_p in the modulus root."""
        return tuple(self.field._decode(self.code))

    def is_zero(self):
        return self.code == 0

    def _check(self, other):
        if isinstance(other, int):
            return FieldElem(self.field, other % self.field.p)
        if not isinstance(other, FieldElem) or other.field is not self.field:
            raise FieldError("mixed-field arithmetic")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FieldElem(self.field, self.field.add(self.code, other.code))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return FieldElem(self.field, self.field.sub(self.code, other.code))

    def __rsub__(self, other):
        return self._check(other) - self

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.code))

    def __mul__(self, other):
        other = self._check(other)
        return FieldElem(self.field, self.field.mul(self.code, other.code))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check(other)
        return FieldElem(self.field, self.field.mul(self.code, self.field.inv(other.code)))

    def __pow__(self, e):
        return FieldElem(self.field, self.field.pow(self.code, e))

    def inverse(self):
        return FieldElem(self.field, self.field.inv(self.code))

    def frobenius(self):
        return FieldElem(self.field, self.field.frobenius(self.code))

    def __eq__(self, other):
        if isinstance(other, int):
            # integers compare through the prime subfield
            return self.code == other % self.field.p
        return (isinstance(other, FieldElem) and other.field == self.field
                and other.code == self.code)

    def __hash__(self):
        return hash((self.field.p, self.field.k, self.code))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        if self.field.k == 1:
            return str(self.code)
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("t" if c == 1 else f"{c}*t")
            else:
                parts.append(f"t^{i}" if c == 1 else f"{c}*t^{i}")
        return " + ".join(parts) if parts else "0"


@lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> Field:
    """Build (or fetch) F_{p^k} with the canonical smallest modulus."""
    return Field(p, k)


def _root_of_modulus(source: Field, target: Field) -> int:
    """Smallest root (in code order) of source.modulus inside target.

    The roots form a subset of the fixed field of Frobenius^source.k, an
    F_p-subspace of the target enumerated through a nullspace basis, so the
    search space is p^source.k elements rather than the whole target.
    """
    p, ks, kt = source.p, source.k, target.k
    if p ** ks > 4_000_000:
        raise FieldError("embedding search space too large for desk scale")
    # matrix of Frobenius^ks - id on the target, over F_p
    cols = []
    for i in range(kt):
        e = target._encode([0] * i + [1] + [0] * (kt - i - 1))
        img = target.pow(e, p ** ks)
        col = target._decode(img)
        col[i] = (col[i] - 1) % p
        cols.append(col)
    # F_p nullspace by Gaussian elimination on the kt x kt matrix
    mat = [[cols[j][i] for j in range(kt)] for i in range(kt)]
    pivots = {}
    row = 0
    for col in range(kt):
        piv = None
        for r in range(row, kt):
            if mat[r][col] % p:
                piv = r
                break
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        inv = pow(mat[row][col], -1, p)
        mat[row] = [x * inv % p for x in mat[row]]
        for r in range(kt):
            if r != row and mat[r][col] % p:
                f = mat[r][col]
                mat[r] = [(x - f * y) % p for x, y in zip(mat[r], mat[row])]
        pivots[col] = row
        row += 1
    free_cols = [c for c in range(kt) if c not in pivots]
    basis = []
    for fc in free_cols:
        vec = [0] * kt
        vec[fc] = 1
        for c, r in pivots.items():
            vec[c] = (-mat[r][fc]) % p
        basis.append(target._encode(vec))
    # enumerate the fixed subfield, collect roots of the source modulus
    root = None
    mod = source.modulus
    count = p ** len(basis)
    for idx in range(count):
        cand, rem = 0, idx
        for b in basis:
            d = rem % p
            rem //= p
            if d:
                cand = target.add(cand, target.mul(b, d))
        # evaluate modulus at cand by Horner on codes
        acc = 0
        for c in reversed(mod):
            acc = target.add(target.mul(acc, cand), c % p)
        if acc == 0 and (root is None or cand < root):
            root = cand
    if root is None:
        raise FieldError("modulus has no root in target (degree mismatch)")
    return root


def embed(x: FieldElem, target: Field) -> FieldElem:
    """Canonical ring embedding F_{p^k} -> F_{p^(k*m)} applied to x.

    The generator goes to the smallest root of the source modulus in the
    target under the code order; the choice is cached per field pair, so all
    embeddings used in one process agree.
    """
    source = x.field
    if source is target or source == target:
        return FieldElem(target, x.code)
    if source.p != target.p:
        raise FieldError("embedding must preserve the characteristic")
    if target.k % source.k != 0:
        raise FieldError(
            f"no embedding F_{source.p}^{source.k} -> F_{target.p}^{target.k}")
    if source.k == 1:
        return FieldElem(target, x.code)
    key = (source.p, source.k, target.k)
    root = target._embed_cache.get(key)
    if root is None:
        root = _root_of_modulus(source, target)
        target._embed_cache[key] = root
    acc = 0
    for c in reversed(source._decode(x.code)):
        acc = target.add(target.mul(acc, root), c)
    return FieldElem(target, acc)
