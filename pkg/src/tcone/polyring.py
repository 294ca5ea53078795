"""Multivariate polynomials in x, y, z over a finite field.

The monomial order is fixed throughout the library: graded reverse
lexicographic with x > y > z.  Every Groebner basis, normal form and
certificate is taken with respect to this one order, which keeps all
outputs bit-reproducible.

Alongside the ring arithmetic this module carries the curve-level checks:
smoothness of a plane cubic, the irrelevant-primary test for ideals in the
cone, and the Hasse invariant (supersingularity) of the curve.
"""

from __future__ import annotations

from fractions import Fraction

from .field import Field, FieldElem, FieldError

VARS = ("x", "y", "z")


def grevlex_key(e):
    """Sort key: larger key means larger monomial in degrevlex, x > y > z."""
    return (e[0] + e[1] + e[2], -e[2], -e[1])


def mono_mul(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def mono_divides(a, b):
    return a[0] <= b[0] and a[1] <= b[1] and a[2] <= b[2]


def mono_div(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def mono_lcm(a, b):
    return (max(a[0], b[0]), max(a[1], b[1]), max(a[2], b[2]))


def mono_deg(a):
    return a[0] + a[1] + a[2]


def monomials_of_degree(d):
    """All degree-d monomials, in descending degrevlex order."""
    out = []
    for i in range(d, -1, -1):
        for j in range(d - i, -1, -1):
            out.append((i, j, d - i - j))
    out.sort(key=grevlex_key, reverse=True)
    return out


class Polynomial:
    """Sparse polynomial: dict from exponent triple to nonzero coefficient code."""

    __slots__ = ("field", "terms", "_lt")

    def __init__(self, field: Field, terms=None):
        self.field = field
        self.terms = {} if terms is None else terms
        self._lt = None

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls(field, {})

    @classmethod
    def constant(cls, field, value):
        code = value.code if isinstance(value, FieldElem) else value % field.p
        return cls(field, {(0, 0, 0): code} if code else {})

    @classmethod
    def monomial(cls, field, mono, coeff=1):
        code = coeff.code if isinstance(coeff, FieldElem) else coeff % field.p
        return cls(field, {tuple(mono): code} if code else {})

    @classmethod
    def variable(cls, field, name):
        i = VARS.index(name)
        mono = tuple(1 if j == i else 0 for j in range(3))
        return cls(field, {mono: 1})

    # -- basic structure --------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def leading_monomial(self):
        if self._lt is None and self.terms:
            self._lt = max(self.terms, key=grevlex_key)
        return self._lt

    def leading_coeff_code(self):
        lm = self.leading_monomial()
        return self.terms[lm] if lm is not None else 0

    def leading_coeff(self):
        return FieldElem(self.field, self.leading_coeff_code())

    def degree(self):
        if not self.terms:
            return -1
        return max(mono_deg(m) for m in self.terms)

    def is_homogeneous(self):
        if not self.terms:
            return True
        degs = {mono_deg(m) for m in self.terms}
        return len(degs) == 1

    def coefficient(self, mono) -> FieldElem:
        return FieldElem(self.field, self.terms.get(tuple(mono), 0))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: grevlex_key(kv[0]),
                      reverse=True)

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other):
        f = self.field
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = f.add(res.get(m, 0), c)
            if s:
                res[m] = s
            else:
                res.pop(m, None)
        return Polynomial(f, res)

    def __sub__(self, other):
        f = self.field
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = f.sub(res.get(m, 0), c)
            if s:
                res[m] = s
            else:
                res.pop(m, None)
        return Polynomial(f, res)

    def __neg__(self):
        f = self.field
        return Polynomial(f, {m: f.neg(c) for m, c in self.terms.items()})

    def __mul__(self, other):
        f = self.field
        if isinstance(other, FieldElem):
            return self.scale(other.code)
        if isinstance(other, int):
            return self.scale(other % f.p)
        res = {}
        if len(self.terms) > len(other.terms):
            a, b = other, self
        else:
            a, b = self, other
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                m = mono_mul(m1, m2)
                s = f.add(res.get(m, 0), f.mul(c1, c2))
                if s:
                    res[m] = s
                else:
                    res.pop(m, None)
        return Polynomial(f, res)

    __rmul__ = __mul__

    def scale(self, code):
        f = self.field
        if code == 0:
            return Polynomial.zero(f)
        if code == 1:
            return self
        return Polynomial(f, {m: f.mul(c, code) for m, c in self.terms.items()})

    def term_mul(self, mono, code):
        """Multiply by the single term code * mono."""
        f = self.field
        if code == 0:
            return Polynomial.zero(f)
        return Polynomial(f, {mono_mul(m, mono): f.mul(c, code)
                              for m, c in self.terms.items()})

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(self.field, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def monic(self):
        lc = self.leading_coeff_code()
        if lc in (0, 1):
            return self
        return self.scale(self.field.inv(lc))

    def frobenius_power(self, e: int):
        """self ** (p^e), using additivity of the Frobenius in char p."""
        f = self.field
        q = f.p ** e
        return Polynomial(f, {(m[0] * q, m[1] * q, m[2] * q): f.pow(c, q)
                              for m, c in self.terms.items()})

    def derivative(self, var: str):
        f = self.field
        i = VARS.index(var)
        res = {}
        for m, c in self.terms.items():
            if m[i] == 0:
                continue
            cc = f.mul(c, m[i] % f.p)
            if cc:
                mm = list(m)
                mm[i] -= 1
                res[tuple(mm)] = cc
        return Polynomial(f, res)

    def map_coefficients(self, target: Field, fn):
        """Apply fn to every coefficient code, producing a polynomial over target."""
        return Polynomial(target, {m: fn(c) for m, c in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and other.field == self.field
                and other.terms == self.terms)

    def __hash__(self):
        return hash((self.field.p, self.field.k,
                     tuple(sorted(self.terms.items()))))

    def __repr__(self):
        return format_polynomial(self)


# ---------------------------------------------------------------------------
# parsing and formatting
# ---------------------------------------------------------------------------

class PolynomialSyntaxError(ValueError):
    pass


class _Parser:
    def __init__(self, text, field):
        self.toks = self._lex(text)
        self.pos = 0
        self.field = field

    @staticmethod
    def _lex(text):
        toks = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                toks.append(("int", int(text[i:j])))
                i = j
            elif ch in "xyzt":
                toks.append(("var", ch))
                i += 1
            elif ch in "+-*^()":
                toks.append((ch, ch))
                i += 1
            else:
                raise PolynomialSyntaxError(f"unexpected character {ch!r}")
        return toks

    def peek(self):
        return self.toks[self.pos][0] if self.pos < len(self.toks) else None

    def take(self, kind=None):
        if self.pos >= len(self.toks):
            raise PolynomialSyntaxError("unexpected end of polynomial")
        tok = self.toks[self.pos]
        if kind is not None and tok[0] != kind:
            raise PolynomialSyntaxError(f"expected {kind!r}, found {tok[1]!r}")
        self.pos += 1
        return tok

    def expr(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        acc = self.term().scale(self.field.neg(1)) if sign < 0 else self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.factor()
        while self.peek() == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            e = self.take("int")[1]
            base = base ** e
        return base

    def atom(self):
        kind = self.peek()
        if kind == "int":
            return Polynomial.constant(self.field, self.take()[1])
        if kind == "var":
            v = self.take()[1]
            if v == "t":
                if self.field.k == 1:
                    raise PolynomialSyntaxError(
                        "t is only available over extension fields")
                return Polynomial.constant(self.field,
                                           self.field.generator())
            return Polynomial.variable(self.field, v)
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        raise PolynomialSyntaxError("expected a coefficient, variable or (")


def parse_polynomial(text: str, field: Field) -> Polynomial:
    """Parse 'c*x^a*y^b*z^c + ...' syntax; t denotes the extension generator."""
    parser = _Parser(text, field)
    poly = parser.expr()
    if parser.pos != len(parser.toks):
        raise PolynomialSyntaxError("trailing input after polynomial")
    return poly


def _format_coeff(field, code, alone):
    if field.k == 1:
        return str(code)
    coeffs = field._decode(code)
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            stem = "t" if i == 1 else f"t^{i}"
            parts.append(stem if c == 1 else f"{c}*{stem}")
    s = " + ".join(parts) if parts else "0"
    if not alone and len(parts) > 1:
        return f"({s})"
    return s


def format_polynomial(poly: Polynomial) -> str:
    if not poly.terms:
        return "0"
    parts = []
    for m, c in poly.sorted_terms():
        factors = []
        for name, e in zip(VARS, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            parts.append(_format_coeff(poly.field, c, alone=True))
        elif c == 1:
            parts.append("*".join(factors))
        else:
            parts.append("*".join([_format_coeff(poly.field, c, alone=False)]
                                  + factors))
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# division and Buchberger
# ---------------------------------------------------------------------------

def normal_form(f: Polynomial, basis) -> Polynomial:
    """Unique remainder of f on division by a (Groebner) basis.

    Reduces every term, always choosing the first reducer in the given
    ordering, so the result is deterministic; for a reduced Groebner basis
    it is the canonical normal form.
    """
    field = f.field
    reducers = [(g.leading_monomial(), g.leading_coeff_code(), g)
                for g in basis if g]
    work = dict(f.terms)
    remainder = {}
    while work:
        m = max(work, key=grevlex_key)
        c = work.pop(m)
        hit = None
        for lm, lc, g in reducers:
            if mono_divides(lm, m):
                hit = (lm, lc, g)
                break
        if hit is None:
            remainder[m] = c
            continue
        lm, lc, g = hit
        factor = field.mul(c, field.inv(lc))
        shift = mono_div(m, lm)
        for gm, gc in g.terms.items():
            mm = mono_mul(gm, shift)
            s = field.sub(work.get(mm, 0), field.mul(factor, gc))
            if mm == m:
                continue
            if s:
                work[mm] = s
            else:
                work.pop(mm, None)
    return Polynomial(field, remainder)


def _s_poly(f, g):
    field = f.field
    lf, lg = f.leading_monomial(), g.leading_monomial()
    l = mono_lcm(lf, lg)
    cf = field.inv(f.leading_coeff_code())
    cg = field.inv(g.leading_coeff_code())
    return f.term_mul(mono_div(l, lf), cf) - g.term_mul(mono_div(l, lg), cg)


def _interreduce(basis):
    basis = [g.monic() for g in basis if g]
    changed = True
    while changed:
        changed = False
        out = []
        for i, g in enumerate(basis):
            others = out + basis[i + 1:]
            r = normal_form(g, others)
            if r.terms != g.terms:
                changed = True
            if r:
                out.append(r.monic())
        basis = out
    basis.sort(key=lambda g: grevlex_key(g.leading_monomial()))
    return basis


def buchberger(gens) -> list:
    """The reduced Groebner basis, degrevlex x > y > z.

    Normal selection by lowest lcm degree (sugar for homogeneous input),
    the coprimality criterion for pair skipping, and full inter-reduction
    at the end.  Output is monic and sorted by descending leading monomial.
    """
    basis = [g.monic() for g in gens if g]
    basis.sort(key=lambda g: grevlex_key(g.leading_monomial()), reverse=True)
    if not basis:
        return []
    pairs = []

    def push_pairs(k):
        for i in range(k):
            lf = basis[i].leading_monomial()
            lg = basis[k].leading_monomial()
            l = mono_lcm(lf, lg)
            if l == mono_mul(lf, lg):  # coprime leading monomials
                continue
            pairs.append((mono_deg(l), i, k))

    for k in range(1, len(basis)):
        push_pairs(k)
    pairs.sort()
    while pairs:
        _, i, j = pairs.pop(0)
        s = _s_poly(basis[i], basis[j])
        r = normal_form(s, basis)
        if r:
            basis.append(r.monic())
            push_pairs(len(basis) - 1)
            pairs.sort()
    return _interreduce(basis)


def ideal_contains_variable_powers(gb) -> bool:
    """True when the leading ideal contains a power of each of x, y, z.

    For a homogeneous ideal this certifies that the zero set is at most the
    origin, i.e. the ideal is irrelevant-primary.
    """
    for i in range(3):
        if not any(all(g.leading_monomial()[j] == 0 for j in range(3) if j != i)
                   and g.leading_monomial()[i] > 0
                   for g in gb):
            # constant 1 in the basis also certifies (unit ideal)
            if any(g.leading_monomial() == (0, 0, 0) for g in gb):
                continue
            return False
    return True


def is_smooth_cubic(F: Polynomial, field: Field) -> bool:
    """Smoothness of the projective plane cubic F = 0.

    Uses the full Jacobian ideal (F, dF/dx, dF/dy, dF/dz); including F
    keeps the test correct in characteristics 2 and 3.  The curve is smooth
    exactly when this ideal cuts out at most the origin in affine 3-space.
    """
    if not F.is_homogeneous() or F.degree() != 3:
        raise ValueError("curve equation must be homogeneous of degree 3")
    gens = [F, F.derivative("x"), F.derivative("y"), F.derivative("z")]
    gb = buchberger(gens)
    return ideal_contains_variable_powers(gb)


def hasse_invariant_of(F: Polynomial, field: Field):
    """Coefficient of (xyz)^(p-1) in F^(p-1); zero means supersingular."""
    p = field.p
    power = F ** (p - 1)
    e = p - 1
    return FieldElem(field, power.terms.get((e, e, e), 0))


def hasse_invariant(curve: "CubicCurve"):
    """(Hasse invariant, supersingular flag) of a smooth plane cubic."""
    return curve.hasse, curve.supersingular


class CubicCurve:
    """A smooth plane cubic over a finite field, with its cone R = S/(F).

    Carries the reduced Groebner basis of (F) (just the monic F) and caches
    the monomial bases of the graded pieces of R.
    """

    __slots__ = ("F", "field", "gb", "_hasse", "_piece_cache")

    def __init__(self, F: Polynomial, field: Field, check_smooth: bool = True):
        if F.field != field:
            raise FieldError("curve equation not over the given field")
        if not F.is_homogeneous() or F.degree() != 3:
            raise ValueError("curve equation must be homogeneous of degree 3")
        if check_smooth and not is_smooth_cubic(F, field):
            raise ValueError("cubic is singular")
        self.F = F.monic()
        self.field = field
        self.gb = (self.F,)
        self._hasse = None
        self._piece_cache = {}

    @property
    def hasse(self) -> FieldElem:
        if self._hasse is None:
            self._hasse = hasse_invariant_of(self.F, self.field)
        return self._hasse

    @property
    def supersingular(self) -> bool:
        return self.hasse.is_zero()

    def nf(self, f: Polynomial) -> Polynomial:
        """Normal form modulo (F): the canonical representative in R.

        Single-reducer reduction is confluent, so terms are processed off a
        worklist instead of in monomial order; this keeps the large-degree
        Frobenius computations linear in the number of reduction events.
        """
        import heapq

        F = self.F
        lt = F.leading_monomial()
        field = self.field
        tail = [(m, field.neg(c)) for m, c in F.terms.items() if m != lt]
        work = {}
        out = {}
        heap = []

        def heap_key(m):
            # min-heap pops the grevlex-largest monomial first
            return (-(m[0] + m[1] + m[2]), m[2], m[1])

        for m, c in f.terms.items():
            if mono_divides(lt, m):
                work[m] = c
                heapq.heappush(heap, (heap_key(m), m))
            else:
                out[m] = c
        # descending processing: every contribution to a monomial arrives
        # from a strictly larger one, so each monomial is handled once
        while heap:
            _, m = heapq.heappop(heap)
            c = work.pop(m, 0)
            if not c:
                continue
            shift = mono_div(m, lt)
            for tm, tc in tail:
                mm = mono_mul(tm, shift)
                contrib = field.mul(c, tc)
                if mono_divides(lt, mm):
                    prev = work.get(mm, 0)
                    if prev == 0:
                        heapq.heappush(heap, (heap_key(mm), mm))
                    s = field.add(prev, contrib)
                    if s:
                        work[mm] = s
                    else:
                        work.pop(mm, None)
                else:
                    s = field.add(out.get(mm, 0), contrib)
                    if s:
                        out[mm] = s
                    else:
                        out.pop(mm, None)
        return Polynomial(field, out)

    def piece_monomials(self, d: int):
        """Monomial basis of R_d: degree-d monomials outside the leading ideal."""
        if d < 0:
            return ()
        cached = self._piece_cache.get(d)
        if cached is None:
            lt = self.F.leading_monomial()
            cached = tuple(m for m in monomials_of_degree(d)
                           if not mono_divides(lt, m))
            self._piece_cache[d] = cached
        return cached

    def piece_dim(self, d: int) -> int:
        return len(self.piece_monomials(d))

    def embedded(self, target_field: Field, embed_fn) -> "CubicCurve":
        F2 = self.F.map_coefficients(target_field, embed_fn)
        return CubicCurve(F2, target_field, check_smooth=False)

    def __repr__(self):
        return f"CubicCurve({format_polynomial(self.F)} over {self.field})"


def is_irrelevant_primary(gens, F: Polynomial) -> bool:
    """True when (gens, F) contains a power of each variable."""
    gb = buchberger(list(gens) + [F])
    return ideal_contains_variable_powers(gb)


class IdealData:
    """A homogeneous irrelevant-primary ideal in the cone over a cubic.

    Duplicate generators are allowed: they do not change the ideal but do
    change the syzygy sheaf, which several invariants exploit.
    """

    __slots__ = ("curve", "gens", "degrees", "_gb")

    def __init__(self, curve: CubicCurve, gens, check_primary: bool = True):
        gens = list(gens)
        if len(gens) < 2:
            raise ValueError("need at least two generators")
        degrees = []
        for g in gens:
            if g.is_zero():
                raise ValueError("zero generator")
            if not g.is_homogeneous():
                raise ValueError("generators must be homogeneous")
            if g.degree() < 1:
                raise ValueError("generators must have positive degree")
            degrees.append(g.degree())
        if check_primary and not is_irrelevant_primary(gens, curve.F):
            raise ValueError("ideal is not primary to the irrelevant ideal")
        self.curve = curve
        self.gens = tuple(curve.nf(g) for g in gens)
        if any(g.is_zero() for g in self.gens):
            raise ValueError("generator is a multiple of the curve equation")
        self.degrees = tuple(degrees)
        self._gb = None

    @property
    def n(self):
        return len(self.gens)

    @property
    def gb(self):
        if self._gb is None:
            self._gb = tuple(buchberger(list(self.gens) + [self.curve.F]))
        return self._gb

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self.gb).is_zero()

    def embedded(self, target_field: Field, embed_fn) -> "IdealData":
        curve2 = self.curve.embedded(target_field, embed_fn)
        gens2 = [g.map_coefficients(target_field, embed_fn) for g in self.gens]
        other = IdealData(curve2, gens2, check_primary=False)
        if self._gb is not None:
            other._gb = tuple(g.map_coefficients(target_field, embed_fn)
                              for g in self._gb)
        return other

    def __repr__(self):
        gens = ", ".join(format_polynomial(g) for g in self.gens)
        return f"IdealData(({gens}) over {self.curve!r})"


def ideal_membership(f: Polynomial, ideal: IdealData) -> bool:
    """Membership of homogeneous f in (f_1, ..., f_n) inside the cone R."""
    if not f.is_homogeneous():
        raise ValueError("membership test expects a homogeneous element")
    return ideal.contains(f)
