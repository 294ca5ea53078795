"""Graded free modules and presented graded modules over the cubic cone.

Everything here lives over S = K[x,y,z] or R = S/(F): twisted free modules,
homogeneous maps between them, submodules given by generators, and the
sheaf-level invariants (graded pieces, Hilbert values, rank and degree)
that the bundle layer consumes.

Module Groebner bases use the position-over-term extension of the fixed
degrevlex order, with earlier positions dominant.  The central tool is an
augmented basis ("lift basis") for a generator list: one elimination
computation yields membership tests, expressions of elements in terms of
the generators, and the full syzygy module of the generators.
"""

from __future__ import annotations

import numpy as np

from .linalg import as_matrix, rref
from .polyring import (CubicCurve, Polynomial, grevlex_key, mono_deg,
                       mono_div, mono_divides, mono_lcm, mono_mul)


class TwistedFree:
    """A free module ⊕ R(a_i), recorded by its twist sequence."""

    __slots__ = ("twists",)

    def __init__(self, twists):
        self.twists = tuple(int(a) for a in twists)

    @property
    def rank(self):
        return len(self.twists)

    def __eq__(self, other):
        return isinstance(other, TwistedFree) and self.twists == other.twists

    def __hash__(self):
        return hash(self.twists)

    def __repr__(self):
        return "(+)R" + "".join(f"({a})" for a in self.twists)


# ---------------------------------------------------------------------------
# module vectors: dict {(position, monomial): coefficient code}
# ---------------------------------------------------------------------------

def vkey(term):
    pos, mono = term
    return (-pos, grevlex_key(mono))


def vec_from_polys(polys):
    out = {}
    for pos, poly in enumerate(polys):
        if poly is None:
            continue
        for m, c in poly.terms.items():
            out[(pos, m)] = c
    return out


def vec_to_polys(vec, npos, field):
    polys = [dict() for _ in range(npos)]
    for (pos, m), c in vec.items():
        polys[pos][m] = c
    return tuple(Polynomial(field, t) for t in polys)


def vec_add(a, b, field):
    res = dict(a)
    for t, c in b.items():
        s = field.add(res.get(t, 0), c)
        if s:
            res[t] = s
        else:
            res.pop(t, None)
    return res


def vec_sub(a, b, field):
    res = dict(a)
    for t, c in b.items():
        s = field.sub(res.get(t, 0), c)
        if s:
            res[t] = s
        else:
            res.pop(t, None)
    return res


def vec_scale(a, code, field):
    if code == 0:
        return {}
    if code == 1:
        return dict(a)
    return {t: field.mul(c, code) for t, c in a.items()}


def vec_term_mul(a, mono, code, field):
    if code == 0:
        return {}
    return {(pos, mono_mul(m, mono)): field.mul(c, code)
            for (pos, m), c in a.items()}


def vec_lt(a):
    return max(a, key=vkey) if a else None


def vec_degree(vec, twists):
    """Degree of a homogeneous vector; None for 0, error when inhomogeneous.

    A component of polynomial degree e at a position twisted by a sits in
    R(a)_(e-a), so the vector degree is e - a.
    """
    if not vec:
        return None
    degs = {mono_deg(m) - twists[pos] for (pos, m) in vec}
    if len(degs) != 1:
        raise ValueError("vector is not homogeneous")
    return degs.pop()


def vec_nf(vec, basis, field):
    """Full reduction of a module vector by a list of vectors."""
    reducers = [(vec_lt(g), g) for g in basis if g]
    work = dict(vec)
    remainder = {}
    while work:
        t = max(work, key=vkey)
        c = work.pop(t)
        pos, m = t
        hit = None
        for (lpos, lm), g in reducers:
            if lpos == pos and mono_divides(lm, m):
                hit = ((lpos, lm), g)
                break
        if hit is None:
            remainder[t] = c
            continue
        (lpos, lm), g = hit
        lc = g[(lpos, lm)]
        factor = field.mul(c, field.inv(lc))
        shift = mono_div(m, lm)
        for (gpos, gm), gc in g.items():
            tt = (gpos, mono_mul(gm, shift))
            if tt == t:
                continue
            s = field.sub(work.get(tt, 0), field.mul(factor, gc))
            if s:
                work[tt] = s
            else:
                work.pop(tt, None)
    return remainder


def vec_monic(vec, field):
    t = vec_lt(vec)
    if t is None:
        return vec
    lc = vec[t]
    if lc == 1:
        return vec
    return vec_scale(vec, field.inv(lc), field)


def buchberger_module(vectors, field):
    """Reduced module Groebner basis, position-over-term degrevlex.

    No pair-skipping criteria beyond equal leading position: the product
    criterion is not valid for modules.
    """
    basis = [vec_monic(v, field) for v in vectors if v]
    basis.sort(key=lambda v: vkey(vec_lt(v)), reverse=True)
    # drop exact duplicates
    seen = set()
    uniq = []
    for v in basis:
        key = tuple(sorted(v.items()))
        if key not in seen:
            seen.add(key)
            uniq.append(v)
    basis = uniq
    pairs = []

    def push_pairs(k):
        ltk = vec_lt(basis[k])
        for i in range(k):
            lti = vec_lt(basis[i])
            if lti[0] != ltk[0]:
                continue
            l = mono_lcm(lti[1], ltk[1])
            pairs.append((mono_deg(l), i, k))

    for k in range(1, len(basis)):
        push_pairs(k)
    pairs.sort()
    while pairs:
        _, i, j = pairs.pop(0)
        gi, gj = basis[i], basis[j]
        (pi, mi), (pj, mj) = vec_lt(gi), vec_lt(gj)
        l = mono_lcm(mi, mj)
        s = vec_sub(
            vec_term_mul(gi, mono_div(l, mi), field.inv(gi[(pi, mi)]), field),
            vec_term_mul(gj, mono_div(l, mj), field.inv(gj[(pj, mj)]), field),
            field)
        r = vec_nf(s, basis, field)
        if r:
            basis.append(vec_monic(r, field))
            push_pairs(len(basis) - 1)
            pairs.sort()
    # full inter-reduction
    changed = True
    while changed:
        changed = False
        out = []
        for i, g in enumerate(basis):
            others = out + basis[i + 1:]
            r = vec_nf(g, others, field)
            if r != g:
                changed = True
            if r:
                out.append(vec_monic(r, field))
        basis = out
    basis.sort(key=lambda v: vkey(vec_lt(v)))
    return basis


class LiftBasis:
    """Augmented Groebner basis of a generator list inside a free module.

    For generators v_1..v_s in positions 0..npos-1 and closing relations
    (typically F times each unit vector), computes the basis of the module
    spanned by (v_j, e_j) and (rel, 0) with the generator-coefficient block
    in trailing positions.  Because leading positions dominate, this is an
    elimination order, giving in one computation:

    * membership of a vector in the span of the v_j (over R when the
      relations include F times the units),
    * the coefficients expressing a member in terms of the v_j,
    * a generating set for the syzygies of the v_j.
    """

    def __init__(self, vectors, relations, npos, field):
        self.field = field
        self.npos = npos
        self.nvec = len(vectors)
        aug = []
        for j, v in enumerate(vectors):
            w = dict(v)
            w[(npos + j, (0, 0, 0))] = 1
            aug.append(w)
        for r in relations:
            aug.append(dict(r))
        self.basis = buchberger_module(aug, field)

    def reduce(self, vec):
        return vec_nf(dict(vec), self.basis, self.field)

    def member(self, vec):
        """Coefficients on the generators when vec lies in their span, else None."""
        r = self.reduce(vec)
        if any(pos < self.npos for (pos, _m) in r):
            return None
        coeffs = [dict() for _ in range(self.nvec)]
        for (pos, m), c in r.items():
            coeffs[pos - self.npos][m] = self.field.neg(c)
        return tuple(Polynomial(self.field, t) for t in coeffs)

    def block1_gb(self):
        """Reduced Groebner basis of the span itself (coefficient block
        dropped); elements led from the coefficient block are syzygies and
        do not contribute."""
        out = []
        for g in self.basis:
            b1 = {t: c for t, c in g.items() if t[0] < self.npos}
            if b1 and vec_lt(b1) == vec_lt(g):
                out.append(b1)
        return out

    def syzygies(self):
        """Coefficient vectors (h_1..h_s) with sum h_j v_j = 0 modulo the relations."""
        out = []
        for g in self.basis:
            if any(pos < self.npos for (pos, _m) in g):
                continue
            coeffs = [dict() for _ in range(self.nvec)]
            for (pos, m), c in g.items():
                coeffs[pos - self.npos][m] = c
            out.append(tuple(Polynomial(self.field, t) for t in coeffs))
        return out


def _minimal_generators(curve, ambient, vectors):
    """Prune a sorted homogeneous generator list to a minimal one.

    Graded Nakayama: a generator is redundant exactly when it lies in the
    span, at its own degree, of multiples of the generators kept so far.
    """
    from .linalg import SpanBasis

    field = curve.field
    kept = []
    i = 0
    while i < len(vectors):
        d = vec_degree(vec_from_polys(vectors[i]), ambient.twists)
        batch = []
        while i < len(vectors) and vec_degree(vec_from_polys(vectors[i]),
                                              ambient.twists) == d:
            batch.append(vectors[i])
            i += 1
        monos = [curve.piece_monomials(d + a) for a in ambient.twists]
        offsets = []
        total = 0
        for ms in monos:
            offsets.append(total)
            total += len(ms)
        index = [{m: k for k, m in enumerate(ms)} for ms in monos]

        def coords(v):
            row = np.zeros(total, dtype=np.int64)
            for pos, poly in enumerate(v):
                for m, c in poly.terms.items():
                    row[offsets[pos] + index[pos][m]] = c
            return row

        span = SpanBasis(total, field)
        for g in kept:
            gd = vec_degree(vec_from_polys(g), ambient.twists)
            if d - gd < 0:
                continue
            for m in curve.piece_monomials(d - gd):
                w = tuple(curve.nf(p.term_mul(m, 1)) for p in g)
                span.add(coords(w))
        for v in batch:
            if span.add(coords(v)):
                kept.append(v)
    return kept


class GradedMap:
    """Homogeneous map between twisted free modules.

    Entry (i, j) multiplies source coordinate j into target coordinate i,
    so it is homogeneous of degree target.twists[i] - source.twists[j]
    (zero entries allowed).
    """

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: TwistedFree, target: TwistedFree, matrix):
        self.source = source
        self.target = target
        self.matrix = tuple(tuple(row) for row in matrix)
        if len(self.matrix) != target.rank:
            raise ValueError("matrix row count must equal target rank")
        for i, row in enumerate(self.matrix):
            if len(row) != source.rank:
                raise ValueError("matrix column count must equal source rank")
            for j, entry in enumerate(row):
                if entry.is_zero():
                    continue
                want = target.twists[i] - source.twists[j]
                if not entry.is_homogeneous() or entry.degree() != want:
                    raise ValueError(
                        f"entry ({i},{j}) must be homogeneous of degree {want}")

    def apply(self, polys):
        """Apply to a source vector given as a tuple of polynomials."""
        field = self.matrix[0][0].field if self.matrix else None
        out = []
        for i in range(self.target.rank):
            acc = Polynomial.zero(field)
            for j in range(self.source.rank):
                if self.matrix[i][j] and polys[j]:
                    acc = acc + self.matrix[i][j] * polys[j]
            out.append(acc)
        return tuple(out)

    def columns(self):
        return [tuple(self.matrix[i][j] for i in range(self.target.rank))
                for j in range(self.source.rank)]


class PresentedModule:
    """A graded module over the cone R, as a submodule of a twisted free.

    Generators are honest vectors in the ambient free module; the module is
    their R-span.  A cokernel presentation (ambient modulo the span of
    relation vectors) is also supported for the graded piece and Hilbert
    machinery.
    """

    SUBMODULE = "submodule"
    COKERNEL = "cokernel"

    def __init__(self, curve: CubicCurve, ambient: TwistedFree, vectors,
                 mode: str = SUBMODULE, minimalize: bool = False):
        self.curve = curve
        self.field = curve.field
        self.ambient = ambient
        self.mode = mode
        cleaned = []
        for v in vectors:
            nf = tuple(curve.nf(p) for p in v)
            if any(p for p in nf):
                cleaned.append(nf)
        # canonical generator order: by degree, then leading term
        def genkey(v):
            vec = vec_from_polys(v)
            return (vec_degree(vec, ambient.twists), vkey(vec_lt(vec)))
        cleaned.sort(key=genkey)
        if minimalize and mode == self.SUBMODULE:
            cleaned = _minimal_generators(curve, ambient, cleaned)
        self.vectors = tuple(cleaned)
        for v in self.vectors:
            vec_degree(vec_from_polys(v), ambient.twists)  # homogeneity check
        self._lift = None
        self._piece_cache = {}
        self._rank_degree = None
        self._relations = None

    # -- structural helpers ------------------------------------------------------

    @property
    def gens(self):
        if self.mode != self.SUBMODULE:
            raise ValueError("cokernel presentation has no generator vectors")
        return self.vectors

    def gen_degrees(self):
        return tuple(vec_degree(vec_from_polys(v), self.ambient.twists)
                     for v in self.vectors)

    def closing_relations(self):
        """F times each ambient unit vector, as module vectors."""
        F = self.curve.F
        rels = []
        for i in range(self.ambient.rank):
            rels.append({(i, m): c for m, c in F.terms.items()})
        return rels

    @property
    def lift(self) -> LiftBasis:
        if self._lift is None:
            vecs = [vec_from_polys(v) for v in self.vectors]
            self._lift = LiftBasis(vecs, self.closing_relations(),
                                   self.ambient.rank, self.field)
        return self._lift

    def contains(self, polys) -> bool:
        if self.mode != self.SUBMODULE:
            raise ValueError("membership needs a submodule presentation")
        return self.lift.member(vec_from_polys(polys)) is not None

    def express(self, polys):
        """Coefficients on the generators for a member vector, or None."""
        return self.lift.member(vec_from_polys(polys))

    def relations(self):
        """Generating syzygies of the generators, over R."""
        if self._relations is None:
            self._relations = tuple(self.lift.syzygies())
        return self._relations

    def groebner_basis(self):
        """Reduced module Groebner basis of the submodule.

        Over R this is the basis of the preimage in the free module, i.e.
        the span of the generators together with F times the ambient units;
        equal submodules produce identical bases.
        """
        gb = [vec_to_polys(v, self.ambient.rank, self.field)
              for v in self.lift.block1_gb()]
        return tuple(gb)

    # -- graded pieces ------------------------------------------------------------

    def piece_coords(self, t: int):
        """Coordinate frame of the ambient degree-t piece.

        Returns (offsets, monomial lists); coordinates concatenate the
        reduced monomial bases of R_(t + a_i) over the ambient positions.
        """
        monos = []
        offsets = []
        total = 0
        for a in self.ambient.twists:
            ms = self.curve.piece_monomials(t + a)
            offsets.append(total)
            monos.append(ms)
            total += len(ms)
        return offsets, monos, total

    def _vector_coords(self, polys, t, offsets, monos, total):
        row = np.zeros(total, dtype=np.int64)
        for pos, poly in enumerate(polys):
            if not poly:
                continue
            index = {m: i for i, m in enumerate(monos[pos])}
            for m, c in poly.terms.items():
                row[offsets[pos] + index[m]] = c
        return row

    def piece_matrix(self, t: int):
        """Reduced row basis of the degree-t piece, with its coordinate frame."""
        cached = self._piece_cache.get(t)
        if cached is not None:
            return cached
        offsets, monos, total = self.piece_coords(t)
        rows = []
        if self.mode == self.SUBMODULE:
            for v in self.vectors:
                vdeg = vec_degree(vec_from_polys(v), self.ambient.twists)
                d = t - vdeg
                if d < 0:
                    continue
                for m in self.curve.piece_monomials(d):
                    w = tuple(self.curve.nf(p.term_mul(m, 1)) for p in v)
                    rows.append(self._vector_coords(w, t, offsets, monos, total))
            mat, _ = rref(as_matrix(rows, total), self.field)
        else:
            # cokernel: ambient piece modulo the span of relation multiples
            rel_rows = []
            for v in self.vectors:
                vdeg = vec_degree(vec_from_polys(v), self.ambient.twists)
                d = t - vdeg
                if d < 0:
                    continue
                for m in self.curve.piece_monomials(d):
                    w = tuple(self.curve.nf(p.term_mul(m, 1)) for p in v)
                    rel_rows.append(self._vector_coords(w, t, offsets, monos,
                                                        total))
            mat = (as_matrix(rel_rows, total), total)
        self._piece_cache[t] = (mat, offsets, monos, total)
        return self._piece_cache[t]

    def piece_dim(self, t: int) -> int:
        if self.mode == self.SUBMODULE:
            mat, _, _, _ = self.piece_matrix(t)
            return mat.shape[0]
        (rel, total), _, _, _ = self.piece_matrix(t)
        return total - rref(rel, self.field)[0].shape[0]

    def piece_basis(self, t: int):
        """K-basis of the degree-t piece as ambient vectors of polynomials."""
        if self.mode != self.SUBMODULE:
            raise ValueError("explicit piece bases need a submodule presentation")
        mat, offsets, monos, _total = self.piece_matrix(t)
        out = []
        for row in mat:
            polys = []
            for pos in range(self.ambient.rank):
                terms = {}
                base = offsets[pos]
                for i, m in enumerate(monos[pos]):
                    c = int(row[base + i])
                    if c:
                        terms[m] = c
                polys.append(Polynomial(self.field, terms))
            out.append(tuple(polys))
        return out

    # -- sheaf invariants -----------------------------------------------------------

    def rank_and_degree(self):
        """(rank, degree) of the associated sheaf from Hilbert linearity.

        Probes three consecutive degrees where dim M_t = 3*rank*t + degree
        must hold exactly; the starting point doubles once if linearity
        fails, after which a failure is an error.
        """
        if self._rank_degree is not None:
            return self._rank_degree
        degs = [d for d in (self.gen_degrees() if self.mode == self.SUBMODULE
                            else [0]) if d is not None]
        base = (max(degs) if degs else 0) + self.ambient.rank + 3
        for t0 in (base, 2 * base):
            h = [self.piece_dim(t0 + i) for i in range(3)]
            d1, d2 = h[1] - h[0], h[2] - h[1]
            if d1 == d2 and d1 % 3 == 0:
                rank = d1 // 3
                degree = h[0] - 3 * rank * t0
                self._rank_degree = (rank, degree)
                return self._rank_degree
        raise ArithmeticError(
            "Hilbert values are not linear at the probed degrees; "
            "module is not the section module of a locally free sheaf")

    # -- base change ------------------------------------------------------------------

    def embedded(self, curve2: CubicCurve, embed_fn) -> "PresentedModule":
        """The same module after coefficient embedding into a larger field.

        Generator vectors and cached Groebner data stay valid verbatim
        because reduced Groebner bases are stable under base field
        extension.
        """
        vecs = [tuple(p.map_coefficients(curve2.field, embed_fn) for p in v)
                for v in self.vectors]
        other = PresentedModule(curve2, self.ambient, vecs, self.mode)
        if self._rank_degree is not None:
            other._rank_degree = self._rank_degree
        return other

    def __repr__(self):
        return (f"PresentedModule({self.mode}, ambient={self.ambient!r}, "
                f"{len(self.vectors)} vectors)")


# ---------------------------------------------------------------------------
# the module-level operations
# ---------------------------------------------------------------------------

def syzygy_of_map(phi: GradedMap, curve: CubicCurve) -> PresentedModule:
    """Kernel of a homogeneous map between twisted frees over R.

    Syzygies are computed over S for the columns together with F times the
    target units; the coefficient block of the elimination basis then
    generates the kernel over R.
    """
    cols = [vec_from_polys(c) for c in phi.columns()]
    F = curve.F
    rels = [{(i, m): c for m, c in F.terms.items()}
            for i in range(phi.target.rank)]
    lift = LiftBasis(cols, rels, phi.target.rank, curve.field)
    gens = lift.syzygies()
    return PresentedModule(curve, phi.source, gens, minimalize=True)


def free_module(curve: CubicCurve, twists) -> PresentedModule:
    """⊕ R(a_i) as a presented module (generated by the unit vectors)."""
    amb = TwistedFree(twists)
    one = Polynomial.constant(curve.field, 1)
    zero = Polynomial.zero(curve.field)
    gens = [tuple(one if j == i else zero for j in range(amb.rank))
            for i in range(amb.rank)]
    return PresentedModule(curve, amb, gens)


def graded_piece_basis(M: PresentedModule, t: int):
    return M.piece_basis(t)


def hilbert_value(M: PresentedModule, t: int) -> int:
    return M.piece_dim(t)


def rank_and_degree(M: PresentedModule):
    return M.rank_and_degree()


class ModuleHom:
    """A degree-d homomorphism between presented modules, by generator images."""

    __slots__ = ("domain", "codomain", "images", "degree")

    def __init__(self, domain: PresentedModule, codomain: PresentedModule,
                 images, degree: int = 0):
        self.domain = domain
        self.codomain = codomain
        self.images = tuple(images)
        self.degree = degree

    def apply(self, polys):
        """Image of an ambient vector lying in the domain."""
        coeffs = self.domain.express(polys)
        if coeffs is None:
            raise ValueError("vector does not lie in the domain module")
        curve = self.codomain.curve
        out = [Polynomial.zero(curve.field)
               for _ in range(self.codomain.ambient.rank)]
        for c, img in zip(coeffs, self.images):
            if not c:
                continue
            for i, p in enumerate(img):
                if p:
                    out[i] = out[i] + c * p
        return tuple(curve.nf(p) for p in out)

    def compose(self, other: "ModuleHom") -> "ModuleHom":
        """self after other (other's codomain must be self's domain)."""
        images = [self.apply(img) for img in other.images]
        return ModuleHom(other.domain, self.codomain, images,
                         self.degree + other.degree)

    def __repr__(self):
        return (f"ModuleHom(deg {self.degree}, "
                f"{len(self.images)} generator images)")


def hom_space(M: PresentedModule, N: PresentedModule, degree: int = 0):
    """K-basis of the degree-d homomorphisms M -> N.

    A homomorphism is a choice of images of M's generators in the matching
    graded pieces of N, compatible with every generating syzygy of M; the
    compatible choices form the nullspace of one exact linear system.
    """
    if M.curve is not N.curve and M.curve.F != N.curve.F:
        raise ValueError("modules live over different cones")
    field = M.field
    gdegs = M.gen_degrees()
    blocks = []          # per generator: basis of N_(deg + d)
    offsets = []
    total = 0
    for dg in gdegs:
        basis = N.piece_basis(dg + degree)
        blocks.append(basis)
        offsets.append(total)
        total += len(basis)
    if total == 0:
        return []
    rows = []
    for rel in M.relations():
        rel_deg = None
        for h, dg in zip(rel, gdegs):
            if h:
                rel_deg = h.degree() + dg
                break
        if rel_deg is None:
            continue
        coff, cmonos, ctotal = N.piece_coords(rel_deg + degree)[0:3]
        row_block = [np.zeros(ctotal, dtype=np.int64) for _ in range(total)]
        for l, h in enumerate(rel):
            if not h:
                continue
            for b, img in enumerate(blocks[l]):
                w = tuple(N.curve.nf(h * p) for p in img)
                row_block[offsets[l] + b] = N._vector_coords(
                    w, rel_deg + degree, coff, cmonos, ctotal)
        # conditions: sum over unknowns of coeff * row_block = 0
        rows.append(np.stack(row_block, axis=1) if ctotal else None)
    if rows:
        mat = np.concatenate([r for r in rows if r is not None], axis=0)
    else:
        mat = np.zeros((0, total), dtype=np.int64)
    from .linalg import nullspace
    sols = nullspace(mat, field)
    homs = []
    for sol in sols:
        images = []
        for l, dg in enumerate(gdegs):
            img = [Polynomial.zero(field) for _ in range(N.ambient.rank)]
            for b, vec in enumerate(blocks[l]):
                c = int(sol[offsets[l] + b])
                if c:
                    for i, p in enumerate(vec):
                        if p:
                            img[i] = img[i] + p.scale(c)
            images.append(tuple(N.curve.nf(p) for p in img))
        homs.append(ModuleHom(M, N, images, degree))
    return homs


class HomModule:
    """Hom_R(M, N) with an eager degree-0 basis and a lazy module presentation."""

    def __init__(self, M: PresentedModule, N: PresentedModule):
        self.domain = M
        self.codomain = N
        self.degree0 = hom_space(M, N, 0)
        self._module = None

    @property
    def module(self) -> PresentedModule:
        if self._module is None:
            self._module = self._build_module()
        return self._module

    def _build_module(self):
        """Present Hom(M, N) as a submodule of a twisted free module.

        A homomorphism is a tuple (w_1..w_s) of elements of N annihilated
        by M's syzygies; the kernel of that evaluation map is computed by
        one more syzygy elimination.
        """
        M, N = self.domain, self.codomain
        curve = M.curve
        field = M.field
        gdegs = M.gen_degrees()
        s = len(gdegs)
        rels = M.relations()
        namb = N.ambient.rank
        # ambient of the Hom module: one copy of N's ambient per M-generator,
        # twisted so that a degree-0 element sends g_l into N_(delta_l)
        twists = []
        for dg in gdegs:
            twists.extend(b + dg for b in N.ambient.twists)
        amb = TwistedFree(twists)
        # target free module: one copy of N's ambient per relation
        rel_degs = []
        for rel in rels:
            d = None
            for h, dg in zip(rel, gdegs):
                if h:
                    d = h.degree() + dg
                    break
            rel_degs.append(d)
        tw_t = []
        for d in rel_degs:
            tw_t.extend(b + (d if d is not None else 0)
                        for b in N.ambient.twists)
        # spanning vectors of ⊕_l N(-delta_l): iota_l(nu) over N's generators
        dom_vecs = []
        images = []
        for l in range(s):
            for nu in N.gens:
                dom = {}
                for i, p in enumerate(nu):
                    for m, c in p.terms.items():
                        dom[(l * namb + i, m)] = c
                dom_vecs.append(dom)
                img = {}
                for k, rel in enumerate(rels):
                    h = rel[l]
                    if not h:
                        continue
                    for i, p in enumerate(nu):
                        prod = curve.nf(h * p)
                        for m, c in prod.terms.items():
                            t = (k * namb + i, m)
                            img[t] = field.add(img.get(t, 0), c)
                images.append({t: c for t, c in img.items() if c})
        F = curve.F
        closing = [{(i, m): c for m, c in F.terms.items()}
                   for i in range(len(tw_t))]
        lift = LiftBasis(images, closing, max(len(tw_t), 1), field)
        gens = []
        for syz in lift.syzygies():
            vec = {}
            for idx, coeff in enumerate(syz):
                if not coeff:
                    continue
                for t, c in dom_vecs[idx].items():
                    pos, m = t
                    for mm, cc in coeff.terms.items():
                        key = (pos, mono_mul(m, mm))
                        s_ = field.add(vec.get(key, 0), field.mul(c, cc))
                        if s_:
                            vec[key] = s_
                        else:
                            vec.pop(key, None)
            if vec:
                gens.append(vec_to_polys(vec, amb.rank, field))
        return PresentedModule(curve, amb, gens)


def hom_module(M: PresentedModule, N: PresentedModule) -> HomModule:
    """Hom_R(M, N): module presentation plus the degree-0 piece as maps."""
    return HomModule(M, N)


def image_presentation(e: ModuleHom, M: PresentedModule) -> PresentedModule:
    """Submodule of M's ambient generated by e(generators of M)."""
    if e.domain is not M:
        raise ValueError("endomorphism does not act on the given module")
    return PresentedModule(M.curve, e.codomain.ambient, list(e.images),
                           minimalize=True)
