"""Syzygy-bundle analysis over the cone of a smooth plane cubic.

Builds the sheaf of syzygies of a primary ideal at a chosen total degree,
computes its endomorphism algebra, decomposes it into indecomposable
summands through a complete system of primitive idempotents (extending the
base field when the algebra is not split), and tests, for a candidate
element, whether the component of its obstruction class on a summand
vanishes.

Class-component vanishing is decided without any cohomology machinery: the
component on a summand is zero exactly when the projection onto that
summand extends, as a degree-zero homomorphism, from the syzygy module to
the enlarged syzygy module of the candidate.
"""

from __future__ import annotations

import numpy as np

from .algebra import (FiniteAlgebra, UndecidedError, lift_idempotents,
                      semisimple_primitive_idempotents)
from .field import Field, embed, make_field
from .gradedmod import (GradedMap, ModuleHom, PresentedModule, TwistedFree,
                        hom_space, image_presentation, syzygy_of_map)
from .linalg import as_matrix, solve
from .polyring import CubicCurve, IdealData, Polynomial


class SyzygyBundle:
    """Module of syzygies of the ideal generators at total degree m.

    The associated sheaf has rank n - 1 and degree
    -3 * (sum of generator degrees - (n - 1) * m); both are recomputed from
    Hilbert data and checked against the closed formulas on construction.
    """

    __slots__ = ("ideal", "m", "module", "rank", "degree")

    def __init__(self, ideal: IdealData, m: int, module: PresentedModule,
                 rank: int, degree: int):
        self.ideal = ideal
        self.m = m
        self.module = module
        self.rank = rank
        self.degree = degree

    @property
    def field(self):
        return self.ideal.curve.field

    def expected_rank_degree(self):
        n = self.ideal.n
        d_sum = sum(self.ideal.degrees)
        return n - 1, -3 * (d_sum - (n - 1) * self.m)

    def __repr__(self):
        return (f"SyzygyBundle(m={self.m}, rank={self.rank}, "
                f"degree={self.degree})")


def syzygy_bundle(ideal: IdealData, m: int) -> SyzygyBundle:
    """Build the syzygy module of the ideal at total degree m."""
    curve = ideal.curve
    source = TwistedFree([m - d for d in ideal.degrees])
    target = TwistedFree([m])
    phi = GradedMap(source, target, [list(ideal.gens)])
    module = syzygy_of_map(phi, curve)
    rank, degree = module.rank_and_degree()
    want = SyzygyBundle(ideal, m, module, rank, degree).expected_rank_degree()
    if (rank, degree) != want:
        raise ArithmeticError(
            f"syzygy bundle invariants {rank, degree} disagree with the "
            f"degree formula {want}")
    return SyzygyBundle(ideal, m, module, rank, degree)


# ---------------------------------------------------------------------------
# endomorphism algebra
# ---------------------------------------------------------------------------

def _hom_coords(M: PresentedModule, images) -> np.ndarray:
    """Coordinates of a generator-image tuple in the graded piece frames."""
    gdegs = M.gen_degrees()
    parts = []
    for img, d in zip(images, gdegs):
        offsets, monos, total = M.piece_coords(d)
        parts.append(M._vector_coords(img, d, offsets, monos, total))
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)


class EndAlgebra:
    """Degree-zero endomorphism algebra of a syzygy bundle.

    Carries the basis of endomorphisms as generator-image maps, the
    structure constants over the base field, a basis of the radical, and
    (after idempotent computation) the splitting field actually used.
    """

    __slots__ = ("bundle", "homs", "algebra", "radical_rows",
                 "splitting_field", "_coord_rows")

    def __init__(self, bundle: SyzygyBundle, homs, algebra: FiniteAlgebra,
                 radical_rows, coord_rows):
        self.bundle = bundle
        self.homs = homs
        self.algebra = algebra
        self.radical_rows = radical_rows
        self.splitting_field = bundle.field
        self._coord_rows = coord_rows

    @property
    def dim(self):
        return len(self.homs)

    def is_local(self):
        """Local means no nontrivial idempotents: quotient by radical is 1-dim
        over a division ring; cheap sufficient check used in reporting."""
        return self.dim - self.radical_rows.shape[0] == 1

    def __repr__(self):
        return f"EndAlgebra(dim={self.dim}, rad_dim={self.radical_rows.shape[0]})"


def end_algebra(bundle: SyzygyBundle) -> EndAlgebra:
    """Degree-0 Hom basis of the bundle module with multiplication table."""
    M = bundle.module
    field = bundle.field
    homs = hom_space(M, M, 0)
    dim = len(homs)
    if dim == 0:
        raise ArithmeticError("endomorphism algebra without identity")
    coord_rows = as_matrix([_hom_coords(M, h.images) for h in homs],
                           _hom_coords(M, homs[0].images).shape[0])
    basis_T = coord_rows.T.copy()
    table = []
    for i in range(dim):
        row = []
        for j in range(dim):
            comp = homs[i].compose(homs[j])
            coords = solve(basis_T, _hom_coords(M, comp.images), field)
            if coords is None:
                raise ArithmeticError("endomorphism product left the basis span")
            row.append(coords)
        table.append(row)
    ident = ModuleHom(M, M, list(M.gens))
    unit = solve(basis_T, _hom_coords(M, ident.images), field)
    if unit is None:
        raise ArithmeticError("identity endomorphism missing from Hom basis")
    algebra = FiniteAlgebra(field, table, unit)
    radical_rows = algebra.radical()
    return EndAlgebra(bundle, homs, algebra, radical_rows, coord_rows)


# ---------------------------------------------------------------------------
# decomposition
# ---------------------------------------------------------------------------

class Summand:
    """A direct summand: projection idempotent, module, rank and degree."""

    __slots__ = ("projection", "module", "rank", "degree")

    def __init__(self, projection: ModuleHom, module: PresentedModule,
                 rank: int, degree: int):
        self.projection = projection
        self.module = module
        self.rank = rank
        self.degree = degree

    @property
    def field(self):
        return self.module.field

    def sort_key(self):
        ser = []
        for img in self.projection.images:
            for poly in img:
                ser.append(tuple(sorted(poly.terms.items())))
        return (-self.degree, -self.rank, tuple(ser))

    def __repr__(self):
        return f"Summand(rank={self.rank}, degree={self.degree})"


class Decomposition:
    """The summand list of a bundle, with the field it was computed over.

    Iterates and indexes as the list of summands.  When splitting the
    endomorphism algebra required a base extension, `ideal`, `bundle` and
    every summand live over `field`, an extension of the input field, and
    `embed_code` maps input-field coefficient codes into it.
    """

    def __init__(self, bundle: SyzygyBundle, summands, field: Field,
                 extension_degree: int, embed_code):
        self.bundle = bundle
        self.summands = list(summands)
        self.field = field
        self.extension_degree = extension_degree
        self.embed_code = embed_code

    @property
    def ideal(self):
        return self.bundle.ideal

    def __iter__(self):
        return iter(self.summands)

    def __len__(self):
        return len(self.summands)

    def __getitem__(self, i):
        return self.summands[i]

    def shape(self):
        return [(s.rank, s.degree) for s in self.summands]

    def __repr__(self):
        return f"Decomposition({self.shape()}, over {self.field})"


def _combine_hom(M: PresentedModule, homs, coords, field) -> ModuleHom:
    """Linear combination of endomorphisms given by algebra coordinates."""
    images = []
    for l in range(len(M.gens)):
        img = [Polynomial.zero(field) for _ in range(M.ambient.rank)]
        for c, h in zip(coords, homs):
            c = int(c)
            if not c:
                continue
            for i, p in enumerate(h.images[l]):
                if p:
                    img[i] = img[i] + p.scale(c)
        images.append(tuple(M.curve.nf(p) for p in img))
    return ModuleHom(M, M, images)


def decompose_bundle(bundle: SyzygyBundle, ext_bound: int = 4,
                     min_extension: int = 1) -> Decomposition:
    """Split the bundle into indecomposable summands.

    Computes primitive idempotents of the endomorphism algebra modulo its
    radical, extending the base field until every simple factor is split
    (relative degree at most ext_bound, else the computation is refused as
    undecided), lifts them through the radical, and realises the summands
    as images.  Summands are ordered by (degree, rank) descending with a
    deterministic tiebreak on the projection data.

    min_extension forces at least that base extension first; it exists so
    the stability of the answer under enlarging the splitting field can be
    exercised directly.
    """
    base_field = bundle.field
    ideal = bundle.ideal
    module = bundle.module
    homs = None
    rel_ext = 1

    def build_over(ext):
        """(ideal, module, homs, algebra) over the degree-ext extension."""
        nonlocal homs
        if homs is None:
            ea = end_algebra(bundle)
            homs0, alg0 = ea.homs, ea.algebra
            homs = (homs0, alg0)
        homs0, alg0 = homs
        if ext == 1:
            return ideal, module, homs0, alg0, (lambda c: c)
        K = make_field(base_field.p, base_field.k * ext)
        emb = lambda code: embed(base_field.from_code(code), K).code
        ideal2 = ideal.embedded(K, emb)
        module2 = module.embedded(ideal2.curve, emb)
        homs2 = [ModuleHom(module2, module2,
                           [tuple(p.map_coefficients(K, emb) for p in img)
                            for img in h.images])
                 for h in homs0]
        alg2, _ = alg0.extend_scalars(K)
        return ideal2, module2, homs2, alg2, emb

    rel_ext = max(1, min_extension)
    while True:
        ideal_x, module_x, homs_x, alg_x, emb = build_over(rel_ext)
        rad = alg_x.radical()
        quot, proj, sect = alg_x.quotient(rad)
        if quot.radical().shape[0] != 0:
            raise ArithmeticError("quotient by the radical is not semisimple")
        qidems, need = semisimple_primitive_idempotents(quot)
        if need == 1:
            break
        rel_ext *= need
        if rel_ext > ext_bound:
            raise UndecidedError(
                f"splitting the endomorphism algebra needs a degree-"
                f"{rel_ext} extension, beyond the bound {ext_bound}")
    lifted = lift_idempotents(alg_x, rad, qidems, proj, sect)
    field_x = ideal_x.curve.field
    summands = []
    for e in lifted:
        ehom = _combine_hom(module_x, homs_x, e, field_x)
        smod = image_presentation(ehom, module_x)
        r, d = smod.rank_and_degree()
        summands.append(Summand(ehom, smod, r, d))
    summands.sort(key=lambda s: s.sort_key())
    n = ideal_x.n
    if sum(s.rank for s in summands) != n - 1:
        raise ArithmeticError("summand ranks do not add up to n - 1")
    if sum(s.degree for s in summands) != bundle.degree:
        raise ArithmeticError("summand degrees do not add up to the bundle degree")
    bundle_x = (bundle if rel_ext == 1 else
                SyzygyBundle(ideal_x, bundle.m, module_x, bundle.rank,
                             bundle.degree))
    return Decomposition(bundle_x, summands, field_x, rel_ext, emb)


# ---------------------------------------------------------------------------
# forcing data and class components
# ---------------------------------------------------------------------------

class ForcingData:
    """Candidate data: the enlarged syzygy module and the inclusion.

    For a homogeneous candidate f0 of degree m, syz_prime is the module of
    syzygies of (f0, f_1, ..., f_n) at total degree m, and the inclusion
    embeds the syzygies of (f_1, ..., f_n) as those with vanishing first
    coordinate.
    """

    __slots__ = ("ideal", "f0", "m", "syz_prime", "inclusion", "bundle_module")

    def __init__(self, ideal: IdealData, f0: Polynomial, m: int,
                 syz_prime: PresentedModule, inclusion: GradedMap,
                 bundle_module: PresentedModule):
        self.ideal = ideal
        self.f0 = f0
        self.m = m
        self.syz_prime = syz_prime
        self.inclusion = inclusion
        self.bundle_module = bundle_module

    @property
    def field(self):
        return self.ideal.curve.field

    def embedded(self, target_field: Field, embed_code) -> "ForcingData":
        ideal2 = self.ideal.embedded(target_field, embed_code)
        curve2 = ideal2.curve
        f02 = self.f0.map_coefficients(target_field, embed_code)
        syz2 = self.syz_prime.embedded(curve2, embed_code)
        bm2 = self.bundle_module.embedded(curve2, embed_code)
        inc2 = GradedMap(self.inclusion.source, self.inclusion.target,
                         [[p.map_coefficients(target_field, embed_code)
                           for p in row] for row in self.inclusion.matrix])
        return ForcingData(ideal2, f02, self.m, syz2, inc2, bm2)

    def __repr__(self):
        return f"ForcingData(f0={self.f0!r}, m={self.m})"


def forcing_data(ideal: IdealData, f0: Polynomial,
                 bundle: SyzygyBundle | None = None) -> ForcingData:
    """Syzygies of (f0, f_1, ..., f_n) with the canonical inclusion."""
    if f0.is_zero():
        raise ValueError("candidate must be nonzero")
    if not f0.is_homogeneous():
        raise ValueError("candidate must be homogeneous")
    curve = ideal.curve
    f0 = curve.nf(f0)
    if f0.is_zero():
        raise ValueError("candidate must be nonzero in the cone")
    m = f0.degree()
    source = TwistedFree([0] + [m - d for d in ideal.degrees])
    target = TwistedFree([m])
    phi = GradedMap(source, target, [[f0] + list(ideal.gens)])
    syz_prime = syzygy_of_map(phi, curve)
    rank, degree = syz_prime.rank_and_degree()
    if rank != ideal.n:
        raise ArithmeticError(
            f"enlarged syzygy sheaf has rank {rank}, expected {ideal.n}")
    if bundle is None:
        bundle = syzygy_bundle(ideal, m)
    else:
        if bundle.m != m or bundle.ideal is not ideal:
            raise ValueError("bundle does not match the candidate degree")
    zero = Polynomial.zero(curve.field)
    one = Polynomial.constant(curve.field, 1)
    amb = bundle.module.ambient
    rows = [[zero] * amb.rank]
    for i in range(amb.rank):
        rows.append([one if j == i else zero for j in range(amb.rank)])
    inclusion = GradedMap(amb, source, rows)
    return ForcingData(ideal, f0, m, syz_prime, inclusion, bundle.module)


def _include_vector(forcing: ForcingData, polys):
    zero = Polynomial.zero(forcing.field)
    return (zero,) + tuple(polys)


def component_class_vanishes(forcing: ForcingData, summand: Summand) -> bool:
    """Whether the candidate's class component on the summand is zero.

    Equivalent formulation used here: the projection of the syzygy module
    onto the summand extends to a degree-zero homomorphism of the enlarged
    syzygy module.  The extension is one linear system: unknown images of
    the enlarged module's generators in the summand's graded pieces,
    constrained by the generating syzygies, with the restriction along the
    inclusion pinned to the projection.
    """
    field = summand.field
    if field != forcing.field:
        forcing = forcing.embedded(field, _embed_code_fn(forcing.field, field))
    Mp = forcing.syz_prime
    Mj = summand.module
    proj = summand.projection
    gdegs = Mp.gen_degrees()
    blocks = [Mj.piece_basis(d) for d in gdegs]
    offsets = []
    total = 0
    for b in blocks:
        offsets.append(total)
        total += len(b)
    if total == 0:
        # every hom out of the enlarged module is zero; the projection must be
        return all(not p for img in proj.images for p in img)
    rows = []
    rhs_parts = []

    def add_condition(coeffs, target_degree, rhs_vec):
        """Condition sum_u coeffs[u] * w_u = rhs at the given degree."""
        coff, cmonos, ctotal = Mj.piece_coords(target_degree)
        if ctotal == 0:
            return
        block_cols = [np.zeros(ctotal, dtype=np.int64) for _ in range(total)]
        for u, h in enumerate(coeffs):
            if not h:
                continue
            for b, img in enumerate(blocks[u]):
                w = tuple(Mj.curve.nf(h * p) for p in img)
                block_cols[offsets[u] + b] = Mj._vector_coords(
                    w, target_degree, coff, cmonos, ctotal)
        rows.append(np.stack(block_cols, axis=1))
        if rhs_vec is None:
            rhs_parts.append(np.zeros(ctotal, dtype=np.int64))
        else:
            rhs_parts.append(Mj._vector_coords(rhs_vec, target_degree, coff,
                                               cmonos, ctotal))

    # homomorphism conditions from the generating syzygies of syz_prime
    for rel in Mp.relations():
        rel_deg = None
        for h, dg in zip(rel, gdegs):
            if h:
                rel_deg = h.degree() + dg
                break
        if rel_deg is None:
            continue
        add_condition(rel, rel_deg, None)
    # restriction conditions: psi(iota(g_l)) = projection(g_l)
    for g, img in zip(forcing.bundle_module.gens, proj.images):
        iota = _include_vector(forcing, g)
        coeffs = Mp.express(iota)
        if coeffs is None:
            raise ArithmeticError("inclusion image escaped the enlarged module")
        deg = None
        for p, a in zip(iota, Mp.ambient.twists):
            if p:
                deg = p.degree() - a
                break
        add_condition(coeffs, deg, img)
    if not rows:
        return True
    mat = np.concatenate(rows, axis=0)
    rhs = np.concatenate(rhs_parts, axis=0)
    return solve(mat, rhs, field) is not None


def _embed_code_fn(source: Field, target: Field):
    return lambda code: embed(source.from_code(code), target).code


def primitive_idempotents(A: EndAlgebra, ext_bound: int = 4):
    """Complete orthogonal primitive idempotent system of the End algebra.

    Returns the idempotents as endomorphisms (over the splitting field) by
    delegating to the decomposition driver; A.splitting_field records the
    field used.
    """
    dec = decompose_bundle(A.bundle, ext_bound=ext_bound)
    A.splitting_field = dec.field
    return [s.projection for s in dec.summands]


def cohomology_dims(M: PresentedModule, j: int):
    """(h0, h1) of the sheaf of M twisted by j, by Riemann-Roch at genus 1.

    h0 is the dimension of the degree-j piece; h1 follows from the Euler
    characteristic degree + 3 * rank * j.
    """
    h0 = M.piece_dim(j)
    rank, degree = M.rank_and_degree()
    h1 = h0 - (degree + 3 * rank * j)
    if h1 < 0:
        raise ArithmeticError(
            f"negative h1 = {h1}; module is not the section module "
            f"of a locally free sheaf")
    return h0, h1
