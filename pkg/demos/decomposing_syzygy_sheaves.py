"""How generator redundancy changes the syzygy sheaf, not the ideal.

Three generator lists over the Fermat cubic / F_5:

* (x^2, y^2, z^2): the twist-3 syzygy sheaf is indecomposable (rank 2,
  degree 0), with a one-dimensional space of global sections spanned by
  the Euler-type syzygy (x, y, z).
* (x^2, y^2, x^2): same ideal as (x^2, y^2), but the sheaf splits as a sum
  of line bundles of degrees +3 and -3; the negative summand is what
  blocks x*y*z from the closure.
* (x, y, z^3): same ideal as (x, y); the sheaf splits with summands of
  degrees +3 and 0.
"""

from tcone import (CubicCurve, IdealData, cohomology_dims, decompose_bundle,
                   end_algebra, make_field, parse_polynomial, syzygy_bundle)

field = make_field(5)
curve = CubicCurve(parse_polynomial("x^3 + y^3 + z^3", field), field)


def show(gens, m):
    ideal = IdealData(curve, [parse_polynomial(t, field) for t in gens])
    bundle = syzygy_bundle(ideal, m)
    algebra = end_algebra(bundle)
    decomposition = decompose_bundle(bundle)
    print(f"generators {gens}, twist {m}:")
    print(f"  sheaf rank {bundle.rank}, degree {bundle.degree}")
    print(f"  endomorphism algebra dimension {algebra.dim} "
          f"(radical dimension {algebra.radical_rows.shape[0]})")
    for s in decomposition:
        h0, h1 = cohomology_dims(s.module, 0)
        print(f"  summand: rank {s.rank}, degree {s.degree}, "
              f"h0 = {h0}, h1 = {h1}")
    print()


show(("x^2", "y^2", "z^2"), 3)
show(("x^2", "y^2", "x^2"), 3)
show(("x", "y", "z^3"), 3)
