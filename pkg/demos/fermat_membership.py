"""Membership of x*y*z in the tight closure of (x^2, y^2, z^2).

The cone is R = F_5[x,y,z]/(x^3 + y^3 + z^3).  The monomial x*y*z is not
in the ideal, but the syzygy sheaf of the three generators at total degree
3 is indecomposable of degree zero, so nothing obstructs: the candidate
lies in the tight closure (equivalently, in the plus closure).
"""

from tcone import (CubicCurve, IdealData, decompose_bundle, make_field,
                   parse_polynomial, syzygy_bundle, tight_closure_member)

field = make_field(5)
curve = CubicCurve(parse_polynomial("x^3 + y^3 + z^3", field), field)
ideal = IdealData(curve, [parse_polynomial(t, field)
                          for t in ("x^2", "y^2", "z^2")])
candidate = parse_polynomial("x*y*z", field)

print("cone: F_5[x,y,z]/(x^3 + y^3 + z^3)")
print("ideal: (x^2, y^2, z^2), candidate: x*y*z")
print()

bundle = syzygy_bundle(ideal, candidate.degree())
print(f"syzygy sheaf at total degree 3: rank {bundle.rank}, "
      f"degree {bundle.degree}")

decomposition = decompose_bundle(bundle)
print(f"indecomposable summands: {decomposition.shape()}")
print()

certificate = tight_closure_member(ideal, candidate)
print(f"in the ideal itself: {certificate.in_ideal}")
print(f"verdict: {certificate.verdict}")
for s in certificate.summands:
    print(f"  summand rank {s.rank}, degree {s.degree}: "
          f"class component vanishes = {s.class_vanishes}")
print()
print("no summand has negative degree, so the nonzero class cannot")
print("obstruct: x*y*z sits in the tight closure without being in the ideal")
