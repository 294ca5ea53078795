"""The Frobenius oracle on supersingular curves.

The Fermat cubic is supersingular exactly when the characteristic is 2
mod 3 (Hasse invariant zero).  There the tight closure of a primary ideal
coincides with its Frobenius closure, so raising to p^e-th powers gives an
independent, purely computational route to membership: f0 is in the
closure exactly when f0^(p^e) falls into the ideal of the p^e-th powers
for some e.  The search is bounded, so a member can come back
"inconclusive" when its witness exponent is large; a non-member can never
produce a witness.
"""

from tcone import (CubicCurve, IdealData, frobenius_member, make_field,
                   parse_polynomial, tight_closure_member)

for p in (2, 5, 7):
    field = make_field(p)
    curve = CubicCurve(parse_polynomial("x^3 + y^3 + z^3", field), field)
    print(f"char {p}: hasse = {curve.hasse!r}, "
          f"supersingular = {curve.supersingular}")
print()

field = make_field(2)
curve = CubicCurve(parse_polynomial("x^3 + y^3 + z^3", field), field)

for gens, cand in [(("x^2", "y^2", "z^2"), "x*y*z"),
                   (("x^2", "y^2", "x^2"), "x*y*z")]:
    ideal = IdealData(curve, [parse_polynomial(t, field) for t in gens])
    candidate = parse_polynomial(cand, field)
    cert = tight_closure_member(ideal, candidate)
    frob = frobenius_member(ideal, candidate, 4)
    print(f"ideal {gens}, candidate {cand} over F_2:")
    print(f"  criterion verdict: {cert.verdict}")
    print(f"  frobenius search:  {frob}")
    print()
