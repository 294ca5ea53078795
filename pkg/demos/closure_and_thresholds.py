"""Computing full tight closures and the slope thresholds behind them.

For a primary ideal with generator degrees d_1..d_n, set
k = (d_1 + ... + d_n)/(n - 1).  When the dual syzygy sheaf at twist zero
is semistable, the tight closure is exactly the ideal plus everything of
degree >= k.  The slopes mu_min and mu_max bound the interesting degree
range in general: below mu_min/3 nothing new appears, from mu_max/3 on
everything is in, and the window in between is decided by the summand
criterion degree by degree.
"""

from tcone import (CubicCurve, IdealData, format_polynomial, make_field,
                   parse_polynomial, slope_and_threshold,
                   tight_closure_ideal)

field = make_field(5)
curve = CubicCurve(parse_polynomial("x^3 + y^3 + z^3", field), field)


def show(gens):
    ideal = IdealData(curve, [parse_polynomial(t, field) for t in gens])
    report = slope_and_threshold(ideal)
    closure = tight_closure_ideal(ideal)
    print(f"ideal {gens}:")
    print(f"  mu_min = {report.mu_min}, mu_max = {report.mu_max}, "
          f"k = {report.k}, semistable = {report.semistable}")
    print("  tight closure generators: "
          + ", ".join(format_polynomial(g) for g in closure.generators))
    for row in closure.per_degree:
        print(f"    degree {row.degree}: {row.regime} regime, "
              f"ideal piece {row.dim_ideal} -> closure piece "
              f"{row.dim_closure}")
    print()


show(("x^2", "y^2", "z^2"))   # semistable: closure = ideal + R_{>=3}
show(("x", "y"))              # line-bundle case: closure = ideal + R_{>=2}
show(("x^2", "y^2", "x^2"))   # redundant generator: a criterion window opens
