"""Saddle-point constants, the D-finiteness obstruction, and growth fits.

Run with:  python3 demos/asymptotics_tour.py

For each counting model this prints the exact-closed-form constants of the
asymptotic template  c * gamma^n / n^alpha, runs the cyclotomic scan that
decides whether the exponent can belong to a D-finite series, and then
recovers gamma and alpha numerically from 150 computed terms as a sanity
check on both routes.
"""

from fractions import Fraction

from tandemwalks import (
    b_sequence,
    central_charge,
    e_sequence,
    growth_fit,
    non_dfinite_check,
    solve_constants,
    t_sequence,
)

MODELS = ("posets-edges", "posets-vertices", "transversal")

print(f"{'model':18s} {'z0':>12s} {'gamma':>12s} {'xi':>10s} {'alpha':>10s}  obstruction")
for model in MODELS:
    c = solve_constants(model)
    r = non_dfinite_check(model)
    if r["certified_non_dfinite"]:
        tag = "yes (no cyclotomic factor, alpha irrational)"
    elif r["has_cyclotomic_factor"]:
        tag = f"no (cyclotomic factor of order {r['witness_order']})"
    else:
        tag = "no (alpha is rational)"
    print(f"{model:18s} {c.z0:12.8f} {c.gamma:12.8f} {c.xi:10.8f} {c.alpha:10.6f}  {tag}")

print()
print("transversal constants move monotonically in the quadrangle weight v:")
for v in (0, Fraction(1, 2), 1, 2):
    c = solve_constants("transversal", v=v)
    print(f"  v = {str(v):4s} gamma = {c.gamma:10.6f}  xi = {c.xi:.8f}"
          f"  alpha = {c.alpha:.6f}  c = {central_charge(c.alpha):.6f}")

print()
print("the certificate fails for posets by vertices, on two counts at once:")
r = non_dfinite_check("posets-vertices")
print(f"  alpha = 6 is an integer (alpha_is_rational = {r['alpha_is_rational']})"
      f" and the angle polynomial carries a cyclotomic factor of order"
      f" {r['witness_order']}, so certified_non_dfinite = {r['certified_non_dfinite']}")

print()
print("numeric growth fits from 150 exact terms:")
for name, seq, model in (
    ("e_n", e_sequence(150), "posets-edges"),
    ("b_n", b_sequence(150), "posets-vertices"),
    ("t_n", t_sequence(150), "transversal"),
):
    gamma_hat, alpha_hat = growth_fit(seq)
    c = solve_constants(model)
    print(f"  {name}: gamma_hat = {gamma_hat:10.6f} (exact {c.gamma:10.6f})"
          f"   alpha_hat = {alpha_hat:.3f} (exact {c.alpha:.3f})")
