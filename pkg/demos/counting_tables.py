"""Exact counting sequences and the identities that tie them together.

Run with:  python3 demos/counting_tables.py

Prints the three headline sequences, evaluates the transversal sequence
both symbolically and at a rational weight, and cross-checks the closed
identities relating the excursion counts to the walk models.
"""

from fractions import Fraction

from tandemwalks import (
    b_sequence,
    e_sequence,
    omega_counts,
    series_relation_check,
    t_sequence,
    weighted_count,
    ModelSpec,
)

N = 10

print("plane posets by edges      e_n =", " ".join(str(x) for x in e_sequence(N)))
print("plane posets by vertices   b_n =", " ".join(str(x) for x in b_sequence(N)))
print("transversal, v = 0         t_n =", " ".join(str(x) for x in t_sequence(N - 1)))
print("transversal, v = 1         t_n =", " ".join(str(x) for x in t_sequence(N - 1, v=1)))

print()
print("transversal sequence in the quadrangle weight v:")
for n, p in enumerate(t_sequence(7, v=None), 1):
    print(f"  t_{n}(v) = {p.render()}")
half = t_sequence(7, v=Fraction(1, 2))
print("  at v = 1/2:", ", ".join(str(x) for x in half))

print()
print("the poset-by-vertices count is a binomial-weighted excursion count:")
spec = ModelSpec("binomial")
direct = [weighted_count(spec, n + 1) for n in range(1, 9)]
print("  weighted walks :", direct)
print("  b_sequence     :", b_sequence(8))
assert direct == b_sequence(8)

print()
print("generating-tree totals reproduce the same numbers:")
table = omega_counts(8)
totals = [sum(level.values()) for level in table]
print("  level totals   :", totals)
assert totals == b_sequence(8)
slice_k1 = [sum(c for (h, k), c in level.items() if k == 1) for level in table]
print("  k = 1 labels   :", slice_k1, " (previous totals reappear)")
assert slice_k1[1:] == totals[:-1]

print()
r = series_relation_check(12)
print(f"series identities hold through order {r['N']}:"
      f" q-identity to {r['q_identity_checked']},"
      f" shift identity to {r['shift_identity_checked']}")
assert r["ok"]
