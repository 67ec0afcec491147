#!/usr/bin/env python3
"""The characteristic map, its kernel, and image series that factor."""

from schubert_kit import (
    GF,
    QQ,
    WeightRing,
    derived_realization,
    rank_two,
)

g = rank_two(2, 3)
model = WeightRing(g, QQ)

print("== Degree-2 values of the characteristic map ==")
for i in (1, 2):
    print(f"  dual generator {i} maps to:", model.characteristic_map(model.coroot_dual(i)))
    print(f"  simple root {i} maps to:   ", model.characteristic_map(model.root(i)))

print()
print("== Divided differences commute with the map ==")
f = model.gen(1) * model.gen(1) * model.gen(2)
lhs = model.characteristic_map(model.divided_difference(1, f))
from schubert_kit import nil_a

rhs = nil_a(1, model.characteristic_map(f))
print("  polynomial side:", lhs)
print("  Schubert side:  ", rhs)

print()
print("== The kernel, degree by degree ==")
report = model.s_poincare(12)
print("degree  dim kernel  dim image")
for deg, dj, ds in report.per_degree:
    print(f"{deg:6d}  {dj:10d}  {ds:9d}")
print("image series:", report.series)
print("the image series times (1-t^2)^rank factors with half-degrees",
      report.factor_degrees)
print("(one quadratic relation cuts out the whole kernel over Q)")

print()
print("== Positive characteristic: the image becomes finite ==")
g22 = rank_two(2, 2)
modp = WeightRing(g22, GF(3), derived_realization(g22))
report = modp.s_poincare(16)
print("A(2,2) over F_3 on the coroot-span torus:")
print("image dims:", [row[2] for row in report.per_degree])
print("factor half-degrees:", report.factor_degrees,
      "-> as many factors as the torus rank", modp.nvars)

print()
print("== Total Steenrod operation ==")
m2 = WeightRing(g, GF(2))
t = m2.gen(1)
print("P(t)    =", m2.total_steenrod(t))
print("P(t^2)  =", m2.total_steenrod(t * t))
print("commutation with the divided difference holds:",
      m2.steenrod_commutation_check(1, t * t * m2.gen(2)))
