#!/usr/bin/env python3
"""Walk through the base layer: Cartan matrices, realizations, Weyl groups.

Everything is exact integer arithmetic; run this file to see the printed
narrative.
"""

from schubert_kit import (
    bruhat_leq,
    coxeter_exponent,
    enumerate_by_length,
    from_word,
    is_finite_type,
    longest_element,
    min_coset_reps,
    parse_gcm,
    rank_two,
    spherical_poset,
    standard_realization,
    validate_gcm,
)

print("== Validating generalized Cartan matrices ==")
g = parse_gcm("2,-2;-2,2")
print("accepted:", g)
try:
    validate_gcm([[2, -1], [0, 2]])
except Exception as exc:
    print("rejected:", exc)

print()
print("== Pairwise reflection orders and finite type ==")
for a, b in ((0, 0), (1, 1), (2, 1), (1, 3), (2, 2)):
    gg = rank_two(a, b)
    m = coxeter_exponent(gg, 1, 2)
    print(f"A({a},{b}): order of r1 r2 = {m if m else 'infinite'}, "
          f"finite group: {is_finite_type(gg, (1, 2))}")

print()
print("== The poset of spherical subsets ==")
affine = validate_gcm([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]])
poset = spherical_poset(affine)
print("rank-3 affine matrix; spherical subsets:", poset.subsets)
print("(the full set is missing: that parabolic is infinite)")

print()
print("== Integral realizations ==")
real = standard_realization(g)
print(f"A(2,2) is singular, so the torus has rank {real.torus_rank} = 2*2 - 1")
print("root functionals:", real.root_functionals)
print("coroots:         ", real.coroots)

print()
print("== Enumerating the Weyl group by length ==")
g11 = rank_two(1, 1)
levels = enumerate_by_length(g11, 4)
print("A(1,1) level sizes:", [len(l) for l in levels], "(the group has 6 elements)")
levels = enumerate_by_length(g, 6)
print("A(2,2) level sizes:", [len(l) for l in levels], "(two per length, forever)")

print()
print("== Canonical words and the Bruhat order ==")
w = from_word(g11, (2, 1, 2))
print("product r2 r1 r2 normalizes to the lex-least word:", w.word)
u = from_word(g, (1, 2))
v = from_word(g, (1, 2, 1))
print(f"is {u.word} below {v.word}?", bruhat_leq(u, v))

print()
print("== Coset representatives and longest elements ==")
reps = min_coset_reps(g, (1,), 4)
print("A(2,2), subset {1}: minimal representatives:",
      [w.word or "e" for w in reps])
print("A(1,1) longest element:", longest_element(g11, (1, 2)).word)
