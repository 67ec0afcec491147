#!/usr/bin/env python3
"""Schubert classes, the annihilation operators, and the coproduct."""

from schubert_kit import (
    ZZ,
    SchubertVector,
    from_word,
    nil_a,
    nil_aw,
    parabolic_basis,
    peterson_coproduct,
    rank_two,
)

g = rank_two(2, 2)

print("== The operators act by shortening words ==")
v = SchubertVector.basis(ZZ, from_word(g, (2, 1)))
print("class:", v)
print("operator 1:", nil_a(1, v), "   (the word ends in 1, so it drops)")
print("operator 2:", nil_a(2, v), "          (no descent, so zero)")

print()
print("== Square zero and the braid relations ==")
g11 = rank_two(1, 1)
top = SchubertVector.basis(ZZ, from_word(g11, (1, 2, 1)))
print("A_1 A_1 kills everything:", nil_a(1, nil_a(1, top)))
print("composites along both reduced words of the top element agree:")
print("  A_{121}:", nil_aw((1, 2, 1), top), "  A_{212}:", nil_aw((2, 1, 2), top))

print()
print("== The coproduct enumerates length-additive factorizations ==")
w = from_word(g, (1, 2, 1))
for (u, x), c in peterson_coproduct(w).items():
    print(f"  {u.word or 'e'} (x) {x.word or 'e'}   coefficient {c}")
print("note the middle factors: the alternation lives in the left slot")

print()
print("== Partial flag varieties are operator kernels ==")
reps = parabolic_basis(g, (2,), 4)
print("basis classes killed by operator 2:", [w.word or "e" for w in reps])
for w in reps:
    assert nil_a(2, SchubertVector.basis(ZZ, w)).is_zero()
print("verified: operator 2 annihilates each one")
