#!/usr/bin/env python3
"""The rank-two tables: sequences, cup products, integral cohomology."""

from schubert_kit import ranktwo
from schubert_kit.ranktwo import DELTA, TAU

a, b = 2, 3
t = ranktwo.cd_sequences(a, b, 8)

print(f"== The sequences for (a, b) = ({a}, {b}) ==")
print("n:", list(range(9)))
print("c:", list(t.c))
print("d:", list(t.d))
print("g:", list(t.g))

print()
print("== Cup products, solved from the twisted Leibniz rule alone ==")
table = ranktwo.leibniz_cup_solver(a, b, 8)
for n in range(1, 5):
    p, q = table.constants(DELTA, 1, DELTA, n)
    print(f"delta * delta_{n} = {p} delta_{n+1} + {q} tau_{n+1}"
          f"    (closed form says d_{n+1} = {t.d[n+1]})")
for n in range(1, 3):
    p, q = table.constants(DELTA, 1, TAU, n)
    print(f"delta * tau_{n}   = {p} delta_{n+1} + {q} tau_{n+1}"
          f"    (closed form says 1, d_{n} = {t.d[n]})")

print()
print("== Generalized binomial coefficients (always integers) ==")
for n in range(5):
    row = [ranktwo.generalized_binomial_D(t, n, m) for m in range(5 - n + 3)]
    print(f"D({n}, m):", row)
print("with a = b = 2 these collapse to the classical binomials")

print()
print("== Integral cohomology of the group itself ==")
print("degree: group")
for deg, order in ranktwo.hk_integral(a, b, 6):
    group = "Z" if order == 0 else ("0" if order == 1 else f"Z/{order}")
    print(f"{deg:6d}: {group}")
print("cyclic orders are the gcd sequence g, each appearing twice")
