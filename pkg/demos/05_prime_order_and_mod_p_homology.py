#!/usr/bin/env python3
"""Prime divisibility of the gcd sequence and mod-p homology structure."""

from schubert_kit import ranktwo

print("== The least k with p | g_k, three ways ==")
for a, b, p in ((2, 2, 5), (2, 3, 3), (1, 5, 2), (3, 3, 5)):
    closed = ranktwo.prime_order_closed(a, b, p)
    scan = ranktwo.prime_order_scan(a, b, p, 100)
    line = (f"(a,b,p) = ({a},{b},{p}): closed form k = {closed.k} "
            f"[{closed.case_tag}], scan k = {scan.k}")
    if p != 2:
        line += f", matrix method k = {ranktwo.matrix_order_method(a, b, p)}"
    print(line)
    if closed.detail is not None:
        d = closed.detail
        print(f"    root of x^2 - {d.trace}x + 1: {d.root}, order {d.order}")

print()
print("== Divisibility is periodic: p | g_n exactly when k | n ==")
t = ranktwo.cd_sequences(2, 3, 18)
hits = [n for n in range(1, 19) if t.g[n] % 3 == 0]
print("(2,3), p = 3: divisible indices up to 18:", hits)

print()
print("== The mod-p survivors form a polynomial-dual Hopf algebra ==")
series = ranktwo.hopf_afp_series(1, 5, 2, 12)
print("(1,5), p = 2: image algebra series:", series)
print("dual is polynomial on one degree-6 class:",
      ranktwo.dual_polynomial_check(1, 5, 2, 10))
print("homology matches the exterior-times-polynomial model to degree 40:",
      ranktwo.hk_modp_crosscheck(1, 5, 2, 40))

print()
print("== Valuations along multiples of k, and an honest boundary ==")
print("(2,3), p = 3, s <= 30:", ranktwo.bockstein_valuation_check(2, 3, 3, 30))
print("(1,7), p = 2 is the smallest case where the clean valuation law fails:")
t17 = ranktwo.cd_sequences(1, 7, 6)
print(f"    g_3 = {t17.g[3]}, g_6 = {t17.g[6]}: "
      "v_2(g_6) = 3, but v_2(2) + v_2(g_3) = 2")
print("    (this happens for p = 2 when ab is odd with v_2(ab-1) = 1;")
print("     every odd prime tested obeys the law)")
