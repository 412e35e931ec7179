"""
Exact translation numbers and how inf_s(g^n) / n approaches t_inf(g).

Run: python demos/03_translation_numbers.py
"""

from fractions import Fraction

from garside import (
    inf_s,
    is_conjugate_to_inf_straight,
    make_cyclic_amalgam,
    parse_group_spec,
    parse_word,
    power,
    sup_s,
    t_inf,
    t_inf_by_detection,
    t_len,
    t_sup,
)
from garside.translation import detect_denominator, format_rational

# x^(N-1) sits as high as possible below inf_s + 1
for N in range(2, 6):
    g = parse_word(make_cyclic_amalgam(N), f"x^{N - 1}")
    infs = [power(g, k).inf for k in range(1, 2 * N + 1)]
    print(f"cyclic:{N}  g = x^{N - 1}  inf(g^k) = {infs}  t_inf = {format_rational(t_inf(g))}")
    assert t_inf(g) == inf_s(g) + 1 - Fraction(1, N)

p = parse_group_spec("product(cyclic:2,cyclic:2)")
g = parse_word(p, "(x^-1, y)")
print("\n(x^-1, y) in product(cyclic:2,cyclic:2)")
for n in range(1, 9):
    gn = power(g, n)
    print(f"  n={n}  inf_s={inf_s(gn):3d}  sup_s={sup_s(gn):3d}")
print("  t_inf, t_sup, t_len =", *(format_rational(f(g)) for f in (t_inf, t_sup, t_len)))
q, val = detect_denominator(g)
print(f"  detected at q={q}: inf_s(g^q)={val}, so t_inf = {format_rational(t_inf_by_detection(g))}")
print("  conjugate to an inf-straight element:", is_conjugate_to_inf_straight(g))
print("  ... but g^2 is:", is_conjugate_to_inf_straight(power(g, 2)))
