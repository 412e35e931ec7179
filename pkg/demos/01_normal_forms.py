"""
Left normal forms in the three families of structures.

Run: python demos/01_normal_forms.py
"""

from garside import make_braid, make_cyclic_amalgam, parse_group_spec, parse_word, power, word_length

b3 = make_braid(3)
print("braid:3, N =", b3.norm_delta)
for word in ["s1 s2 s1 s2", "s1^-1", "s1^-1 s2", "s2 s1 s2 s1 s2 s1"]:
    g = parse_word(b3, word)
    print(f"  {word:22s} -> {g}   inf={g.inf} sup={g.sup} |g|={word_length(g)}")

# σ1σ2σ1 and σ2σ1σ2 are both Δ; the inverse of a positive word has inf < 0
D = parse_word(b3, "s1 s2 s1")
assert D == parse_word(b3, "s2 s1 s2") == b3.delta_power(1)
print("  Δ^-1 =", D.inverse())

c3 = make_cyclic_amalgam(3)
print("cyclic:3 = <x, y | x^3 = y^3>, Δ = x^3")
x2 = parse_word(c3, "x^2")
for k in range(1, 7):
    print(f"  (x^2)^{k} = {power(x2, k)}")

p = parse_group_spec("product(cyclic:2,cyclic:2)")
g = parse_word(p, "(x^-1, y)")
print("product(cyclic:2,cyclic:2), components are written (left, right)")
print("  (x^-1, y) ->", g, " inf/sup =", g.inf, g.sup)
print("  round trip:", parse_word(p, str(g)) == g)
