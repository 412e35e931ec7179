"""
Stable super summit sets and powers whose summit elements are
periodically geodesic.

Run: python demos/04_stable_sets_and_geodesic_powers.py
"""

from garside import make_braid, make_cyclic_amalgam, parse_group_spec, parse_word, power, super_summit_set
from garside.stable import (
    certify_periodically_geodesic,
    find_geodesic_failure,
    geodesic_power,
    stable_sss,
    stable_sss_by_filter,
)

# σ1σ2σ3 has (σ1σ2σ3)^4 = Δ^2; half of its summit conjugates stop being
# summit elements once squared
b4 = make_braid(4)
g = parse_word(b4, "s1 s2 s3")
sss, stab = super_summit_set(g), stable_sss(g)
print(f"g = {g}: |[g]^S| = {len(sss)}, |[g]^St| = {len(stab)}")
for h in sss.sorted_members():
    h2 = power(h, 2)
    tag = "stable" if h in stab else "not stable"
    print(f"  {str(h):28s} h^2 = {str(h2):32s} {tag}")
assert stab.members == stable_sss_by_filter(g).members

p = parse_group_spec("product(cyclic:2,cyclic:2)")
g = parse_word(p, "(x^-1, y)")
report = geodesic_power(g)
print("\ngeodesic_power((x^-1, y)) =", report.to_json())
for h in super_summit_set(power(g, report.n)).sorted_members():
    print("  member of [g^n]^S:", h, "->", certify_periodically_geodesic(h).value)

x2 = parse_word(make_cyclic_amalgam(3), "x^2")
print("\nx^2 in cyclic:3:", geodesic_power(x2).to_json())
print("  status:", certify_periodically_geodesic(x2).value,
      "- first n with |g^n| != n|g|:", find_geodesic_failure(x2, 9))
