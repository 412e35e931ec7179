"""
Cycling, decycling and super summit sets.

Run: python demos/02_super_summit_sets.py
"""

from garside import (
    conjugate,
    cycling,
    decycling,
    make_braid,
    parse_word,
    summit_representative,
    super_summit_set,
)

b4 = make_braid(4)
g = conjugate(parse_word(b4, "s1 s2^-1 s3"), parse_word(b4, "s2 s3^-1 s1 s2"))
print("g =", g, f"(inf {g.inf}, sup {g.sup})")
print("cycling(g)   =", cycling(g))
print("decycling(g) =", decycling(g))

h, c = summit_representative(g)
print("summit representative h =", h, f"(inf {h.inf}, sup {h.sup})")
assert conjugate(g, c) == h

sss = super_summit_set(g, witness=True)
print(f"[g]^S has {len(sss)} members with inf_s={sss.inf_s}, sup_s={sss.sup_s}:")
for m in sss.sorted_members():
    print("  ", m, "   conjugator", sss.conjugators[m])

# A JSON document with canonically sorted members
print(sss.to_json(base_word="g"))
