"""Normal forms decide equality in B_n; commutators of permutation braids may or may not lift."""

import itertools

from scpp.braid_scpp import scpp_permutation_braids
from scpp.braids import braid_equal, commutator, lift_permutation, parse_braid, rgnf
from scpp.permutations import Permutation

b = parse_braid("1 2 -1 -2", 3)
print("[s1, s2] =", b, "->", rgnf(b))

left, right = parse_braid("1 2 1 -2", 3), parse_braid("2 1", 3)
print(left, "==", right, ":", braid_equal(left, right))

canon = [lift_permutation(Permutation(p)).canonical_word for p in itertools.permutations((1, 2, 3))]
hits = 0
for d1, d2 in itertools.product(canon, repeat=2):
    cand = scpp_permutation_braids(commutator(d1, d2))
    hits += cand is not None
    if cand is None:
        print("not recovered:", f"[{d1}, {d2}]")
print(f"{hits}/36 commutators of permutation braids are recovered by lifting")
