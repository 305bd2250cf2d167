"""Seeded random rewriting towards a literal commutator word."""

import random

from scpp.braid_scpp import probabilistic_scpp_search, scramble
from scpp.braids import parse_braid

base = parse_braid("1 2 -1 -2", 3)
disguised = scramble(base, 5, random.Random(4))
print("start:", disguised)
trace = probabilistic_scpp_search(disguised, M=8, seed=4)
print(trace.to_lines(), end="")

hard = parse_braid("2 2 1 -2 -1 -2", 3)
wins = sum(probabilistic_scpp_search(hard, 6, seed).succeeded for seed in range(20))
print(f"{hard}: {wins}/20 seeds reach commutator shape")
