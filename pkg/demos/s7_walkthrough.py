"""Walk one even permutation of S_7 through the commutator construction."""

from scpp.cejtin_rivin import scpp_solve_detailed
from scpp.permutations import GenWord, format_cycles_human, format_word, word_to_permutation

word = GenWord(7, (6, 4, 1, 2))
sol = scpp_solve_detailed(word)

print("input word      ", format_word(word))
print("cycles          ", format_cycles_human(sol.decomposition))
print("first factor    ", format_cycles_human(sol.c1))
print("second factor   ", format_cycles_human(sol.c2))
print("C1, C2, C3      ", sol.C1, sol.C2, sol.C3)
print("conjugator tau  ", format_cycles_human(sol.tau))
print("x               ", format_word(sol.x))
print("y               ", format_word(sol.y))

back = word_to_permutation(sol.commutator_word())
print("x y x^-1 y^-1 == input:", back == word_to_permutation(word))
for step in sol.trace:
    print("  branch", step["branch"], "at depth", step["depth"])
