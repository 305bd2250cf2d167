"""Simple commutators in symmetric and braid groups.

``scpp_solve`` writes an even permutation, given as a word in adjacent
transpositions, as a commutator ``x y x⁻¹ y⁻¹``. The braid side adds the
right-greedy normal form, a commutator lift for permutation braids and a
seeded random rewrite search.
"""

from .braid_scpp import (
    CommutatorCandidate,
    SearchTrace,
    probabilistic_scpp_search,
    pure_braid_factorization,
    scpp_permutation_braids,
)
from .braids import (
    BraidWord,
    GreedyNormalForm,
    PermutationBraid,
    RSet,
    braid_equal,
    garside,
    garside_word,
    lift_permutation,
    meet,
    parse_braid,
    project,
    r_set,
    rgnf,
)
from .cejtin_rivin import scpp_solve, scpp_solve_detailed, two_ncycle_product
from .errors import (
    InvariantBreach,
    MalformedInputError,
    NonTerminationError,
    PromiseViolation,
    ScppError,
    StuckMachineError,
)
from .permutations import (
    CycleList,
    GenWord,
    NCycle,
    Permutation,
    compose,
    conjugator_of_ncycles,
    cycle_decomposition,
    cycles_to_genword,
    cycles_to_permutation,
    invert,
    parity,
    word_to_permutation,
)
from .rewriting import (
    OrderedAlphabet,
    RewriteSystem,
    Rule,
    canonical_form_sn,
    knuth_bendix_complete,
    reduce,
    shortlex_compare,
    sn_presentation,
)
from .turing import TuringMachine, adder_machine, run

__version__ = "0.1.0"
