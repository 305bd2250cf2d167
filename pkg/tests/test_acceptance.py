"""Acceptance checks, one line per criterion.

Run under pytest for the summary section, or directly with
``python tests/test_acceptance.py`` to print the lines alone.
"""

import functools
import itertools
import math
import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE_RESULTS, acceptance_lines  # noqa: E402
from oracles import alternating_group, burau, eval_cycles, eval_word, is_full_cycle, random_braid_letters  # noqa: E402
from scpp.bench import fit_slope, scaling_in_k, scaling_in_n  # noqa: E402
from scpp.braid_scpp import (  # noqa: E402
    lifted_commutator,
    probabilistic_scpp_search,
    pure_braid_factorization,
    scpp_permutation_braids,
    scramble,
    validate_trace,
)
from scpp.braids import (  # noqa: E402
    MOVE_KINDS,
    BraidWord,
    apply_move,
    available_moves,
    braid_equal,
    commutator,
    garside_word,
    lift_permutation,
    parse_braid,
    project,
    rgnf,
)
from scpp.cejtin_rivin import scpp_solve_detailed  # noqa: E402
from scpp.permutations import (  # noqa: E402
    GenWord,
    Permutation,
    compose,
    cycle_decomposition,
    cycles_to_genword,
    format_cycles_human,
)
from scpp.rewriting import completed_sn_system, irreducible_words, knuth_bendix_complete, reduce, sn_presentation  # noqa: E402
from scpp.turing import adder_machine, run  # noqa: E402

SEED = 20240917


def commutator_images(n, x, y, x_inv, y_inv):
    return eval_word(n, x.letters + y.letters + x_inv.letters + y_inv.letters)


# -- 1 ------------------------------------------------------------------------


def exhaustive_solve():
    start = time.perf_counter()
    total = good = 0
    for n in (1, 3, 4, 5, 6, 7):
        for images in alternating_group(n):
            total += 1
            sol = scpp_solve_detailed(cycles_to_genword(cycle_decomposition(Permutation(images))), verify=False)
            ok = commutator_images(n, sol.x, sol.y, sol.x_inverse, sol.y_inverse) == images
            ok &= is_full_cycle(eval_cycles(n, list(sol.c1.cycles)))
            ok &= is_full_cycle(eval_cycles(n, list(sol.c2.cycles)))
            good += ok
    return good, total, time.perf_counter() - start


# -- 3 ------------------------------------------------------------------------


def relation_variant(rng, n, w):
    """Apply one defining relation of S_n somewhere in ``w``."""
    w = list(w)
    options = ["insert"]
    braids = [i for i in range(len(w) - 2) if w[i] == w[i + 2] and abs(w[i] - w[i + 1]) == 1]
    swaps = [i for i in range(len(w) - 1) if abs(w[i] - w[i + 1]) >= 2]
    options += ["braid"] * bool(braids) + ["swap"] * bool(swaps)
    kind = rng.choice(options)
    if kind == "insert":
        i, g = rng.randint(0, len(w)), rng.randint(1, n - 1)
        w[i:i] = [g, g]
    elif kind == "braid":
        i = rng.choice(braids)
        w[i:i + 3] = [w[i + 1], w[i], w[i + 1]]
    else:
        i = rng.choice(swaps)
        w[i], w[i + 1] = w[i + 1], w[i]
    return tuple(w)


# -- 5 ------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def d3_table():
    canon = [lift_permutation(Permutation(p)).canonical_word for p in itertools.permutations((1, 2, 3))]
    rows = []
    for d1, d2 in itertools.product(canon, repeat=2):
        b = commutator(d1, d2)
        direct = lifted_commutator(b).assembled()
        # definition route: Burau is faithful on three strands
        in_k = burau(3, direct.letters) == burau(3, b.letters)
        rows.append((b, in_k, scpp_permutation_braids(b)))
    return rows


# -- 9 ------------------------------------------------------------------------


OBFUSCATION_BASE = parse_braid("1 2 -1 -2", 3)


@functools.lru_cache(maxsize=None)
def obfuscated_runs():
    runs = []
    for seed in range(100):
        rng = random.Random(seed)
        b = scramble(OBFUSCATION_BASE, rng.randint(1, 5), rng)
        runs.append((b, probabilistic_scpp_search(b, 8, seed)))
    return runs


# -- checks -------------------------------------------------------------------
# each returns (passed, detail)


def c1_exhaustive():
    good, total, secs = exhaustive_solve()
    return good == total == 1 + 3 + 12 + 60 + 360 + 2520 and secs < 60, f"{good}/{total} in {secs:.1f}s"


def c2_intermediates():
    sol = scpp_solve_detailed(GenWord(7, (6, 4, 1, 2)))
    got = {
        "p1": format_cycles_human(sol.c1),
        "tau": format_cycles_human(sol.tau),
        "C1^-1": str(sol.C3),
    }
    want = {"p1": "(1 2 3)(1 2 3)(4 6 5 7)(3 7)", "tau": "(1 2)(4 5)", "C1^-1": "(2 7 5 6 4 3 1)"}
    c1 = Permutation(eval_cycles(7, [sol.C1.entries]))
    c3 = Permutation(eval_cycles(7, [sol.C3.entries]))
    inverse_ok = compose(c1, c3) == Permutation.identity(7)
    bad = [k for k in want if got[k] != want[k]]
    return not bad and inverse_ok, "all match" if not bad else f"mismatch {bad}: {got}"


def c2_commutator():
    sol = scpp_solve_detailed(GenWord(7, (6, 4, 1, 2)))
    images = commutator_images(7, sol.x, sol.y, sol.x_inverse, sol.y_inverse)
    return images == eval_word(7, (6, 4, 1, 2)), f"[x, y] = {images}"


def c3_completion():
    counts = []
    for n in (2, 3, 4, 5):
        alphabet, rules = sn_presentation(n)
        system = knuth_bendix_complete(alphabet, rules)
        counts.append((len(irreducible_words(system)), math.factorial(n)))
    return all(a == b for a, b in counts), "irreducibles " + ", ".join(f"{a}/{b}" for a, b in counts)


def c3_reduce():
    rng = random.Random(SEED)
    bad = 0
    for _ in range(10_000):
        n = rng.randint(2, 5)
        w = tuple(rng.randint(1, n - 1) for _ in range(rng.randint(0, 20)))
        system = completed_sn_system(n)
        r = reduce(system, w)
        if reduce(system, r) != r or reduce(system, relation_variant(rng, n, w)) != r:
            bad += 1
        elif eval_word(n, r) != eval_word(n, w):
            bad += 1
    return bad == 0, f"{10_000 - bad}/10000"


def c4_example():
    nf = rgnf(parse_braid("1 2 -1 -2", 3))
    factors = [f.canonical_word.letters for f in nf.factors]
    return factors == [(1, 2), (2,)] and nf.omega_power == -1, str(nf)


def c4_invariance():
    rng = random.Random(SEED)
    good = 0
    for trial in range(1000):
        n = 3 if trial % 2 else 4
        b = BraidWord(n, random_braid_letters(rng, n, rng.randint(0, 30)))
        moves = available_moves(b, max_length=32)
        kind = rng.choice([k for k in MOVE_KINDS if moves[k]])
        good += rgnf(apply_move(b, rng.choice(moves[kind]))) == rgnf(b)
    return good == 1000, f"{good}/1000"


def c5_characterization():
    rows = d3_table()
    agree = sum((cand is not None) == in_k for _, in_k, cand in rows)
    in_k = sum(k for _, k, _ in rows)
    return agree == 36, f"{agree}/36 agree, |K| = {in_k}"


def c5_soundness():
    cands = [(b, c) for b, _, c in d3_table() if c is not None]
    sound = sum(braid_equal(c.assembled(), b) for b, c in cands)
    return sound == len(cands), f"{sound}/{len(cands)} braid-equal"


def c5_example_membership():
    b = commutator(parse_braid("2 1", 3), garside_word(3))
    cand = scpp_permutation_braids(b)
    ok = cand is not None and braid_equal(cand.assembled(), b)
    return ok, f"candidate {cand}" if cand else "no candidate"


def c5_example_literal():
    b = commutator(parse_braid("2 1", 3), garside_word(3))
    cand = scpp_permutation_braids(b)
    want = ((2, 1), garside_word(3).letters)
    got = None if cand is None else (cand.x.letters, cand.y.letters)
    return got == want, f"expected {want}, got {got}"


def c6_factorization():
    rng = random.Random(SEED)
    good = 0
    for _ in range(200):
        k = rng.randint(1, 3)
        b = BraidWord(4, ())
        for _ in range(k):
            budget = 20 // k
            lx = rng.randint(0, budget)
            x = BraidWord(4, random_braid_letters(rng, 4, lx))
            y = BraidWord(4, random_braid_letters(rng, 4, rng.randint(0, budget - lx)))
            b = b + commutator(x, y)
        assert len(b) <= 40
        p, c = pure_braid_factorization(b)
        whole = p + c.assembled()
        good += (eval_word(4, project(p).letters) == (1, 2, 3, 4)
                 and braid_equal(whole, b)
                 and burau(4, whole.letters) == burau(4, b.letters))
    return good == 200, f"{good}/200"


def c7_scaling():
    start = time.perf_counter()
    rows_n = scaling_in_n([8, 16, 32, 64, 128, 256])
    slope_n = fit_slope([r.n for r in rows_n], [r.ops for r in rows_n])
    rows_k = scaling_in_k([100, 1000, 10_000], n=16, seed=SEED)
    slope_k = fit_slope([r.length for r in rows_k], [r.ops for r in rows_k])
    secs = time.perf_counter() - start
    ok = slope_n <= 2.5 and slope_k <= 1.3 and secs < 300
    return ok, f"slope in n {slope_n:.3f}, slope in k {slope_k:.3f}, {secs:.1f}s"


def c8_adder():
    results = []
    for a, b in itertools.product("01", repeat=2):
        r = run(adder_machine(), a + b)
        results.append((r.output(start=3), r.steps))
    ok = [o for o, _ in results] == ["0", "1", "1", "10"] and max(s for _, s in results) <= 5
    return ok, ", ".join(f"{o} in {s}" for o, s in results)


def c9_determinism():
    inputs = [b for b, _ in obfuscated_runs()[:10]] + [parse_braid("2 2 1 -2 -1 -2", 3)]
    same = sum(probabilistic_scpp_search(b, 8, s).to_json() == probabilistic_scpp_search(b, 8, s).to_json()
               for s, b in enumerate(inputs))
    return same == len(inputs), f"{same}/{len(inputs)} byte-identical"


def c9_soundness():
    runs = list(obfuscated_runs())
    hard = parse_braid("2 2 1 -2 -1 -2", 3)
    runs += [(hard, probabilistic_scpp_search(hard, 6, s)) for s in range(20)]
    wins = [(b, t) for b, t in runs if t.succeeded]
    sound = sum(braid_equal(t.rounds[-1].word, b) and validate_trace(b, t) for b, t in wins)
    return sound == len(wins), f"{sound}/{len(wins)} successes braid-equal"


def c9_success_rate():
    wins = sum(t.succeeded for _, t in obfuscated_runs())
    return wins >= 50, f"{wins}/100 seeds"


CHECKS = {
    1: {"exhaustive": c1_exhaustive},
    2: {"intermediates": c2_intermediates, "commutator": c2_commutator},
    3: {"completion": c3_completion, "reduce": c3_reduce},
    4: {"example": c4_example, "invariance": c4_invariance},
    5: {"characterization": c5_characterization, "soundness": c5_soundness,
        "example-membership": c5_example_membership, "example-literal": c5_example_literal},
    6: {"factorization": c6_factorization},
    7: {"scaling": c7_scaling},
    8: {"adder": c8_adder},
    9: {"determinism": c9_determinism, "soundness": c9_soundness, "success-rate": c9_success_rate},
}


@pytest.mark.parametrize("crit, name", [(c, n) for c, checks in CHECKS.items() for n in checks],
                         ids=lambda v: str(v))
def test_criterion(crit, name, acceptance_log):
    passed, detail = CHECKS[crit][name]()
    acceptance_log.setdefault(crit, {})[name] = (passed, detail)
    assert passed, detail


def main():
    for crit, checks in CHECKS.items():
        for name, check in checks.items():
            ACCEPTANCE_RESULTS.setdefault(crit, {})[name] = check()
    lines = acceptance_lines(ACCEPTANCE_RESULTS)
    print("\n".join(lines))
    return 0 if all(": PASS" in line for line in lines) else 1


if __name__ == "__main__":
    sys.exit(main())
