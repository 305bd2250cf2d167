import itertools
import random

import pytest

from oracles import alternating_group, burau, eval_word, random_braid_letters
from scpp.braid_scpp import (
    CommutatorCandidate,
    commutator_suffix,
    lifted_commutator,
    probabilistic_scpp_search,
    pure_braid_factorization,
    scpp_permutation_braids,
    scramble,
    split_commutator,
    validate_trace,
)
from scpp.braids import (
    BraidWord,
    braid_equal,
    commutator,
    garside_word,
    lift_permutation,
    parse_braid,
    project,
    rgnf,
    rho,
)
from scpp.cejtin_rivin import scpp_solve_permutation
from scpp.errors import PromiseViolation
from scpp.permutations import Permutation


def canonicals(n):
    return [lift_permutation(Permutation(p)).canonical_word
            for p in itertools.permutations(range(1, n + 1))]


def commutators_of_canonicals(n):
    ds = canonicals(n)
    return [(d1, d2, commutator(d1, d2)) for d1, d2 in itertools.product(ds, repeat=2)]


def example_braid():
    # [σ2σ1, Ω] spelled out in B_3
    return parse_braid("2 1 D -1 -2 -D", 3)


class TestKMembership:
    def test_example_is_in_k(self):
        b = example_braid()
        cand = scpp_permutation_braids(b)
        assert cand is not None
        assert cand.x.letters == (2, 1)
        assert braid_equal(cand.assembled(), b)
        # the pair the braid was built from is a valid witness too
        assert braid_equal(commutator(BraidWord(3, (2, 1)), garside_word(3)), cand.assembled())

    def test_empty_word(self):
        cand = scpp_permutation_braids(BraidWord(3, ()))
        assert cand is not None
        assert braid_equal(cand.assembled(), BraidWord(3, ()))

    def test_nonzero_exponent_sum(self):
        with pytest.raises(PromiseViolation, match="exponent sum"):
            scpp_permutation_braids(parse_braid("1 1", 3))

    def test_d3_characterization(self):
        in_k = 0
        for d1, d2, b in commutators_of_canonicals(3):
            direct = lifted_commutator(b).assembled()
            # three strands: Burau equality decides braid equality
            expected = burau(3, direct.letters) == burau(3, b.letters)
            cand = scpp_permutation_braids(b)
            assert (cand is not None) == expected
            if cand is not None:
                in_k += 1
                assert burau(3, cand.assembled().letters) == burau(3, b.letters)
        assert 0 < in_k < 36

    def test_d4_non_members(self):
        rejected = 0
        for d1, d2, b in commutators_of_canonicals(4)[::7]:
            cand = scpp_permutation_braids(b)
            direct = lifted_commutator(b).assembled()
            if cand is None:
                rejected += 1
                assert rgnf(direct) != rgnf(b)
                assert not braid_equal(direct, b)
            else:
                assert burau(4, cand.assembled().letters) == burau(4, b.letters)
        assert rejected > 0

    def test_surjective_onto_alternating(self):
        for images in alternating_group(4):
            x, y = scpp_solve_permutation(Permutation(images))
            d = commutator(lift_permutation(eval_perm(x)).canonical_word,
                           lift_permutation(eval_perm(y)).canonical_word)
            assert rho(d).images == images


def eval_perm(word):
    return Permutation(eval_word(word.degree, word.letters))


class TestFactorization:
    def test_member_has_trivial_pure_part(self):
        p, c = pure_braid_factorization(example_braid())
        assert p.letters == ()

    def test_b3_example(self):
        b = commutator(parse_braid("1 2", 3), parse_braid("2 1 2", 3))
        p, c = pure_braid_factorization(b)
        assert eval_word(3, project(p).letters) == (1, 2, 3)
        assert braid_equal(b, p + c.assembled())

    def test_random_products(self):
        rng = random.Random(11)
        for _ in range(60):
            b = BraidWord(4, ())
            for _ in range(rng.randint(1, 3)):
                x = BraidWord(4, random_braid_letters(rng, 4, rng.randint(0, 3)))
                y = BraidWord(4, random_braid_letters(rng, 4, rng.randint(0, 3)))
                b = b + commutator(x, y)
            p, c = pure_braid_factorization(b)
            assert eval_word(4, project(p).letters) == (1, 2, 3, 4)
            assert braid_equal(b, p + c.assembled())
            assert burau(4, (p + c.assembled()).letters) == burau(4, b.letters)

    def test_odd_projection(self):
        with pytest.raises(PromiseViolation):
            pure_braid_factorization(parse_braid("1", 3))


class TestCommutatorShape:
    def test_split(self):
        assert split_commutator((1, 2, -1, -2)) == (1, 1)
        assert split_commutator((2, 1, 1, -1, -2, -1)) == (2, 1)
        assert split_commutator((1, 2, 3)) is None
        assert split_commutator((1, 2, 1, 2)) is None

    def test_empty_factor_allowed(self):
        assert split_commutator(()) == (0, 0)
        assert split_commutator((1, -1)) == (0, 1)

    def test_suffix(self):
        w = (2, 2, 1, 2, -1, -2)
        assert commutator_suffix(w, limit=5) == 2
        assert commutator_suffix(w, limit=2) is None

    def test_candidate_assembly(self):
        c = CommutatorCandidate(parse_braid("1 2", 3), parse_braid("1", 3))
        assert c.assembled().letters == (1, 2, 1, -2, -1, -1)
        assert c.assembled().exponent_sum() == 0


class TestSearch:
    def test_immediate_success_in_k(self):
        x, y = parse_braid("2 1", 3), parse_braid("1", 3)
        b = commutator(x, y)
        trace = probabilistic_scpp_search(b, 3, seed=0)
        assert trace.succeeded and trace.steps == 0

    def test_determinism(self):
        b = commutator(parse_braid("2 2 1", 3), parse_braid("-2 -1", 3))
        a = probabilistic_scpp_search(b, 5, seed=42)
        c = probabilistic_scpp_search(b, 5, seed=42)
        assert a.to_json() == c.to_json()
        assert a.to_lines() == c.to_lines()

    def test_seeds_differ(self):
        b = parse_braid("2 2 1 -2 -1 -2", 3)
        traces = {probabilistic_scpp_search(b, 4, seed=s).to_json() for s in range(5)}
        assert len(traces) > 1

    @pytest.mark.parametrize("seed", range(6))
    def test_non_member_traces_are_sound(self, seed):
        b = parse_braid("2 2 1 -2 -1 -2", 3)
        assert scpp_permutation_braids(b) is None
        trace = probabilistic_scpp_search(b, 5, seed)
        assert validate_trace(b, trace)
        if trace.succeeded:
            assert braid_equal(trace.candidate.assembled(), b)
            assert split_commutator(trace.rounds[-1].word.letters) is not None

    def test_obfuscated_commutator(self):
        base = parse_braid("1 2 -1 -2", 3)
        b = scramble(base, 5, random.Random(9))
        trace = probabilistic_scpp_search(b, 8, seed=9)
        assert trace.succeeded
        assert braid_equal(trace.candidate.assembled(), b)

    def test_trace_text(self):
        b = parse_braid("2 2 1 -2 -1 -2", 3)
        trace = probabilistic_scpp_search(b, 5, seed=1)
        lines = trace.to_lines().splitlines()
        assert all(line.startswith("-> ") and line.endswith(")") for line in lines[:-1])
        assert '"rng": "MT19937"' in trace.to_json()
