"""Commutators in braid groups built from the symmetric-group solution.

A braid ``b`` whose permutation is even has a commutator ``[x, y]`` of
permutation braids with the same permutation: solve in ``S_n``, then lift
both words. When that lift equals ``b`` as a braid, ``b`` is solved outright;
otherwise ``b`` differs from it by a pure braid, which the random search tries
to absorb by rewriting.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from .braids import (
    BraidWord,
    Move,
    MOVE_KINDS,
    apply_move,
    available_moves,
    braid_equal,
    commutator,
    format_braid,
    free_reduce,
    is_trivial,
    project,
    rho,
)
from .cejtin_rivin import scpp_solve
from .errors import MalformedInputError, PromiseViolation
from .permutations import is_even
from .rewriting import canonical_form_sn

RNG_NAME = "MT19937"


@dataclass(frozen=True)
class CommutatorCandidate:
    x: BraidWord
    y: BraidWord

    def __post_init__(self):
        if self.x.strands != self.y.strands:
            raise MalformedInputError("x and y have different strand counts")

    def assembled(self) -> BraidWord:
        return commutator(self.x, self.y)

    def __str__(self) -> str:
        return f"[{format_braid(self.x)}, {format_braid(self.y)}]"


def lifted_commutator(b: BraidWord) -> CommutatorCandidate:
    """Solve ``ρ(b)`` in ``S_n`` and lift both words to permutation braids."""
    w = project(b)
    if not is_even(rho(b)):
        raise PromiseViolation("promise violated: the braid's permutation is odd")
    x, y = scpp_solve(w)
    lift = lambda g: BraidWord(b.strands, canonical_form_sn(g).letters)
    return CommutatorCandidate(lift(x), lift(y))


def scpp_permutation_braids(b: BraidWord) -> CommutatorCandidate | None:
    """``[x, y]`` of permutation braids equal to ``b``, or ``None`` when ``b`` is not in K."""
    if b.exponent_sum() != 0:
        raise PromiseViolation(
            f"promise violated: exponent sum {b.exponent_sum()} is not 0, so b is no commutator"
        )
    cand = lifted_commutator(b)
    if braid_equal(b, cand.assembled()):
        return cand
    return None


def pure_braid_factorization(b: BraidWord) -> tuple[BraidWord, CommutatorCandidate]:
    """Split ``b`` as ``p · [x, y]`` with ``p`` a pure braid."""
    c = lifted_commutator(b)
    p = free_reduce(b + c.assembled().inverse())
    if is_trivial(p):
        p = BraidWord(b.strands, ())
    return p, c


# -- literal commutator shape ---------------------------------------------------


def split_commutator(w: tuple[int, ...], first: int = 0) -> tuple[int, int] | None:
    """Find ``|a|, |b|`` with ``w[first:] = a b a⁻¹ b⁻¹`` letter for letter."""
    body = w[first:]
    L = len(body)
    if L % 2:
        return None
    half = L // 2
    inv = tuple(-a for a in reversed(body))  # inv[k] = body[L-1-k]⁻¹
    for p in range(half + 1):
        q = half - p
        # a⁻¹ sits at [p+q, 2p+q); b⁻¹ at [2p+q, L)
        if p and body[p + q : 2 * p + q] != inv[L - p : L]:
            continue
        if q and body[2 * p + q :] != inv[L - p - q : L - p]:
            continue
        return p, q
    return None


def commutator_suffix(w: tuple[int, ...], limit: int) -> int | None:
    """Shortest prefix length ``h < limit`` leaving a literal commutator suffix."""
    for h in range(min(limit, len(w) + 1)):
        if (len(w) - h) % 2 == 0 and split_commutator(w, h) is not None:
            return h
    return None


# -- random search --------------------------------------------------------------


@dataclass(frozen=True)
class Milestone:
    word: BraidWord
    steps: int


@dataclass
class SearchTrace:
    seed: int
    strands: int
    start: BraidWord
    budgets: list[int] = field(default_factory=list)
    rounds: list[Milestone] = field(default_factory=list)
    outcome: str = "failure"
    candidate: CommutatorCandidate | None = None
    steps: int = 0
    rng: str = RNG_NAME

    @property
    def succeeded(self) -> bool:
        return self.outcome == "success"

    def to_lines(self) -> str:
        lines = [f"-> {format_braid(m.word)} ({m.steps})" for m in self.rounds]
        if self.succeeded:
            lines.append(f"success {self.candidate} after {self.steps} steps")
        else:
            lines.append(f"failure after {self.steps} steps")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "rng": self.rng,
            "strands": self.strands,
            "start": format_braid(self.start),
            "budgets": list(self.budgets),
            "rounds": [{"word": format_braid(m.word), "steps": m.steps} for m in self.rounds],
            "outcome": self.outcome,
            "x": format_braid(self.candidate.x) if self.candidate else None,
            "y": format_braid(self.candidate.y) if self.candidate else None,
            "steps": self.steps,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def random_move(b: BraidWord, rng: random.Random, max_length: int | None = None) -> Move | None:
    """Pick a move kind uniformly among those available, then an instance of it."""
    moves = available_moves(b, max_length)
    kinds = [k for k in MOVE_KINDS if moves[k]]
    if not kinds:
        return None
    return rng.choice(moves[rng.choice(kinds)])


def scramble(b: BraidWord, count: int, rng: random.Random, max_length: int | None = None) -> BraidWord:
    """Apply ``count`` random single substitutions; the braid is unchanged."""
    for _ in range(count):
        mv = random_move(b, rng, max_length)
        if mv is None:
            break
        b = apply_move(b, mv)
    return b


def _success(trace: SearchTrace, word: BraidWord, steps: int) -> SearchTrace:
    p, q = split_commutator(word.letters)
    x = BraidWord(word.strands, word.letters[:p])
    y = BraidWord(word.strands, word.letters[p : p + q])
    trace.rounds.append(Milestone(word, steps))
    trace.outcome = "success"
    trace.candidate = CommutatorCandidate(x, y)
    trace.steps = steps
    return trace


def probabilistic_scpp_search(
    b: BraidWord, M: int, seed: int, max_length: int | None = None
) -> SearchTrace:
    """Randomly rewrite ``p·[x, y]`` looking for a word literally of commutator shape.

    Round ``i`` gets a budget of ``N_i = N_0 · 2^i`` moves, with ``N_0`` drawn
    from ``[len(b), 4 len(b)]``. Whenever the pure prefix in front of a literal
    commutator suffix gets strictly shorter, the word is logged as a milestone
    and the round's budget restarts. Each round starts at the last milestone.
    """
    if M < 1:
        raise MalformedInputError("M must be a positive integer")
    rng = random.Random(seed)
    p, c = pure_braid_factorization(b)
    start = p + c.assembled()
    trace = SearchTrace(seed=seed, strands=b.strands, start=start)
    if split_commutator(start.letters) is not None:
        return _success(trace, start, 0)
    if max_length is None:
        max_length = 2 * len(start) + 8
    n0 = rng.randint(max(1, len(b)), max(1, 4 * len(b)))
    best_prefix = len(p)
    milestone = start
    trace.rounds.append(Milestone(start, 0))
    total = 0
    for i in range(M):
        budget = n0 * 2**i
        trace.budgets.append(budget)
        word = milestone
        j = 0
        while j < budget:
            mv = random_move(word, rng, max_length)
            if mv is None:
                break
            word = apply_move(word, mv)
            j += 1
            total += 1
            if split_commutator(word.letters) is not None:
                return _success(trace, word, total)
            h = commutator_suffix(word.letters, best_prefix)
            if h is not None:
                best_prefix = h
                milestone = word
                trace.rounds.append(Milestone(word, total))
                j = 0
    trace.steps = total
    return trace


def validate_trace(b: BraidWord, trace: SearchTrace) -> bool:
    """Replay check: milestones are braid-equal to ``b`` and success is literal."""
    words = [trace.start] + [m.word for m in trace.rounds]
    if not all(braid_equal(b, w) for w in words):
        return False
    if trace.succeeded:
        last = trace.rounds[-1].word
        return last == trace.candidate.assembled() and braid_equal(b, last)
    return True
