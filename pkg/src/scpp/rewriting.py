"""ShortLex string rewriting and Knuth-Bendix completion.

Words are tuples of symbols. Rules are oriented so the right-hand side is
ShortLex-smaller than the left-hand side, which makes every rewrite strictly
decreasing and reduction terminating.

>>> alphabet, rules = sn_presentation(3)
>>> system = knuth_bendix_complete(alphabet, rules)
>>> reduce(system, (2, 1, 2))
(1, 2, 1)
>>> len(irreducible_words(system))
6
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Hashable, Iterable, NamedTuple, Sequence

from .errors import MalformedInputError, NonTerminationError
from .permutations import GenWord

Word = tuple


@dataclass(frozen=True)
class OrderedAlphabet:
    symbols: tuple

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if len(set(self.symbols)) != len(self.symbols):
            raise MalformedInputError("alphabet has duplicate symbols")
        object.__setattr__(self, "_rank", {s: i for i, s in enumerate(self.symbols)})

    def rank(self, symbol: Hashable) -> int:
        try:
            return self._rank[symbol]
        except KeyError:
            raise MalformedInputError(f"symbol {symbol!r} not in alphabet") from None

    def __contains__(self, symbol) -> bool:
        return symbol in self._rank

    def __len__(self) -> int:
        return len(self.symbols)


def shortlex_key(w: Sequence, alphabet: OrderedAlphabet, from_right: bool = False) -> tuple:
    ranks = [alphabet.rank(s) for s in w]
    if from_right:
        ranks.reverse()
    return (len(ranks), ranks)


def shortlex_compare(u: Sequence, v: Sequence, alphabet: OrderedAlphabet, from_right: bool = False) -> int:
    """Return -1, 0 or 1 as ``u`` is less than, equal to, or greater than ``v``.

    Shorter words come first; equal lengths compare at the first differing
    letter, scanning left to right (or right to left with ``from_right``).
    """
    ku = shortlex_key(u, alphabet, from_right)
    kv = shortlex_key(v, alphabet, from_right)
    return (ku > kv) - (ku < kv)


class Rule(NamedTuple):
    lhs: Word
    rhs: Word


@dataclass(frozen=True)
class RewriteSystem:
    alphabet: OrderedAlphabet
    rules: tuple[Rule, ...]
    _index: dict = field(init=False, repr=False, compare=False)
    _lengths: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        rules = tuple(Rule(tuple(r.lhs), tuple(r.rhs)) for r in self.rules)
        object.__setattr__(self, "rules", rules)
        index: dict = {}
        for r in rules:
            if shortlex_compare(r.rhs, r.lhs, self.alphabet) >= 0:
                raise MalformedInputError(f"rule {r.lhs} -> {r.rhs} is not ShortLex-decreasing")
            index.setdefault(r.lhs, []).append(r.rhs)
        for lhs, rhss in index.items():
            rhss.sort(key=lambda w: shortlex_key(w, self.alphabet))
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_lengths", tuple(sorted({len(r.lhs) for r in rules})))

    def __len__(self) -> int:
        return len(self.rules)

    def find_leftmost(self, w: Sequence, start: int = 0):
        """Position and rule chosen by the reduction strategy, or ``None``.

        The match starting furthest left wins; ties go to the ShortLex-smallest
        left-hand side, then to the ShortLex-smallest right-hand side.
        """
        index, lengths = self._index, self._lengths
        n = len(w)
        for i in range(start, n):
            for length in lengths:
                if i + length > n:
                    break
                key = tuple(w[i : i + length])
                rhss = index.get(key)
                if rhss is not None:
                    return i, Rule(key, rhss[0])
        return None


def reduce(system: RewriteSystem, w: Sequence, max_steps: int | None = None) -> Word:
    """Rewrite ``w`` until no left-hand side occurs in it."""
    word = list(w)
    for s in word:
        system.alphabet.rank(s)
    longest = system._lengths[-1] if system._lengths else 0
    start = 0
    steps = 0
    while True:
        hit = system.find_leftmost(word, start)
        if hit is None:
            return tuple(word)
        i, rule = hit
        word[i : i + len(rule.lhs)] = rule.rhs
        # earlier positions had no match, so a new one must overlap the rewrite
        start = max(0, i - longest + 1)
        steps += 1
        if max_steps is not None and steps > max_steps:
            raise NonTerminationError(f"reduction exceeded {max_steps} steps")


def is_irreducible(system: RewriteSystem, w: Sequence) -> bool:
    return system.find_leftmost(w) is None


def irreducible_words(system: RewriteSystem, limit: int = 10**6) -> list[Word]:
    """All irreducible words, by breadth-first extension (finite for finite groups)."""
    lhs_set = set(system._index)
    lengths = system._lengths
    found = [()]
    frontier = [()]
    while frontier:
        nxt = []
        for w in frontier:
            for s in system.alphabet.symbols:
                cand = w + (s,)
                # prefixes are irreducible already; only suffixes can match
                if any(len(cand) >= L and cand[-L:] in lhs_set for L in lengths):
                    continue
                nxt.append(cand)
        found.extend(nxt)
        if len(found) > limit:
            raise NonTerminationError(f"more than {limit} irreducible words")
        frontier = nxt
    return found


# -- Knuth-Bendix completion ------------------------------------------------


class _Completion:
    def __init__(self, alphabet: OrderedAlphabet, max_rules: int):
        self.alphabet = alphabet
        self.max_rules = max_rules
        self.rules: list[list] = []  # [lhs, rhs, alive]
        self.index: dict = {}  # lhs -> position in self.rules
        self.added = 0

    def key(self, w):
        return shortlex_key(w, self.alphabet)

    def reduce(self, w) -> Word:
        word = list(w)
        lengths = sorted({len(l) for l in self.index})
        longest = lengths[-1] if lengths else 0
        start = 0
        while True:
            hit = None
            for i in range(start, len(word)):
                for L in lengths:
                    if i + L > len(word):
                        break
                    k = self.index.get(tuple(word[i : i + L]))
                    if k is not None:
                        hit = (i, self.rules[k])
                        break
                if hit:
                    break
            if hit is None:
                return tuple(word)
            i, (lhs, rhs, _) = hit
            word[i : i + len(lhs)] = rhs
            start = max(0, i - longest + 1)

    def add_equation(self, u, v) -> None:
        pending = [(tuple(u), tuple(v))]
        while pending:
            u, v = pending.pop()
            u, v = self.reduce(u), self.reduce(v)
            if u == v:
                continue
            if self.key(u) < self.key(v):
                u, v = v, u
            self.added += 1
            if self.added > self.max_rules:
                raise NonTerminationError(f"completion exceeded {self.max_rules} rule additions")
            pos = len(self.rules)
            self.rules.append([u, v, True])
            self.index[u] = pos
            # inter-reduce the other rules against the new one
            for k, rule in enumerate(self.rules[:-1]):
                if not rule[2]:
                    continue
                if _contains(rule[0], u):
                    rule[2] = False
                    del self.index[rule[0]]
                    pending.append((rule[0], rule[1]))
                elif _contains(rule[1], u):
                    rule[1] = self.reduce(rule[1])

    def run(self) -> None:
        i = 0
        while i < len(self.rules):
            for j in range(i + 1):
                if not self.rules[i][2]:
                    break
                if not self.rules[j][2]:
                    continue
                for a, b in ((i, j), (j, i)) if i != j else ((i, i),):
                    for t1, t2 in _critical_pairs(self.rules[a], self.rules[b]):
                        self.add_equation(t1, t2)
                        if not (self.rules[a][2] and self.rules[b][2]):
                            break
            i += 1


def _contains(word: Word, sub: Word) -> bool:
    L = len(sub)
    return any(word[i : i + L] == sub for i in range(len(word) - L + 1))


def _critical_pairs(r1, r2):
    l1, s1 = r1[0], r1[1]
    l2, s2 = r2[0], r2[1]
    out = []
    for k in range(1, min(len(l1), len(l2))):
        if l1[-k:] == l2[:k]:
            out.append((s1 + l2[k:], l1[:-k] + s2))
    if len(l2) < len(l1):
        for i in range(len(l1) - len(l2) + 1):
            if l1[i : i + len(l2)] == l2:
                out.append((s1, l1[:i] + s2 + l1[i + len(l2) :]))
    return out


def knuth_bendix_complete(
    alphabet: OrderedAlphabet, rules: Iterable, max_rules: int = 100_000
) -> RewriteSystem:
    """Complete ``rules`` into a confluent, inter-reduced ShortLex system."""
    kb = _Completion(alphabet, max_rules)
    for lhs, rhs in rules:
        kb.add_equation(lhs, rhs)
    kb.run()
    alive = [Rule(l, r) for l, r, ok in kb.rules if ok]
    alive.sort(key=lambda r: (shortlex_key(r.lhs, alphabet), shortlex_key(r.rhs, alphabet)))
    return RewriteSystem(alphabet, tuple(alive))


def is_confluent(system: RewriteSystem) -> bool:
    """Check that every critical pair of ``system`` resolves."""
    for r1, r2 in itertools.product(system.rules, repeat=2):
        for t1, t2 in _critical_pairs(r1, r2):
            if reduce(system, t1) != reduce(system, t2):
                return False
    return True


# -- the symmetric group ----------------------------------------------------


def sn_presentation(n: int) -> tuple[OrderedAlphabet, list[Rule]]:
    """Generators ``1..n-1`` of ``S_n`` with the three defining rule families."""
    if n < 2:
        raise MalformedInputError("S_n presentation needs n >= 2")
    alphabet = OrderedAlphabet(tuple(range(1, n)))
    rules = [Rule((i, i), ()) for i in range(1, n)]
    rules += [Rule((i + 1, i, i + 1), (i, i + 1, i)) for i in range(1, n - 1)]
    rules += [Rule((j, i), (i, j)) for i in range(1, n) for j in range(i + 2, n)]
    return alphabet, rules


@functools.lru_cache(maxsize=None)
def completed_sn_system(n: int) -> RewriteSystem:
    alphabet, rules = sn_presentation(n)
    return knuth_bendix_complete(alphabet, rules)


def canonical_form_sn(w: GenWord) -> GenWord:
    """ShortLex-least word representing the same permutation as ``w``."""
    if w.degree < 2:
        return GenWord(w.degree, ())
    return GenWord(w.degree, reduce(completed_sn_system(w.degree), w.letters))


# -- rule files -------------------------------------------------------------


def _format_side(w: Word) -> str:
    return " ".join(map(str, w)) if w else "e"


def format_rules(system: RewriteSystem) -> str:
    return "".join(f"{_format_side(r.lhs)} -> {_format_side(r.rhs)}\n" for r in system.rules)


def _parse_side(text: str, lineno: int) -> Word:
    text = text.strip()
    if text == "e":
        return ()
    try:
        return tuple(int(t) for t in text.split())
    except ValueError:
        raise MalformedInputError(f"bad word {text!r} on line {lineno}", position=lineno) from None


def parse_equations(text: str) -> list[tuple[Word, Word]]:
    """Read ``lhs -> rhs`` lines of integer letters; ``e`` is the empty word."""
    pairs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" not in line:
            raise MalformedInputError(f"missing '->' on line {lineno}", position=lineno)
        left, right = line.split("->", 1)
        pairs.append((_parse_side(left, lineno), _parse_side(right, lineno)))
    return pairs


def alphabet_of(pairs) -> OrderedAlphabet:
    return OrderedAlphabet(tuple(sorted({s for lhs, rhs in pairs for s in lhs + rhs})))


def parse_rules(text: str, alphabet: OrderedAlphabet | None = None) -> RewriteSystem:
    """Like :func:`parse_equations` but every line must already be ShortLex-oriented."""
    pairs = parse_equations(text)
    rules = tuple(Rule(lhs, rhs) for lhs, rhs in pairs)
    return RewriteSystem(alphabet or alphabet_of(pairs), rules)
