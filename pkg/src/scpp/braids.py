"""Braid words, permutation braids and the right-greedy normal form.

A :class:`BraidWord` stores signed Artin generators, ``+i`` for ``σ_i`` and
``-i`` for ``σ_i⁻¹``. Projection to ``S_n`` forgets the signs and uses the
same right-to-left convention as :class:`~scpp.permutations.GenWord`.

A permutation braid is identified with its permutation; its canonical word
is the sign-lift of the ShortLex-least generator word for that permutation.

The normal form of a braid is ``w1 w2 ... wm Ω^p`` with every ``wi`` a
permutation braid other than ``e`` and ``Ω``, and no crossing of ``w(i-1)``
movable into ``wi`` (each ``wi`` is the maximal tail of ``w(i-1) wi``). It
is unique, so two words are equal braids iff their normal forms agree.

>>> b = parse_braid("1 2 -1 -2", 3)
>>> str(rgnf(b))
'[1 2][2] OMEGA^-1'
>>> braid_equal(parse_braid("1 2 1", 3), parse_braid("2 1 2", 3))
True
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import NamedTuple

from .errors import MalformedInputError
from .permutations import (
    GenWord,
    Permutation,
    compose,
    cycle_decomposition,
    cycles_to_genword,
    invert,
    word_to_permutation,
)
from .rewriting import canonical_form_sn


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(a) for a in self.letters)
        object.__setattr__(self, "letters", letters)
        if self.strands < 2:
            raise MalformedInputError("a braid needs at least 2 strands")
        for pos, a in enumerate(letters):
            if a == 0 or abs(a) >= self.strands:
                raise MalformedInputError(
                    f"generator {a} outside ±[1, {self.strands - 1}]", position=pos
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: BraidWord) -> BraidWord:
        if other.strands != self.strands:
            raise MalformedInputError(f"strand mismatch: {self.strands} vs {other.strands}")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-a for a in reversed(self.letters)))

    def exponent_sum(self) -> int:
        return sum(1 if a > 0 else -1 for a in self.letters)

    def is_positive(self) -> bool:
        return all(a > 0 for a in self.letters)

    def __str__(self) -> str:
        return format_braid(self)


def format_braid(b: BraidWord) -> str:
    return " ".join(map(str, b.letters)) if b.letters else "e"


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse ``"1 2 -1 -2"``; ``e`` is the empty word and ``D``/``-D`` stand for ``Ω^±1``."""
    letters: list[int] = []
    tokens = text.split()
    if tokens == ["e"]:
        return BraidWord(strands, ())
    omega = garside_word(strands).letters
    for pos, tok in enumerate(tokens):
        if tok == "D":
            letters.extend(omega)
        elif tok == "-D":
            letters.extend(-a for a in reversed(omega))
        else:
            try:
                a = int(tok)
            except ValueError:
                raise MalformedInputError(f"bad braid token {tok!r}", position=pos) from None
            if a == 0 or abs(a) >= strands:
                raise MalformedInputError(
                    f"generator {a} outside ±[1, {strands - 1}]", position=pos
                )
            letters.append(a)
    return BraidWord(strands, tuple(letters))


def commutator(x: BraidWord, y: BraidWord) -> BraidWord:
    """The word ``x y x⁻¹ y⁻¹``."""
    return x + y + x.inverse() + y.inverse()


def project(b: BraidWord) -> GenWord:
    return GenWord(b.strands, tuple(abs(a) for a in b.letters))


def rho(b: BraidWord) -> Permutation:
    return word_to_permutation(project(b))


def free_reduce(b: BraidWord) -> BraidWord:
    stack: list[int] = []
    for a in b.letters:
        if stack and stack[-1] == -a:
            stack.pop()
        else:
            stack.append(a)
    return BraidWord(b.strands, tuple(stack))


# -- inversion sets -----------------------------------------------------------


@dataclass(frozen=True)
class RSet:
    n: int
    pairs: frozenset

    def __post_init__(self):
        object.__setattr__(self, "pairs", frozenset(tuple(p) for p in self.pairs))
        for i, j in self.pairs:
            if not 1 <= i < j <= self.n:
                raise MalformedInputError(f"pair ({i}, {j}) is not 1 <= i < j <= {self.n}")

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, pair) -> bool:
        return tuple(pair) in self.pairs

    def __le__(self, other: RSet) -> bool:
        return self.pairs <= other.pairs

    def __str__(self) -> str:
        return "{" + ", ".join(f"({i},{j})" for i, j in sorted(self.pairs)) + "}"


def r_set(p: Permutation) -> RSet:
    """Pairs ``i < j`` with ``p(i) > p(j)``."""
    im = p.images
    n = p.degree
    return RSet(n, frozenset(
        (i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if im[i] > im[j]
    ))


def inversions(p: Permutation) -> int:
    im = p.images
    return sum(1 for i in range(len(im)) for j in range(i + 1, len(im)) if im[i] > im[j])


def rset_to_permutation(rs: RSet) -> Permutation | None:
    """The permutation with inversion set ``rs``, or ``None`` if there is none.

    ``p(i)`` is one more than the number of points that must land below it:
    the ``j < i`` not inverted with ``i``, plus the ``j > i`` inverted with it.
    """
    n = rs.n
    images = []
    for i in range(1, n + 1):
        below = sum(1 for j in range(1, i) if (j, i) not in rs.pairs)
        below += sum(1 for j in range(i + 1, n + 1) if (i, j) in rs.pairs)
        images.append(below + 1)
    if sorted(images) != list(range(1, n + 1)):
        return None
    p = Permutation(tuple(images))
    return p if r_set(p) == rs else None


def is_valid_rset(rs: RSet) -> bool:
    return rset_to_permutation(rs) is not None


def meet(a: RSet, b: RSet) -> RSet:
    """Largest inversion set contained in both ``a`` and ``b``.

    A pair ``(i, k)`` of the intersection survives iff for every ``j``
    strictly between, ``(i, j)`` or ``(j, k)`` survives. Membership depends
    only on pairs with a smaller gap, so one pass by increasing gap decides it.
    """
    if a.n != b.n:
        raise MalformedInputError(f"size mismatch: {a.n} vs {b.n}")
    n = a.n
    common = a.pairs & b.pairs
    keep: set = set()
    for gap in range(1, n):
        for i in range(1, n - gap + 1):
            k = i + gap
            if (i, k) in common and all(
                (i, j) in keep or (j, k) in keep for j in range(i + 1, k)
            ):
                keep.add((i, k))
    return RSet(n, frozenset(keep))


# -- permutation braids -------------------------------------------------------


def longest_permutation(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


@functools.lru_cache(maxsize=None)
def _canonical_letters(images: tuple[int, ...]) -> tuple[int, ...]:
    p = Permutation(images)
    w = cycles_to_genword(cycle_decomposition(p))
    return canonical_form_sn(w).letters


@dataclass(frozen=True)
class PermutationBraid:
    """A positive braid in which no two strands cross twice."""

    permutation: Permutation

    @property
    def strands(self) -> int:
        return self.permutation.degree

    @property
    def canonical_word(self) -> BraidWord:
        return BraidWord(self.strands, _canonical_letters(self.permutation.images))

    def __len__(self) -> int:
        return inversions(self.permutation)

    def is_identity(self) -> bool:
        return self.permutation == Permutation.identity(self.strands)

    def is_garside(self) -> bool:
        return self.permutation == longest_permutation(self.strands)

    def __str__(self) -> str:
        return " ".join(map(str, self.canonical_word.letters))


def lift_permutation(p: Permutation) -> PermutationBraid:
    if p.degree < 2:
        raise MalformedInputError("braids need at least 2 strands")
    return PermutationBraid(p)


def garside(n: int) -> PermutationBraid:
    """The half twist ``Ω``, stored with its ShortLex-least word."""
    return PermutationBraid(longest_permutation(n))


def garside_word(n: int) -> BraidWord:
    """``Ω`` spelled by the product formula ``(σ1 … σ(n-1)) (σ1 … σ(n-2)) … (σ1)``."""
    if n < 2:
        raise MalformedInputError("braids need at least 2 strands")
    letters = [i for top in range(n - 1, 0, -1) for i in range(1, top + 1)]
    return BraidWord(n, tuple(letters))


def maximal_tail(a: Permutation, b: Permutation) -> Permutation:
    """Largest tail ``t`` of ``a`` for which ``t·b`` is still a permutation braid.

    Tails of ``a`` are the permutations whose inversion sets lie inside that
    of ``a``; ``t·b`` stays simple exactly when ``t`` is a tail of ``Ω b⁻¹``.
    """
    w0 = longest_permutation(a.degree)
    m = meet(r_set(a), r_set(compose(w0, invert(b))))
    return rset_to_permutation(m)


# -- normal form --------------------------------------------------------------


@dataclass(frozen=True)
class GreedyNormalForm:
    strands: int
    factors: tuple[PermutationBraid, ...]
    omega_power: int

    def to_word(self) -> BraidWord:
        letters: list[int] = []
        for f in self.factors:
            letters.extend(f.canonical_word.letters)
        omega = garside(self.strands).canonical_word.letters
        if self.omega_power >= 0:
            letters.extend(omega * self.omega_power)
        else:
            letters.extend([-a for a in reversed(omega)] * -self.omega_power)
        return BraidWord(self.strands, tuple(letters))

    def __str__(self) -> str:
        body = "".join(f"[{f}]" for f in self.factors)
        return f"{body} OMEGA^{self.omega_power}".strip()


def _flip(a: int, n: int, k: int) -> int:
    return n - a if k % 2 else a


def _positive_part(b: BraidWord) -> tuple[list[int], int]:
    """Rewrite ``b`` as ``P Ω^(-k)`` with ``P`` a positive word."""
    n = b.strands
    w0 = longest_permutation(n)
    positive: list[int] = []
    k = 0
    for a in b.letters:
        # Ω^(-k) σ = σ' Ω^(-k), where σ' has its index flipped k times
        j = _flip(abs(a), n, k)
        if a > 0:
            positive.append(j)
        else:
            # σ_j⁻¹ = X Ω⁻¹ with Ω = σ_j X
            positive.extend(_canonical_letters(compose(_adjacent(n, j), w0).images))
            k += 1
    return positive, k


def _simple_factors(positive: list[int], n: int) -> list[Permutation]:
    """Split a positive word into permutation braids, longest tails first."""
    factors: list[Permutation] = []
    current = Permutation.identity(n)
    length = 0
    for a in reversed(positive):
        # σ_a · current: strands a and a+1 cross again iff a is already inverted
        grown = compose(_adjacent(n, a), current)
        if inversions(grown) == length + 1:
            current, length = grown, length + 1
        else:
            factors.append(current)
            current, length = _adjacent(n, a), 1
    if length:
        factors.append(current)
    factors.reverse()
    return factors


@functools.lru_cache(maxsize=None)
def _adjacent(n: int, a: int) -> Permutation:
    images = list(range(1, n + 1))
    images[a - 1], images[a] = images[a], images[a - 1]
    return Permutation(tuple(images))


def _slide(factors: list[Permutation]) -> None:
    ident = Permutation.identity(factors[0].degree) if factors else None
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            m = maximal_tail(factors[i], factors[i + 1])
            if m != ident:
                factors[i] = compose(factors[i], invert(m))
                factors[i + 1] = compose(m, factors[i + 1])
                changed = True


def rgnf(b: BraidWord) -> GreedyNormalForm:
    n = b.strands
    positive, k = _positive_part(b)
    factors = _simple_factors(positive, n)
    _slide(factors)
    ident = Permutation.identity(n)
    w0 = longest_permutation(n)
    # identities collect on the left, copies of Ω on the right
    while factors and factors[0] == ident:
        factors.pop(0)
    omegas = 0
    while factors and factors[-1] == w0:
        factors.pop()
        omegas += 1
    return GreedyNormalForm(n, tuple(PermutationBraid(f) for f in factors), omegas - k)


def braid_equal(a: BraidWord, b: BraidWord) -> bool:
    if a.strands != b.strands:
        raise MalformedInputError(f"strand mismatch: {a.strands} vs {b.strands}")
    return rgnf(a) == rgnf(b)


def is_trivial(b: BraidWord) -> bool:
    nf = rgnf(b)
    return not nf.factors and nf.omega_power == 0


# -- single-substitution moves -------------------------------------------------


class Move(NamedTuple):
    kind: str  # commute, braid, cancel or insert
    position: int
    length: int
    replacement: tuple[int, ...]


MOVE_KINDS = ("commute", "braid", "cancel", "insert")


def available_moves(b: BraidWord, max_length: int | None = None) -> dict[str, list[Move]]:
    """Every legal single substitution on ``b``, grouped by kind.

    Commutation swaps letters at distance at least 2 (any signs); the braid
    relation rewrites ``a b a`` to ``b a b`` for adjacent indices of one sign;
    cancellation removes ``a a⁻¹``; insertion adds ``a a⁻¹`` anywhere.
    """
    w = b.letters
    L = len(w)
    moves: dict[str, list[Move]] = {k: [] for k in MOVE_KINDS}
    for i in range(L - 1):
        x, y = w[i], w[i + 1]
        if abs(abs(x) - abs(y)) >= 2:
            moves["commute"].append(Move("commute", i, 2, (y, x)))
        if x == -y:
            moves["cancel"].append(Move("cancel", i, 2, ()))
    for i in range(L - 2):
        x, y, z = w[i : i + 3]
        if x == z and (x > 0) == (y > 0) and abs(abs(x) - abs(y)) == 1:
            moves["braid"].append(Move("braid", i, 3, (y, x, y)))
    if max_length is None or L + 2 <= max_length:
        for i in range(L + 1):
            for g in range(1, b.strands):
                for s in (g, -g):
                    moves["insert"].append(Move("insert", i, 0, (s, -s)))
    return moves


def apply_move(b: BraidWord, move: Move) -> BraidWord:
    w = b.letters
    i = move.position
    return BraidWord(b.strands, w[:i] + move.replacement + w[i + move.length :])
