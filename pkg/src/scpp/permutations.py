"""Permutations of {1, ..., n}, generator words, and cycle lists.

Conventions used throughout the package:

* A :class:`Permutation` stores ``images`` with ``images[i - 1] == σ(i)``.
* A :class:`GenWord` ``a1 a2 ... ak`` denotes ``τ_a1 ∘ τ_a2 ∘ ... ∘ τ_ak``;
  the rightmost letter acts first.
* A cycle ``(i1 i2 ... ik)`` sends ``i1 → i2 → ... → ik → i1``, and a product
  of cycles is also applied right to left.

The permutation-matrix view keeps a 1 at row ``i``, column ``σ(i)``, so the
row position of the 1 in column ``j`` is ``σ⁻¹(j)``; see :func:`column_list`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvariantBreach, MalformedInputError, PromiseViolation
from .opcount import tick


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        object.__setattr__(self, "images", images)
        if not images:
            raise MalformedInputError("a permutation needs degree >= 1")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise MalformedInputError(f"images {images} are not a bijection of 1..{len(images)}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __str__(self) -> str:
        return format_cycles_human(cycle_decomposition(self))


@dataclass(frozen=True)
class GenWord:
    """A word in the adjacent transpositions ``τ_1 .. τ_{n-1}`` of ``S_n``."""

    degree: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(a) for a in self.letters)
        object.__setattr__(self, "letters", letters)
        if self.degree < 1:
            raise MalformedInputError("degree must be positive")
        for pos, a in enumerate(letters):
            if not 1 <= a <= self.degree - 1:
                raise MalformedInputError(
                    f"letter {a} outside [1, {self.degree - 1}]", position=pos
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: GenWord) -> GenWord:
        if other.degree != self.degree:
            raise MalformedInputError("degree mismatch")
        return GenWord(self.degree, self.letters + other.letters)

    def reversed(self) -> GenWord:
        # every letter is an involution, so the reversal is the inverse word
        return GenWord(self.degree, self.letters[::-1])


@dataclass(frozen=True)
class CycleList:
    """An ordered product of cycles, applied right to left.

    ``disjoint`` marks a disjoint decomposition (as produced by
    :func:`cycle_decomposition`); products built by the two-n-cycle
    construction are not disjoint.
    """

    degree: int
    cycles: tuple[tuple[int, ...], ...]
    disjoint: bool = False

    def __post_init__(self):
        cycles = tuple(tuple(int(x) for x in c) for c in self.cycles)
        object.__setattr__(self, "cycles", cycles)
        for k, cyc in enumerate(cycles):
            if not cyc:
                raise MalformedInputError("empty cycle", position=k)
            if len(set(cyc)) != len(cyc):
                raise MalformedInputError(f"cycle {cyc} repeats an entry", position=k)
            for x in cyc:
                if not 1 <= x <= self.degree:
                    raise MalformedInputError(f"cycle entry {x} outside 1..{self.degree}", position=k)
        if self.disjoint:
            seen = [x for c in cycles for x in c]
            if len(seen) != len(set(seen)):
                raise MalformedInputError("cycles flagged disjoint share an entry")

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted({x for c in self.cycles for x in c}))

    def to_permutation(self) -> Permutation:
        return cycles_to_permutation(self)

    def __str__(self) -> str:
        return format_cycles_human(self)


@dataclass(frozen=True)
class NCycle:
    """A single cycle through every point of ``{1..n}``."""

    degree: int
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        if sorted(entries) != list(range(1, self.degree + 1)):
            raise PromiseViolation(f"{entries} is not an n-cycle of degree {self.degree}")

    @classmethod
    def from_cycles(cls, c: CycleList) -> NCycle:
        nontrivial = [cyc for cyc in c.cycles if len(cyc) > 1 or c.degree == 1]
        if len(nontrivial) != 1:
            raise PromiseViolation(f"{format_cycles_human(c)} is not a single n-cycle")
        return cls(c.degree, nontrivial[0])

    def as_cycles(self) -> CycleList:
        return CycleList(self.degree, (self.entries,), disjoint=True)

    def __str__(self) -> str:
        return "(" + " ".join(map(str, self.entries)) + ")"


# -- group operations ------------------------------------------------------


def _check_degrees(p: Permutation, q: Permutation) -> None:
    if p.degree != q.degree:
        raise MalformedInputError(f"degree mismatch: {p.degree} vs {q.degree}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p ∘ q`` (``q`` acts first)."""
    _check_degrees(p, q)
    pi = p.images
    return Permutation(tuple(pi[j - 1] for j in q.images))


def invert(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, v in enumerate(p.images, start=1):
        inv[v - 1] = i
    return Permutation(tuple(inv))


def parity(p: Permutation) -> str:
    """Return ``"even"`` or ``"odd"``."""
    c = cycle_decomposition(p)
    return "even" if (p.degree - len(c.cycles)) % 2 == 0 else "odd"


def is_even(p: Permutation) -> bool:
    return parity(p) == "even"


def is_n_cycle(p: Permutation) -> bool:
    return len(cycle_decomposition(p).cycles) == 1


def column_list(p: Permutation) -> tuple[int, ...]:
    """Row position of the 1 in each column of the permutation matrix of ``p``.

    For the word ``6 4 1 2`` in ``S_7`` this is ``3,1,2,5,4,7,6``. It equals
    the images of ``p⁻¹``.
    """
    return invert(p).images


# -- conversions -----------------------------------------------------------


def word_to_permutation(w: GenWord) -> Permutation:
    n = w.degree
    images = list(range(1, n + 1))
    tick(n, "A")
    # left-to-right scan composes on the right: σ ← σ ∘ τ_a
    for a in w.letters:
        images[a - 1], images[a] = images[a], images[a - 1]
    tick(len(w.letters), "A")
    return Permutation(tuple(images))


def cycle_decomposition(p: Permutation) -> CycleList:
    """Disjoint cycles of ``p``, 1-cycles included, each starting at its minimum."""
    n = p.degree
    seen = [False] * (n + 1)
    cycles = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        x = p.images[start - 1]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = p.images[x - 1]
        cycles.append(tuple(cyc))
    tick(n, "B")
    return CycleList(n, tuple(cycles), disjoint=True)


def cycles_to_permutation(c: CycleList) -> Permutation:
    n = c.degree
    images = list(range(1, n + 1))
    tick(n, "E")
    # left-to-right scan composes on the right: σ ← σ ∘ C
    for cyc in c.cycles:
        first = images[cyc[0] - 1]
        for k in range(len(cyc) - 1):
            images[cyc[k] - 1] = images[cyc[k + 1] - 1]
        images[cyc[-1] - 1] = first
        tick(len(cyc), "E")
    return Permutation(tuple(images))


def conjugator_of_ncycles(c1: NCycle | Sequence[int], c2: NCycle | Sequence[int]) -> CycleList:
    """Cycles of the τ sending the k-th entry of ``c1`` to the k-th entry of ``c2``.

    The result satisfies ``τ c1 τ⁻¹ = c2``.
    """
    if not isinstance(c1, NCycle):
        c1 = NCycle(len(c1), tuple(c1))
    if not isinstance(c2, NCycle):
        c2 = NCycle(len(c2), tuple(c2))
    if c1.degree != c2.degree:
        raise PromiseViolation("n-cycles of different degree are not conjugate")
    images = [0] * c1.degree
    for a, b in zip(c1.entries, c2.entries):
        images[a - 1] = b
    tick(c1.degree, "D")
    return cycle_decomposition(Permutation(tuple(images)))


def reverse_ncycle(c: NCycle) -> NCycle:
    tick(c.degree, "reverse")
    return NCycle(c.degree, c.entries[::-1])


def transposition_word(m: int, p: int) -> list[int]:
    """Adjacent-transposition letters for the swap ``(m p)``.

    ``(m p) = τ_m τ_{m+1} … τ_{p-1} … τ_{m+1} τ_m``, a palindrome.
    """
    if m > p:
        m, p = p, m
    up = list(range(m, p))
    return up + up[-2::-1]


def cycles_to_genword(c: CycleList) -> GenWord:
    """Express a product of cycles as a word in the adjacent transpositions.

    Each cycle ``(s a2 ... ak)`` is split as ``(s ak) … (s a3)(s a2)``, and each
    swap is expanded by :func:`transposition_word`.
    """
    letters: list[int] = []
    for cyc in c.cycles:
        s = cyc[0]
        for other in reversed(cyc[1:]):
            letters.extend(transposition_word(s, other))
        tick(len(cyc), "F")
    tick(len(letters), "F")
    return GenWord(c.degree, tuple(letters))


# -- text formats ----------------------------------------------------------


def format_cycles_human(c: CycleList) -> str:
    """Compact cycle notation with 1-cycles elided, e.g. ``(1 2 3)(4 5)``."""
    parts = ["(" + " ".join(map(str, cyc)) + ")" for cyc in c.cycles if len(cyc) > 1]
    return "".join(parts) if parts else "()"


def format_cycles(c: CycleList) -> str:
    """Zero-delimited wire form: ``1 2 3 0 4 5 0 6 7 0 0``."""
    return " 0 ".join(" ".join(map(str, cyc)) for cyc in c.cycles) + " 0 0"


def format_cycle_pair(c1: CycleList, c2: CycleList) -> str:
    """Wire form of a two-n-cycle factorization: ``c1 0 0 c2 0 0 0``."""
    left = " 0 ".join(" ".join(map(str, cyc)) for cyc in c1.cycles)
    right = " 0 ".join(" ".join(map(str, cyc)) for cyc in c2.cycles)
    return f"{left} 0 0 {right} 0 0 0"


def _int_tokens(text: str) -> list[int]:
    out = []
    for pos, tok in enumerate(text.split()):
        try:
            out.append(int(tok))
        except ValueError:
            raise MalformedInputError(f"expected an integer, got {tok!r}", position=pos) from None
    return out


def _split_zero_runs(tokens: list[int]) -> list[tuple[list[int], int, int]]:
    """Split tokens into (block, run length of zeros after it, position)."""
    blocks = []
    i = 0
    while i < len(tokens):
        start = i
        while i < len(tokens) and tokens[i] != 0:
            i += 1
        block = tokens[start:i]
        run = 0
        while i < len(tokens) and tokens[i] == 0:
            run += 1
            i += 1
        blocks.append((block, run, start))
    return blocks


def parse_cycles(text: str, degree: int, disjoint: bool = True) -> CycleList:
    """Inverse of :func:`format_cycles`."""
    tokens = _int_tokens(text)
    blocks = _split_zero_runs(tokens)
    if not blocks or blocks[-1][1] != 2:
        raise MalformedInputError("cycle list must end with '0 0'", position=len(tokens))
    cycles = []
    for k, (block, run, pos) in enumerate(blocks):
        if not block:
            raise MalformedInputError("empty cycle", position=pos)
        expected = 2 if k == len(blocks) - 1 else 1
        if run != expected:
            raise MalformedInputError(f"unexpected run of {run} zeros", position=pos + len(block))
        cycles.append(tuple(block))
    return CycleList(degree, tuple(cycles), disjoint=disjoint)


def parse_cycle_pair(text: str, degree: int) -> tuple[CycleList, CycleList]:
    """Inverse of :func:`format_cycle_pair`."""
    tokens = _int_tokens(text)
    blocks = _split_zero_runs(tokens)
    products: list[list[tuple[int, ...]]] = [[]]
    terminated = False
    for block, run, pos in blocks:
        if terminated or not block:
            raise MalformedInputError("malformed cycle pair", position=pos)
        products[-1].append(tuple(block))
        if run == 1:
            continue
        if run == 2 and len(products) == 1:
            products.append([])
        elif run == 3 and len(products) == 2:
            terminated = True
        else:
            raise MalformedInputError(f"unexpected run of {run} zeros", position=pos + len(block))
    if not terminated:
        raise MalformedInputError("cycle pair must end with '0 0 0'", position=len(tokens))
    return CycleList(degree, tuple(products[0])), CycleList(degree, tuple(products[1]))


def format_word(w: GenWord) -> str:
    return " ".join(map(str, w.letters)) if w.letters else "e"


def parse_word(text: str, degree: int) -> GenWord:
    text = text.strip()
    if text in ("", "e"):
        return GenWord(degree, ())
    return GenWord(degree, tuple(_int_tokens(text)))


def word_from_letters(degree: int, letters: Iterable[int]) -> GenWord:
    return GenWord(degree, tuple(letters))


def check_equal(expected: Permutation, actual: Permutation, what: str) -> None:
    if expected != actual:
        raise InvariantBreach(f"{what}: expected {expected}, got {actual}")
