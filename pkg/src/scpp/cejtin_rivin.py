"""Even permutations as products of two n-cycles, and as simple commutators.

The factorization peels cycles off the disjoint decomposition until one of
three closed-form cases remains:

* a single odd cycle ``σ``: both factors are ``σ^((k+1)/2)``, written as that
  many copies of the cycle;
* two disjoint ``2m``-cycles: both factors are their interleaving;
* a ``2s``-cycle and a ``2t``-cycle with ``s < t``: explicit index formulas.

Peeled pieces are glued back with the transposition joining the maxima of
the two supports, ``c1 = c11 c21 (u v)`` and ``c2 = (u v) c22 c12``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import opcount
from .errors import InvariantBreach, MalformedInputError, PromiseViolation
from .opcount import tick
from .permutations import (
    CycleList,
    GenWord,
    NCycle,
    Permutation,
    conjugator_of_ncycles,
    cycle_decomposition,
    cycles_to_genword,
    cycles_to_permutation,
    format_word,
    is_even,
    reverse_ncycle,
    word_to_permutation,
)

Cycle = tuple[int, ...]


def _odd_cycle_power(cyc: Cycle) -> list[Cycle]:
    # (k+1)/2 copies: c1 c2 = σ^(k+1) = σ, and σ^((k+1)/2) is again a k-cycle
    return [cyc] * ((len(cyc) + 1) // 2)


def _interleave(a: Cycle, b: Cycle) -> Cycle:
    out = []
    for x, y in zip(a, b):
        out.append(x)
        out.append(y)
    return tuple(out)


def _unequal_even_pair(short: Cycle, long: Cycle) -> tuple[Cycle, Cycle]:
    """Two n-cycles whose product is ``short · long`` (lengths 2s < 2t)."""
    s2, t2 = len(short), len(long)
    n = s2 + t2
    idx = [0] * (n + 1)  # idx[k] = i_k, 1-based
    for j, x in enumerate(short, start=1):
        idx[2 * j - 1] = x
    for j in range(1, s2 + 1):
        idx[2 * j] = long[j - 1]
    gap = (t2 - s2) // 2
    for j in range(gap):
        idx[2 * s2 + 2 + 2 * j] = long[s2 + j]
        idx[2 * s2 + 1 + 2 * j] = long[s2 + gap + j]
    c1 = (idx[1],) + tuple(idx[2 * s2 + 1 : n + 1]) + tuple(idx[2 : 2 * s2 + 1])
    c2 = tuple(idx[1 : n + 1])
    return c1, c2


def _apply_cycles(cycles, x):
    for cyc in reversed(cycles):
        if x in cyc:
            x = cyc[(cyc.index(x) + 1) % len(cyc)]
    return x


def _check_local(piece: list[Cycle], c1: list[Cycle], c2: list[Cycle], branch: str) -> None:
    support = [x for cyc in piece for x in cyc]
    for x in support:
        if _apply_cycles(c1 + c2, x) != _apply_cycles(piece, x):
            raise InvariantBreach(f"{branch} factorization of {piece} is wrong at {x}")


def _closed_form(cycles: list[Cycle]):
    """Return (c1, c2, branch) when no peeling is needed, else None."""
    if len(cycles) == 1 and len(cycles[0]) % 2 == 1:
        c = _odd_cycle_power(cycles[0])
        tick(len(cycles[0]), "C")
        return c, list(c), "odd-cycle"
    if len(cycles) == 2 and len(cycles[0]) % 2 == 0 and len(cycles[1]) % 2 == 0:
        a, b = cycles
        tick(len(a) + len(b), "C")
        if len(a) == len(b):
            c = _interleave(a, b)
            return [c], [c], "equal-even-pair"
        short, long = (a, b) if len(a) < len(b) else (b, a)
        c1, c2 = _unequal_even_pair(short, long)
        _check_local(cycles, [c1], [c2], "unequal-even-pair")
        return [c1], [c2], "unequal-even-pair"
    return None


def two_ncycle_product(d: CycleList, trace: list | None = None) -> tuple[CycleList, CycleList]:
    """Write the even permutation ``d`` as ``c1 · c2`` with both factors n-cycles.

    ``d`` must be a disjoint decomposition; its cycles (1-cycles included)
    define the support the factors cycle through. If ``trace`` is a list, one
    dict per dispatch step is appended to it.
    """
    if not d.disjoint:
        raise MalformedInputError("two_ncycle_product needs a disjoint decomposition")
    if not d.cycles:
        raise MalformedInputError("empty cycle decomposition")
    if sum(len(c) - 1 for c in d.cycles) % 2:
        raise PromiseViolation("promise violated: permutation is odd")

    rest = list(d.cycles)
    pieces = []
    depth = 0
    while True:
        tick(len(rest), "C")
        closed = _closed_form(rest)
        if closed is not None:
            break
        odd = next((c for c in rest if len(c) % 2 == 1), None)
        if odd is not None:
            rest.remove(odd)
            piece, branch = [odd], "peel-odd"
        else:
            piece, rest, branch = rest[:2], rest[2:], "peel-even"
        inner = _closed_form(piece)
        pieces.append((inner[0], inner[1], max(max(c) for c in piece)))
        if trace is not None:
            trace.append({"depth": depth, "branch": branch, "piece_branch": inner[2],
                          "support": sorted(x for c in piece for x in c)})
        depth += 1

    c1, c2, branch = closed
    if trace is not None:
        trace.append({"depth": depth, "branch": branch,
                      "support": sorted(x for c in rest for x in c)})
    v = max(max(c) for c in rest)
    for c11, c12, u in reversed(pieces):
        joint = (u, v)
        c1 = c11 + c1 + [joint]
        c2 = [joint] + c2 + c12
        tick(len(c1) + len(c2), "C")
        v = max(u, v)
    return CycleList(d.degree, tuple(c1)), CycleList(d.degree, tuple(c2))


@dataclass(frozen=True)
class CommutatorSolution:
    """Every intermediate value of the commutator pipeline for one input word."""

    word: GenWord
    permutation: Permutation
    decomposition: CycleList
    c1: CycleList
    c2: CycleList
    C1: NCycle
    C2: NCycle
    C3: NCycle
    tau: CycleList
    x: GenWord
    y: GenWord
    x_inverse: GenWord
    trace: list = field(default_factory=list, compare=False)

    @property
    def y_inverse(self) -> GenWord:
        return self.y.reversed()

    def commutator_word(self) -> GenWord:
        return self.x + self.y + self.x_inverse + self.y_inverse

    def output_string(self) -> str:
        """``F(C1) 0 F(τ) 0 F(C3) 0 F(τ)^R 0 0`` with empty words left blank."""
        parts = [self.x, self.y, self.x_inverse, self.y_inverse]
        body = " 0 ".join(" ".join(map(str, w.letters)) for w in parts)
        return " ".join((body + " 0 0").split())


def scpp_solve_detailed(w: GenWord, verify: bool = True) -> CommutatorSolution:
    sigma = word_to_permutation(w)
    if not is_even(sigma):
        raise PromiseViolation("promise violated: input permutation is odd")
    d = cycle_decomposition(sigma)
    trace: list = []
    c1, c2 = two_ncycle_product(d, trace)
    C1 = NCycle.from_cycles(cycle_decomposition(cycles_to_permutation(c1)))
    C2 = NCycle.from_cycles(cycle_decomposition(cycles_to_permutation(c2)))
    C3 = reverse_ncycle(C1)
    tau = conjugator_of_ncycles(C3, C2)
    x = cycles_to_genword(C1.as_cycles())
    y = cycles_to_genword(tau)
    x_inv = cycles_to_genword(C3.as_cycles())
    sol = CommutatorSolution(w, sigma, d, c1, c2, C1, C2, C3, tau, x, y, x_inv, trace)
    if verify:
        with opcount.suspended():
            got = word_to_permutation(sol.commutator_word())
        if got != sigma:
            raise InvariantBreach(
                f"commutator of {format_word(x)} and {format_word(y)} does not evaluate to the input"
            )
    return sol


def scpp_solve(w: GenWord) -> tuple[GenWord, GenWord]:
    """Words ``x, y`` with ``x y x⁻¹ y⁻¹`` equal to ``w`` in ``S_n``."""
    sol = scpp_solve_detailed(w)
    return sol.x, sol.y


def scpp_solve_permutation(p: Permutation) -> tuple[GenWord, GenWord]:
    return scpp_solve(cycles_to_genword(cycle_decomposition(p)))
