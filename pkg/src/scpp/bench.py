"""Operation-count scaling of the symmetric-group commutator solver."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

import numpy as np

from .cejtin_rivin import scpp_solve
from .opcount import OpCounter, counting
from .permutations import GenWord

DEFAULT_WORD = (6, 4, 1, 2)


@dataclass(frozen=True)
class BenchRow:
    n: int
    length: int
    ops: int
    seconds: float


def measure(w: GenWord, reps: int = 1) -> BenchRow:
    """Operation count of one solve (it is deterministic) and mean wall time."""
    merged = OpCounter()
    elapsed = 0.0
    for _ in range(reps):
        start = time.perf_counter()
        with counting() as ops:
            scpp_solve(w)
        elapsed += time.perf_counter() - start
        merged.merge(ops)
    return BenchRow(w.degree, len(w), merged.total // reps, elapsed / reps)


def random_even_word(n: int, k: int, seed: int = 0) -> GenWord:
    if k % 2:
        raise ValueError("an even permutation needs an even word length here")
    rng = random.Random(seed)
    return GenWord(n, tuple(rng.randint(1, n - 1) for _ in range(k)))


def scaling_in_n(n_list, word=DEFAULT_WORD, reps: int = 1) -> list[BenchRow]:
    return [measure(GenWord(n, tuple(word)), reps) for n in n_list]


def scaling_in_k(k_list, n: int = 16, reps: int = 1, seed: int = 0) -> list[BenchRow]:
    return [measure(random_even_word(n, k, seed), reps) for k in k_list]


def fit_slope(xs, ys) -> float | None:
    """Least-squares slope of ``log y`` against ``log x``; ``None`` for fewer than two points."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if len(np.unique(xs)) < 2:
        return None
    slope, _ = np.polyfit(np.log(xs), np.log(ys), 1)
    return float(slope)


def format_table(rows: list[BenchRow], slope: float | None) -> str:
    lines = [f"{'n':>6} {'length':>8} {'ops':>12} {'seconds':>10}"]
    for r in rows:
        lines.append(f"{r.n:>6} {r.length:>8} {r.ops:>12} {r.seconds:>10.5f}")
    lines.append("slope: undefined" if slope is None else f"slope: {slope:.3f}")
    return "\n".join(lines) + "\n"
