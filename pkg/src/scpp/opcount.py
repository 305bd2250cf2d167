"""Abstract operation counter.

Each pseudo-code statement of the commutator pipeline (read, write, assign,
compare, loop step, call) is charged one tick. Counting is off unless a
:func:`counting` block is active, and the active counter lives in a context
variable so concurrent threads and tasks never share one.
"""

from __future__ import annotations

import contextlib
import contextvars
from collections import Counter
from dataclasses import dataclass, field

_active: contextvars.ContextVar[OpCounter | None] = contextvars.ContextVar(
    "scpp_op_counter", default=None
)


@dataclass
class OpCounter:
    total: int = 0
    by_label: Counter = field(default_factory=Counter)

    def add(self, amount: int, label: str) -> None:
        self.total += amount
        self.by_label[label] += amount

    def merge(self, other: OpCounter) -> None:
        self.total += other.total
        self.by_label.update(other.by_label)


def tick(amount: int = 1, label: str = "op") -> None:
    counter = _active.get()
    if counter is not None:
        counter.add(amount, label)


@contextlib.contextmanager
def suspended():
    """Stop charging ticks inside the block (used for self-checks)."""
    token = _active.set(None)
    try:
        yield
    finally:
        _active.reset(token)


@contextlib.contextmanager
def counting():
    """Collect operation counts for the enclosed block.

    >>> from scpp.permutations import word_to_permutation, GenWord
    >>> with counting() as ops:
    ...     _ = word_to_permutation(GenWord(3, (1, 2)))
    >>> ops.total > 0
    True
    """
    counter = OpCounter()
    token = _active.set(counter)
    try:
        yield counter
    finally:
        _active.reset(token)
