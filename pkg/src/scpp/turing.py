"""A single-tape deterministic Turing machine interpreter.

The tape is infinite to the right. Cell 0 holds the left-end marker ``>``,
input starts at cell 1 and ``_`` is the blank. A transition either writes a
symbol or moves the head (``L``/``R``); every invocation is one step.

>>> m = adder_machine()
>>> r = run(m, "11")
>>> r.output(start=3), r.steps
('10', 5)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import MalformedInputError, StuckMachineError

BLANK = "_"
LEFT_END = ">"
MOVES = ("L", "R")


@dataclass(frozen=True)
class TuringMachine:
    states: frozenset
    alphabet: frozenset
    initial: str
    halting: frozenset
    transitions: dict = field(hash=False)

    def __post_init__(self):
        object.__setattr__(self, "states", frozenset(self.states))
        object.__setattr__(self, "alphabet", frozenset(self.alphabet) | {BLANK, LEFT_END})
        object.__setattr__(self, "halting", frozenset(self.halting))
        if self.initial not in self.states:
            raise MalformedInputError(f"initial state {self.initial!r} is not a state")
        for h in self.halting:
            if h not in self.states:
                raise MalformedInputError(f"halting state {h!r} is not a state")
        for (q, a), (p, act) in self.transitions.items():
            if q not in self.states or p not in self.states:
                raise MalformedInputError(f"transition {q} {a} -> {p} uses an unknown state")
            if a not in self.alphabet:
                raise MalformedInputError(f"transition {q} {a}: symbol not in alphabet")
            if act not in MOVES and act not in self.alphabet:
                raise MalformedInputError(f"transition {q} {a}: bad action {act!r}")
            if a == LEFT_END and act != "R":
                raise MalformedInputError(f"transition {q} {a}: must move right off the left end")
            if act == LEFT_END:
                raise MalformedInputError(f"transition {q} {a}: may not write the left-end symbol")


@dataclass(frozen=True)
class RunResult:
    tape: tuple[str, ...]
    steps: int
    state: str
    head: int
    halted: bool

    @property
    def timed_out(self) -> bool:
        return not self.halted

    def output(self, start: int = 1) -> str:
        return "".join(self.tape[start:]).rstrip(BLANK)


def _input_symbols(text) -> list[str]:
    if isinstance(text, str):
        return text.split() if any(c.isspace() for c in text) else list(text)
    return list(text)


def run(m: TuringMachine, tape_input, step_limit: int = 100_000) -> RunResult:
    """Run ``m`` from its initial state with the head on cell 1."""
    symbols = _input_symbols(tape_input)
    for pos, s in enumerate(symbols):
        if s in (BLANK, LEFT_END) or s not in m.alphabet:
            raise MalformedInputError(f"input symbol {s!r} not allowed", position=pos)
    tape = [LEFT_END] + symbols
    head, state, steps = 1, m.initial, 0
    while state not in m.halting:
        if steps >= step_limit:
            return RunResult(tuple(tape), steps, state, head, False)
        if head >= len(tape):
            tape.append(BLANK)
        sym = tape[head]
        try:
            state, act = m.transitions[(state, sym)]
        except KeyError:
            raise StuckMachineError(f"no transition for state {state!r} on {sym!r} at cell {head}") from None
        steps += 1
        if act == "R":
            head += 1
        elif act == "L":
            head = max(0, head - 1)
        else:
            tape[head] = act
    while len(tape) > 1 and tape[-1] == BLANK:
        tape.pop()
    return RunResult(tuple(tape), steps, state, head, True)


def _machine(table: dict, initial: str, halting: set, alphabet) -> TuringMachine:
    states = {initial} | set(halting)
    for (q, _), (p, _) in table.items():
        states |= {q, p}
    return TuringMachine(frozenset(states), frozenset(alphabet), initial, frozenset(halting), table)


def adder_machine() -> TuringMachine:
    """Add two binary digits on cells 1 and 2, writing the sum from cell 3."""
    t = {
        ("s_i", "1"): ("s_c", "R"),
        ("s_i", "0"): ("s_nc", "R"),
        ("s_c", "1"): ("s_1", "R"),
        ("s_1", BLANK): ("s_1", "1"),
        ("s_1", "1"): ("s_0", "R"),
        ("s_0", BLANK): ("s_f", "0"),
        ("s_c", "0"): ("s_1b", "R"),
        ("s_nc", "1"): ("s_1b", "R"),
        ("s_nc", "0"): ("s_0b", "R"),
        ("s_1b", BLANK): ("s_f", "1"),
        ("s_0b", BLANK): ("s_f", "0"),
    }
    return _machine(t, "s_i", {"s_f"}, {"0", "1"})


def ripple_adder_machine() -> TuringMachine:
    """Add ``a#b#`` (equal lengths, least significant digit first).

    Each round marks the next digit of ``a`` with ``X`` and of ``b`` with
    ``Y``, appends the sum digit after the second ``#`` and walks back to the
    left end; the carry lives in the state. A final carry becomes one more digit.
    """
    t: dict = {}
    digits = ("0", "1")
    for c in (0, 1):
        seek = f"seekA{c}"
        t[(seek, "X")] = (seek, "R")
        t[(seek, "#")] = ("fin", "R") if c else ("halt", "#")
        for d in digits:
            got = f"gotA{c}{d}"
            t[(seek, d)] = (got, "X")
            for s in ("X", "0", "1"):
                t[(got, s)] = (got, "R")
            t[(got, "#")] = (f"seekB{c}{d}", "R")
            t[(f"seekB{c}{d}", "Y")] = (f"seekB{c}{d}", "R")
            for e in digits:
                total = c + int(d) + int(e)
                gotb = f"gotB{total % 2}{total // 2}"
                t[(f"seekB{c}{d}", e)] = (gotb, "Y")
        back = f"back{c}"
        for s in ("0", "1", "#", "X", "Y"):
            t[(back, s)] = (back, "L")
        t[(back, LEFT_END)] = (seek, "R")
    for s, c in itertools.product((0, 1), (0, 1)):
        gotb, out = f"gotB{s}{c}", f"out{s}{c}"
        for sym in ("Y", "0", "1"):
            t[(gotb, sym)] = (gotb, "R")
        t[(gotb, "#")] = (out, "R")
        for sym in ("0", "1"):
            t[(out, sym)] = (out, "R")
        t[(out, BLANK)] = (f"back{c}", str(s))
    for sym in ("0", "1", "#", "Y"):
        t[("fin", sym)] = ("fin", "R")
    t[("fin", BLANK)] = ("halt", "1")
    return _machine(t, "seekA0", {"halt"}, {"0", "1", "#", "X", "Y"})


def ripple_sum(result: RunResult) -> str:
    """Sum digits written by :func:`ripple_adder_machine`, least significant first."""
    tape = "".join(result.tape).rstrip(BLANK)
    return tape.split("#", 2)[2] if tape.count("#") >= 2 else ""


# -- machine files ------------------------------------------------------------


def format_machine(m: TuringMachine) -> str:
    lines = [f"initial {m.initial}", "halt " + " ".join(sorted(m.halting))]
    extra = sorted(m.alphabet - {BLANK, LEFT_END})
    lines.append("alphabet " + " ".join(extra))
    for (q, a), (p, act) in sorted(m.transitions.items()):
        lines.append(f"{q} {a} -> {p} {act}")
    return "\n".join(lines) + "\n"


def parse_machine(text: str) -> TuringMachine:
    """Read ``state symbol -> state action`` lines plus ``initial``/``halt``/``alphabet``.

    Lines starting with ``#`` are comments.
    """
    initial = None
    halting: set = set()
    alphabet: set = set()
    table: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        # whole-line comments only: '#' is also a usable tape symbol
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        head = parts[0]
        if head == "initial" and len(parts) == 2:
            initial = parts[1]
        elif head == "halt" and len(parts) >= 2:
            halting.update(parts[1:])
        elif head == "alphabet":
            alphabet.update(parts[1:])
        elif len(parts) == 5 and parts[2] == "->":
            q, a, _, p, act = parts
            if (q, a) in table:
                raise MalformedInputError(f"duplicate transition for ({q}, {a}) on line {lineno}", position=lineno)
            table[(q, a)] = (p, act)
            alphabet.add(a)
            if act not in MOVES:
                alphabet.add(act)
        else:
            raise MalformedInputError(f"cannot parse line {lineno}: {raw.strip()!r}", position=lineno)
    if initial is None or not halting:
        raise MalformedInputError("machine file needs 'initial' and 'halt' directives")
    return _machine(table, initial, halting, alphabet - {BLANK, LEFT_END})
