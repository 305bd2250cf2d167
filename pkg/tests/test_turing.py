import itertools

import pytest

from scpp.bench import fit_slope
from scpp.errors import MalformedInputError, StuckMachineError
from scpp.turing import (
    BLANK,
    TuringMachine,
    adder_machine,
    format_machine,
    parse_machine,
    ripple_adder_machine,
    ripple_sum,
    run,
)


@pytest.mark.parametrize("a, b, total", [("0", "0", "0"), ("0", "1", "1"), ("1", "0", "1"), ("1", "1", "10")])
def test_one_digit_adder(a, b, total):
    r = run(adder_machine(), a + b)
    assert r.halted and r.state == "s_f"
    assert r.output(start=3) == total
    assert r.steps <= 5
    assert r.tape[1:3] == (a, b)


def test_stuck_machine():
    with pytest.raises(StuckMachineError, match="s_i"):
        run(adder_machine(), "")


def test_timeout_is_reported():
    spin = TuringMachine({"a", "h"}, {"0"}, "a", {"h"}, {("a", BLANK): ("a", "R"), ("a", "0"): ("a", "R")})
    r = run(spin, "0", step_limit=50)
    assert r.timed_out and r.steps == 50


def test_left_end_rules():
    with pytest.raises(MalformedInputError, match="left end"):
        TuringMachine({"a", "h"}, set(), "a", {"h"}, {("a", ">"): ("h", "L")})
    with pytest.raises(MalformedInputError):
        TuringMachine({"a", "h"}, set(), "a", {"h"}, {("a", BLANK): ("h", ">")})


def test_bad_input_symbol():
    with pytest.raises(MalformedInputError):
        run(adder_machine(), "12")


def test_head_stays_on_tape():
    back = TuringMachine({"a", "b", "h"}, {"0"}, "a", {"h"},
                         {("a", "0"): ("b", "L"), ("b", ">"): ("h", "R")})
    r = run(back, "0")
    assert r.halted and r.head == 1 and r.steps == 2


def _lsb(value, width):
    return format(value, f"0{width}b")[::-1]


@pytest.mark.parametrize("width", [1, 2, 3])
def test_ripple_adder_exhaustive(width):
    m = ripple_adder_machine()
    for a, b in itertools.product(range(2 ** width), repeat=2):
        r = run(m, f"{_lsb(a, width)}#{_lsb(b, width)}#")
        assert r.halted
        assert int(ripple_sum(r)[::-1], 2) == a + b


def test_ripple_adder_steps_grow_quadratically():
    m = ripple_adder_machine()
    widths = [4, 8, 16, 32]
    steps = [run(m, f"{'1' * w}#{'1' * w}#").steps for w in widths]
    slope = fit_slope(widths, steps)
    assert 1.5 < slope < 2.2


def test_machine_file_round_trip():
    for m in (adder_machine(), ripple_adder_machine()):
        again = parse_machine(format_machine(m))
        assert again == m
        assert again.transitions == m.transitions


def test_parse_machine_text():
    text = "# flips one bit\ninitial a\nhalt h\na 0 -> h 1\na 1 -> h 0\n"
    m = parse_machine(text)
    assert run(m, "0").output() == "1"


@pytest.mark.parametrize("text", ["initial a\na 0 -> h 1\n", "initial a\nhalt h\na 0 h 1\n",
                                  "initial a\nhalt h\na 0 -> h 1\na 0 -> h 0\n"])
def test_parse_machine_errors(text):
    with pytest.raises(MalformedInputError):
        parse_machine(text)
