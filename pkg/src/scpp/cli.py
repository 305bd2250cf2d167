"""Command-line interface.

Exit codes: 0 success, 1 promise violation, 2 malformed input (including a
stuck Turing machine), 3 internal invariant breach or exceeded iteration cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bench
from .braid_scpp import (
    probabilistic_scpp_search,
    pure_braid_factorization,
    scpp_permutation_braids,
)
from .braids import braid_equal, format_braid, parse_braid, rgnf
from .cejtin_rivin import scpp_solve_detailed, two_ncycle_product
from .errors import (
    InvariantBreach,
    MalformedInputError,
    NonTerminationError,
    PromiseViolation,
    StuckMachineError,
)
from .permutations import (
    cycle_decomposition,
    format_cycle_pair,
    format_cycles,
    format_word,
    parse_cycles,
    parse_word,
    word_to_permutation,
)
from .rewriting import (
    completed_sn_system,
    format_rules,
    knuth_bendix_complete,
    alphabet_of,
    parse_equations,
    canonical_form_sn,
)
from .turing import adder_machine, parse_machine, ripple_adder_machine, run

STRANDS_ENV = "SCPP_STRANDS"


def _size(args) -> int:
    if args.size is not None:
        return args.size
    env = os.environ.get(STRANDS_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise MalformedInputError(f"{STRANDS_ENV}={env!r} is not an integer") from None
    raise MalformedInputError("the degree is required (--degree/--strands or " + STRANDS_ENV + ")")


def _text(value: str | None) -> str:
    return sys.stdin.read() if value is None else value


def _emit(args, text: str, data: dict) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


# -- perm ---------------------------------------------------------------------


def cmd_perm_solve(args) -> int:
    n = _size(args)
    sol = scpp_solve_detailed(parse_word(_text(args.word), n))
    data = {
        "degree": n,
        "x": list(sol.x.letters),
        "y": list(sol.y.letters),
        "x_inverse": list(sol.x_inverse.letters),
        "y_inverse": list(sol.y_inverse.letters),
        "permutation": list(sol.permutation.images),
        "decomposition": format_cycles(sol.decomposition),
        "c1_c2": format_cycle_pair(sol.c1, sol.c2),
        "C1": list(sol.C1.entries),
        "C2": list(sol.C2.entries),
        "C3": list(sol.C3.entries),
        "tau": format_cycles(sol.tau),
        "branches": sol.trace,
        "depth": max(t["depth"] for t in sol.trace),
        "output": sol.output_string(),
    }
    _emit(args, sol.output_string(), data)
    return 0


def cmd_perm_decompose(args) -> int:
    n = _size(args)
    p = word_to_permutation(parse_word(_text(args.word), n))
    d = cycle_decomposition(p)
    _emit(args, format_cycles(d), {"degree": n, "images": list(p.images),
                                   "cycles": [list(c) for c in d.cycles]})
    return 0


def cmd_perm_two_cycles(args) -> int:
    n = _size(args)
    d = parse_cycles(_text(args.cycles), n, disjoint=True)
    trace: list = []
    c1, c2 = two_ncycle_product(d, trace)
    _emit(args, format_cycle_pair(c1, c2), {
        "degree": n, "c1": [list(c) for c in c1.cycles], "c2": [list(c) for c in c2.cycles],
        "branches": trace, "depth": max(t["depth"] for t in trace),
    })
    return 0


def cmd_perm_canonical(args) -> int:
    n = _size(args)
    w = canonical_form_sn(parse_word(_text(args.word), n))
    _emit(args, format_word(w), {"degree": n, "word": list(w.letters)})
    return 0


# -- braid --------------------------------------------------------------------


def cmd_braid_rgnf(args) -> int:
    n = _size(args)
    nf = rgnf(parse_braid(_text(args.word), n))
    _emit(args, str(nf), {"strands": n, "omega_power": nf.omega_power,
                          "factors": [list(f.canonical_word.letters) for f in nf.factors]})
    return 0


def cmd_braid_equal(args) -> int:
    n = _size(args)
    eq = braid_equal(parse_braid(args.a, n), parse_braid(args.b, n))
    _emit(args, "equal" if eq else "not equal", {"strands": n, "equal": eq})
    return 0


def _commutator_string(x, y) -> str:
    words = [x, y, x.inverse(), y.inverse()]
    return " ".join((" 0 ".join(" ".join(map(str, w.letters)) for w in words) + " 0 0").split())


def cmd_braid_scpp_k(args) -> int:
    n = _size(args)
    cand = scpp_permutation_braids(parse_braid(_text(args.word), n))
    if cand is None:
        _emit(args, "0", {"strands": n, "in_k": False})
    else:
        _emit(args, _commutator_string(cand.x, cand.y), {
            "strands": n, "in_k": True, "x": format_braid(cand.x), "y": format_braid(cand.y)})
    return 0


def cmd_braid_factor(args) -> int:
    n = _size(args)
    p, c = pure_braid_factorization(parse_braid(_text(args.word), n))
    text = f"p: {format_braid(p)}\nx: {format_braid(c.x)}\ny: {format_braid(c.y)}"
    _emit(args, text, {"strands": n, "p": format_braid(p),
                       "x": format_braid(c.x), "y": format_braid(c.y)})
    return 0


def cmd_braid_search(args) -> int:
    n = _size(args)
    trace = probabilistic_scpp_search(parse_braid(_text(args.word), n), args.budget, args.seed)
    if args.json:
        print(trace.to_json())
    else:
        sys.stdout.write(trace.to_lines())
    return 0


# -- rewrite / tm / bench -------------------------------------------------------


def cmd_rewrite_complete(args) -> int:
    if args.sn is not None:
        system = completed_sn_system(args.sn)
    else:
        pairs = parse_equations(_text(args.rules_text))
        system = knuth_bendix_complete(alphabet_of(pairs), pairs, max_rules=args.max_rules)
    text = format_rules(system).rstrip("\n")
    _emit(args, text, {"rules": [[list(r.lhs), list(r.rhs)] for r in system.rules]})
    return 0


def _load_machine(spec: str):
    if spec == "adder":
        return adder_machine(), 3
    if spec == "ripple":
        return ripple_adder_machine(), 1
    with open(spec) as fh:
        return parse_machine(fh.read()), 1


def cmd_tm_run(args) -> int:
    m, start = _load_machine(args.machine)
    if args.output_start is not None:
        start = args.output_start
    r = run(m, args.input, args.limit)
    text = f"{r.output(start)}\nsteps {r.steps}" + ("" if r.halted else "\ntimeout")
    _emit(args, text, {"output": r.output(start), "tape": "".join(r.tape), "steps": r.steps,
                       "halted": r.halted, "state": r.state})
    return 0


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise MalformedInputError(f"bad integer list {text!r}") from None


def cmd_bench_scaling(args) -> int:
    if args.op != "scpp":
        raise MalformedInputError(f"unknown benchmark op {args.op!r}")
    if args.k_list:
        rows = bench.scaling_in_k(_int_list(args.k_list), n=args.n, reps=args.reps)
        slope = bench.fit_slope([r.length for r in rows], [r.ops for r in rows])
    else:
        rows = bench.scaling_in_n(_int_list(args.n_list), reps=args.reps)
        slope = bench.fit_slope([r.n for r in rows], [r.ops for r in rows])
    data = {"rows": [r.__dict__ for r in rows], "slope": slope}
    _emit(args, bench.format_table(rows, slope).rstrip("\n"), data)
    return 0


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")
    sized = argparse.ArgumentParser(add_help=False)
    sized.add_argument("-n", "--degree", "--strands", dest="size", type=int,
                       help=f"degree of S_n / strand count of B_n (default ${STRANDS_ENV})")

    parser = argparse.ArgumentParser(prog="scpp", description="Simple commutators in S_n and B_n.")
    groups = parser.add_subparsers(dest="group", required=True)

    def add(group, name, func, parents, help_text):
        p = group.add_parser(name, parents=parents, help=help_text)
        p.set_defaults(func=func)
        return p

    perm = groups.add_parser("perm", help="symmetric group").add_subparsers(dest="cmd", required=True)
    p = add(perm, "solve", cmd_perm_solve, [common, sized], "write an even permutation as [x, y]")
    p.add_argument("--word", help="generator word (default: stdin)")
    p = add(perm, "decompose", cmd_perm_decompose, [common, sized], "disjoint cycles of a word")
    p.add_argument("--word")
    p = add(perm, "two-cycles", cmd_perm_two_cycles, [common, sized], "product of two n-cycles")
    p.add_argument("--cycles", help="cycle list '1 2 3 0 4 5 0 0' (default: stdin)")
    p = add(perm, "canonical", cmd_perm_canonical, [common, sized], "ShortLex-least equivalent word")
    p.add_argument("--word")

    braid = groups.add_parser("braid", help="braid group").add_subparsers(dest="cmd", required=True)
    p = add(braid, "rgnf", cmd_braid_rgnf, [common, sized], "right-greedy normal form")
    p.add_argument("--word")
    p = add(braid, "equal", cmd_braid_equal, [common, sized], "decide braid equality")
    p.add_argument("a")
    p.add_argument("b")
    p = add(braid, "scpp-k", cmd_braid_scpp_k, [common, sized], "commutator of permutation braids, or 0")
    p.add_argument("--word")
    p = add(braid, "factor", cmd_braid_factor, [common, sized], "pure braid times a commutator")
    p.add_argument("--word")
    p = add(braid, "search", cmd_braid_search, [common, sized], "seeded random rewrite search")
    p.add_argument("--word")
    p.add_argument("--budget", type=int, default=8, help="number of rounds M")
    p.add_argument("--seed", type=int, default=0)

    rewrite = groups.add_parser("rewrite", help="string rewriting").add_subparsers(dest="cmd", required=True)
    p = add(rewrite, "complete", cmd_rewrite_complete, [common], "Knuth-Bendix completion")
    p.add_argument("--sn", type=int, help="use the presentation of S_n")
    p.add_argument("--rules", dest="rules_text", help="equations 'lhs -> rhs' per line, any orientation (default: stdin)")
    p.add_argument("--max-rules", type=int, default=100_000)

    tm = groups.add_parser("tm", help="Turing machines").add_subparsers(dest="cmd", required=True)
    p = add(tm, "run", cmd_tm_run, [common], "run a machine")
    p.add_argument("--machine", default="adder", help="'adder', 'ripple' or a machine file")
    p.add_argument("--input", required=True, help="input symbols, e.g. '1 1' or '11'")
    p.add_argument("--limit", type=int, default=100_000)
    p.add_argument("--output-start", type=int, help="first tape cell of the output")

    bn = groups.add_parser("bench", help="benchmarks").add_subparsers(dest="cmd", required=True)
    p = add(bn, "scaling", cmd_bench_scaling, [common], "operation-count scaling table")
    p.add_argument("--op", default="scpp")
    p.add_argument("--n-list", default="8,16,32,64,128")
    p.add_argument("--k-list", help="vary word length at fixed --n instead of the degree")
    p.add_argument("--n", type=int, default=16)
    p.add_argument("--reps", type=int, default=1)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PromiseViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (MalformedInputError, StuckMachineError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InvariantBreach, NonTerminationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
