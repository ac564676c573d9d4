"""Command-line interface.

Subcommands: beatty, moves, grundy, pvs, verify, conjecture, closeness,
paper-values, play.  Exit codes are a stable scripting contract:
0 = verified / consistent / normal output, 1 = counterexample found,
2 = usage error.  Output is deterministic; CSV rows are plain integers
(or the move-kind token) and JSON sets are arrays of arrays.

The table cache directory can be set per call with --cache-dir or globally
with the WYTHOFF_CACHE_DIR environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .beatty import beatty_pairs
from .formulas import FORMULA_IDS, S1_WK_SHIFT, formula_set
from .grundy import grundy_table
from .rulesets import (
    T_INFINITY,
    TK,
    WK,
    WK_PRIME,
    WKL,
    WYTHOFF,
    RulesetSpec,
    illegal_reason,
    move_list,
    moves,
    normalize,
    wk,
)
from .verify import (
    CONJECTURE_IDS,
    THEOREM_IDS,
    TableCache,
    check_reference_values,
    closeness_check,
    explore_conjecture,
    s1_coincidence_check,
    verify_theorem,
)

_FAMILY_TOKENS = {
    "wythoff": WYTHOFF,
    "wk": WK,
    "wkprime": WK_PRIME,
    "wkl": WKL,
    "tk": TK,
    "tinf": T_INFINITY,
}

PLAY_MAX_START = 2000


def _int_or_inf(text: str):
    if text == "inf":
        return "inf"
    return int(text)


def _ruleset_from_args(args) -> RulesetSpec:
    return RulesetSpec(_FAMILY_TOKENS[args.family],
                       k=getattr(args, "k", None), l=getattr(args, "l", None))


def _cache_from_args(args) -> TableCache:
    return TableCache(directory=args.cache_dir)


def _write(text: str, args) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_rows(header: str, rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([list(r) for r in rows]) + "\n"
    lines = [header]
    lines += [",".join(str(x) for x in row) for row in rows]
    return "\n".join(lines) + "\n"


def _cmd_beatty(args) -> int:
    rows = beatty_pairs(args.n)
    _write(_render_rows("n,a,b", rows, args.format), args)
    return 0


def _cmd_moves(args) -> int:
    rs = _ruleset_from_args(args)
    p = normalize(args.a, args.b)
    rows = [(m.kind, m.amount, m.target[0], m.target[1]) for m in move_list(rs, p)]
    _write(_render_rows("kind,s,a,b", rows, args.format), args)
    return 0


def _cmd_grundy(args) -> int:
    rs = _ruleset_from_args(args)
    if args.cache_dir:
        table = _cache_from_args(args).get(rs, args.n)
    else:
        table = grundy_table(rs, args.n)
    values = table.values
    rows = [(a, b, int(values[a, b]))
            for a in range(args.n + 1) for b in range(a, args.n + 1)]
    _write(_render_rows("a,b,g", rows, args.format), args)
    return 0


def _cmd_pvs(args) -> int:
    base = None
    if args.formula == S1_WK_SHIFT:
        # the shift builds on the one-value set of wk(k-2), taken from the engine
        if args.k is None or args.k < 2 or args.n < 2:
            raise ValueError("s1_wk_shift needs k >= 2 and a bound >= 2")
        base = _cache_from_args(args).get(wk(args.k - 2), args.n - 2).g_set(1)
        gset = formula_set(args.formula, args.n, base=base)
    else:
        gset = formula_set(args.formula, args.n, k=args.k, l=args.l)
    _write(_render_rows("a,b", gset.positions, args.format), args)
    return 0


def _report_exit(report, args) -> int:
    _write(report.to_json() + "\n", args)
    return 0 if report.ok else 1


def _cmd_verify(args) -> int:
    report = verify_theorem(args.theorem, bound=args.n, k=args.k, l=args.l,
                            cache=_cache_from_args(args))
    return _report_exit(report, args)


def _cmd_conjecture(args) -> int:
    report = explore_conjecture(args.id, bound=args.n, k=args.k,
                                kprime=args.kprime, l=args.l,
                                cache=_cache_from_args(args))
    return _report_exit(report, args)


def _cmd_closeness(args) -> int:
    cache = _cache_from_args(args)
    if args.l % 2 == 1:
        report = closeness_check(args.k, args.l, bound=args.n, cache=cache)
    else:
        report = s1_coincidence_check(args.k, args.l, bound=args.n, cache=cache)
    return _report_exit(report, args)


def _cmd_paper_values(args) -> int:
    return _report_exit(check_reference_values(cache=_cache_from_args(args)), args)


def _engine_move(rs, table, pos):
    options = sorted(moves(rs, pos))
    winning = [q for q in options if table.value(*q) == 0]
    if winning:
        return winning[0]
    # losing side: leave the opponent as few options as possible
    return min(options, key=lambda q: (len(moves(rs, q)), q))


def _cmd_play(args) -> int:
    rs = _ruleset_from_args(args)
    pos = normalize(args.a, args.b)
    if pos[1] > PLAY_MAX_START:
        raise ValueError(f"play supports starting positions up to {PLAY_MAX_START}")
    table = grundy_table(rs, pos[1])
    start_value = table.value(*pos)
    print(f"playing {rs.label()} from ({pos[0]},{pos[1]})")
    if start_value == 0:
        print("this is a P-position: with optimal play, the player to move loses")
    else:
        print(f"this is an N-position (nim-value {start_value}): "
              "the player to move can force a win")
    if pos == (0, 0):
        print("no moves; previous player wins")
        return 0
    while True:
        try:
            line = input(f"your move from ({pos[0]},{pos[1]}) — "
                         "enter a target as 'a b', or q to quit: ").strip()
        except EOFError:
            print("bye")
            return 0
        if line in ("q", "quit", "exit"):
            print("bye")
            return 0
        parts = line.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            print("enter two numbers, e.g. '3 5', or q to quit")
            continue
        x, y = int(parts[0]), int(parts[1])
        if x < 0 or y < 0:
            print("pile sizes cannot be negative")
            continue
        target = normalize(x, y)
        reason = illegal_reason(rs, pos, target)
        if reason:
            print(f"illegal move: {reason}")
            continue
        pos = target
        if pos == (0, 0):
            print("you took the last tokens; the engine cannot move — you win")
            return 0
        reply = _engine_move(rs, table, pos)
        if table.value(*pos) == 0:
            # by the mex axioms no option of a zero position is zero
            assert table.value(*reply) != 0, "engine attempted a zero-to-zero move"
        print(f"engine moves to ({reply[0]},{reply[1]})")
        pos = reply
        if pos == (0, 0):
            print("the engine took the last tokens; you cannot move — the engine wins")
            return 0


def _add_io_args(sub, formats=True, output=True):
    if formats:
        sub.add_argument("--format", choices=("csv", "json"), default="csv")
    if output:
        sub.add_argument("--output", help="write to this file instead of stdout")


def _add_cache_arg(sub):
    sub.add_argument("--cache-dir", default=os.environ.get("WYTHOFF_CACHE_DIR"),
                     help="directory for table cache files "
                          "(default: $WYTHOFF_CACHE_DIR)")


def _add_family_args(sub):
    sub.add_argument("--family", required=True, choices=sorted(_FAMILY_TOKENS))
    sub.add_argument("--k", type=int)
    sub.add_argument("--l", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wythoff",
        description="Exact Sprague-Grundy analysis of Wythoff-style games "
                    "with restricted diagonal moves.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("beatty", help="print the golden-ratio Beatty pair as CSV")
    p.add_argument("--n", type=int, required=True, help="largest index to print")
    _add_io_args(p)
    p.set_defaults(handler=_cmd_beatty)

    p = sub.add_parser("moves", help="list the legal moves from one position")
    _add_family_args(p)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    _add_io_args(p)
    p.set_defaults(handler=_cmd_moves)

    p = sub.add_parser("grundy", help="print a full nim-value table")
    _add_family_args(p)
    p.add_argument("--n", type=int, required=True, help="table bound")
    _add_io_args(p)
    _add_cache_arg(p)
    p.set_defaults(handler=_cmd_grundy)

    p = sub.add_parser("pvs", help="print a closed-form position set")
    p.add_argument("--formula", required=True, choices=FORMULA_IDS)
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--n", type=int, required=True, help="set bound")
    _add_io_args(p)
    _add_cache_arg(p)
    p.set_defaults(handler=_cmd_pvs)

    p = sub.add_parser("verify", help="verify one proven claim against the engine")
    p.add_argument("--theorem", required=True, choices=THEOREM_IDS)
    p.add_argument("--k", type=_int_or_inf)
    p.add_argument("--l", type=int)
    p.add_argument("--n", type=int, default=200)
    _add_io_args(p, formats=False)
    _add_cache_arg(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("conjecture", help="search a conjecture for counterexamples")
    p.add_argument("--id", required=True, choices=CONJECTURE_IDS)
    p.add_argument("--k", type=int)
    p.add_argument("--kprime", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--n", type=int, default=100)
    _add_io_args(p, formats=False)
    _add_cache_arg(p)
    p.set_defaults(handler=_cmd_conjecture)

    p = sub.add_parser("closeness", help="compare one-value sets of wkl(k,l) and wk(l)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, default=100)
    _add_io_args(p, formats=False)
    _add_cache_arg(p)
    p.set_defaults(handler=_cmd_closeness)

    p = sub.add_parser("paper-values",
                       help="recompute the recorded g(20,30) reference values")
    _add_io_args(p, formats=False)
    _add_cache_arg(p)
    p.set_defaults(handler=_cmd_paper_values)

    p = sub.add_parser("play", help="play one game against the engine")
    _add_family_args(p)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.set_defaults(handler=_cmd_play)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
