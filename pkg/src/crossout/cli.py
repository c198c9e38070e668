"""Command-line front door.

Subcommands: encode, decode, verify, prob, play, serve.  All JSON shapes
match the library's to_json forms; verify exits non-zero when any report
is unequal, and guard-limit refusals exit with status 2.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import game
from .correspondence import CrossoutTuple, decode, encode
from .errors import ConstraintError, GuardLimitError, ValidationError
from .identities import run_suites
from .probability import alice_probability, fraction_to_json

USAGE_ERROR = 2


def _parse_permutation(text: str) -> tuple[int, ...]:
    """Accept '2 6 4 1', '2,6,4,1' or a JSON array."""
    text = text.strip()
    if text.startswith("["):
        values = json.loads(text)
    else:
        values = [int(tok) for tok in text.replace(",", " ").split()]
    return tuple(values)


def cmd_encode(args) -> int:
    w = _parse_permutation(args.permutation)
    print(json.dumps(encode(w).to_json()))
    return 0


def cmd_decode(args) -> int:
    text = args.tuple if args.tuple is not None else sys.stdin.read()
    w = decode(CrossoutTuple.from_json(json.loads(text)))
    if args.json:
        print(json.dumps(list(w)))
    else:
        print(" ".join(map(str, w)))
    return 0


def cmd_verify(args) -> int:
    suites = [s for s in args.suite.split(",") if s.strip()]
    failures = 0
    count = 0
    for report in run_suites(suites, args.n, force=args.force):
        count += 1
        if not report.equal:
            failures += 1
        if args.json:
            print(json.dumps(report.to_json()))
        else:
            params = " ".join(f"{k}={v}" for k, v in report.params.items())
            print(
                f"{report.identity} n={report.n}"
                + (f" {params}" if params else "")
                + f": {report.left} vs {report.right} -> {report.verdict}"
                + f" ({report.elapsed:.3f}s)"
            )
    if not args.json:
        print(f"{count} checks, {failures} unequal")
    return 1 if failures else 0


def cmd_prob(args) -> int:
    ranks = [int(tok) for tok in args.ranks.replace(",", " ").split()]
    p = alice_probability(args.n, ranks)
    if args.json:
        print(json.dumps(fraction_to_json(p)))
    else:
        print(f"{p.numerator}/{p.denominator}" if p.denominator != 1 else str(p.numerator))
    return 0


def cmd_play(args) -> int:
    if args.w:
        state = game.new_game(_parse_permutation(args.w), human_role=args.role, seed=None)
    else:
        state = game.new_game(args.n, human_role=args.role, seed=args.seed)
    return _play_loop(state, sys.stdin, print)


def _board_line(state: game.GameState) -> str:
    cells = []
    eater = {m.position: m.player for m in state.history}
    for p in range(1, state.size + 1):
        tag = f"{p}:{state.value_at(p)}"
        if p in eater:
            tag += f"[{eater[p]}]"
        cells.append(tag)
    return "  ".join(cells)


def _play_loop(state: game.GameState, stream, emit) -> int:
    emit(f"Board (position:value), {state.size} morsels. You are "
         f"{'Alice (higher values are better)' if state.human_role == 'A' else 'Bob (further right is better)'}.")
    emit(_board_line(state))
    while not state.game_over:
        if state.human_role is not None and state.turn != state.human_role:
            pos = game.engine_move(state)
            state = game.apply_move(state, pos)
            emit(f"Engine ({state.history[-1].player}) ate position {pos} "
                 f"(value {state.value_at(pos)}).")
            continue
        emit(f"Your move ({state.turn}). Remaining: "
             + " ".join(map(str, game.legal_moves(state)))
             + "  [position | a=analysis | q=quit]")
        line = stream.readline()
        if not line:
            emit("Input ended; quitting.")
            return 0
        token = line.strip().lower()
        if token in ("q", "quit"):
            emit("Quit.")
            return 0
        if token in ("a", "analysis"):
            alloc = game.analysis(state)
            emit("Predicted eaters: "
                 + "  ".join(f"{p}:{alloc[p]}" for p in sorted(alloc)))
            continue
        try:
            pos = int(token)
        except ValueError:
            emit(f"Unrecognized input {token!r}.")
            continue
        try:
            state = game.apply_move(state, pos)
        except game.IllegalMoveError as exc:
            emit(f"Illegal move: {exc}")
            continue
        emit(f"You ate position {pos} (value {state.value_at(pos)}).")
    emit("Game over.")
    emit(_board_line(state))
    summary = game.final_summary(state)
    emit(f"Optimal assignment would be: {summary['optimal_marks']}")
    emit(f"No trade pair left: {summary['no_trade']}")
    emit("Tuple: " + json.dumps(summary["tuple"]))
    emit("Stats: " + json.dumps(summary["stats"]))
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(log_path=args.log_file)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crossout",
        description="Crossout correspondence toolkit: encode/decode, identity "
        "verification, probabilities, and the dinner game.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="permutation -> labeled path tuple (JSON)")
    p.add_argument("permutation", help="e.g. \"2 6 4 1 3 11 5 7 10 12 9 8\"")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="labeled path tuple (JSON) -> permutation")
    p.add_argument("tuple", nargs="?", default=None,
                   help="tuple JSON; read from stdin when omitted")
    p.add_argument("--json", action="store_true", help="emit a JSON array")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("verify", help="run identity suites up to a given n")
    p.add_argument("--suite", default="all",
                   help="comma list: thm2,thm3,thm4,cor5,thm6,cor7,prob,"
                        "outcomes,independence,roundtrip or 'all'")
    p.add_argument("--n", type=int, default=2, help="largest n to verify")
    p.add_argument("--force", action="store_true",
                   help="override the exhaustive-sweep guard")
    p.add_argument("--json", action="store_true", help="JSON lines output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("prob", help="exact probability Alice eats given ranks")
    p.add_argument("--n", type=int, required=True, help="half the board size")
    p.add_argument("--ranks", required=True, help="comma list, e.g. 3,4")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_prob)

    p = sub.add_parser("play", help="terminal game against the engine")
    p.add_argument("--n", type=int, default=6, help="number of morsels")
    p.add_argument("--w", default=None, help="explicit permutation")
    p.add_argument("--seed", type=int, default=None, help="shuffle seed")
    p.add_argument("--role", choices=["A", "B"], default="A",
                   help="side the human plays")
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("serve", help="run the local HTTP game service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--log-file", default=None,
                   help="append-only JSON-lines request log")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GuardLimitError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ValidationError, ConstraintError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
