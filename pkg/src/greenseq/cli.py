"""Command-line surface.

Subcommands: mutate, verify, find, decompose, coherence, quiver, serve.
Exit codes: 0 = success / Found / verified, 2 = exhausted or counterexample,
1 = any error. GREENSEQ_DEPTH overrides the default search depth.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import coherence as coh
from . import search
from .errors import GreenSeqError
from .matrices import trace_sequence
from .quiver import decompose, underlying_quiver
from .serialize import emit_dot, parse_matrix

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_EXHAUSTED = 2


def _env_depth(fallback: int) -> int:
    raw = os.environ.get("GREENSEQ_DEPTH")
    if raw is None:
        return fallback
    try:
        value = int(raw)
    except ValueError:
        raise GreenSeqError(f"GREENSEQ_DEPTH must be an integer, got {raw!r}") from None
    if value < 0:
        raise GreenSeqError("GREENSEQ_DEPTH must be >= 0")
    return value


def _parse_seq(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.replace(",", " ").split())
    except ValueError:
        raise GreenSeqError(f"bad sequence {text!r}; expected comma-separated integers") from None


def _load(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GreenSeqError(f"cannot read {path}: {exc}") from exc
    return parse_matrix(text)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # argparse exits with 2 by default; 2 is reserved for "exhausted"
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_ERROR)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="greenseq", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mutate", help="apply a mutation sequence and print the full trace")
    p.add_argument("--seq", required=True, help="comma-separated 1-based directions, e.g. 2,3,1,2")
    p.add_argument("file")

    p = sub.add_parser("verify", help="replay a sequence and print its verdict")
    p.add_argument("--seq", required=True)
    p.add_argument("file")

    p = sub.add_parser("find", help="search for a maximal green or green-to-red sequence")
    p.add_argument("--target", choices=["mgs", "g2r"], default="mgs")
    p.add_argument("--max-depth", type=int, default=None)
    p.add_argument("--strategy", choices=["bfs", "iddfs"], default="bfs")
    p.add_argument("file")

    p = sub.add_parser("decompose", help="print the irreducible block decomposition")
    p.add_argument("file")

    p = sub.add_parser("coherence", help="check uniform column sign-coherence of an attached block")
    p.add_argument("--attached", required=True, help="file with the attached block (grid or JSON b)")
    p.add_argument("--depth", type=int, default=None)
    p.add_argument("file")

    p = sub.add_parser("quiver", help="print the underlying quiver")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of an arrow list")
    p.add_argument("--out", help="write output to a file instead of stdout")
    p.add_argument("file")

    p = sub.add_parser("serve", help="run the HTTP explorer service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static", help="directory with the UI bundle (default: ./frontend/dist)")

    return parser


def _format_state(state, n: int) -> str:
    lines = [str(state)]
    if state.m == n:
        try:
            greens, reds = search.green_indices(search.GreenState(state))
            lines.append(
                "greens: " + (" ".join(map(str, sorted(greens))) or "-")
                + "   reds: " + (" ".join(map(str, sorted(reds))) or "-")
            )
        except GreenSeqError:
            # attached rows that are not a C-matrix have no green/red reading
            pass
    return "\n".join(lines)


def _cmd_mutate(args) -> int:
    doc = _load(args.file)
    seq = _parse_seq(args.seq)
    states = trace_sequence(doc.to_extended(), seq)
    print("initial")
    print(_format_state(states[0], doc.n))
    for step, (k, state) in enumerate(zip(seq, states[1:]), start=1):
        print(f"\nafter mu_{k} (step {step})")
        print(_format_state(state, doc.n))
    return EXIT_OK


def _cmd_verify(args) -> int:
    doc = _load(args.file)
    verdict = search.verify_sequence(doc.to_exchange(), _parse_seq(args.seq))
    print(f"green sequence: {'yes' if verdict.is_green_sequence else 'no'}")
    print(f"green-to-red:   {'yes' if verdict.is_green_to_red else 'no'}")
    print(f"maximal green:  {'yes' if verdict.is_maximal_green else 'no'}")
    if verdict.first_violation is not None:
        step, index, sign = verdict.first_violation
        print(f"first violation: step {step}, index {index} was {sign.value}")
    return EXIT_OK


def _cmd_find(args) -> int:
    doc = _load(args.file)
    depth = args.max_depth if args.max_depth is not None else _env_depth(search.DEFAULT_SEARCH_DEPTH)
    outcome = search.find_sequence(doc.to_exchange(), args.target, depth, args.strategy)
    print(outcome)
    return EXIT_OK if outcome.found else EXIT_EXHAUSTED


def _cmd_decompose(args) -> int:
    doc = _load(args.file)
    decomposition = decompose(doc.to_exchange())
    for i, block in enumerate(decomposition.blocks, start=1):
        print(f"block {i}: {' '.join(map(str, sorted(block)))}")
    print("order: " + " ".join(map(str, decomposition.permutation)))
    return EXIT_OK


def _cmd_coherence(args) -> int:
    doc = _load(args.file)
    # the attached file may be a bare grid that is not skew-symmetrizable, so
    # read it as rows rather than as a matrix document
    try:
        text = Path(args.attached).read_text()
    except OSError as exc:
        raise GreenSeqError(f"cannot read {args.attached}: {exc}") from exc
    attached = _read_attached(text)
    depth = args.depth if args.depth is not None else _env_depth(coh.DEFAULT_DEPTH)
    verdict = coh.check_uniform_sign_coherence(doc.to_exchange(), attached, depth)
    print(verdict)
    return EXIT_OK if verdict.verified else EXIT_EXHAUSTED


def _read_attached(text: str):
    import json as _json

    from .matrices import IntMatrix

    stripped = text.lstrip()
    if stripped.startswith("{"):
        obj = _json.loads(text)
        return IntMatrix(obj["b"] if isinstance(obj, dict) else obj)
    if stripped.startswith("["):
        return IntMatrix(_json.loads(text))
    rows = []
    for line in text.splitlines():
        for segment in line.split("/"):
            if segment.strip():
                rows.append([int(tok) for tok in segment.split()])
    return IntMatrix(rows)


def _cmd_quiver(args) -> int:
    doc = _load(args.file)
    Q = underlying_quiver(doc.to_exchange())
    if args.dot:
        text = emit_dot(Q)
    else:
        lines = [f"{src} -> {dst}" + (f" (weight {w})" if w > 1 else "") for src, dst, w in Q.arrows]
        text = "\n".join(lines) + "\n" if lines else "(no arrows)\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    static = Path(args.static) if args.static else Path("frontend") / "dist"
    app = create_app(
        static_dir=static if static.is_dir() else None,
        default_search_depth=_env_depth(search.DEFAULT_SEARCH_DEPTH),
    )
    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


_COMMANDS = {
    "mutate": _cmd_mutate,
    "verify": _cmd_verify,
    "find": _cmd_find,
    "decompose": _cmd_decompose,
    "coherence": _cmd_coherence,
    "quiver": _cmd_quiver,
    "serve": _cmd_serve,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    except GreenSeqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def run() -> None:
    raise SystemExit(main())
