"""Command-line interface over the JSON interchange formats.

Exit codes: 0 positive answer (valid, non-empty, accepted, found),
1 negative answer (invalid, empty, rejected, looping, none found),
2 usage or input error, 3 resource limit reached.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Callable, Sequence

from . import jsonio
from .core import ResourceLimitError, validate_graph, validate_signature
from .gwa import gwa_nonempty, reduce_gwa_to_signature, simulate, validate_gwa
from .hardness import (
    canonical_grid_graph,
    gen_3col_signature,
    gen_grid_automaton,
    gen_grid_signature,
    gen_universal_star_automaton,
)
from .solver import DEFAULT_MAX_STATES, enumerate_graphs, signature_nonempty
from .star import (
    check_tiling,
    find_tiling,
    reduce_star_to_signature,
    star_nonempty,
    validate_star_automaton,
)

DEFAULT_MAX_NODES = 12
DEFAULT_MAX_LABELS = 200_000


class InputError(Exception):
    """Bad input file or content; maps to exit code 2."""


def _read(path: str) -> Any:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as f:
                text = f.read()
        except OSError as e:
            raise InputError(f"cannot read {path}: {e.strerror}") from None
    return jsonio.loads(text)


def _emit(obj: Any) -> None:
    sys.stdout.write(jsonio.dumps(obj) + "\n")


def _need(report, what: str) -> None:
    if not report.ok:
        raise InputError(f"invalid {what}: " + "; ".join(report.violations))


def _load_sig(path: str | None, check: bool = True):
    if path is None:
        raise InputError("missing --sig")
    sig = jsonio.signature_from_json(_read(path))
    if check:
        _need(validate_signature(sig), "signature")
    return sig


def _load_graph(sig, path: str):
    g = jsonio.graph_from_json(_read(path))
    _need(validate_graph(sig, g), "graph")
    return g


def _load_gwa(sig, path: str):
    A = jsonio.gwa_from_json(_read(path))
    _need(validate_gwa(sig, A), "graph-walking automaton")
    return A


def _load_star(sig, path: str):
    A = jsonio.star_automaton_from_json(_read(path))
    _need(validate_star_automaton(sig, A), "star automaton")
    return A


def _primary(args, name: str) -> str:
    path = getattr(args, name, None) or args.inp
    if path is None:
        raise InputError(f"missing --{name} (or --in)")
    return path


def _report(report) -> int:
    _emit({"valid": report.ok, "violations": list(report.violations)})
    return 0 if report.ok else 1


def _verdict(v) -> int:
    _emit(jsonio.verdict_to_json(v))
    return 0 if v.nonempty else 1


def _word(text: str) -> list[str]:
    return text.split(",") if text else []


# --- subcommands -------------------------------------------------------------


def cmd_validate(args) -> int:
    if args.kind == "signature":
        sig = _load_sig(_primary(args, "sig"), check=False)
        return _report(validate_signature(sig))
    sig = _load_sig(args.sig)
    if args.kind == "graph":
        g = jsonio.graph_from_json(_read(_primary(args, "graph")))
        return _report(validate_graph(sig, g))
    if args.kind == "gwa":
        A = jsonio.gwa_from_json(_read(_primary(args, "gwa")))
        return _report(validate_gwa(sig, A))
    A = jsonio.star_automaton_from_json(_read(_primary(args, "star")))
    return _report(validate_star_automaton(sig, A))


def cmd_emptiness(args) -> int:
    if args.kind == "signature":
        sig = _load_sig(_primary(args, "sig"))
        return _verdict(signature_nonempty(sig, args.method, args.max_frontier))
    sig = _load_sig(args.sig)
    if args.kind == "gwa":
        A = _load_gwa(sig, _primary(args, "gwa"))
        return _verdict(gwa_nonempty(sig, A, args.method, args.max_frontier, args.max_labels))
    A = _load_star(sig, _primary(args, "star"))
    return _verdict(star_nonempty(sig, A, args.method, args.max_frontier))


def cmd_simulate(args) -> int:
    sig = _load_sig(args.sig)
    A = _load_gwa(sig, args.gwa)
    g = _load_graph(sig, _primary(args, "graph"))
    run = simulate(sig, A, g, trace=args.trace, max_trace=args.max_steps)
    _emit(jsonio.run_to_json(run))
    return 0 if run.accepted else 1


def cmd_tile(args) -> int:
    sig = _load_sig(args.sig)
    A = _load_star(sig, args.star)
    g = _load_graph(sig, _primary(args, "graph"))
    if args.action == "check":
        if args.tiling is None:
            raise InputError("missing --tiling")
        t = jsonio.tiling_from_json(_read(args.tiling))
        ok = check_tiling(sig, A, g, t)
        _emit({"valid": ok})
        return 0 if ok else 1
    t = find_tiling(sig, A, g)
    _emit(jsonio.tiling_to_json(t) if t is not None else {"state_of": None})
    return 0 if t is not None else 1


def cmd_reduce(args) -> int:
    sig = _load_sig(args.sig)
    if args.kind == "star":
        A = _load_star(sig, _primary(args, "star"))
        _emit(jsonio.signature_to_json(reduce_star_to_signature(sig, A)))
    else:
        A = _load_gwa(sig, _primary(args, "gwa"))
        _emit(jsonio.signature_to_json(reduce_gwa_to_signature(sig, A, args.max_labels)))
    return 0


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "3col":
        G = jsonio.simple_graph_from_json(_read(_primary(args, "graph")))
        _emit(jsonio.signature_to_json(gen_3col_signature(G)))
        return 0
    if kind == "universal-star":
        sig = _load_sig(_primary(args, "sig"))
        _emit(jsonio.star_automaton_to_json(gen_universal_star_automaton(sig)))
        return 0
    if args.n is None:
        raise InputError("missing --n")
    M = jsonio.tm_from_json(_read(_primary(args, "tm")))
    if kind == "grid-sig":
        _emit(jsonio.signature_to_json(gen_grid_signature(args.n, M)))
    elif kind == "grid-gwa":
        A = gen_grid_automaton(args.n, M, _word(args.word), args.bound_ok)
        _emit(jsonio.gwa_to_json(A))
    else:
        if args.computation is None:
            raise InputError("missing --computation")
        comp = jsonio.computation_from_json(_read(args.computation))
        g = canonical_grid_graph(args.n, M, _word(args.word), comp)
        _emit(jsonio.graph_to_json(g))
    return 0


def cmd_oracle(args) -> int:
    sig = _load_sig(_primary(args, "sig"))
    graphs = []
    for g in enumerate_graphs(sig, args.max_nodes):
        if args.limit is not None and len(graphs) >= args.limit:
            break
        graphs.append(jsonio.graph_to_json(g))
    _emit({"count": len(graphs), "graphs": graphs})
    return 0 if graphs else 1


# --- parser ------------------------------------------------------------------


def _common(p: argparse.ArgumentParser, *files: str) -> None:
    p.add_argument("--in", dest="inp", metavar="FILE",
                   help="primary input file ('-' for standard input)")
    for f in files:
        p.add_argument(f"--{f}", metavar="FILE")
    p.add_argument("--threads", type=int, default=1,
                   help="worker threads (accepted for compatibility; runs sequentially)")


def _limits(p: argparse.ArgumentParser) -> None:
    p.add_argument("--method", choices=("auto", "search", "milp"), default="auto")
    p.add_argument("--max-frontier", type=int, default=DEFAULT_MAX_STATES,
                   help="state budget for the exact search")
    p.add_argument("--max-labels", type=int, default=DEFAULT_MAX_LABELS,
                   help="label budget for the automaton reduction")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphwalk",
        description="Emptiness, simulation and reductions for graph signatures, "
                    "star automata and graph-walking automata.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check an input against its schema and invariants")
    p.add_argument("kind", choices=("signature", "graph", "gwa", "star"))
    _common(p, "sig", "graph", "gwa", "star")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("emptiness", help="decide emptiness and print a witness")
    p.add_argument("kind", choices=("signature", "gwa", "star"))
    _common(p, "sig", "gwa", "star")
    _limits(p)
    p.set_defaults(func=cmd_emptiness)

    p = sub.add_parser("simulate", help="run a graph-walking automaton on a graph")
    _common(p, "sig", "gwa", "graph")
    p.add_argument("--trace", action="store_true", help="include the configuration sequence")
    p.add_argument("--max-steps", type=int, default=None,
                   help="cap on the number of traced configurations")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("tile", help="check or search for a tiling by a star automaton")
    p.add_argument("action", choices=("check", "find"))
    _common(p, "sig", "star", "graph", "tiling")
    p.set_defaults(func=cmd_tile)

    p = sub.add_parser("reduce", help="print the reduction signature of an automaton")
    p.add_argument("kind", choices=("star", "gwa"))
    _common(p, "sig", "star", "gwa")
    p.add_argument("--max-labels", type=int, default=DEFAULT_MAX_LABELS)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen", help="generate hardness-construction instances")
    p.add_argument("kind", choices=("3col", "universal-star", "grid-sig", "grid-gwa",
                                    "grid-graph"))
    _common(p, "graph", "sig", "tm", "computation")
    p.add_argument("--n", type=int, help="grid size exponent (grid of 2^n x 2^n)")
    p.add_argument("--word", default="", help="input word, symbols separated by commas")
    p.add_argument("--bound-ok", action="store_true",
                   help="attest that the machine halts within 2^n - 1 steps")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="brute-force enumeration of small graphs")
    p.add_argument("action", choices=("enumerate",))
    _common(p, "sig")
    p.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)
    p.add_argument("--limit", type=int, default=None, help="stop after this many graphs")
    p.set_defaults(func=cmd_oracle)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 0
    handler: Callable[[Any], int] = args.func
    try:
        return handler(args)
    except ResourceLimitError as e:
        print(f"resource limit: {e}", file=sys.stderr)
        return 3
    except (InputError, ValueError, KeyError, TypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
