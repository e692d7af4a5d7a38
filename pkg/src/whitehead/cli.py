"""Command-line front end.

Exit codes: 0 ok, 1 negative verdict (decider subcommands with
``--exit-status``), 2 usage or parse error, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .agraph import AGraph, cyclic_core, fold
from .automorphisms import MinimizationTrace
from .deciders import is_free_factor, is_primitive
from .graphio import (GraphFileError, parse_graph_file, parse_tuple_file,
                      to_dot, write_graph_file)
from .harness import oracle_check
from .hypergraph import build_hypergraph
from .mincut import BRUTE_FORCE_MAX_RANK, min_vcut
from .minimizer import (InvariantError, minimize_conjugacy, minimize_cyclic_word,
                        minimize_subgroup, minimize_tuple, minimize_word)
from .words import (CyclicWord, WordError, format_word, is_cyclically_reduced,
                    letter_name, mask_letters, parse_word, word_rank)

OK, NEGATIVE, USAGE, INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _parse_word_arg(text: str, args) -> tuple:
    if not text.strip():
        raise UsageError("empty word argument")
    try:
        return parse_word(text, args.rank, strict=args.strict)
    except WordError as e:
        raise UsageError(str(e)) from None


def _parse_gens(text: str, args) -> list:
    if not text.strip():
        raise UsageError("empty generator list")
    return [_parse_word_arg(t, args) for t in text.split(",")]


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _graph_arg(path: str, args):
    try:
        f = parse_graph_file(_read(path))
    except GraphFileError as e:
        raise UsageError(f"{path}: {e}") from None
    g = f.graph
    if args.rank is not None:
        if args.rank < g.rank:
            raise UsageError(f"--rank {args.rank} is smaller than the file's rank {g.rank}")
        g = g.with_rank(args.rank)
    return g, f.base


def _core(g: AGraph) -> AGraph:
    h, _ = fold(g)
    core, _ = cyclic_core(h)
    return core


def graph_json(g: AGraph, base: int | None = None) -> dict:
    return {
        "vertex_count": g.vertex_count,
        "rank": g.rank,
        "base": None if base is None else base + 1,
        "edges": [[x + 1, letter_name(a, g.rank), y + 1] for x, a, y in g.edges],
    }


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


def _trace_lines(trace: MinimizationTrace, rank: int) -> list[str]:
    out = []
    for i, step in enumerate(trace.to_json(rank), 1):
        parts = [f"step {i}:"]
        if step["aut"] is not None:
            parts.append(f"aut {step['aut']}")
        if "conjugator" in step:
            parts.append(f"conjugate {step['conjugator']}")
        out.append(" ".join(parts))
    return out


def _result_payload(args, res, input_json, minimal_json) -> dict:
    return {
        "command": args.command,
        "rank": res.rank,
        "input": input_json,
        "minimal": minimal_json,
        "size_history": res.size_history,
        "trace": res.trace.to_json(res.rank),
    }


def _summary(res, minimal_text: str) -> list[str]:
    return ([f"minimal: {minimal_text}",
             "size_history: " + " ".join(map(str, res.size_history))]
            + _trace_lines(res.trace, res.rank))


def cmd_minimize_word(args) -> int:
    u = _parse_word_arg(args.word, args)
    res = minimize_word(u, args.rank, workers=args.threads)
    r = res.rank
    _emit(args, _result_payload(args, res, format_word(u, r), format_word(res.minimal, r)),
          _summary(res, format_word(res.minimal, r)))
    return OK


def cmd_minimize_cyclic(args) -> int:
    u = _parse_word_arg(args.word, args)
    if not is_cyclically_reduced(u):
        if args.strict:
            raise UsageError(f"{args.word!r} is not cyclically reduced")
    cw = CyclicWord.from_word(u)
    res = minimize_cyclic_word(cw, args.rank, workers=args.threads)
    r = res.rank
    _emit(args, _result_payload(args, res, format_word(cw.letters, r),
                                format_word(res.minimal.letters, r)),
          _summary(res, format_word(res.minimal.letters, r)))
    return OK


def cmd_minimize_subgroup(args) -> int:
    gens = _parse_gens(args.gens, args)
    res = minimize_subgroup(gens, args.rank, workers=args.threads)
    r = res.rank
    basis = [format_word(w, r) for w in res.basis]
    p = res.graph
    minimal = {"basis": basis, "graph": graph_json(p.graph, p.base)}
    _emit(args, _result_payload(args, res, [format_word(w, r) for w in gens], minimal),
          _summary(res, ",".join(basis) or "1"))
    return OK


def cmd_minimize_conjugacy(args) -> int:
    g, _ = _graph_arg(args.graphfile, args)
    core = _core(g)
    res = minimize_conjugacy(core, workers=args.threads)
    lines = _summary(res, f"{res.graph.vertex_count} vertices")
    lines.append(write_graph_file(res.graph).rstrip())
    _emit(args, _result_payload(args, res, graph_json(g), graph_json(res.graph)), lines)
    return OK


def cmd_minimize_tuple(args) -> int:
    try:
        graphs = parse_tuple_file(_read(args.tuplefile))
    except GraphFileError as e:
        raise UsageError(f"{args.tuplefile}: {e}") from None
    r = max([g.rank for g in graphs] + [args.rank or 1])
    cores = [_core(g.with_rank(r)) for g in graphs]
    res = minimize_tuple(cores, r, workers=args.threads)
    lines = _summary(res, " + ".join(str(g.vertex_count) for g in res.graph) + " vertices")
    lines += [write_graph_file(g).rstrip() for g in res.graph]
    _emit(args, _result_payload(args, res, [graph_json(g) for g in graphs],
                                [graph_json(g) for g in res.graph]), lines)
    return OK


def cmd_is_primitive(args) -> int:
    u = _parse_word_arg(args.word, args)
    verdict, trace = is_primitive(u, args.rank)
    r = max(args.rank or 1, word_rank([u]))
    payload = {"command": args.command, "input": format_word(u, r), "primitive": verdict}
    lines = [f"primitive: {'yes' if verdict else 'no'}"]
    if args.witness:
        payload["trace"] = trace.to_json(r)
        lines.append("witness: " + json.dumps(payload["trace"]))
    _emit(args, payload, lines)
    return NEGATIVE if args.exit_status and not verdict else OK


def cmd_is_free_factor(args) -> int:
    gens = _parse_gens(args.gens, args)
    verdict, trace = is_free_factor(gens, args.rank)
    r = max(args.rank or 1, word_rank(gens))
    payload = {"command": args.command, "input": [format_word(w, r) for w in gens],
               "free_factor": verdict}
    lines = [f"free-factor: {'yes' if verdict else 'no'}"]
    if args.witness:
        payload["trace"] = trace.to_json(r)
        lines.append("witness: " + json.dumps(payload["trace"]))
    _emit(args, payload, lines)
    return NEGATIVE if args.exit_status and not verdict else OK


def cmd_fold(args) -> int:
    g, base = _graph_arg(args.graphfile, args)
    h, m = fold(g)
    nb = None if base is None else m[base]
    _emit(args, {"command": args.command, "graph": graph_json(h, nb)},
          [write_graph_file(h, nb).rstrip()])
    return OK


def cmd_hypergraph(args) -> int:
    g, _ = _graph_arg(args.graphfile, args)
    core = _core(g)
    if not core.edges:
        raise UsageError("graph has an empty cyclic core; no hypergraph")
    W = build_hypergraph(core)
    if args.network:
        v = _parse_word_arg(args.network, args)
        if len(v) != 1:
            raise UsageError("--network takes a single letter")
        nets: list = []
        min_vcut(W, v[0], net_out=nets)
        print(nets[0].to_dot(), file=sys.stderr)
    edges = [{"letters": [letter_name(x, W.rank) for x in mask_letters(mask)],
              "multiplicity": W.edges[mask]} for mask in sorted(W.edges)]
    _emit(args, {"command": args.command, "rank": W.rank, "hyperedges": edges},
          [W.dump()])
    return OK


def cmd_export_dot(args) -> int:
    g, base = _graph_arg(args.graphfile, args)
    dot = to_dot(g, base)
    if args.json:
        print(json.dumps({"command": args.command, "dot": dot}, indent=2))
    else:
        sys.stdout.write(dot)
    return OK


def cmd_oracle_check(args) -> int:
    rank = args.rank if args.rank is not None else 3
    if rank > BRUTE_FORCE_MAX_RANK:
        raise UsageError(f"oracle-check enumerates all cuts and supports --rank <= "
                         f"{BRUTE_FORCE_MAX_RANK}; got {rank}")
    seed = args.seed if args.seed is not None else 0
    rep = oracle_check(rank, args.cases, seed)
    payload = {"command": args.command, "rank": rank, "cases": args.cases, "seed": seed,
               "mincut_checks": rep.mincut_checks,
               "mincut_mismatches": len(rep.mincut_mismatches),
               "delta_checks": rep.delta_checks,
               "delta_mismatches": len(rep.delta_mismatches), "ok": rep.ok}
    _emit(args, payload, rep.lines())
    return OK if rep.ok else INTERNAL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rank", type=int, default=None,
                        help="ambient rank (default: smallest covering the input)")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--witness", action="store_true", help="include the witness trace")
    common.add_argument("--seed", type=int, default=None, help="seed for randomized harnesses")
    common.add_argument("--threads", type=int, default=1, help="workers for per-letter cut searches")
    common.add_argument("--exit-status", action="store_true",
                        help="exit 1 on a negative verdict")
    common.add_argument("--strict", action="store_true", help="reject non-reduced words")

    parser = argparse.ArgumentParser(prog="whitehead",
                                     description="Whitehead minimization in free groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, *positionals):
        p = sub.add_parser(name, parents=[common], help=help_)
        for pos, h in positionals:
            p.add_argument(pos, help=h)
        p.set_defaults(func=func)
        return p

    add("minimize-word", cmd_minimize_word, "minimize a word", ("word", "e.g. abA"))
    add("minimize-cyclic", cmd_minimize_cyclic, "minimize a cyclic word", ("word", "e.g. abab"))
    add("minimize-subgroup", cmd_minimize_subgroup, "minimize a subgroup",
        ("gens", "comma-separated generators, e.g. aaB,bbA"))
    add("minimize-conjugacy", cmd_minimize_conjugacy, "minimize a subgroup conjugacy class",
        ("graphfile", "agraph file or -"))
    add("minimize-tuple", cmd_minimize_tuple, "minimize a tuple of conjugacy classes",
        ("tuplefile", "file of agraph blocks and 'cyclic <word>' lines"))
    add("is-primitive", cmd_is_primitive, "decide primitivity", ("word", "word"))
    add("is-free-factor", cmd_is_free_factor, "decide the free factor problem",
        ("gens", "comma-separated generators"))
    add("fold", cmd_fold, "Stallings-fold a graph file", ("graphfile", "agraph file or -"))
    hp = add("hypergraph", cmd_hypergraph, "dump the Whitehead hypergraph of a graph's core",
             ("graphfile", "agraph file or -"))
    hp.add_argument("--network", metavar="LETTER", default=None,
                    help="also write the gadget flow network for LETTER to stderr as DOT")
    add("export-dot", cmd_export_dot, "render a graph file as DOT",
        ("graphfile", "agraph file or -"))
    op = add("oracle-check", cmd_oracle_check, "cross-check min-cut and size formula")
    op.add_argument("--cases", type=int, default=100)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.rank is not None and args.rank < 1:
        print("error: --rank must be >= 1", file=sys.stderr)
        return USAGE
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE
    except (WordError, GraphFileError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE
    except InvariantError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return INTERNAL


def run() -> None:
    sys.exit(main())
