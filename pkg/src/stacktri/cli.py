"""Command-line surface of the toolkit.

Subcommands: complete, check, recognize, generate, render, oracle.
Inputs are planegraph v1 files; commands that only need an abstract
graph, and ``complete`` itself, also take plain edge lists (an embedding
is then computed first).  Exit codes: 0 success / all claims verified,
1 a requested claim failed, 2 input is no partial 3-tree, 3 parse,
planarity, or size errors.  Output files are written atomically.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from .completer import Completion, complete
from .embed import embed_planar
from .errors import StacktriError, TreewidthExceeded
from .formats import parse_edge_list, parse_plane, serialize_plane
from .gen import gen_plane_3tree, subsample_plane
from .graph import Graph, norm_edge
from .ktree import Pes, is_stacked_plane_3tree, verify_pes
from .plane import PlaneGraph, extends
from .render import render_svg
from .tw3 import Reject, reduce_tw3, treewidth_oracle


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(path: str | None, text: str) -> None:
    """Write to path through a temp file, or to standard output."""
    if path is None:
        sys.stdout.write(text)
        return
    tmp = f"{path}.tmp{os.getpid()}"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _is_native(text: str) -> bool:
    return text.startswith("planegraph v1\n")


def _load_plane(path: str) -> PlaneGraph:
    text = _read(path)
    if _is_native(text):
        return parse_plane(text)
    return embed_planar(parse_edge_list(text))


def _load_graph(path: str) -> Graph:
    text = _read(path)
    if _is_native(text):
        return parse_plane(text).graph
    return parse_edge_list(text)


def _dart_token(d) -> str:
    return "none" if d is None else f"{d[0]},{d[1]}"


def _report_text(done: Completion) -> str:
    """Per-invariant verdict table; PASS everywhere iff the witnesses hold."""
    p, out = done.input, done.output
    n = p.graph.n
    checks = {
        "spanning": out.graph.n == n and p.graph.edges <= out.graph.edges,
        "edge-count": out.graph.m == 3 * n - 6,
        "faces-triangular": not out.fused
        and not out.hosts
        and all(len(w) == 3 for w in out.walks),
        "pes-strict": verify_pes(out.graph, done.pes, strict=True),
        "extends": extends(out, p, done.added),
    }
    lines = ["report v1", f"added {len(done.added)}"]
    lines += [f"edge {u} {v}" for u, v in done.added]
    lines.append("pes " + " ".join(str(v) for v in done.pes.order))
    lines += [
        f"invariant {name} {'PASS' if ok else 'FAIL'}"
        for name, ok in checks.items()
    ]
    # provenance maps each output face to the input face it was carved from
    lines.append(f"provenance {len(done.provenance)}")
    prov = sorted(done.provenance.items(), key=lambda kv: (kv[0] is not None, kv[0]))
    lines += [
        f"face {_dart_token(out_f)} from {_dart_token(in_f)}"
        for out_f, in_f in prov
    ]
    return "\n".join(lines) + "\n"


def cmd_complete(args: argparse.Namespace) -> int:
    p = _load_plane(args.input)
    anchor_edge = tuple(args.anchor_edge) if args.anchor_edge else None
    done = complete(
        p, anchor_vertex=args.anchor_vertex, anchor_edge=anchor_edge
    )
    _emit(args.output, serialize_plane(done.output))
    if args.report:
        _emit(args.report, _report_text(done))
    print(f"added {len(done.added)} edges", file=sys.stderr)
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    p = _load_plane(args.input)
    failures: list[str] = []
    claimed = False
    if args.stacked:
        claimed = True
        verdict = is_stacked_plane_3tree(p)
        if isinstance(verdict, Pes):
            print("stacked: ok")
        else:
            failures.append(f"stacked: FAIL ({verdict.reason})")
    if args.pes:
        claimed = True
        order = tuple(int(t) for t in _read(args.pes).split())
        if verify_pes(p.graph, Pes(order), strict=True):
            print("pes: ok")
        else:
            failures.append("pes: FAIL (order is not a strict scheme)")
    if args.extends:
        claimed = True
        base = _load_plane(args.extends)
        added = sorted(p.graph.edges - base.graph.edges)
        if extends(p, base, added):
            print("extends: ok")
        else:
            failures.append("extends: FAIL (drawing does not restrict to base)")
    if not claimed:
        raise StacktriError("no claims requested; pass --stacked/--pes/--extends")
    for line in failures:
        print(line)
    return 1 if failures else 0


def cmd_recognize(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    verdict = reduce_tw3(g)
    if isinstance(verdict, Reject):
        print(f"reject: {verdict.reason}")
        return 2
    for app in verdict.apps:
        removed = ",".join(str(v) for v in app.removed)
        print(f"{app.rule} removed {removed}")
    print(f"accept: treewidth <= 3 ({len(verdict.apps)} reductions)")
    return 0


def cmd_generate(args: argparse.Namespace) -> int:
    p, _ = gen_plane_3tree(args.n, args.seed)
    if args.keep < 1.0:
        p, _ = subsample_plane(p, args.keep, args.seed + 1)
    _emit(args.output, serialize_plane(p))
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    p = _load_plane(args.input)
    highlight: set[tuple[int, int]] = set()
    if args.base:
        base = _load_graph(args.base)
        highlight = {norm_edge(u, v) for u, v in p.graph.edges - base.edges}
    _emit(args.output, render_svg(p, highlight))
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    print(treewidth_oracle(g))
    return 0


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="stacktri",
        description="Complete plane partial 3-tree drawings into stacked "
        "plane 3-trees, with witnesses.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("complete", help="augment a drawing to a stacked 3-tree")
    c.add_argument("input", help="planegraph v1 file, or an edge list to embed")
    c.add_argument("-o", "--output", help="completed drawing (default stdout)")
    c.add_argument("--report", help="write the witness report here")
    anchor = c.add_mutually_exclusive_group()
    anchor.add_argument("--anchor-vertex", type=int, metavar="V")
    anchor.add_argument(
        "--anchor-edge", type=int, nargs=2, metavar=("U", "V")
    )
    c.set_defaults(func=cmd_complete)

    k = sub.add_parser("check", help="verify claims about a drawing file")
    k.add_argument("input")
    k.add_argument("--stacked", action="store_true", help="is it a stacked plane 3-tree")
    k.add_argument("--pes", metavar="FILE", help="verify this elimination order")
    k.add_argument("--extends", metavar="BASE", help="does it extend this drawing")
    k.set_defaults(func=cmd_check)

    r = sub.add_parser("recognize", help="treewidth <= 3 verdict with rule trace")
    r.add_argument("input")
    r.set_defaults(func=cmd_recognize)

    g = sub.add_parser("generate", help="random stacked plane 3-tree, optionally thinned")
    g.add_argument("n", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--keep", type=float, default=1.0, help="edge keep probability")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)

    d = sub.add_parser("render", help="SVG of a triangulation file")
    d.add_argument("input")
    d.add_argument("--base", help="highlight edges absent from this file")
    d.add_argument("-o", "--output")
    d.set_defaults(func=cmd_render)

    o = sub.add_parser("oracle", help="exact treewidth (n <= 18)")
    o.add_argument("input")
    o.set_defaults(func=cmd_oracle)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except TreewidthExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (StacktriError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
