"""Command-line interface: ``higher-ind <command> ...`` or ``python -m higher_ind``.

Exit codes: 0 ok/PASS, 1 verification FAIL, 2 usage or parse error,
3 face-count cap exceeded, 4 homology window beyond the enumerated faces.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable, Sequence

from . import formulas, graphs, morse
from .complexes import (DEFAULT_FACE_CAP, ComplexTooLarge, f_vector, format_complex,
                        independence_complex, reduced_euler_characteristic)
from .graphs import GraphError
from .homology import WindowError, format_kv, reduced_homology, summary_tree

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP, EXIT_WINDOW = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _emit(out, args, text: str, tree: dict) -> None:
    out.write((format_kv(tree) if args.format == "kv" else text.rstrip("\n")) + "\n")


def _graph(args) -> graphs.Graph:
    if args.gen and args.file:
        raise UsageError("give exactly one of --gen and --file")
    if args.gen:
        return graphs.from_spec(args.gen)
    if args.file:
        return graphs.parse_edge_list(Path(args.file).read_text())
    raise UsageError("a graph source (--gen or --file) is required")


def _window(args):
    if args.window is None:
        return None, None
    lo, hi = args.window
    if lo > hi:
        raise UsageError(f"empty window {lo} > {hi}")
    return lo, hi


def _build(args, g, r):
    """Enumerate Ind_r(g); with a window and no ``--max-dim`` stop at ``hi + 1``."""
    lo, hi = _window(args)
    max_dim = args.max_dim
    if max_dim is None and hi is not None:
        max_dim = hi + 1
    return independence_complex(g, r, max_dim=max_dim, cap=args.cap)


# -- commands ------------------------------------------------------------------

def cmd_gen(args, out) -> int:
    g = _graph(args)
    tree = {"graph": g.name or "", "vertices": g.n, "edges": g.edge_count,
            "labels": [str(x) for x in g.labels]}
    _emit(out, args, graphs.format_edge_list(g), tree)
    return EXIT_OK


def cmd_complex(args, out) -> int:
    g = _graph(args)
    k = _build(args, g, args.r)
    tree = {"graph": g.name or "", "r": args.r, "dim": k.dim, "faces": len(k),
            "f_vector": f_vector(k), "complete_through": "all" if k.is_complete else k.complete_through}
    if k.is_complete:
        tree["reduced_euler"] = reduced_euler_characteristic(k)
    _emit(out, args, format_complex(k), tree)
    return EXIT_OK


def cmd_homology(args, out) -> int:
    g = _graph(args)
    k = _build(args, g, args.r)
    lo, hi = _window(args)
    h = reduced_homology(k, lo, hi)
    tree = {"graph": g.name or "", "r": args.r, "faces": len(k), "homology": summary_tree(h)}
    _emit(out, args, h.format(), tree)
    return EXIT_OK


def _morse_result(args) -> morse.MorseResult:
    c = args.construction
    if c == "path":
        return morse.path_perfect_matching(_need(args, "n"), _need(args, "d"))
    if c == "cycle":
        return morse.cycle_morse_matching(_need(args, "n"), _need(args, "d"))
    if c == "whisker":
        return morse.whisker_matching(_graph(args), _need(args, "r"))
    if c == "leafy":
        return morse.leafy_matching(_graph(args), _ints(_need(args, "counts")), _need(args, "r"))
    if c == "multipartite":
        return morse.multipartite_matching(_ints(_need(args, "parts")), _need(args, "r"))
    if c == "tree":
        return morse.tree_matching(_need(args, "m"), _need(args, "h"), _need(args, "r"))
    if c == "tree-reduction":
        return morse.tree_reduction_matching(_need(args, "m"), _need(args, "h"), _need(args, "r"))
    if c == "element":
        g = _graph(args)
        k = independence_complex(g, _need(args, "r"), cap=args.cap)
        xs = _ints(_need(args, "xs"))
        m, _ = morse.element_matching_sequence(k, xs)
        return morse.morse_result(k.all_faces(), m, k, g.labels, construction="element")
    raise UsageError(f"unknown construction {c!r}")


def cmd_morse(args, out) -> int:
    res = _morse_result(args)
    counts = res.counts_by_dim
    tree = {"construction": args.construction, "acyclic": res.acyclic, "pairs": len(res.matching),
            "critical": len(res.critical),
            "critical_by_dim": {str(d): c for d, c in counts.items()}}
    lines = [f"acyclic: {res.acyclic}",
             "critical_by_dim: " + (", ".join(f"{d}:{c}" for d, c in counts.items()) or "none")]
    if args.pairs:
        lines.append(morse.format_matching(res))
    else:
        lines.append("critical:")
        lines += [",".join(map(str, f)) if f else "-" for f in res.critical]
    _emit(out, args, "\n".join(lines), tree)
    return EXIT_OK if res.acyclic else EXIT_FAIL


def _verify_instance(args) -> tuple[formulas.HomotopyType, graphs.Graph, int]:
    t = args.theorem
    if t == "path":
        n, d = _need(args, "n"), _need(args, "d")
        return formulas.ht_path(n, d), graphs.path(n), d - 2
    if t == "cycle":
        n, d = _need(args, "n"), _need(args, "d")
        return formulas.ht_cycle(n, d), graphs.cycle(n), d - 2
    if t == "multipartite":
        parts, r = _ints(_need(args, "parts")), _need(args, "r")
        return formulas.ht_complete_multipartite(parts, r), graphs.complete_multipartite(parts), r
    if t == "complete":
        n, r = _need(args, "n"), _need(args, "r")
        return formulas.ht_complete(n, r), graphs.complete(n), r
    if t == "whiskered":
        base = _graph(args) if (args.gen or args.file) else graphs.path(_need(args, "n"))
        if not graphs.is_connected(base):
            raise GraphError("the base graph must be connected")
        r = _need(args, "r")
        return formulas.ht_whiskered(base.n, r), graphs.whisker_all(base), r
    if t == "leafy":
        base = _graph(args) if (args.gen or args.file) else graphs.path(_need(args, "n"))
        if not graphs.is_connected(base):
            raise GraphError("the base graph must be connected")
        counts, r = _ints(_need(args, "counts")), _need(args, "r")
        if len(counts) != base.n:
            raise UsageError(f"--counts needs {base.n} entries")
        return formulas.ht_leafy(counts, r), graphs.attach_leaves(base, counts), r
    if t == "tree":
        m, h, r = _need(args, "m"), _need(args, "h"), _need(args, "r")
        return formulas.ht_mary_tree(m, h, r), graphs.perfect_mary_tree(m, h), r
    raise UsageError(f"unknown theorem {t!r}")


def cmd_verify(args, out) -> int:
    ht, g, r = _verify_instance(args)
    h = reduced_homology(independence_complex(g, r, cap=args.cap))
    ok = formulas.expected_homology(ht).matches(h)
    verdict = "PASS" if ok else "FAIL"
    verb = "matches" if ok else "differs from"
    text = f"{verdict}: formula {ht} {verb} computed {h.short()}"
    if ht.flags:
        text += " (" + "; ".join(ht.flags) + ")"
    tree = {"theorem": args.theorem, "verdict": verdict, "formula": str(ht),
            "computed": h.short(), "flags": list(ht.flags)}
    _emit(out, args, text, tree)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_table(args, out) -> int:
    rows, cols = args.rows, args.cols
    if rows < 1 or cols < 1:
        raise UsageError("--rows and --cols must be positive")
    lines, tree = [], {}
    for n in range(1, rows + 1):
        g = graphs.grid(2, n)
        for r in range(1, cols + 1):
            entry = reduced_homology(independence_complex(g, r, cap=args.cap)).short()
            lines.append(f"({n},{r}): {entry}")
            tree[f"({n},{r})"] = entry
    _emit(out, args, "\n".join(lines), {"table": tree})
    return EXIT_OK


# -- argument parsing ------------------------------------------------------------

def _ints(text) -> list[int]:
    if isinstance(text, list):
        return text
    try:
        return [int(x) for x in str(text).split(",") if x]
    except ValueError:
        raise UsageError(f"expected a comma-separated integer list, got {text!r}") from None


def _need(args, name: str):
    val = getattr(args, name, None)
    if val is None:
        raise UsageError(f"--{name} is required here")
    return val


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "kv"), default="text")
    common.add_argument("--cap", type=int, default=DEFAULT_FACE_CAP, help="face-count cap")
    common.add_argument("--threads", type=int, default=1,
                        help="worker bound (all algorithms currently run on one thread)")
    common.add_argument("--seed", type=int, default=None, help="reserved; every algorithm is deterministic")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--gen", help="generator spec, e.g. path:6, grid:2:3, mary:2:3")
    source.add_argument("--file", help="edge-list file")

    build = argparse.ArgumentParser(add_help=False)
    build.add_argument("--r", type=int, required=True)
    build.add_argument("--max-dim", type=int, default=None)
    build.add_argument("--window", type=int, nargs=2, metavar=("LO", "HI"), default=None)

    params = argparse.ArgumentParser(add_help=False)
    for name in ("n", "d", "m", "h", "r"):
        params.add_argument(f"--{name}", type=int)
    params.add_argument("--parts", help="part sizes, e.g. 3,2")
    params.add_argument("--counts", help="leaf counts per base vertex, e.g. 2,1,1")

    p = argparse.ArgumentParser(prog="higher-ind", description="r-independence complexes of graphs")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("gen", parents=[common, source], help="print a generated graph as an edge list")
    sub.add_parser("complex", parents=[common, source, build], help="enumerate Ind_r(G)")
    sub.add_parser("homology", parents=[common, source, build], help="reduced integral homology of Ind_r(G)")
    pm = sub.add_parser("morse", parents=[common, source, params], help="run a Morse matching construction")
    pm.add_argument("construction", choices=("path", "cycle", "whisker", "leafy", "multipartite",
                                             "tree", "tree-reduction", "element"))
    pm.add_argument("--xs", help="vertex indices for the element construction, e.g. 0,3")
    pm.add_argument("--pairs", action="store_true", help="print every matched pair")
    pv = sub.add_parser("verify", parents=[common, source, params],
                        help="compare a closed formula with computed homology")
    pv.add_argument("theorem", choices=("path", "cycle", "multipartite", "complete", "whiskered",
                                        "leafy", "tree"))
    pt = sub.add_parser("table", parents=[common], help="homology of Ind_r of the 2 x n grid")
    pt.add_argument("--rows", type=int, required=True)
    pt.add_argument("--cols", type=int, required=True)
    return p


COMMANDS: dict[str, Callable] = {
    "gen": cmd_gen, "complex": cmd_complex, "homology": cmd_homology,
    "morse": cmd_morse, "verify": cmd_verify, "table": cmd_table,
}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except ComplexTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except WindowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_WINDOW
    except (UsageError, GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
