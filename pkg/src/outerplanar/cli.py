"""Command-line entry point: ``outerplanar {count,graphs,decompose,verify}``."""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager

from .charring import multiplicity, multiplicity_by_recursion
from .checks import run_suite
from .decomp import decompose, dumps_report
from .opgraph import OuterplanarGraph, count_graphs, enumerate_graphs
from .oracle import SizeGuardError

EXIT_OK, EXIT_USAGE, EXIT_GUARD, EXIT_FAILED = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_degrees(text: str) -> tuple[int, ...]:
    try:
        degrees = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of integers: {text!r}")
    if any(d < 0 for d in degrees):
        raise argparse.ArgumentTypeError("degrees must be nonnegative")
    return degrees


@contextmanager
def _sink(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def render_arcs(G: OuterplanarGraph) -> str:
    """ASCII arc diagram: vertices along the bottom, one row per nesting level.

    Each vertex gets a block with one column per incident edge copy (incoming
    copies first, spaced two apart); parallel copies become stacked arcs.
    """
    labels = [str(v) for v in G.vertices]
    widths = [max(2 * d - 1, len(s)) for d, s in zip(G.degrees, labels)]
    starts, col = [], 0
    for w in widths:
        starts.append(col)
        col += w + 2
    ncols = col - 2 if widths else 0

    inn = [0] * len(G.degrees)
    b = G.vertex_base
    for _, j, a in G.arcs:
        inn[j - b] += a

    spans: list[tuple[int, int, int]] = []  # (left col, right col, level)
    stack: list[list[int]] = []  # [col, deepest level nested inside]
    for k, d in enumerate(G.degrees):
        for slot in range(d):
            c = starts[k] + 2 * slot
            if slot < inn[k]:
                left, inner = stack.pop()
                level = inner + 1
                spans.append((left, c, level))
                if stack:
                    stack[-1][1] = max(stack[-1][1], level)
            else:
                stack.append([c, 0])

    height = max((lvl for *_, lvl in spans), default=0)
    grid = [[" "] * ncols for _ in range(height)]
    for left, right, level in spans:
        top = height - level
        for c in range(left + 1, right):
            grid[top][c] = "-"
        for r in range(top, height):
            ch = "+" if r == top else "|"
            grid[r][left] = grid[r][right] = ch
    base = [" "] * ncols
    for s, w, lab in zip(starts, widths, labels):
        at = s + (w - len(lab)) // 2
        base[at:at + len(lab)] = lab
    return "\n".join("".join(row).rstrip() for row in grid + [base])


def cmd_count(args) -> int:
    degrees = args.degrees
    out = []
    rec = {"degrees": list(degrees), "rooted": args.rooted}
    if args.rooted:
        d0, rest = degrees[0], degrees[1:]
        if not rest:
            raise argparse.ArgumentTypeError("--rooted needs at least two degrees")
        ks = [d0]
        rec["graphs"] = count_graphs(degrees, rooted=True)
        out.append(f"rooted graphs (d0={d0}): {rec['graphs']}")
    else:
        rest = degrees
        total = sum(rest)
        ks = [args.k] if args.k is not None else list(range(total, -1, -2))
        rec["graphs"] = count_graphs(rest)
        out.append(f"graphs: {rec['graphs']}")
        if total % 2:
            out.append("invariants: 0 (odd total degree)")
    rows = []
    ok = True
    for k in ks:
        by_char = multiplicity(rest, k)
        by_rec = multiplicity_by_recursion(rest, k)
        by_graph = count_graphs((k,) + tuple(rest), rooted=True)
        agree = by_char == by_rec == by_graph
        ok &= agree
        rows.append({"k": k, "characters": by_char, "recursion": by_rec, "graphs": by_graph, "agree": agree})
        flag = "" if agree else "  MISMATCH"
        out.append(f"k={k}: {by_char}  (characters {by_char}, recursion {by_rec}, rooted graphs {by_graph}){flag}")
    rec["multiplicities"] = rows
    with _sink(args.output) as fh:
        if args.format == "json":
            fh.write(json.dumps(rec, separators=(",", ":")) + "\n")
        else:
            fh.write("\n".join(out) + "\n")
    return EXIT_OK if ok else EXIT_FAILED


def cmd_graphs(args) -> int:
    graphs = enumerate_graphs(args.degrees, rooted=args.rooted)
    with _sink(args.output) as fh:
        if args.format == "json":
            rec = {
                "degrees": list(args.degrees),
                "rooted": args.rooted,
                "count": len(graphs),
                "graphs": [{"arcs": [list(a) for a in G.arcs]} for G in graphs],
            }
            fh.write(json.dumps(rec, separators=(",", ":")) + "\n")
        else:
            fh.write(f"{len(graphs)} graph(s)\n")
            for n, G in enumerate(graphs, 1):
                fh.write(f"\n#{n} {G}\n{render_arcs(G)}\n")
    return EXIT_OK


def _report_text(report) -> str:
    lines = [report.summary()]
    for c in report.components:
        lines.append(f"d0={c.d0}: {c.multiplicity} graph(s)")
        for gb in c.graphs:
            lines.append(f"  {gb.graph}")
            for i, t in enumerate(gb.tensors):
                lines.append(f"    t_{i} = {t}")
    flags = " ".join(f"{k}={'pass' if v else 'FAIL'}" for k, v in report.verification.items())
    lines.append(f"verified: {flags}")
    return "\n".join(lines) + "\n"


def cmd_decompose(args) -> int:
    try:
        report = decompose(args.degrees)
    except SizeGuardError as exc:
        print(f"outerplanar: {exc}; choose smaller degrees", file=sys.stderr)
        return EXIT_GUARD
    with _sink(args.output) as fh:
        fh.write(dumps_report(report) + "\n" if args.format == "json" else _report_text(report))
    return EXIT_OK if report.verified else EXIT_FAILED


def cmd_verify(args) -> int:
    results = run_suite(args.max_sum, args.seed)
    ok = all(r.ok for r in results)
    with _sink(args.output) as fh:
        if args.format == "json":
            rec = {
                "max_sum": args.max_sum,
                "seed": args.seed,
                "checks": [
                    {"name": r.name, "passed": r.passed, "failed": [list(d) for d in r.failed]} for r in results
                ],
                "ok": ok,
            }
            fh.write(json.dumps(rec, separators=(",", ":")) + "\n")
        else:
            width = max(len(r.name) for r in results)
            fh.write(f"property suite, |d| <= {args.max_sum}, seed {args.seed}\n")
            for r in results:
                status = "PASS" if r.ok else "FAIL"
                fh.write(f"{r.name:<{width}}  {status}  {r.passed}/{r.passed + len(r.failed)}\n")
                for d in r.failed[:5]:
                    fh.write(f"{'':<{width}}    failed at {d}\n")
            fh.write(("all checks passed" if ok else "some checks FAILED") + "\n")
    return EXIT_OK if ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="outerplanar", description="SL(2) tensor product decompositions via outerplanar graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, degrees=True):
        if degrees:
            p.add_argument("--degrees", type=parse_degrees, required=True, help="comma-separated, e.g. 1,1,2")
            p.add_argument("--rooted", action="store_true", help="treat the first degree as the root degree d0")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--output", metavar="PATH", help="write here instead of stdout")

    p = sub.add_parser("count", help="graph counts and multiplicities")
    common(p)
    p.add_argument("--k", type=int, help="only this irreducible degree")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("graphs", help="list graphs as arc diagrams")
    common(p)
    p.set_defaults(func=cmd_graphs)

    p = sub.add_parser("decompose", help="explicit decomposition with verification")
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="run the property suite")
    common(p, degrees=False)
    p.add_argument("--max-sum", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "rooted", False) and args.command == "decompose":
        parser.error("--rooted does not apply to decompose")
    try:
        return args.func(args)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    except ValueError as exc:
        print(f"outerplanar: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
