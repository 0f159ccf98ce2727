"""Batch command-line surface.

Machine-readable data goes to stdout (or --out); human summaries go to
stderr. Identical invocations produce byte-identical data: key order is
fixed and wall-clock timing never enters the data section.

Exit codes: 0 success, 1 discrepancy or fuzz violation, 2 usage error,
3 input error, 4 scale error.
"""

import argparse
import csv
import io
import json
import sys

from . import compression, corpus, difference, graph, partition, search
from .errors import ScaleError

_EXIT_DISCREPANCY = 1
_EXIT_USAGE = 2
_EXIT_INPUT = 3
_EXIT_SCALE = 4


def _read_graph(args) -> graph.Graph:
    with open(args.graph, "r", encoding="ascii") as fh:
        text = fh.read()
    if args.format == "graph6":
        return graph.from_graph6(text)
    return graph.load_graph(text)


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_line(payload) -> str:
    return json.dumps(payload) + "\n"


def _json_block(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _summary(msg: str) -> None:
    print(msg, file=sys.stderr)


def _cmd_coeffs(args) -> int:
    g = _read_graph(args)
    vec = graph.charpoly_coefficients(g)
    _emit(args, _json_line({"n": g.n, "m": g.m, "coeffs": list(vec.coeffs)}))
    return 0


def _cmd_a4(args) -> int:
    g = _read_graph(args)
    a4, m2, c4 = graph.a4_components(g)
    _emit(args, _json_line({"a4": a4, "m2": m2, "c4": c4}))
    return 0


def _cmd_matchings(args) -> int:
    g = _read_graph(args)
    counts = graph.matching_counts(g, args.k)
    _emit(
        args,
        _json_line(
            {"n": g.n, "m": g.m, "k": args.k, "count": counts[args.k],
             "counts": list(counts)}
        ),
    )
    return 0


def _ev_report(ev: difference.VertexEigenvector) -> dict:
    ev = ev.canonical()
    y = difference.young_matrix(ev)
    t = difference.characteristic_matrix(ev)
    g = difference.realize(ev)
    values = {
        "blocks": difference.a4_by_blocks(ev),
        "char_matrix": difference.a4_by_char_matrix(ev),
        "row_sums": difference.a4_by_row_sums(y),
        "graph": graph.a4_fast(g),
    }
    return {
        "ev": difference.format_eigenvector(ev),
        "n": ev.n,
        "m": ev.m,
        "character": ev.character,
        "young_rows": list(y.rows),
        "t_matrix": [list(row) for row in t.entries],
        "a4": values,
        "agree": len(set(values.values())) == 1,
    }


def _cmd_difference(args) -> int:
    if (args.ev is None) == (args.graph is None):
        raise ValueError("difference needs exactly one of --ev or --graph")
    if args.ev is not None:
        report = _ev_report(difference.parse_eigenvector(args.ev))
    else:
        g = _read_graph(args)
        if not difference.is_difference(g):
            report = {
                "is_difference": False,
                "has_induced_p5": difference.has_induced_p5(g),
            }
        else:
            report = {"is_difference": True}
            report.update(_ev_report(difference.eigenvector_of(g)))
    _emit(args, _json_block(report))
    return 0


def _cmd_compress(args) -> int:
    g = _read_graph(args)
    report = compression.audit_vertex_compression(g, args.src, args.dst, args.k)
    compressed = compression.compress(g, args.src, args.dst)
    report["compressed"] = graph.dump_graph(compressed)
    _emit(args, _json_block(report))
    _summary(f"compress {args.src}->{args.dst}: violations={report['violations']}")
    return 0


def _cmd_corners(args) -> int:
    if args.rows:
        y = difference.parse_rows(args.rows)
        cs = compression.corner_sets(y)
        moves = []
        for out in cs.out_corners:
            for inn in cs.in_corners:
                if abs(out[0] - inn[0]) + abs(out[1] - inn[1]) == 1:
                    continue
                y2 = compression.young_compress(y, out, inn)
                moves.append(
                    {
                        "out": list(out),
                        "in": list(inn),
                        "ij": out[0] * out[1],
                        "pq": inn[0] * inn[1],
                        "rows_after": list(y2.rows),
                        "a4_before": difference.a4_by_row_sums(y),
                        "a4_after": difference.a4_by_row_sums(y2),
                    }
                )
        report = {
            "rows": list(y.rows),
            "s": y.s,
            "out_corners": [list(c) for c in cs.out_corners],
            "in_corners": [list(c) for c in cs.in_corners],
            "corner_matchings": [
                {"corner": list(c), "count": compression.corner_matching_count(y, c)}
                for c in cs.out_corners
            ],
            "moves": moves,
        }
        _emit(args, _json_block(report))
        return 0
    if args.n_max is None:
        raise ValueError("corners needs --rows or --n-max")
    audit = compression.audit_corner_monotonicity(args.n_max)
    _emit(args, _json_block(audit))
    _summary(
        f"corner audit n<= {args.n_max}: {audit['move_count']} moves, "
        f"forward_holds={audit['forward_holds']} converse_holds={audit['converse_holds']}"
    )
    return 0


def _cmd_search(args) -> int:
    cell = search.verify_cell(args.n, args.m, args.mode)
    _emit(args, _json_block(cell))
    _summary(
        f"search ({args.n},{args.m}): min_a4={cell['min_a4']} "
        f"discrepancy={cell['discrepancy']}"
    )
    return 0


def _cmd_partition(args) -> int:
    res = partition.solve(args.n, args.m)
    _emit(
        args,
        _json_block(
            {
                "n": args.n,
                "m": args.m,
                "min": res.minimum,
                "argmin": [list(rows) for rows in res.argmin],
                "feasible_count": res.feasible_count,
            }
        ),
    )
    return 0


_CSV_COLUMNS = [
    "n", "m", "min_a4", "paper_case", "paper_value", "derived_value",
    "discrepancy", "t46", "t47", "contains_difference_witness",
    "witness_count", "difference_witnesses",
]


def _verify_csv(result: search.VerifyResult) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_COLUMNS)
    for cell in result.cells:
        writer.writerow(
            [
                cell["n"],
                cell["m"],
                cell["min_a4"],
                cell["paper_case"] or "",
                "" if cell["paper_value"] is None else cell["paper_value"],
                "" if cell["derived_value"] is None else cell["derived_value"],
                int(cell["discrepancy"]),
                int(cell["structural"]["t46"]),
                int(cell["structural"]["t47"]),
                ""
                if cell["contains_difference_witness"] is None
                else int(cell["contains_difference_witness"]),
                len(cell["witnesses"]),
                "|".join(cell["difference_witnesses"]),
            ]
        )
    return buf.getvalue()


def _cmd_verify(args) -> int:
    result = search.verify_range(args.n_min, args.n_max, args.mode, jobs=args.jobs)
    if args.csv:
        _emit(args, _verify_csv(result))
    else:
        _emit(args, _json_block(result.to_json()))
    _summary(
        f"verify n={args.n_min}..{args.n_max}: {len(result.cells)} cells, "
        f"{result.discrepancies} discrepancies, "
        f"arith_check={'ok' if result.arithmetic['holds'] else 'FAILED'}"
    )
    return _EXIT_DISCREPANCY if result.discrepancies else 0


def _cmd_fuzz(args) -> int:
    report = corpus.compression_fuzz(
        seed=args.seed, trials=args.trials, n_max=args.n_max, k_max=args.k
    )
    _emit(args, _json_block(report))
    _summary(
        f"fuzz seed={args.seed}: {report['trials']} trials, "
        f"{report['violation_count']} violations"
    )
    return _EXIT_DISCREPANCY if report["violation_count"] else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sachs4",
        description=(
            "Exact fourth-adjacency-coefficient computations on connected "
            "bipartite graphs: per-graph queries, extremal searches, and "
            "closed-form audits."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_input(p):
        p.add_argument("--graph", required=True, help="path to the input graph")
        p.add_argument(
            "--format", choices=("edgelist", "graph6"), default="edgelist"
        )

    def add_out(p):
        p.add_argument("--out", help="write the data document here instead of stdout")

    p = sub.add_parser("coeffs", help="exact characteristic-polynomial coefficients")
    add_graph_input(p)
    add_out(p)
    p.set_defaults(func=_cmd_coeffs)

    p = sub.add_parser("a4", help="fourth coefficient with m2 and c4")
    add_graph_input(p)
    add_out(p)
    p.set_defaults(func=_cmd_a4)

    p = sub.add_parser("matchings", help="exact k-matching counts")
    add_graph_input(p)
    p.add_argument("--k", type=int, required=True)
    add_out(p)
    p.set_defaults(func=_cmd_matchings)

    p = sub.add_parser("difference", help="difference-graph representations and a4")
    p.add_argument("--ev", help='eigenvector text, e.g. "2,2;1,1"')
    p.add_argument("--graph")
    p.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
    add_out(p)
    p.set_defaults(func=_cmd_difference)

    p = sub.add_parser("compress", help="vertex compression audit")
    add_graph_input(p)
    p.add_argument("--from", dest="src", type=int, required=True)
    p.add_argument("--to", dest="dst", type=int, required=True)
    p.add_argument("--k", type=int, default=4, help="largest matching size audited")
    add_out(p)
    p.set_defaults(func=_cmd_compress)

    p = sub.add_parser(
        "corners", help="staircase corners for --rows, or the full move audit"
    )
    p.add_argument("--rows", help='row sums, e.g. "3,1,1"')
    p.add_argument("--n-max", dest="n_max", type=int)
    add_out(p)
    p.set_defaults(func=_cmd_corners)

    p = sub.add_parser("search", help="minimal a4 for one (n, m) cell")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument(
        "--mode", choices=("brute", "difference", "partition", "all"), default="all"
    )
    add_out(p)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("partition", help="row-sum-vector minimization for (n, m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    add_out(p)
    p.set_defaults(func=_cmd_partition)

    p = sub.add_parser("verify", help="range audit; exit 1 on any discrepancy")
    p.add_argument("--n-min", dest="n_min", type=int, required=True)
    p.add_argument("--n-max", dest="n_max", type=int, required=True)
    p.add_argument(
        "--mode", choices=("brute", "difference", "partition", "all"), default="all"
    )
    p.add_argument("--jobs", type=int, default=1)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=True)
    fmt.add_argument("--csv", action="store_true", default=False)
    add_out(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("fuzz", help="seeded compression-monotonicity fuzzing")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--n-max", dest="n_max", type=int, default=12)
    p.add_argument("--k", type=int, default=4)
    add_out(p)
    p.set_defaults(func=_cmd_fuzz)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else _EXIT_USAGE
    try:
        return args.func(args)
    except ScaleError as exc:
        print(f"scale error: {exc}", file=sys.stderr)
        return _EXIT_SCALE
    except (ValueError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return _EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
