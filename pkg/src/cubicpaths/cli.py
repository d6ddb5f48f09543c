"""Command-line front end.

Verbs: count, hamiltonize, tuple {decode,encode,mu,validate}, search, block,
bound.  Every command is deterministic given identical flags and inputs.
Exit status: 0 success, 1 validation or parse error, 2 incomplete result
under --strict.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import blocks, fileio, search
from .dag import (
    InvalidDagError,
    count_paths,
    validate,
)
from .hamilton import hamiltonize, tree_sort
from .tuples import (
    ArcTuple,
    InvalidTupleError,
    TupleClass,
    decode,
    encode,
    format_tuple,
    is_valid,
    parse_tuple,
    tuple_mu,
    validity_issues,
)

OK, FAIL, INCOMPLETE = 0, 1, 2


def _read_graph(path: str):
    text = Path(path).read_text() if path != "-" else sys.stdin.read()
    return fileio.parse_graph_text(text)


def _emit(args, document: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        sys.stdout.write(fileio.report_json(document))
    else:
        for line in text_lines:
            print(line)


def _tuple_class(name: str) -> TupleClass:
    return TupleClass.MERGED if name == "merged" else TupleClass.BOUNDARY


def cmd_count(args) -> int:
    dag = _read_graph(args.file)
    report = validate(dag)
    if not report.ok:
        for v in report.violations:
            print(f"invalid: {v}", file=sys.stderr)
        return FAIL
    pc = count_paths(dag)
    doc = fileio.make_report(
        "count",
        {"file": args.file, "vertices": dag.vertex_count},
        {"total": pc.total, "mu": list(pc.mu)},
    )
    _emit(args, doc, [f"total: {pc.total}", "mu: " + " ".join(str(m) for m in pc.mu)])
    return OK


def cmd_hamiltonize(args) -> int:
    dag = _read_graph(args.file)
    try:
        result, log = hamiltonize(dag)
    except (InvalidDagError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAIL
    sorted_mu = count_paths(tree_sort(dag)).mu
    out_mu = count_paths(result).mu
    if not all(a >= b for a, b in zip(out_mu, sorted_mu)):
        print("error: path counts decreased", file=sys.stderr)
        print(f"before: {sorted_mu}", file=sys.stderr)
        print(f"after:  {out_mu}", file=sys.stderr)
        return FAIL
    graph_text = fileio.write_graph_text(result, ("rewritten onto a Hamiltonian path",))
    if args.out:
        Path(args.out).write_text(graph_text)
    move_lines = [
        f"{m.kind} move at {m.focus}: removed {m.removed[0]},{m.removed[1]} "
        f"added {m.added[0]},{m.added[1]}"
        for m in log
    ]
    doc = fileio.make_report(
        "hamiltonize",
        {"file": args.file},
        {
            "total_before": sorted_mu[-1],
            "total_after": out_mu[-1],
            "moves": move_lines,
            "edges": [list(e) for e in result.edges],
        },
    )
    text = [] if args.out else [graph_text.rstrip("\n")]
    text += [f"moves: {len(log)}"] + move_lines
    text += [f"total: {sorted_mu[-1]} -> {out_mu[-1]}"]
    _emit(args, doc, text)
    return OK


def cmd_tuple(args) -> int:
    klass = _tuple_class(args.klass)
    try:
        if args.verb == "decode":
            t = parse_tuple(args.value, klass)
            dag = decode(t)
            text = fileio.write_graph_text(dag, (f"decoded from {format_tuple(t)} ({args.klass})",))
            if args.out:
                Path(args.out).write_text(text)
                print(f"wrote {args.out}")
            else:
                sys.stdout.write(text)
            return OK
        if args.verb == "encode":
            dag = _read_graph(args.value)
            t = encode(dag)
            doc = fileio.make_report(
                "tuple-encode",
                {"file": args.value},
                {"tuple": format_tuple(t), "class": t.klass.value},
            )
            _emit(args, doc, [f"tuple: {format_tuple(t)}", f"class: {t.klass.value}"])
            return OK
        if args.verb == "mu":
            t = parse_tuple(args.value, klass)
            am = tuple_mu(t)
            doc = fileio.make_report(
                "tuple-mu",
                {"tuple": format_tuple(t), "class": args.klass},
                {"arc_mu": list(am.arc_mu), "total": am.total},
            )
            _emit(
                args,
                doc,
                ["arc_mu: " + " ".join(str(m) for m in am.arc_mu), f"total: {am.total}"],
            )
            return OK
        if args.verb == "validate":
            t = parse_tuple(args.value, klass)
            issues = validity_issues(t, args.conn)
            doc = fileio.make_report(
                "tuple-validate",
                {"tuple": format_tuple(t), "class": args.klass, "connectivity": args.conn},
                {"valid": not issues, "issues": issues},
            )
            lines = [f"valid: {str(not issues).lower()}"] + [f"issue: {s}" for s in issues]
            _emit(args, doc, lines)
            return OK if not issues else FAIL
    except (InvalidTupleError, InvalidDagError, fileio.ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAIL
    raise AssertionError("unreachable")


def cmd_search(args) -> int:
    prunes = frozenset(args.prune or ())
    if args.check:
        report = search.check_conjecture(args.check, args.n, args.budget, prunes)
    else:
        spec = search.SearchSpec(
            n=args.n,
            klass=_tuple_class(args.klass),
            connectivity=args.conn,
            simple_only=args.simple,
            prunes=prunes,
        )
        report = search.find_extremal(spec, args.budget)
    outputs = {
        "max_total": report.max_total,
        "witnesses": [",".join(map(str, w)) for w in report.witnesses],
        "complete": report.complete,
        "nodes": report.nodes,
    }
    lines = [
        f"max: {report.max_total}",
        "witnesses: " + "; ".join(",".join(map(str, w)) for w in report.witnesses),
    ]
    if report.closed_form:
        cf = report.closed_form
        outputs["closed_form"] = {
            "name": cf.name,
            "value": cf.value,
            "exact": cf.exact_value,
            "claim": cf.claim,
            "tight_claimed": cf.tight_claimed,
            "equal": cf.equal,
            "exceeded": cf.exceeded,
        }
        lines.append(
            f"closed form {cf.name}: {cf.exact_value if cf.exact_value is not None else cf.value}"
            f" ({cf.claim}; equal={cf.equal})"
        )
        if cf.exceeded:
            lines.append(
                "COUNTEREXAMPLE: search exceeded the conjectured bound; witnesses above"
            )
            outputs["counterexamples"] = [",".join(map(str, w)) for w in report.counterexamples]
    if not report.complete:
        lines.append("warning: search incomplete (budget exhausted)")
    doc = fileio.make_report(
        "search",
        {
            "n": args.n,
            "class": args.klass,
            "connectivity": args.conn,
            "simple": args.simple,
            "check": args.check,
            "prunes": sorted(prunes),
        },
        outputs,
        {"budget": args.budget, "seed": args.seed},
    )
    _emit(args, doc, lines)
    if not report.complete:
        return INCOMPLETE if args.strict else OK
    return OK


def cmd_block(args) -> int:
    sol = blocks.solve_block(args.k, args.budget)
    g2 = blocks.growth_factor(sol.f, args.k)
    doc = fileio.make_report(
        "block",
        {"k": args.k},
        {
            "f": sol.f,
            "g2": g2,
            "proven_optimal": sol.proven_optimal,
            "nodes": sol.nodes_explored,
            "assignment": [list(e) for e in sol.assignment],
        },
        {"budget": args.budget},
    )
    lines = [f"f({args.k}) = {sol.f}", f"g2 = {g2:.6f}", f"proven: {sol.proven_optimal}"]
    if args.graph_out:
        real = [e for e in sol.assignment if 1 <= e[0] and e[1] <= args.k]
        dummy = [e for e in sol.assignment if e not in real]
        comments = [f"block solution k={args.k}, f={sol.f}"]
        comments += [f"dummy edge {u} {v}" for u, v in dummy]
        from .dag import Dag

        Path(args.graph_out).write_text(
            fileio.write_graph_text(Dag(args.k, tuple(real)), tuple(comments))
        )
        lines.append(f"wrote {args.graph_out}")
    _emit(args, doc, lines)
    if not sol.proven_optimal:
        print("warning: optimality not proven within budget", file=sys.stderr)
        return INCOMPLETE if args.strict else OK
    return OK


def _parse_inject(text: str | None) -> dict[int, int]:
    if not text:
        return {}
    out = {}
    for part in text.split(","):
        k, _, f = part.partition("=")
        out[int(k)] = int(f)
    return out


def cmd_bound(args) -> int:
    overrides = _parse_inject(args.inject)
    report = blocks.assemble_bound(args.range[0], args.range[1], args.budget, overrides)
    rows = [(r.k, r.f, r.g2) for r in report.rows]
    if args.csv:
        Path(args.csv).write_text(fileio.growth_csv(rows))
    doc = fileio.make_report(
        "bound",
        {"range": list(args.range), "inject": overrides and {str(k): v for k, v in overrides.items()}},
        {
            "rows": [{"k": r.k, "f": r.f, "g2": r.g2, "proven": r.proven} for r in report.rows],
            "bound_base": report.bound_base,
            "argmax_k": report.argmax_k,
            "final_block_constant": report.final_block_constant,
            "rigorous": report.rigorous,
        },
        {"budget": args.budget},
    )
    lines = [f"k={r.k}: f={r.f} g2={r.g2:.6f}" for r in report.rows]
    lines.append(f"bound base: {report.bound_base:.4f} at k={report.argmax_k}")
    lines.append(f"final block constant: {report.final_block_constant}")
    if args.csv:
        lines.append(f"wrote {args.csv}")
    _emit(args, doc, lines)
    if not report.rigorous:
        print("warning: some blocks unproven; bound not rigorous", file=sys.stderr)
        return INCOMPLETE if args.strict else OK
    return OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cubicpaths",
        description="Source-to-sink path counting and extremal search on 3-regular DAGs.",
    )
    ap.add_argument("--format", choices=("text", "json"), default="text")
    ap.add_argument("--seed", type=int, default=None, help="reserved; all algorithms are deterministic")
    ap.add_argument("--budget", type=int, default=None, help="node budget for searches")
    ap.add_argument("--strict", action="store_true", help="nonzero exit on incomplete results")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count source-to-sink paths of a graph file")
    p.add_argument("file")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("hamiltonize", help="rewrite a 3-regular graph onto a Hamiltonian path")
    p.add_argument("file")
    p.add_argument("--out", help="write the rewritten graph here")
    p.set_defaults(func=cmd_hamiltonize)

    p = sub.add_parser("tuple", help="arc-tuple codec operations")
    p.add_argument("verb", choices=("decode", "encode", "mu", "validate"))
    p.add_argument("value", help="tuple text (or graph file for encode)")
    p.add_argument("--class", dest="klass", choices=("boundary", "merged"), default="boundary")
    p.add_argument("--conn", type=int, choices=(1, 2, 3), default=1)
    p.add_argument("--out", help="write decoded graph here")
    p.set_defaults(func=cmd_tuple)

    p = sub.add_parser("search", help="exhaustive extremal search over tuples")
    p.add_argument("--n", type=int, required=True,
                   help="tuple length; with --check, half the vertex count")
    p.add_argument("--class", dest="klass", choices=("boundary", "merged"), default="boundary")
    p.add_argument("--conn", type=int, choices=(1, 2, 3), default=1)
    p.add_argument("--simple", action="store_true")
    p.add_argument("--prune", action="append",
                   choices=(search.PRUNE_DOUBLE_LABEL, search.PRUNE_KIND_RUN))
    p.add_argument("--check", choices=search.CONJECTURES,
                   help="compare against a closed form (graph on 2n vertices)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("block", help="solve one block instance exactly")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--graph-out", help="write the witness assignment as a graph file")
    p.set_defaults(func=cmd_block)

    p = sub.add_parser("bound", help="growth table over a window of block sizes")
    p.add_argument("--range", type=int, nargs=2, required=True, metavar=("LO", "HI"))
    p.add_argument("--csv", help="write k,f,g2 rows here")
    p.add_argument("--inject", help="comma-separated k=f pairs of known optima")
    p.set_defaults(func=cmd_bound)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except fileio.ParseError as exc:
        print(f"parse error:\n{exc}", file=sys.stderr)
        return FAIL
    except (InvalidTupleError, InvalidDagError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAIL


if __name__ == "__main__":
    raise SystemExit(main())
