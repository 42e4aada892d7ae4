"""Command line front end.

Subcommands: compute, build, enumerate, verify, lemma-check, table.
Exit codes: 0 success / all claims confirmed, 1 a claim was refuted or
a check reported failures or findings, 2 usage or parse errors.
"""

import argparse
import sys

from .absindex import abs_index
from .enumeration import MAX_ENUM_VERTICES, EnumSpec, enumerate_graphs
from .families import (abs_complete_closed, abs_kappa_xy_closed,
                       abs_knp_closed, abs_kr_join_closed,
                       abs_multipartite_closed, abs_path_closed,
                       abs_sixpart_closed, abs_turan_closed, build_complete,
                       build_complete_bipartite, build_complete_multipartite,
                       build_kappa_xy, build_knp, build_kr_join_multipartite,
                       build_path, build_sixpart, build_turan, turan_parts)
from .graph import from_edge_list_text, from_graph6, to_edge_list_text, to_graph6
from .invariants import BipartiteConnectivity, CutVertices, KPartiteness
from .lemmas import (bipartite_extremal_params, lemma_ids, run_lemma_check)
from .verifier import (VALUE_TOL, lemma_checks_to_json, reports_to_json,
                       verify_extremal)


def _fmt(value: float) -> str:
    return f"{value:.12g}"


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _cmd_compute(args) -> int:
    text = _read_text(args.path)
    fmt = args.format
    if fmt == "auto":
        first = next((ln for ln in text.splitlines() if ln.strip()), "")
        fmt = "edges" if first.split() and all(tok.isdigit() for tok in first.split()) else "graph6"
    if fmt == "edges":
        graphs = [from_edge_list_text(text)]
    else:
        graphs = [from_graph6(ln.strip()) for ln in text.splitlines() if ln.strip()]
    if not graphs:
        raise ValueError("no graphs in input")
    for g in graphs:
        print(_fmt(abs_index(g)))
    return 0


def _parse_parts(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"part sizes must be comma-separated integers, got {text!r}") from None


def _cmd_build(args) -> int:
    family = args.family
    if family == "path":
        g, closed = build_path(args.n), abs_path_closed(args.n)
    elif family == "complete":
        g, closed = build_complete(args.n), abs_complete_closed(args.n)
    elif family == "complete-bipartite":
        g = build_complete_bipartite(args.a, args.b)
        closed = abs_multipartite_closed((args.a, args.b))
    elif family == "multipartite":
        parts = _parse_parts(args.parts)
        g, closed = build_complete_multipartite(parts), abs_multipartite_closed(parts)
    elif family == "turan":
        g, closed = build_turan(args.n, args.k), abs_turan_closed(args.n, args.k)
    elif family == "kr-join":
        parts = _parse_parts(args.parts)
        g = build_kr_join_multipartite(args.r, parts)
        closed = abs_kr_join_closed(args.r, parts)
    elif family == "knp":
        g, closed = build_knp(args.n, args.p), abs_knp_closed(args.n, args.p)
    elif family == "sixpart":
        parts = _parse_parts(args.parts)
        if len(parts) != 6:
            raise ValueError(f"sixpart needs exactly 6 sizes, got {len(parts)}")
        g, closed = build_sixpart(parts), abs_sixpart_closed(parts)
    else:  # kappa-xy
        g = build_kappa_xy(args.x, args.y, args.kappa)
        closed = abs_kappa_xy_closed(args.x, args.y, args.kappa)
    if args.format == "edges":
        print(to_edge_list_text(g), end="")
    else:
        print(to_graph6(g))
    if args.closed_form:
        print(_fmt(closed))
    return 0


def _enumerate_constraint(args):
    chosen = [name for name, flag in
              (("--p", args.p is not None),
               ("--k/--r", args.k is not None or args.r is not None),
               ("--kappa", args.kappa is not None)) if flag]
    if len(chosen) > 1:
        raise ValueError(f"choose one filter, got {' and '.join(chosen)}")
    if args.p is not None:
        return CutVertices(args.p), args.bipartite
    if args.k is not None or args.r is not None:
        if args.k is None or args.r is None:
            raise ValueError("k-partiteness filter needs both --k and --r")
        return KPartiteness(args.k, args.r), args.bipartite
    if args.kappa is not None:
        return BipartiteConnectivity(args.kappa), True
    return None, args.bipartite


def _cmd_enumerate(args) -> int:
    constraint, bipartite = _enumerate_constraint(args)
    count = 0
    for g in enumerate_graphs(EnumSpec(args.n, bipartite=bipartite, constraint=constraint)):
        print(to_graph6(g))
        count += 1
    if args.count:
        print(f"# {count} graphs", file=sys.stderr)
    return 0


def _verify_cells(args):
    if args.n is not None:
        lo = hi = args.n
    elif args.n_min is not None and args.n_max is not None:
        lo, hi = args.n_min, args.n_max
    else:
        raise ValueError("give --n or both --n-min and --n-max")
    if not 1 <= lo <= hi <= MAX_ENUM_VERTICES:
        raise ValueError(f"order range must sit within 1..{MAX_ENUM_VERTICES}")
    for n in range(lo, hi + 1):
        if args.klass == "cut-vertices":
            if args.all_p:
                ps = range(0, max(0, n - 2) + 1)
            elif args.p is not None:
                ps = [args.p]
            else:
                raise ValueError("give --p or --all-p")
            for p in ps:
                yield CutVertices(p), n
        elif args.klass == "k-partiteness":
            if args.k is None:
                raise ValueError("give --k")
            if args.all_r:
                rs = range(1, max(0, n - args.k) + 1)
            elif args.r is not None:
                rs = [args.r]
            else:
                raise ValueError("give --r or --all-r")
            for r in rs:
                yield KPartiteness(args.k, r), n
        else:
            if args.all_kappa:
                kappas = range(1, n // 2 + 1)
            elif args.kappa is not None:
                kappas = [args.kappa]
            else:
                raise ValueError("give --kappa or --all-kappa")
            for kappa in kappas:
                yield BipartiteConnectivity(kappa), n


def _constraint_label(cdict: dict) -> str:
    params = ", ".join(f"{k}={v}" for k, v in sorted(cdict.items()) if k != "kind")
    return f"{cdict['kind']}({params})"


def _cmd_verify(args) -> int:
    if args.workers < 1:
        raise ValueError("worker count must be >= 1")
    reports = [verify_extremal(c, n, workers=args.workers, tol=args.tol)
               for c, n in _verify_cells(args)]
    if not reports:
        raise ValueError("no (constraint, n) cells match these parameters")
    width = max(len(_constraint_label(r.constraint)) for r in reports)
    for r in reports:
        label = _constraint_label(r.constraint).ljust(width)
        maxcol = "-" if r.max_abs is None else _fmt(r.max_abs)
        winners = ",".join(r.maximizers) or "-"
        print(f"{label}  n={r.n}  {r.verdict:<11}  size={r.class_size:<4}  "
              f"max={maxcol}  maximizers={winners}")
        if r.note:
            print(f"{' ' * width}  note: {r.note}")
    if args.report:
        with open(args.report, "w", encoding="ascii") as fh:
            fh.write(reports_to_json(reports))
    return 0 if all(r.verdict in ("confirmed", "vacuous") for r in reports) else 1


def _cmd_lemma_check(args) -> int:
    check = run_lemma_check(args.lemma, n_max=args.n_max, k_max=args.k_max,
                            r_max=args.r_max)
    print(f"{check.lemma}: {check.verdict}  grid[{check.grid}]  "
          f"checked={check.checked}  failures={len(check.failures)}  "
          f"findings={len(check.findings)}")
    for line in check.failures[:10]:
        print(f"  failure: {line}")
    for line in check.findings[:10]:
        print(f"  finding: {line}")
    if args.report:
        with open(args.report, "w", encoding="ascii") as fh:
            fh.write(lemma_checks_to_json([check]))
    return 0 if not check.failures and not check.findings else 1


def _table_rows(args):
    for n in range(args.n_min, args.n_max + 1):
        for p in range(0, max(0, n - 2) + 1):
            yield ("cut-vertices", n, f"p={p}", f"K_{n}^{p}",
                   abs_knp_closed(n, p) if n >= 3 else 0.0)
        for k in range(2, min(args.k_max, n - 1) + 1):
            for r in range(1, n - k + 1):
                m = n - r
                yield ("k-partiteness", n, f"k={k}, r={r}",
                       f"K_{r} v T({m},{k})",
                       abs_kr_join_closed(r, turan_parts(m, k)))
        if n >= 7:
            for kappa in range(1, n // 2 + 1):
                params = bipartite_extremal_params(n, kappa)
                if params is None:
                    continue
                if params[0] == "complete-bipartite":
                    name = f"K_{{{params[1]},{params[2]}}}"
                    value = abs_multipartite_closed(params[1:])
                else:
                    x, y, _ = params[1:]
                    name = f"Kbar_{kappa}[{x},{y}]"
                    value = abs_kappa_xy_closed(x, y, kappa)
                yield ("bipartite-kappa", n, f"kappa={kappa}", name, value)


def _cmd_table(args) -> int:
    if args.n_min < 1 or args.n_min > args.n_max:
        raise ValueError("need 1 <= n-min <= n-max")
    rows = [(c, str(n), p, g, _fmt(v)) for c, n, p, g, v in _table_rows(args)]
    header = ("class", "n", "params", "extremal graph", "ABS")
    if args.format == "csv":
        print(",".join(header))
        for row in rows:
            print(",".join(f'"{cell}"' if "," in cell else cell for cell in row))
        return 0
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
              for i, h in enumerate(header)]
    def line(cells):
        return "| " + " | ".join(c.ljust(w) for c, w in zip(cells, widths)) + " |"
    print(line(header))
    print("|" + "|".join("-" * (w + 2) for w in widths) + "|")
    for row in rows:
        print(line(row))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="absgraph",
        description="Atom-bond sum connectivity index: compute, build extremal "
                    "families, enumerate small graph classes, verify extremal claims.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="ABS of graphs from a file or stdin")
    p.add_argument("path", nargs="?", default="-",
                   help="input file, or - for stdin (default)")
    p.add_argument("--format", choices=("auto", "graph6", "edges"), default="auto")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("build", help="construct an extremal family member")
    fam = p.add_subparsers(dest="family", required=True)
    for name, flags in (
            ("path", ("n",)),
            ("complete", ("n",)),
            ("complete-bipartite", ("a", "b")),
            ("multipartite", ("parts",)),
            ("turan", ("n", "k")),
            ("kr-join", ("r", "parts")),
            ("knp", ("n", "p")),
            ("sixpart", ("parts",)),
            ("kappa-xy", ("x", "y", "kappa"))):
        q = fam.add_parser(name)
        for flag in flags:
            if flag == "parts":
                q.add_argument("--parts", required=True,
                               help="comma-separated part sizes, e.g. 2,2,3")
            else:
                q.add_argument(f"--{flag}", type=int, required=True)
        q.add_argument("--format", choices=("graph6", "edges"), default="graph6")
        q.add_argument("--closed-form", action="store_true",
                       help="also print the closed-form ABS value")
        q.set_defaults(func=_cmd_build)

    p = sub.add_parser("enumerate", help="list small connected graphs, one graph6 per line")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bipartite", action="store_true")
    p.add_argument("--p", type=int, help="keep graphs with exactly p cut vertices")
    p.add_argument("--k", type=int, help="with --r: keep graphs with k-partiteness r")
    p.add_argument("--r", type=int)
    p.add_argument("--kappa", type=int,
                   help="keep bipartite graphs with connectivity kappa (implies --bipartite)")
    p.add_argument("--count", action="store_true", help="print the count on stderr")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="exhaustively verify an extremal claim")
    p.add_argument("klass", choices=("cut-vertices", "k-partiteness", "bipartite-kappa"),
                   metavar="class")
    p.add_argument("--n", type=int)
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--all-p", action="store_true")
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--all-r", action="store_true")
    p.add_argument("--kappa", type=int)
    p.add_argument("--all-kappa", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--tol", type=float, default=VALUE_TOL)
    p.add_argument("--report", metavar="PATH", help="write the JSON report here")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("lemma-check", help="run one inequality grid sweep")
    p.add_argument("lemma", help=f"one of: {', '.join(lemma_ids())}")
    p.add_argument("--n-max", type=int, default=40)
    p.add_argument("--k-max", type=int, default=6)
    p.add_argument("--r-max", type=int, default=5)
    p.add_argument("--report", metavar="PATH", help="write the JSON report here")
    p.set_defaults(func=_cmd_lemma_check)

    p = sub.add_parser("table", help="closed-form extremal values per class and order")
    p.add_argument("--n-min", type=int, default=7)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--k-max", type=int, default=4)
    p.add_argument("--format", choices=("markdown", "csv"), default="markdown")
    p.set_defaults(func=_cmd_table)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
