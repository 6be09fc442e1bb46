"""Command-line front end: ``queuelab <subcommand> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Sequence

from . import bounds, census
from .cache import CensusCache
from .core import GraphFormatError, format_graph, read_graph
from .experiment import format_csv, render_svg, run_experiment
from .layout import DEFAULT_NODE_BUDGET, exact_queue_number, heuristic_queue_number
from .rainbow import greedy_partition, max_rainbow
from .randreg import gen_regular
from .verify import CHECKS, verify_lemmas


def _edges(edges) -> str:
    return " ".join(f"({u},{v})" for u, v in edges)


def cmd_rainbow(args) -> int:
    g = read_graph(args.graph, "ordered")
    size, cert = max_rainbow(g)
    print(size)
    print("certificate:", _edges(cert.edges) or "(none)")
    return 0


def cmd_partition(args) -> int:
    g = read_graph(args.graph, "ordered")
    a = greedy_partition(g)
    print(f"k={a.k}")
    for q, members in a.queues().items():
        print(f"queue {q}: {_edges(members)}")
    return 0


def cmd_queue_number(args) -> int:
    g = read_graph(args.graph, "labelled")
    if args.exact:
        res = exact_queue_number(g, args.budget, seed=args.seed)
    else:
        res = heuristic_queue_number(g, restarts=args.restarts, seed=args.seed)
    print(res.queue_number)
    print("exact:", "yes" if res.exact else "no (upper bound)")
    print("order:", " ".join(map(str, res.witness_order)))
    for q, members in res.witness_assignment.queues().items():
        print(f"queue {q}: {_edges(members)}")
    return 0


def cmd_census(args) -> int:
    cache = CensusCache(args.cache)
    n = args.n
    if args.sizes is not None:
        sizes = sorted(int(x) for x in args.sizes.split(",") if x.strip())
        count = census.count_kqueues_with_sizes(n, sizes)
        prod = math.prod(census.count_queues_by_edges(n, s) for s in sizes)
        print(f"g({n}; {','.join(map(str, sizes))}) = {count}  (product bound {prod})")
        return 0 if count <= prod else 1
    if args.delta is not None:
        count = cache.count("labelled_regular", n, lambda: census.count_labelled_regular(n, args.delta),
                            "neighbour-set backtracking", delta=args.delta)
        lb = bounds.regular_count_lower_bound_log(n, args.delta)
        holds = bounds.compare_log(lb, bounds.log_int(count)).verdict
        print(f"labelled {args.delta}-regular graphs on {n} vertices: {count}")
        print(f"lower bound (n/3delta)^(delta n/2) = {math.exp(lb):.6g}: {'holds' if holds else 'below threshold'}")
        return 0
    if args.labelled:
        if args.m is None or args.k is None:
            print("--labelled needs --m and --k", file=sys.stderr)
            return 2
        count = cache.count("labelled_qn_le", n, lambda: census.count_labelled_qn_le(n, args.m, args.k),
                            "exact queue-number per labelled graph", m=args.m, k=args.k)
        print(f"labelled graphs n={n} m={args.m} with queue-number <= {args.k}: {count}")
        return 0
    if args.m is None:
        count = cache.count("queues_by_n", n, lambda: census.enumerate_queues(n), "bitmask backtracking")
        print(f"g({n}) = {count}  (121^n = {bounds.queue_count_bound(n)})")
        return 0
    if args.k is None:
        count = cache.count("queues_by_n_m", n, lambda: census.count_queues_by_edges(n, args.m),
                            "bitmask backtracking", m=args.m)
        print(f"g({n},{args.m}) = {count}")
        return 0
    count = cache.count("kqueues_by_n_m_k", n, lambda: census.count_kqueues(n, args.m, args.k),
                        "left-endpoint profile sweep", m=args.m, k=args.k)
    print(f"g({n},{args.m},{args.k}) = {count}")
    return 0


def cmd_verify(args) -> int:
    only = args.only.split(",") if args.only else None
    if only:
        unknown = [c for c in only if c not in CHECKS]
        if unknown:
            print(f"unknown checks: {', '.join(unknown)}; valid: {', '.join(CHECKS)}", file=sys.stderr)
            return 2
    status = 0
    for r in verify_lemmas(args.max_n, only):
        print(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}")
        if not r.passed:
            status = 1
            print(f"COUNTEREXAMPLE\t{r.name}\t{r.counterexample}")
    return status


def cmd_max_edges(args) -> int:
    m, witness = census.max_queue_edges(args.n)
    print(m)
    print("witness:", _edges(witness))
    print("edge sums:", " ".join(str(u + v) for u, v in witness))
    return 0 if m <= 2 * args.n - 1 else 1


def cmd_patterns(args) -> int:
    pats = census.doubling_patterns(args.loop)
    print(len(pats))
    for p in pats:
        print(_edges(sorted(p.edge_set)))
    return 0


def cmd_gen_regular(args) -> int:
    s = gen_regular(args.n, args.delta, args.seed)
    sys.stdout.write(f"# {args.delta}-regular, seed {args.seed}, {s.rejections} rejected pairings\n")
    sys.stdout.write(format_graph(s.graph))
    return 0


def cmd_bounds(args) -> int:
    n, delta, c = args.n, args.delta, args.c
    m = args.m if args.m is not None else (delta * n // 2 if delta else None)
    print(f"parameters: n={n} delta={delta} m={m} k={args.k} c={c}")
    if delta:
        print(f"ln regular lower bound     = {bounds.regular_count_lower_bound_log(n, delta):.6f}")
        print(f"dujwoo upper bound         = {bounds.dujwoo_upper(n, delta):.6f}")
        if delta >= 3:
            print(f"theorem lower bound        = {bounds.theorem_lower(n, delta, c):.6f}")
            print(f"solve_min_k (n^n)          = {bounds.solve_min_k(n, delta, c)}")
            print(f"solve_min_k (n!)           = {bounds.solve_min_k(n, delta, c, factorial=True)}")
    if m is not None and args.k is not None:
        try:
            print(f"ln k-queue count bound     = {bounds.kqueue_count_bound_log(n, m, args.k, c):.6f}")
            print(f"ln labelled count bound    = {bounds.labelled_count_bound_log(n, m, args.k, c):.6f}")
        except bounds.BoundRangeError as exc:
            print(f"k-queue bounds: {exc}")
    return 0


def cmd_experiment(args) -> int:
    n_list = [int(x) for x in args.n_list.split(",") if x.strip()]
    rows = run_experiment(args.delta, n_list, args.samples, args.seed, args.exact_limit,
                          args.budget, args.restarts, timing=args.timing, workers=args.workers)
    text = format_csv(rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(rows))
    status = 0
    for r in rows:
        if r.error:
            print(f"row n={r.n} seed={r.seed}: {r.error}", file=sys.stderr)
        elif r.queue_number > math.ceil(r.dujwoo_upper):
            print(f"COUNTEREXAMPLE\tupper-bound\tn={r.n} seed={r.seed} qn={r.queue_number}", file=sys.stderr)
            status = 1
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="queuelab", description="Queue layouts, rainbows and counting bounds.")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--graph", required=True, help="graph file ('n' then one 'u v' per line)")
        sp.set_defaults(func=func)
        return sp

    graph_cmd("rainbow", cmd_rainbow, "largest rainbow of an ordered graph")
    graph_cmd("partition", cmd_partition, "depth-based queue partition of an ordered graph")
    sp = graph_cmd("queue-number", cmd_queue_number, "queue-number of an abstract graph")
    sp.add_argument("--exact", action="store_true", help="branch-and-bound instead of the heuristic")
    sp.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    sp.add_argument("--restarts", type=int, default=64)
    sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("census", help="exact counts of ordered queues and k-queues")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--sizes", help="comma-separated queue sizes")
    sp.add_argument("--labelled", action="store_true", help="count labelled simple graphs with queue-number <= k")
    sp.add_argument("--delta", type=int, help="count labelled delta-regular graphs")
    sp.add_argument("--cache", default=None, help="cache file (default $QUEUELAB_CACHE or ./census.cache)")
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("verify", help="exhaustive verification suites")
    sp.add_argument("suite", choices=["lemmas"])
    sp.add_argument("--max-n", type=int, default=5)
    sp.add_argument("--only", help=f"comma-separated subset of: {','.join(CHECKS)}")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("max-edges", help="largest queue on n vertices")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_max_edges)

    sp = sub.add_parser("doubling-patterns", help="list the doubling patterns")
    sp.add_argument("--loop", action="store_true")
    sp.set_defaults(func=cmd_patterns)

    sp = sub.add_parser("gen-regular", help="seeded uniform random regular graph")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--delta", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.set_defaults(func=cmd_gen_regular)

    sp = sub.add_parser("bounds", help="evaluate the closed-form bounds")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--delta", type=int, default=0)
    sp.add_argument("--m", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--c", type=float, default=1.0)
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("experiment", help="queue-numbers of random regular graphs as CSV")
    sp.add_argument("--delta", type=int, required=True)
    sp.add_argument("--n-list", required=True, help="comma-separated vertex counts")
    sp.add_argument("--samples", type=int, default=5)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--exact-limit", type=int, default=12)
    sp.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    sp.add_argument("--restarts", type=int, default=64)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--timing", action="store_true", help="fill runtime_ms (output no longer reproducible)")
    sp.add_argument("--out", help="CSV path (default stdout)")
    sp.add_argument("--svg", help="also write a scatter plot")
    sp.set_defaults(func=cmd_experiment)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, census.CensusLimitError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
