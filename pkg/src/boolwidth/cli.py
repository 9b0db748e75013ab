"""Command-line entry point: ``boolwidth <subcommand> ...``.

Exit codes: 0 success, 1 infeasible instance, 2 bad input, 3 a class or
neighbourhood cap was exceeded.
"""

from __future__ import annotations

import argparse
import inspect
import math
import sys
from concurrent.futures import ProcessPoolExecutor

from . import builders, checks, generators
from .decomposition import (
    DEFAULT_BOOL_CAP,
    caterpillar_from_order,
    cut_bool,
    cut_rank,
    cuts_of,
    format_tree,
    random_decomposition,
    read_tree,
)
from .equivalence import DEFAULT_CLASS_CAP, build_table, format_class_table
from .errors import CapExceededError, InputError
from .graph import bits, format_graph, read_graph, vset
from .models import format_model, read_model, realize
from .solver import (
    INFEASIBLE,
    SigmaRhoProblem,
    parse_weights,
    preset,
    read_problem,
    solve_dq,
    solve_sigma_rho,
)


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_vertices(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise InputError(f"cannot read vertex list {text!r}") from None


def cmd_gen(args) -> int:
    what = args.what
    if what == "hsu-graph":
        _emit(format_graph(generators.hsu_graph(args.a, args.b)), args.output)
    elif what in ("hsu-stable", "hsu-clique"):
        if args.model:
            model = (
                generators.stable_chain_permutation_model(args.p, args.q)
                if what == "hsu-stable"
                else generators.clique_chain_interval_model(args.p, args.q)
            )
            _emit(format_model(model), args.output)
        else:
            kind = "stable" if what == "hsu-stable" else "clique"
            g = generators.hsu_join_chain(generators.HsuChainSpec(args.p, args.q, kind))
            _emit(format_graph(g), args.output)
    elif what == "random-graph":
        _emit(format_graph(generators.random_graph(args.n, args.edge_prob, args.seed)), args.output)
    elif what.startswith("random-"):
        params = {}
        if args.k is not None:
            params["k"] = args.k
        if args.max_load is not None:
            params["max_load"] = args.max_load
        obj = generators.random_model(what[len("random-") :], args.n, args.seed, **params)
        text = format_graph(obj) if hasattr(obj, "adj") else format_model(obj)
        _emit(text, args.output)
    else:
        raise InputError(f"unknown generator {what!r}")
    return 0


def cmd_realize(args) -> int:
    _emit(format_graph(realize(read_model(args.model))), args.output)
    return 0


def cmd_order(args) -> int:
    if args.model:
        obj = read_model(args.model)
    elif args.graph:
        obj = read_graph(args.graph)
    else:
        raise InputError("order needs a model (-m) or a graph (-g)")
    order = builders.order_for_class(args.cls, obj, args.point)
    print(" ".join(map(str, order)))
    if args.tree:
        _emit(format_tree(caterpillar_from_order(order)) + "\n", args.tree)
    return 0


def cmd_decomp(args) -> int:
    if args.order is not None:
        t = caterpillar_from_order(_parse_vertices(args.order))
    elif args.random is not None:
        t = random_decomposition(args.random, args.seed)
    else:
        raise InputError("decomp needs --order or --random")
    _emit(format_tree(t) + "\n", args.output)
    return 0


def _cut_value(job):
    g, A, edge, measure, cap = job
    if measure == "rank":
        return cut_rank(g, A)
    try:
        return cut_bool(g, A, cap).count
    except CapExceededError as exc:
        raise CapExceededError(f"cut at tree edge {edge}: {exc}", exc.partial, edge) from None


def cmd_width(args) -> int:
    g = read_graph(args.graph)
    t = read_tree(args.tree)
    if t.n != g.n:
        raise InputError(f"tree has {t.n} leaves but graph has {g.n} vertices")
    cuts = cuts_of(t)
    jobs = [(g, c.A, c.edge, args.measure, args.cap) for c in cuts]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            values = list(pool.map(_cut_value, jobs, chunksize=16))
    else:
        values = [_cut_value(j) for j in jobs]
    if args.per_cut:
        for c, v in zip(cuts, values):
            print(f"cut {c.edge[0]}-{c.edge[1]}\t{' '.join(map(str, bits(c.A)))}\t{v}")
    top = max(values, default=1 if args.measure == "bool" else 0)
    if args.measure == "bool":
        print(f"classes {top}")
        print(f"bits {math.log2(top)}")
    else:
        print(f"rank {top}")
    return 0


def cmd_classes(args) -> int:
    g = read_graph(args.graph)
    side = vset(_parse_vertices(args.side))
    if side & ~g.vertices:
        raise InputError("side mentions a vertex outside the graph")
    table = build_table(g, side, args.d, args.cap)
    _emit(format_class_table(g, table), args.output)
    return 0


def cmd_solve(args) -> int:
    g = read_graph(args.graph)
    t = read_tree(args.tree)
    if args.problem:
        prob = read_problem(args.problem)
    elif args.preset:
        prob = preset(args.preset)
    else:
        raise InputError("solve needs a problem file (-p) or --preset")
    if args.weights:
        with open(args.weights) as fh:
            prob = prob.with_weights(parse_weights(fh.read()))
    if isinstance(prob, SigmaRhoProblem):
        sol = solve_sigma_rho(g, t, prob, args.cap)
        if sol is INFEASIBLE:
            print("infeasible")
            return 1
        print(f"value {sol.value}")
        print("witness " + " ".join(map(str, bits(sol.witness))))
    else:
        sol = solve_dq(g, t, prob, args.cap)
        if sol is INFEASIBLE:
            print("infeasible")
            return 1
        print(f"value {sol.value}")
        for i, part in enumerate(sol.parts):
            print(f"part {i} " + " ".join(map(str, bits(part))))
    return 0


def cmd_verify(args) -> int:
    names = list(checks.CHECKS) if args.check == "all" else [args.check]
    failed = False
    for name in names:
        kwargs = {}
        accepted = inspect.signature(checks.CHECKS[name]).parameters
        if args.trials is not None and "trials" in accepted:
            kwargs["trials"] = args.trials
        if "seed" in accepted:
            kwargs["seed"] = args.seed
        res = checks.run_check(name, **kwargs)
        print(res.line())
        failed |= not res.passed
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="boolwidth",
        description="Boolean-width decompositions, exact cut measures and D_q solvers.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate Hsu families or random instances")
    gens = ["hsu-graph", "hsu-stable", "hsu-clique", "random-graph"]
    gens += [f"random-{k}" for k in generators.RANDOM_KINDS]
    p.add_argument("what", choices=gens)
    p.add_argument("--a", type=int, default=1, help="Hsu-graph v-side size")
    p.add_argument("--b", type=int, default=1, help="Hsu-graph u-side size")
    p.add_argument("--p", type=int, default=1, help="chain width")
    p.add_argument("--q", type=int, default=1, help="chain length")
    p.add_argument("--model", action="store_true", help="emit the chain's intersection model")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--edge-prob", type=float, default=0.3)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--max-load", type=int, default=None)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("realize", help="turn a model file into a graph file")
    p.add_argument("-m", "--model", required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("order", help="vertex order for a graph class")
    p.add_argument("--class", dest="cls", required=True, choices=builders.CLASS_NAMES)
    p.add_argument("-m", "--model")
    p.add_argument("-g", "--graph")
    p.add_argument("--point", type=int, default=0, help="start tick for circular models")
    p.add_argument("-t", "--tree", help="also write the caterpillar decomposition here")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("decomp", help="write a caterpillar or random decomposition")
    p.add_argument("--order", help="vertex order, e.g. '0 2 1 3'")
    p.add_argument("--random", type=int, metavar="N", help="random tree on N leaves")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_decomp)

    p = sub.add_parser("width", help="boolean-width or rank-width of a decomposition")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-t", "--tree", required=True)
    p.add_argument("--measure", choices=("bool", "rank"), default="bool")
    p.add_argument("--cap", type=int, default=DEFAULT_BOOL_CAP)
    p.add_argument("--per-cut", action="store_true", help="print every cut's value")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_width)

    p = sub.add_parser("classes", help="d-neighbour classes of one side of a cut (TSV)")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-A", "--side", required=True, help="vertices of the side, e.g. '0 1 2'")
    p.add_argument("-d", type=int, default=1)
    p.add_argument("--cap", type=int, default=DEFAULT_CLASS_CAP)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("solve", help="solve a (sigma, rho) or D_q problem over a decomposition")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-t", "--tree", required=True)
    p.add_argument("-p", "--problem")
    p.add_argument("--preset", help="named problem, e.g. dominating-set or 3-coloring")
    p.add_argument("-w", "--weights")
    p.add_argument("--cap", type=int, default=DEFAULT_CLASS_CAP)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="compare fast paths with brute-force oracles")
    p.add_argument("check", choices=["all", *checks.CHECKS])
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
