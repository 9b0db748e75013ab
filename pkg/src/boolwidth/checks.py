"""Named comparisons between the fast code paths and the brute-force oracles.

Each check returns a :class:`CheckResult`; on failure ``detail`` describes a
counterexample.  The CLI ``verify`` subcommand and the acceptance tests both
run these.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .builders import (
    dilworth_chain_cover,
    order_co_degenerate,
    order_for_class,
)
from .decomposition import (
    caterpillar_from_order,
    cut_bool,
    cut_rank,
    cut_values,
    random_decomposition,
)
from .equivalence import d_of_set, finite, cofinite, NATURALS
from .generators import (
    clique_chain_interval_model,
    group_order,
    hsu_clique_chain,
    hsu_graph,
    hsu_stable_chain,
    random_graph,
    random_model,
    stable_chain_permutation_model,
)
from .graph import Graph, bits, full_set
from .models import max_point_load, realize
from .oracle import (
    brute_cut_bool,
    brute_dilworth,
    brute_dq,
    brute_max_min_representative,
    brute_max_min_representative_within,
    brute_sigma_rho,
    is_dq_partition,
    is_sigma_rho_set,
)
from .solver import INFEASIBLE, preset, solve_dq, solve_sigma_rho

__all__ = ["CheckResult", "CHECKS", "run_check", "BOUND_CLASSES", "REPRESENTATIVE_CLASSES"]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


def _random_cut(rng: random.Random, n_max: int) -> tuple[Graph, int]:
    n = rng.randint(1, n_max)
    g = random_graph(n, rng.random(), rng.randrange(1 << 30))
    return g, rng.randrange(1 << n)


def check_symmetry(trials: int = 500, seed: int = 0, n_max: int = 16) -> CheckResult:
    rng = random.Random(seed)
    for i in range(trials):
        g, A = _random_cut(rng, n_max)
        a, b = cut_bool(g, A).count, cut_bool(g, g.vertices & ~A).count
        if a != b:
            return CheckResult("symmetry", False, f"trial {i}: A={A:#x} gives {a} vs {b}")
    return CheckResult("symmetry", True, f"{trials} random cuts, class counts equal on both sides")


def check_cut_bool(trials: int = 500, seed: int = 0, n_max: int = 16) -> CheckResult:
    rng = random.Random(seed)
    for i in range(trials):
        g, A = _random_cut(rng, n_max)
        fast, slow = cut_bool(g, A).count, brute_cut_bool(g, A)
        if fast != slow:
            return CheckResult("cut-bool", False, f"trial {i}: A={A:#x} fast {fast} brute {slow}")
    return CheckResult("cut-bool", True, f"{trials} random cuts match subset enumeration")


# class name -> (random kind, model params, n, bound(n, g, obj) on the class count)
BOUND_CLASSES = {
    "permutation": ("perm", {}, 32, lambda n, g, m: n),
    "interval": ("interval", {"max_load": 6}, 32, lambda n, g, m: max_point_load(m)),
    "circular-arc": ("circarc", {}, 24, lambda n, g, m: 4 * max_point_load(m) ** 2),
    "trapezoid": ("ktrap", {"k": 2}, 16, lambda n, g, m: n**2),
    "k-trapezoid": ("ktrap", {"k": 3}, 16, lambda n, g, m: n**3),
    "circular-k-trapezoid": ("circktrap", {"k": 2}, 16, lambda n, g, m: n**4),
    "circular-permutation": ("circperm", {}, 16, lambda n, g, m: n**2),
    "convex": ("convex", {}, 16, lambda n, g, m: n),
    "dilworth": ("dilworth", {}, 16, lambda n, g, m: n ** len(dilworth_chain_cover(g))),
    "co-degenerate": ("codegenerate", {"k": 2}, 16, lambda n, g, m: n ** order_co_degenerate(g)[1]),
}


def _instance(cls: str, n: int, seed: int):
    kind, params, _, _ = BOUND_CLASSES[cls]
    obj = random_model(kind, n, seed, **params)
    if isinstance(obj, Graph):
        g = obj
    elif hasattr(obj, "graph"):
        g = obj.graph
    else:
        g = realize(obj)
    return obj, g


def check_class_bounds(trials: int = 50, seed: int = 0, classes=None) -> CheckResult:
    """Every cut of every built caterpillar stays within the class's count bound."""
    worst = {}
    for cls in classes or BOUND_CLASSES:
        n, bound_of = BOUND_CLASSES[cls][2], BOUND_CLASSES[cls][3]
        ratio = 0.0
        for i in range(trials):
            obj, g = _instance(cls, n, seed * 1000 + i)
            bound = bound_of(n, g, obj)
            t = caterpillar_from_order(order_for_class(cls, obj))
            top = max((v for _, v in cut_values(g, t, "bool")), default=1)
            if top > bound:
                return CheckResult(
                    "class-bounds", False, f"{cls} seed {seed * 1000 + i}: {top} > {bound}"
                )
            ratio = max(ratio, top / bound)
        worst[cls] = ratio
    summary = ", ".join(f"{c} {r:.2f}" for c, r in worst.items())
    return CheckResult("class-bounds", True, f"max count/bound per class: {summary}")


# class name -> representative bound k (None: computed from the graph)
REPRESENTATIVE_CLASSES = {
    "interval": 1,
    "permutation": 1,
    "convex": 1,
    "trapezoid": 2,
    "circular-permutation": 2,
    "circular-arc": 2,
    "k-trapezoid": 3,
    "dilworth": None,
    "circular-k-trapezoid": 4,
}


def _prefix_sides(order) -> list[int]:
    out, acc = [], 0
    for v in order[:-1]:
        acc |= 1 << v
        out.append(acc)
    return out


def check_representatives(
    trials: int = 8, seed: int = 0, n_max: int = 14, ds=(1, 2, 3)
) -> CheckResult:
    """Minimum representatives on the prefix side of every built caterpillar cut.

    Checks the class-specific bound ``k`` for d = 1 (over all of ``A``) and
    ``d * k`` for representatives drawn from inside each set, for each ``d``.
    """
    rng = random.Random(seed)
    cuts = 0
    for cls, k in REPRESENTATIVE_CLASSES.items():
        for _ in range(trials):
            n = rng.randint(4, n_max)
            s = rng.randrange(1 << 30)
            obj, g = _instance(cls, n, s)
            kk = k if k is not None else len(dilworth_chain_cover(g))
            for A in _prefix_sides(order_for_class(cls, obj)):
                cuts += 1
                got = brute_max_min_representative(g, A, 1)
                if got > kk:
                    return CheckResult(
                        "representatives", False, f"{cls} n={n} seed={s} A={A:#x}: {got} > {kk}"
                    )
                for d in ds:
                    got = brute_max_min_representative_within(g, A, d)
                    if got > d * kk:
                        return CheckResult(
                            "representatives",
                            False,
                            f"{cls} n={n} seed={s} A={A:#x} d={d}: within-set {got} > {d * kk}",
                        )
    return CheckResult("representatives", True, f"{cuts} built cuts within their bounds")


def check_hsu_gap(p_max: int = 12) -> CheckResult:
    for p in range(1, p_max + 1):
        g = hsu_graph(p, p)
        A = full_set(p)
        classes, rank = cut_bool(g, A).count, cut_rank(g, A)
        brute = brute_cut_bool(g, A)
        if classes != p + 1 or brute != p + 1 or rank != p:
            return CheckResult(
                "hsu-gap", False, f"p={p}: classes {classes} (brute {brute}), rank {rank}"
            )
    return CheckResult("hsu-gap", True, f"p=1..{p_max}: p+1 classes and rank p")


def check_hsu_chains(p: int = 4, q: int = 13) -> CheckResult:
    g = hsu_clique_chain(p, q)
    t = caterpillar_from_order(group_order(p, q))
    top = max(v for _, v in cut_values(g, t, "bool"))
    if top > (p + 1) ** 2:
        return CheckResult("hsu-chains", False, f"group-order cut with {top} > {(p + 1) ** 2}")
    mid = full_set(p * (q // 2))
    rank = cut_rank(g, mid)
    if rank != p or 2 * rank < p:
        return CheckResult("hsu-chains", False, f"middle group cut rank {rank}, expected {p}")
    for pp, qq in ((3, 4), (1, 2), (2, 3)):
        if realize(stable_chain_permutation_model(pp, qq)) != hsu_stable_chain(pp, qq):
            return CheckResult("hsu-chains", False, f"stable chain model ({pp},{qq}) differs")
        if realize(clique_chain_interval_model(pp, qq)) != hsu_clique_chain(pp, qq):
            return CheckResult("hsu-chains", False, f"clique chain model ({pp},{qq}) differs")
    return CheckResult(
        "hsu-chains",
        True,
        f"clique chain {p}x{q}: max {top} classes <= {(p + 1) ** 2}, middle rank {rank}; "
        "chain models realize the generators",
    )


SIGMA_RHO_PRESETS = (
    "dominating-set",
    "total-dominating-set",
    "independent-set",
    "independent-dominating-set",
    "perfect-code",
)


def check_sigma_rho(trials: int = 300, seed: int = 0, n_max: int = 12) -> CheckResult:
    rng = random.Random(seed)
    for i in range(trials):
        n = rng.randint(1, n_max)
        g = random_graph(n, rng.random(), rng.randrange(1 << 30))
        t = random_decomposition(n, rng.randrange(1 << 30))
        name = SIGMA_RHO_PRESETS[i % len(SIGMA_RHO_PRESETS)]
        weights = [rng.randint(1, 100) for _ in range(n)]
        prob = preset(name).with_weights(weights)
        got = solve_sigma_rho(g, t, prob)
        want = brute_sigma_rho(g, prob.sigma, prob.rho, prob.mode, weights)
        if got is INFEASIBLE or want is None:
            if (got is INFEASIBLE) != (want is None):
                return CheckResult("sigma-rho", False, f"trial {i} {name}: {got} vs brute {want}")
            continue
        if got.value != want:
            return CheckResult("sigma-rho", False, f"trial {i} {name}: {got.value} vs {want}")
        if not is_sigma_rho_set(g, prob.sigma, prob.rho, got.witness):
            return CheckResult("sigma-rho", False, f"trial {i} {name}: witness fails")
        if sum(weights[v] for v in bits(got.witness)) != got.value:
            return CheckResult("sigma-rho", False, f"trial {i} {name}: witness weight differs")
    return CheckResult("sigma-rho", True, f"{trials} instances match brute force")


def check_dq(trials: int = 150, seed: int = 0, n_max: int = 9) -> CheckResult:
    from .solver import sigma_rho_as_dq

    rng = random.Random(seed)
    names = SIGMA_RHO_PRESETS + ("3-coloring", "2-coloring", "1-coloring")
    for i in range(trials):
        n = rng.randint(1, n_max)
        g = random_graph(n, rng.random(), rng.randrange(1 << 30))
        t = random_decomposition(n, rng.randrange(1 << 30))
        name = names[i % len(names)]
        prob = preset(name)
        if name in SIGMA_RHO_PRESETS:
            prob = sigma_rho_as_dq(prob)
        weights = [rng.randint(1, 100) for _ in range(n)]
        prob = prob.with_weights(weights)
        got = solve_dq(g, t, prob)
        want = brute_dq(g, prob.D, prob.mode, weights)
        if (got is INFEASIBLE) != (want is None):
            return CheckResult("dq", False, f"trial {i} {name}: {got} vs brute {want}")
        if got is INFEASIBLE:
            continue
        if got.value != want:
            return CheckResult("dq", False, f"trial {i} {name}: {got.value} vs {want}")
        if not is_dq_partition(g, prob.D, got.parts):
            return CheckResult("dq", False, f"trial {i} {name}: witness partition fails")
    return CheckResult("dq", True, f"{trials} instances match brute force")


def check_d_values() -> CheckResult:
    cases = [(NATURALS, 0), (finite(0), 1), (finite(1), 2), (cofinite(0), 1)]
    for mu, want in cases:
        if d_of_set(mu) != want:
            return CheckResult("d-values", False, f"d({mu}) = {d_of_set(mu)}, expected {want}")
    return CheckResult("d-values", True, "d(N)=0, d({0})=1, d({1})=2, d(N\\{0})=1")


def check_dilworth(trials: int = 100, seed: int = 0, n_max: int = 10) -> CheckResult:
    rng = random.Random(seed)
    for i in range(trials):
        n = rng.randint(1, n_max)
        g = random_graph(n, rng.random(), rng.randrange(1 << 30))
        cover = dilworth_chain_cover(g)
        want = brute_dilworth(g)
        if len(cover) != want or not cover.is_valid(g):
            return CheckResult("dilworth", False, f"trial {i}: {len(cover)} chains, brute {want}")
    return CheckResult("dilworth", True, f"{trials} graphs: cover size equals max antichain")


def check_scaling(n: int = 2000, max_load: int = 32, seed: int = 0) -> CheckResult:
    """Weighted dominating set on a large interval graph via its interval order."""
    start = time.perf_counter()
    model = random_model("interval", n, seed, max_load=max_load, max_len=n // 20)
    g = realize(model)
    C = max_point_load(model)
    rng = random.Random(seed)
    weights = [rng.randint(1, 100) for _ in range(n)]
    prob = preset("dominating-set").with_weights(weights)
    t = caterpillar_from_order(order_for_class("interval", model))
    sol = solve_sigma_rho(g, t, prob)
    elapsed = time.perf_counter() - start
    if sol is INFEASIBLE:
        return CheckResult("scaling", False, "solver reported no dominating set", elapsed)
    ok = is_sigma_rho_set(g, prob.sigma, prob.rho, sol.witness)
    ok &= sum(weights[v] for v in bits(sol.witness)) == sol.value
    return CheckResult(
        "scaling",
        ok,
        f"n={n}, clique number {C}, weight {sol.value}, {elapsed:.1f}s, "
        f"witness {'verified' if ok else 'REJECTED'}",
        elapsed,
    )


CHECKS = {
    "symmetry": check_symmetry,
    "cut-bool": check_cut_bool,
    "class-bounds": check_class_bounds,
    "representatives": check_representatives,
    "hsu-gap": check_hsu_gap,
    "hsu-chains": check_hsu_chains,
    "sigma-rho": check_sigma_rho,
    "dq": check_dq,
    "d-values": check_d_values,
    "dilworth": check_dilworth,
    "scaling": check_scaling,
}


def run_check(name: str, **kwargs) -> CheckResult:
    start = time.perf_counter()
    res = CHECKS[name](**kwargs)
    res.seconds = res.seconds or time.perf_counter() - start
    return res
