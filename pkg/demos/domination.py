"""Domination-type problems on an interval graph, checked against brute force."""

from __future__ import annotations

import random

from boolwidth import (
    INFEASIBLE,
    caterpillar_from_order,
    order_for_class,
    preset,
    random_model,
    realize,
    solve_dq,
    solve_sigma_rho,
)
from boolwidth.graph import bits
from boolwidth.oracle import brute_dq, brute_sigma_rho

NAMES = ["dominating-set", "total-dominating-set", "independent-set",
         "independent-dominating-set", "perfect-code"]


def main(n: int = 11, seed: int = 3) -> None:
    model = random_model("interval", n, seed, max_load=4)
    g = realize(model)
    t = caterpillar_from_order(order_for_class("interval", model))
    rng = random.Random(seed)
    weights = [rng.randint(1, 9) for _ in range(n)]
    print(f"interval graph: {n} vertices, {g.m} edges, weights {weights}")
    for name in NAMES:
        prob = preset(name).with_weights(weights)
        sol = solve_sigma_rho(g, t, prob)
        brute = brute_sigma_rho(g, prob.sigma, prob.rho, prob.mode, weights)
        shown = "infeasible" if sol is INFEASIBLE else f"{sol.value} via {list(bits(sol.witness))}"
        print(f"  {name:27} {shown}  (brute force: {brute})")
    for q in (2, 3, 4):
        prob = preset(f"{q}-coloring")
        sol = solve_dq(g, t, prob)
        ok = brute_dq(g, prob.D) is not None
        shown = "none" if sol is INFEASIBLE else " | ".join(str(list(bits(p))) for p in sol.parts)
        print(f"  {q}-coloring: {shown}  (brute force feasible: {ok})")


if __name__ == "__main__":
    main()
