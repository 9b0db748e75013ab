"""Boolean classes against GF(2) rank on the Hsu half-graphs and chains."""

from __future__ import annotations

import math

from boolwidth import caterpillar_from_order, cut_bool, cut_rank, cut_values, hsu_graph
from boolwidth.generators import group_order, hsu_clique_chain, hsu_stable_chain
from boolwidth.graph import full_set


def main() -> None:
    print(" p  classes  log2   rank")
    for p in range(1, 13):
        g, A = hsu_graph(p, p), full_set(p)
        count = cut_bool(g, A).count
        print(f"{p:2} {count:8} {math.log2(count):5.2f} {cut_rank(g, A):6}")

    p, q = 4, 13
    for name, g in (("stable", hsu_stable_chain(p, q)), ("clique", hsu_clique_chain(p, q))):
        t = caterpillar_from_order(group_order(p, q))
        top = max(count for _, count in cut_values(g, t))
        mid = cut_rank(g, full_set(p * (q // 2)))
        print(f"{name} chain {p}x{q}: widest cut {top} classes, middle cut rank {mid}")


if __name__ == "__main__":
    main()
