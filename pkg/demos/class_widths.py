"""Built caterpillars versus random decompositions across the model classes.

For each class a random model is generated, its class-specific vertex order
is turned into a caterpillar, and the largest cut class count is compared with
a random binary decomposition of the same graph.
"""

from __future__ import annotations

from boolwidth import (
    caterpillar_from_order,
    cut_values,
    order_for_class,
    random_decomposition,
    random_model,
    realize,
)
from boolwidth.graph import Graph

CASES = [
    ("permutation", "perm", {}),
    ("interval", "interval", {"max_load": 5}),
    ("circular-arc", "circarc", {}),
    ("trapezoid", "ktrap", {"k": 2}),
    ("k-trapezoid", "ktrap", {"k": 3}),
    ("circular-permutation", "circperm", {}),
    ("convex", "convex", {}),
    ("dilworth", "dilworth", {}),
    ("co-degenerate", "codegenerate", {"k": 2}),
]


def widest(g: Graph, tree) -> int:
    return max((count for _, count in cut_values(g, tree)), default=1)


def main(n: int = 40, seed: int = 7) -> None:
    print(f"{'class':22} {'edges':>6} {'built':>6} {'random':>7}")
    for cls, kind, params in CASES:
        obj = random_model(kind, n, seed, **params)
        g = obj if isinstance(obj, Graph) else getattr(obj, "graph", None) or realize(obj)
        built = widest(g, caterpillar_from_order(order_for_class(cls, obj)))
        rand = widest(g, random_decomposition(n, seed))
        print(f"{cls:22} {g.m:6} {built:6} {rand:7}")


if __name__ == "__main__":
    main()
