"""Vertex orders whose caterpillar decompositions have small boolean-width.

Each builder takes an intersection model (or a bare graph for the classes
defined by neighbourhood structure) and returns a permutation of the
vertices; :func:`boolwidth.decomposition.caterpillar_from_order` turns it
into a decomposition tree.  Sort keys always break ties by vertex index.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx
from networkx.algorithms import bipartite

from .errors import InputError
from .graph import Graph, bits, complement
from .models import (
    CircularKTrapezoidModel,
    CircularPermutationModel,
    ConvexModel,
    ConvexStructure,
    KTrapezoidModel,
    PermutationModel,
    arc_contains,
    convex_violation,
)

__all__ = [
    "ChainCover",
    "order_linear_model",
    "order_circular_model",
    "order_convex",
    "vicinal_leq",
    "dilworth_chain_cover",
    "order_dilworth",
    "order_co_degenerate",
    "CLASS_NAMES",
    "order_for_class",
]


def order_linear_model(model: KTrapezoidModel | PermutationModel) -> list[int]:
    """Permutation: by top endpoint.  Intervals: by left endpoint.  k >= 2: by rightmost corner."""
    if isinstance(model, PermutationModel):
        keys = list(model.top)
    elif isinstance(model, KTrapezoidModel):
        if model.k == 1:
            keys = [row[0][0] for row in model.spans]
        else:
            keys = [max(r for _, r in row) for row in model.spans]
    else:
        raise InputError(f"not a linear model: {type(model).__name__}")
    return sorted(range(len(keys)), key=lambda v: (keys[v], v))


def order_circular_model(
    model: CircularKTrapezoidModel | CircularPermutationModel, p: int = 0
) -> list[int]:
    """Walk clockwise from tick ``p``.

    For arcs and circular k-trapezoids, objects whose innermost arc contains
    ``p`` come first; the others follow by the clockwise distance from ``p``
    to their closest point on any circle.  For circular permutation models,
    curves are taken by inner endpoint clockwise from ``p``.
    """
    M = model.M
    if isinstance(model, CircularPermutationModel):
        return sorted(range(model.n), key=lambda v: ((model.inner[v] - p) % M, v))
    if not isinstance(model, CircularKTrapezoidModel):
        raise InputError(f"not a circular model: {type(model).__name__}")
    first = [v for v in range(model.n) if arc_contains(M, model.arcs[v][0], p)]
    hit = set(first)

    def dist(v: int) -> int:
        return min(0 if arc_contains(M, a, p) else (a[0] - p) % M for a in model.arcs[v])

    rest = sorted((v for v in range(model.n) if v not in hit), key=lambda v: (dist(v), v))
    return first + rest


def order_convex(g: Graph, s: ConvexStructure | ConvexModel) -> list[int]:
    """X order with each y placed right after its last neighbour; isolated ys lead."""
    if isinstance(s, ConvexModel):
        g, s = s.graph, s.structure
    if s.n != g.n:
        raise InputError("convex structure and graph disagree on vertex count")
    bad = convex_violation(g, s)
    if bad is not None:
        raise InputError(f"not a convex structure: vertex {bad} violates it")
    pos = {x: i for i, x in enumerate(s.x_order)}
    after: dict[int, list[int]] = {}
    front = []
    for y in bits(s.y_set):
        nb = [pos[x] for x in bits(g.adj[y])]
        if nb:
            after.setdefault(max(nb), []).append(y)
        else:
            front.append(y)
    out = front
    for i, x in enumerate(s.x_order):
        out.append(x)
        out.extend(after.get(i, ()))
    return out


def vicinal_leq(g: Graph, x: int, y: int) -> bool:
    """``N(x)`` is contained in ``N[y]``."""
    return not g.adj[x] & ~(g.adj[y] | 1 << y)


@dataclass(frozen=True)
class ChainCover:
    """Chains of the vicinal preorder; earlier members are below later ones."""

    chains: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.chains)

    def is_valid(self, g: Graph) -> bool:
        seen = sorted(v for c in self.chains for v in c)
        if seen != list(range(g.n)):
            return False
        for c in self.chains:
            for i, x in enumerate(c):
                for y in c[i + 1 :]:
                    if not vicinal_leq(g, x, y):
                        return False
        return True


def dilworth_chain_cover(g: Graph) -> ChainCover:
    """Minimum chain cover of the vicinal preorder.

    Mutually comparable vertices are merged into blocks; the strict order on
    blocks is transitive, so a minimum path cover of its comparability DAG
    (via bipartite matching) is a minimum chain cover.
    """
    n = g.n
    if n == 0:
        return ChainCover(())
    block_of = [-1] * n
    blocks: list[list[int]] = []
    for v in range(n):
        if block_of[v] >= 0:
            continue
        block_of[v] = len(blocks)
        members = [v]
        for u in range(v + 1, n):
            if block_of[u] < 0 and vicinal_leq(g, v, u) and vicinal_leq(g, u, v):
                block_of[u] = block_of[v]
                members.append(u)
        blocks.append(members)
    nb = len(blocks)
    rep = [b[0] for b in blocks]

    split = nx.Graph()
    left = [("L", i) for i in range(nb)]
    split.add_nodes_from(left, bipartite=0)
    split.add_nodes_from((("R", i) for i in range(nb)), bipartite=1)
    for i in range(nb):
        for j in range(nb):
            if i != j and vicinal_leq(g, rep[i], rep[j]):
                split.add_edge(("L", i), ("R", j))
    matching = bipartite.hopcroft_karp_matching(split, top_nodes=left)
    succ = {i: matching[("L", i)][1] for i in range(nb) if ("L", i) in matching}
    has_pred = set(succ.values())

    chains = []
    for start in range(nb):
        if start in has_pred:
            continue
        chain = []
        b = start
        while True:
            chain.extend(blocks[b])
            if b not in succ:
                break
            b = succ[b]
        chains.append(tuple(chain))
    chains.sort(key=min)
    return ChainCover(tuple(chains))


def order_dilworth(g: Graph) -> list[int]:
    """Chains one after another, each from its bottom up."""
    return [v for c in dilworth_chain_cover(g).chains for v in c]


def order_co_degenerate(g: Graph) -> tuple[list[int], int]:
    """Min-degree elimination order of the complement and its degeneracy ``k``."""
    h = complement(g)
    alive = h.vertices
    order = []
    k = 0
    while alive:
        v = min(bits(alive), key=lambda u: ((h.adj[u] & alive).bit_count(), u))
        k = max(k, (h.adj[v] & alive).bit_count())
        order.append(v)
        alive &= ~(1 << v)
    return order, k


CLASS_NAMES = (
    "permutation",
    "interval",
    "trapezoid",
    "k-trapezoid",
    "circular-arc",
    "circular-k-trapezoid",
    "circular-permutation",
    "convex",
    "dilworth",
    "co-degenerate",
)


def order_for_class(name: str, obj, p: int = 0) -> list[int]:
    """Dispatch on a class name; ``obj`` is a model, or a graph for dilworth/co-degenerate."""
    if name not in CLASS_NAMES:
        raise InputError(f"unknown class {name!r}; choose from {', '.join(CLASS_NAMES)}")
    if name in ("dilworth", "co-degenerate"):
        if not isinstance(obj, Graph):
            raise InputError(f"class {name} needs a graph file")
        return order_dilworth(obj) if name == "dilworth" else order_co_degenerate(obj)[0]
    expected = {
        "permutation": PermutationModel,
        "interval": KTrapezoidModel,
        "trapezoid": KTrapezoidModel,
        "k-trapezoid": KTrapezoidModel,
        "circular-arc": CircularKTrapezoidModel,
        "circular-k-trapezoid": CircularKTrapezoidModel,
        "circular-permutation": CircularPermutationModel,
        "convex": ConvexModel,
    }[name]
    if not isinstance(obj, expected):
        raise InputError(f"class {name} needs a {expected.__name__}, got {type(obj).__name__}")
    want_k = {"interval": 1, "trapezoid": 2, "circular-arc": 1}.get(name)
    if want_k is not None and obj.k != want_k:
        raise InputError(f"class {name} needs k = {want_k}, model has k = {obj.k}")
    if name == "convex":
        return order_convex(obj.graph, obj.structure)
    if expected is CircularKTrapezoidModel or expected is CircularPermutationModel:
        return order_circular_model(obj, p)
    return order_linear_model(obj)
