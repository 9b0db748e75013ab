"""Hsu-graph families and seeded random instances.

A Hsu-graph on ``v_0..v_{a-1}`` and ``u_0..u_{b-1}`` joins ``v_i`` to ``u_j``
whenever ``i <= j``.  Its neighbourhoods are nested, so a cut between the two
sides has few boolean classes but full GF(2) rank.  Chaining groups of ``p``
vertices with Hsu-graphs gives graphs of small boolean-width and large
rank-width.

In the stable and clique chains, vertex ``g * p + j`` is the ``j``-th member
of group ``g``, and the lower-numbered group of each junction is the v-side.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InputError
from .graph import Graph, complement, graph_from_edges
from .models import (
    CircularKTrapezoidModel,
    CircularPermutationModel,
    ConvexModel,
    ConvexStructure,
    KTrapezoidModel,
    PermutationModel,
)

__all__ = [
    "hsu_graph",
    "HsuChainSpec",
    "hsu_join_chain",
    "hsu_stable_chain",
    "hsu_clique_chain",
    "stable_chain_permutation_model",
    "clique_chain_interval_model",
    "group_order",
    "random_graph",
    "random_model",
    "RANDOM_KINDS",
]


def hsu_graph(a: int, b: int) -> Graph:
    """v-side ``0..a-1``, u-side ``a..a+b-1``; ``v_i ~ u_j`` iff ``i <= j``."""
    if a < 1 or b < 1:
        raise InputError("both sides of a Hsu-graph need at least one vertex")
    return graph_from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b) if i <= j])


@dataclass(frozen=True)
class HsuChainSpec:
    """``kind`` is ``stable``, ``clique`` or ``custom``.

    For ``custom``, ``pieces`` are the graphs ``G_1..G_q`` and ``subsets[i]``
    lists the ``p`` vertices of piece ``i`` (local labels, in Hsu order) that
    are glued to the neighbouring pieces.  Whether the pieces themselves
    have small boolean-width is left to the caller.
    """

    p: int
    q: int
    kind: str = "stable"
    pieces: tuple[Graph, ...] = ()
    subsets: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise InputError("chain width and length must be at least 1")
        if self.kind not in ("stable", "clique", "custom"):
            raise InputError(f"unknown chain kind {self.kind!r}")
        if self.kind == "custom":
            if len(self.pieces) != self.q or len(self.subsets) != self.q:
                raise InputError("custom chains need q pieces and q glue subsets")
            for g, s in zip(self.pieces, self.subsets):
                if len(s) != self.p or len(set(s)) != self.p:
                    raise InputError("each glue subset must hold p distinct vertices")
                if any(not 0 <= v < g.n for v in s):
                    raise InputError("glue subset vertex outside its piece")


def _pieces(spec: HsuChainSpec) -> tuple[list[Graph], list[tuple[int, ...]]]:
    if spec.kind == "custom":
        return list(spec.pieces), list(spec.subsets)
    if spec.kind == "stable":
        piece = Graph(spec.p, (0,) * spec.p)
    else:
        piece = complement(Graph(spec.p, (0,) * spec.p))
    return [piece] * spec.q, [tuple(range(spec.p))] * spec.q


def hsu_join_chain(spec: HsuChainSpec) -> Graph:
    """Disjoint union of the pieces with a Hsu-graph across each consecutive pair."""
    pieces, subsets = _pieces(spec)
    edges = []
    offsets = []
    base = 0
    for g in pieces:
        offsets.append(base)
        edges.extend((base + u, base + v) for u, v in g.edges())
        base += g.n
    for i in range(spec.q - 1):
        s, t = subsets[i], subsets[i + 1]
        for a in range(spec.p):
            for b in range(a, spec.p):
                edges.append((offsets[i] + s[a], offsets[i + 1] + t[b]))
    return graph_from_edges(base, edges)


def hsu_stable_chain(p: int, q: int) -> Graph:
    return hsu_join_chain(HsuChainSpec(p, q, "stable"))


def hsu_clique_chain(p: int, q: int) -> Graph:
    return hsu_join_chain(HsuChainSpec(p, q, "clique"))


def group_order(p: int, q: int) -> list[int]:
    """Caterpillar order taking the groups of a stable or clique chain one by one."""
    return list(range(p * q))


def stable_chain_permutation_model(p: int, q: int) -> PermutationModel:
    """Permutation diagram of the stable chain, vertex for vertex.

    Groups ``2m`` and ``2m+1`` are interleaved on the top line and
    ``2m+1``, ``2m+2`` on the bottom line; every group runs in descending
    member order, so ``(g, i)`` crosses ``(g+1, j)`` exactly when ``i <= j``.
    """
    if p < 1 or q < 1:
        raise InputError("chain width and length must be at least 1")

    def line(first_alone: bool) -> list[int]:
        seq = []
        g = 0
        if first_alone:
            seq.extend(reversed(range(p)))
            g = 1
        while g < q:
            hi = g + 1
            for j in reversed(range(p)):
                if hi < q:
                    seq.append(hi * p + j)
                seq.append(g * p + j)
            g += 2
        return seq

    top, bottom = [0] * (p * q), [0] * (p * q)
    for pos, v in enumerate(line(False)):
        top[v] = pos
    for pos, v in enumerate(line(True)):
        bottom[v] = pos
    return PermutationModel(tuple(top), tuple(bottom))


def clique_chain_interval_model(p: int, q: int) -> KTrapezoidModel:
    """Unit interval model of the clique chain (all lengths ``2p + 1``).

    Member ``j`` of group ``g`` starts at ``2(g+1)p - 2j``; consecutive groups
    are shifted right by ``2p``.
    """
    if p < 1 or q < 1:
        raise InputError("chain width and length must be at least 1")
    spans = []
    for g in range(q):
        for j in range(p):
            x = 2 * (g + 1) * p - 2 * j
            spans.append(((x, x + 2 * p + 1),))
    return KTrapezoidModel(1, tuple(spans))


def random_graph(n: int, edge_prob: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return graph_from_edges(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < edge_prob]
    )


def _random_intervals(rng: random.Random, n: int, span: int, max_len: int, max_load=None):
    lefts = sorted(rng.randrange(span) for _ in range(n))
    out = []
    active: list[int] = []
    floor = 0
    for left in lefts:
        left = max(left, floor)  # a shifted start pushes later ones too
        active = [r for r in active if r >= left]
        if max_load is not None and len(active) >= max_load:
            # start just after enough intervals have closed
            active.sort()
            left = active[len(active) - max_load] + 1
            active = [r for r in active if r >= left]
        floor = left
        right = left + rng.randint(0, max_len)
        active.append(right)
        out.append((left, right))
    rng.shuffle(out)
    return out


def _random_arc(rng: random.Random, M: int, max_len: int) -> tuple[int, int]:
    s = rng.randrange(M)
    return s, (s + rng.randint(1, max_len)) % M


RANDOM_KINDS = (
    "interval",
    "ktrap",
    "circarc",
    "circktrap",
    "perm",
    "circperm",
    "convex",
    "dilworth",
    "codegenerate",
)


def random_model(kind: str, n: int, seed: int, **params):
    """Seeded random instance; models come back canonicalized.

    ``interval``: ``max_load`` caps the clique number, ``max_len`` the length.
    ``ktrap`` / ``circktrap``: ``k`` lines or circles (independent intervals
    or arcs per line).  ``circarc``: ``max_len`` arc length.  ``convex``:
    ``x_size`` vertices on the ordered side.  ``dilworth`` returns a graph:
    a threshold graph with ``flips`` random edge toggles.  ``codegenerate``
    returns the complement of a random ``k``-degenerate graph.
    """
    if n < 1:
        raise InputError("need at least one vertex")
    rng = random.Random(seed)
    if kind == "interval":
        ivs = _random_intervals(
            rng,
            n,
            params.get("span", 4 * n),
            params.get("max_len", max(1, n // 2)),
            params.get("max_load"),
        )
        return KTrapezoidModel(1, tuple((iv,) for iv in ivs)).canonical()
    if kind == "ktrap":
        k = params.get("k", 2)
        lines = [_random_intervals(rng, n, 4 * n, params.get("max_len", n)) for _ in range(k)]
        spans = tuple(tuple(lines[i][v] for i in range(k)) for v in range(n))
        return KTrapezoidModel(k, spans).canonical()
    if kind in ("circarc", "circktrap"):
        k = 1 if kind == "circarc" else params.get("k", 2)
        M = 4 * n
        max_len = params.get("max_len", M // 3)
        arcs = tuple(tuple(_random_arc(rng, M, max_len) for _ in range(k)) for _ in range(n))
        return CircularKTrapezoidModel(k, M, arcs).canonical()
    if kind == "perm":
        top = list(range(n))
        bottom = list(range(n))
        rng.shuffle(bottom)
        return PermutationModel(tuple(top), tuple(bottom))
    if kind == "circperm":
        M = 2 * n
        inner = rng.sample(range(M), n)
        outer = rng.sample(range(M), n)
        # turning the short way keeps any two curves to at most one crossing
        cw = tuple((o - i) % M <= M // 2 for i, o in zip(inner, outer))
        return CircularPermutationModel(M, tuple(outer), tuple(inner), cw)
    if kind == "convex":
        nx_ = params.get("x_size", max(1, n // 2))
        if not 1 <= nx_ <= n:
            raise InputError("x_size must be between 1 and n")
        verts = list(range(n))
        rng.shuffle(verts)
        xs, ys = verts[:nx_], verts[nx_:]
        edges = []
        for y in ys:
            if rng.random() < 0.1:
                continue
            a = rng.randrange(nx_)
            b = rng.randrange(a, nx_)
            edges.extend((xs[i], y) for i in range(a, b + 1))
        return ConvexModel(graph_from_edges(n, edges), ConvexStructure(n, tuple(xs)))
    if kind == "dilworth":
        # threshold graph: each new vertex is isolated or dominating
        edges = set()
        for v in range(1, n):
            if rng.random() < 0.5:
                edges.update((u, v) for u in range(v))
        for _ in range(params.get("flips", 2)):
            if n < 2:
                break
            u, v = rng.sample(range(n), 2)
            edges ^= {(min(u, v), max(u, v))}
        perm = list(range(n))
        rng.shuffle(perm)
        return graph_from_edges(n, [(perm[u], perm[v]) for u, v in edges])
    if kind == "codegenerate":
        k = params.get("k", 2)
        perm = list(range(n))
        rng.shuffle(perm)
        edges = []
        for i in range(1, n):
            for u in rng.sample(range(i), min(i, k)):
                edges.append((perm[u], perm[i]))
        return complement(graph_from_edges(n, edges))
    raise InputError(f"unknown random kind {kind!r}; choose from {', '.join(RANDOM_KINDS)}")
