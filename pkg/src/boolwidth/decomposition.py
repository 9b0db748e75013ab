"""Decomposition trees, their cuts, and the cut functions evaluated on them.

A :class:`DecompositionTree` over ``n`` vertices uses node ids ``0..n-1`` for
the leaves (leaf ``v`` holds vertex ``v``) and ``n, n+1, ...`` for internal
nodes, so the leaf/vertex bijection is the identity on ids.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import CapExceededError, InputError
from .graph import Graph, bits, lowest

__all__ = [
    "DecompositionTree",
    "Cut",
    "BoolCut",
    "RootedDecomposition",
    "DEFAULT_BOOL_CAP",
    "caterpillar_from_order",
    "cuts_of",
    "middle_vertices",
    "cut_bool",
    "cut_rank",
    "cut_values",
    "tree_width_of",
    "root_at_edge",
    "rooted",
    "random_decomposition",
    "parse_tree",
    "format_tree",
    "read_tree",
    "write_tree",
]

DEFAULT_BOOL_CAP = 1 << 20


@dataclass(frozen=True)
class DecompositionTree:
    """Unrooted tree whose leaves are the vertices ``0..n-1``.

    ``adj[node]`` lists neighbouring node ids.  Leaves have degree 1 and
    internal nodes degree 3, except for the degenerate trees with ``n <= 2``
    (a lone leaf, or a single edge between the two leaves).
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n, nodes = self.n, len(self.adj)
        if n < 1:
            raise InputError("a decomposition needs at least one vertex")
        expected = 1 if n == 1 else max(2 * n - 2, 2)
        if nodes != expected:
            raise InputError(f"tree over {n} leaves must have {expected} nodes, has {nodes}")
        for a, nbrs in enumerate(self.adj):
            for b in nbrs:
                if not 0 <= b < nodes or a not in self.adj[b]:
                    raise InputError(f"tree adjacency between {a} and {b} is not symmetric")
            want = 1 if a < n else 3
            if n >= 2 and len(nbrs) != want:
                raise InputError(f"node {a} has degree {len(nbrs)}, expected {want}")
        seen = {0}
        stack = [0]
        while stack:
            a = stack.pop()
            for b in self.adj[a]:
                if b not in seen:
                    seen.add(b)
                    stack.append(b)
        if len(seen) != nodes:
            raise InputError("tree is not connected")

    @property
    def num_nodes(self) -> int:
        return len(self.adj)

    def edges(self) -> list[tuple[int, int]]:
        return sorted((a, b) for a in range(self.num_nodes) for b in self.adj[a] if a < b)

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[tuple[int, int]]) -> "DecompositionTree":
        nodes = 1 if n == 1 else max(2 * n - 2, 2)
        adj: list[list[int]] = [[] for _ in range(nodes)]
        for a, b in edges:
            adj[a].append(b)
            adj[b].append(a)
        return cls(n, tuple(tuple(sorted(x)) for x in adj))


class Cut(NamedTuple):
    """Vertex side ``A`` of the cut induced by tree edge ``edge``."""

    A: int
    edge: tuple[int, int]


class BoolCut(NamedTuple):
    """Number of distinct neighbourhoods across a cut, and its base-2 log."""

    count: int
    bits: float


def caterpillar_from_order(order: Sequence[int]) -> DecompositionTree:
    """Caterpillar whose path nodes pick up the vertices of ``order`` in turn."""
    n = len(order)
    if sorted(order) != list(range(n)):
        raise InputError("order must be a permutation of 0..n-1")
    if n == 1:
        return DecompositionTree(1, ((),))
    if n == 2:
        return DecompositionTree.from_edges(2, [(order[0], order[1])])
    path = [n + i for i in range(n - 2)]
    edges = [(order[0], path[0]), (order[1], path[0])]
    for i in range(1, n - 2):
        edges.append((path[i - 1], path[i]))
        edges.append((order[i + 1], path[i]))
    edges.append((order[n - 1], path[-1]))
    return DecompositionTree.from_edges(n, edges)


def _subtree_sides(t: DecompositionTree, root: int) -> tuple[list[int], list[int], list[int]]:
    """Parent pointers, DFS preorder, and leaf masks below each node when rooted at ``root``."""
    parent = [-1] * t.num_nodes
    order = [root]
    parent[root] = root
    stack = [root]
    while stack:
        a = stack.pop()
        for b in t.adj[a]:
            if parent[b] == -1:
                parent[b] = a
                order.append(b)
                stack.append(b)
    below = [0] * t.num_nodes
    for a in reversed(order):
        if a < t.n:
            below[a] |= 1 << a
        if a != root:
            below[parent[a]] |= below[a]
    return parent, order, below


def cuts_of(t: DecompositionTree) -> list[Cut]:
    """One cut per tree edge; ``A`` is the side without vertex 0."""
    if t.n == 1:
        return []
    parent, _, below = _subtree_sides(t, 0)
    out = []
    for a, b in t.edges():
        child = b if parent[b] == a else a
        out.append(Cut(below[child], (a, b)))
    return out


def middle_vertices(g: Graph, A: int) -> int:
    """Boundary of ``A`` with duplicate external neighbourhoods collapsed.

    The smallest-index vertex of each duplicate group is kept.
    """
    outside = g.vertices & ~A
    seen = set()
    keep = 0
    for v in bits(A):
        row = g.adj[v] & outside
        if row and row not in seen:
            seen.add(row)
            keep |= 1 << v
    return keep


def cut_bool(g: Graph, A: int, cap: int = DEFAULT_BOOL_CAP) -> BoolCut:
    """Count the distinct sets ``N(X) & ~A`` over ``X`` subset of ``A``.

    Closure of the empty set under union with each distinct generator row.
    Raises :class:`CapExceededError` once more than ``cap`` sets appear.
    """
    outside = g.vertices & ~A
    rows = {g.adj[v] & outside for v in bits(middle_vertices(g, A))}
    family = {0}
    for row in rows:
        fresh = {s | row for s in family}
        family |= fresh
        if len(family) > cap:
            raise CapExceededError(f"more than {cap} neighbourhoods across cut", len(family), A)
    count = len(family)
    return BoolCut(count, math.log2(count))


def cut_rank(g: Graph, A: int) -> int:
    """GF(2) rank of the ``A`` x ``~A`` adjacency matrix."""
    outside = g.vertices & ~A
    basis: dict[int, int] = {}  # pivot bit -> row with that leading bit
    for v in bits(A):
        row = g.adj[v] & outside
        while row:
            top = row.bit_length() - 1
            if top not in basis:
                basis[top] = row
                break
            row ^= basis[top]
    return len(basis)


def cut_values(
    g: Graph, t: DecompositionTree, measure: str = "bool", cap: int = DEFAULT_BOOL_CAP
) -> list[tuple[Cut, int]]:
    """Per-cut neighbourhood count (``bool``) or GF(2) rank (``rank``)."""
    if t.n != g.n:
        raise InputError(f"tree has {t.n} leaves but graph has {g.n} vertices")
    out = []
    for cut in cuts_of(t):
        if measure == "bool":
            try:
                value = cut_bool(g, cut.A, cap).count
            except CapExceededError as exc:
                raise CapExceededError(
                    f"cut at tree edge {cut.edge}: {exc}", exc.partial, cut.edge
                ) from None
        elif measure == "rank":
            value = cut_rank(g, cut.A)
        else:
            raise InputError(f"unknown measure {measure!r}")
        out.append((cut, value))
    return out


def tree_width_of(
    g: Graph, t: DecompositionTree, measure: str = "bool", cap: int = DEFAULT_BOOL_CAP
) -> float:
    """Maximum cut value over the tree: bits for ``bool``, rank for ``rank``."""
    values = [v for _, v in cut_values(g, t, measure, cap)]
    if not values:
        return 0.0 if measure == "bool" else 0
    if measure == "bool":
        return math.log2(max(values))
    return max(values)


@dataclass(frozen=True)
class RootedDecomposition:
    """Tree rooted at a node subdividing one edge.

    ``below[w]`` is the vertex set ``A_w`` of leaves under ``w``; internal
    nodes have exactly two children.  ``postorder`` lists children before
    parents and ends with ``root``.
    """

    n: int
    root: int
    children: tuple[tuple[int, ...], ...]
    parent: tuple[int, ...]
    below: tuple[int, ...]
    postorder: tuple[int, ...]


def root_at_edge(t: DecompositionTree, edge: tuple[int, int]) -> RootedDecomposition:
    a, b = edge
    if b not in t.adj[a]:
        raise InputError(f"{edge} is not a tree edge")
    root = t.num_nodes
    nbrs = [list(x) for x in t.adj] + [[a, b]]
    nbrs[a] = [root if x == b else x for x in nbrs[a]]
    nbrs[b] = [root if x == a else x for x in nbrs[b]]
    return _rooted_from(t.n, nbrs, root)


def rooted(t: DecompositionTree) -> RootedDecomposition:
    """Root at the first edge, or at the lone leaf when ``n == 1``."""
    if t.n == 1:
        return RootedDecomposition(1, 0, ((),), (-1,), (1,), (0,))
    return root_at_edge(t, t.edges()[0])


def _rooted_from(n: int, nbrs: list[list[int]], root: int) -> RootedDecomposition:
    size = len(nbrs)
    parent = [-2] * size
    parent[root] = -1
    children: list[list[int]] = [[] for _ in range(size)]
    order = [root]
    stack = [root]
    while stack:
        x = stack.pop()
        for y in nbrs[x]:
            if parent[y] == -2:
                parent[y] = x
                children[x].append(y)
                order.append(y)
                stack.append(y)
    below = [0] * size
    post = []
    for x in reversed(order):
        if x < n:
            below[x] = 1 << x
        for c in children[x]:
            below[x] |= below[c]
        post.append(x)
    for x in range(size):
        children[x].sort(key=lambda c: lowest(below[c]))
    return RootedDecomposition(
        n, root, tuple(map(tuple, children)), tuple(parent), tuple(below), tuple(post)
    )


def random_decomposition(n: int, seed: int) -> DecompositionTree:
    """Random tree grown by hanging each new leaf on a uniformly chosen edge."""
    if n < 1:
        raise InputError("n must be at least 1")
    rng = random.Random(seed)
    verts = list(range(n))
    rng.shuffle(verts)
    if n == 1:
        return DecompositionTree(1, ((),))
    if n == 2:
        return DecompositionTree.from_edges(2, [(0, 1)])
    nxt = n
    centre = nxt
    nxt += 1
    edges = [(verts[0], centre), (verts[1], centre), (verts[2], centre)]
    for v in verts[3:]:
        i = rng.randrange(len(edges))
        a, b = edges[i]
        mid = nxt
        nxt += 1
        edges[i] = (a, mid)
        edges.append((mid, b))
        edges.append((v, mid))
    return DecompositionTree.from_edges(n, edges)


# -- parenthesised text form ----------------------------------------------------


def _tokenize(text: str) -> list[str]:
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "(),":
            out.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(text[i:j])
            i = j
        else:
            raise InputError(f"unexpected character {ch!r} in tree")
    return out


def parse_tree(text: str) -> DecompositionTree:
    """Parse a rooted binary form like ``(0,(1,(2,3)))``; the root is smoothed away."""
    body = "\n".join(
        line for line in text.splitlines() if line.strip() and not line.strip().startswith("#")
    )
    tokens = _tokenize(body)
    pos = 0
    nested: list = []

    def node():
        nonlocal pos
        if pos >= len(tokens):
            raise InputError("unexpected end of tree")
        tok = tokens[pos]
        if tok == "(":
            pos += 1
            left = node()
            if pos >= len(tokens) or tokens[pos] != ",":
                raise InputError("expected ',' in tree")
            pos += 1
            right = node()
            if pos >= len(tokens) or tokens[pos] != ")":
                raise InputError("expected ')' in tree (nodes must be binary)")
            pos += 1
            return (left, right)
        if tok.isdigit():
            pos += 1
            return int(tok)
        raise InputError(f"unexpected token {tok!r} in tree")

    nested = node()
    if pos != len(tokens):
        raise InputError("trailing tokens after tree")

    leaves: list[int] = []

    def collect(x):
        if isinstance(x, int):
            leaves.append(x)
        else:
            collect(x[0])
            collect(x[1])

    collect(nested)
    n = len(leaves)
    if sorted(leaves) != list(range(n)):
        raise InputError("tree leaves must be exactly 0..n-1, each once")
    if n == 1:
        return DecompositionTree(1, ((),))
    edges = []
    counter = n

    def build(x) -> int:
        nonlocal counter
        if isinstance(x, int):
            return x
        me = counter
        counter += 1
        edges.append((me, build(x[0])))
        edges.append((me, build(x[1])))
        return me

    left, right = build(nested[0]), build(nested[1])
    edges.append((left, right))
    return DecompositionTree.from_edges(n, edges)


def format_tree(t: DecompositionTree) -> str:
    """Rooted form hung from the edge at leaf 0; children ordered by smallest leaf."""
    if t.n == 1:
        return "0"
    _, _, below = _subtree_sides(t, 0)

    def render(x: int, came_from: int) -> str:
        if x < t.n:
            return str(x)
        kids = sorted((c for c in t.adj[x] if c != came_from), key=lambda c: lowest(below[c]))
        return "(" + ",".join(render(c, x) for c in kids) + ")"

    (other,) = t.adj[0]
    return f"(0,{render(other, 0)})"


def read_tree(path) -> DecompositionTree:
    with open(path) as fh:
        return parse_tree(fh.read())


def write_tree(t: DecompositionTree, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_tree(t) + "\n")

