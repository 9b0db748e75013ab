"""Simple undirected graphs stored as adjacency bitmasks.

A vertex set is a plain ``int`` used as a bitmask over vertices ``0..n-1``;
bit ``v`` set means ``v`` is a member.  The helpers below cover the handful of
operations that read better with a name than with raw bit twiddling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InputError

__all__ = [
    "Graph",
    "bits",
    "vset",
    "popcount",
    "lowest",
    "full_set",
    "graph_from_edges",
    "complement",
    "neighborhood_of_set",
    "parse_graph",
    "format_graph",
    "read_graph",
    "write_graph",
]


def vset(vertices: Iterable[int]) -> int:
    """Bitmask of the given vertices."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def bits(mask: int) -> Iterator[int]:
    """Members of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def lowest(mask: int) -> int:
    """Smallest member of a non-empty mask."""
    return (mask & -mask).bit_length() - 1


def full_set(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the neighbourhood of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise InputError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        universe = full_set(self.n)
        for v, row in enumerate(self.adj):
            if row & ~universe:
                raise InputError(f"row {v} references a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise InputError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise InputError(f"asymmetric adjacency between {u} and {v}")

    @property
    def vertices(self) -> int:
        return full_set(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def induced(self, keep: Sequence[int]) -> "Graph":
        """Subgraph induced by ``keep``, relabelled ``keep[i] -> i``."""
        pos = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            rows.append(vset(pos[u] for u in bits(self.adj[v]) if u in pos))
        return Graph(len(keep), tuple(rows))


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges collapse."""
    if n < 0:
        raise InputError("vertex count must be non-negative")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complement(g: Graph) -> Graph:
    universe = g.vertices
    return Graph(g.n, tuple(universe & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def neighborhood_of_set(g: Graph, xs: int, restrict: int) -> int:
    """``restrict`` intersected with the union of ``N(x)`` over ``x`` in ``xs``."""
    acc = 0
    for x in bits(xs):
        acc |= g.adj[x]
    return acc & restrict


def _data_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def parse_graph(text: str) -> Graph:
    """Parse the ``graph <n>`` / ``e <u> <v>`` text format."""
    n = None
    edges = []
    for lineno, tok in _data_lines(text):
        if n is None:
            if tok[0] != "graph" or len(tok) != 2:
                raise InputError(f"line {lineno}: expected header 'graph <n>'")
            n = _int(tok[1], lineno)
            continue
        if tok[0] != "e" or len(tok) != 3:
            raise InputError(f"line {lineno}: expected 'e <u> <v>'")
        edges.append((_int(tok[1], lineno), _int(tok[2], lineno)))
    if n is None:
        raise InputError("missing 'graph <n>' header")
    return graph_from_edges(n, edges)


def format_graph(g: Graph) -> str:
    lines = [f"graph {g.n}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_graph(g))


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputError(f"line {lineno}: not an integer: {token!r}") from None
