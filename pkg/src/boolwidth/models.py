"""Intersection models and their realization as graphs.

Linear models (intervals, k-trapezoids, permutation diagrams) live on parallel
lines with integer coordinates.  Circular models live on concentric circles
with integer ticks modulo ``M``; clockwise means increasing tick.

All intervals and arcs are closed, so touching endpoints intersect.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import InputError, ModelError
from .graph import Graph, bits, full_set, graph_from_edges, vset

__all__ = [
    "KTrapezoidModel",
    "CircularKTrapezoidModel",
    "PermutationModel",
    "CircularPermutationModel",
    "ConvexStructure",
    "ConvexModel",
    "interval_model",
    "arc_model",
    "realize",
    "validate_convex",
    "convex_violation",
    "max_point_load",
    "arc_contains",
    "parse_model",
    "format_model",
    "read_model",
    "write_model",
]

Span = tuple[int, int]


@dataclass(frozen=True)
class KTrapezoidModel:
    """``spans[v][i] = (l, r)`` is vertex ``v``'s interval on line ``i``.

    ``k == 1`` is an interval model, ``k == 2`` a trapezoid model.
    """

    k: int
    spans: tuple[tuple[Span, ...], ...]

    def __post_init__(self):
        if self.k < 1:
            raise ModelError("k must be at least 1")
        for v, row in enumerate(self.spans):
            if len(row) != self.k:
                raise ModelError(f"vertex {v}: expected {self.k} intervals, got {len(row)}")
            for i, (l, r) in enumerate(row):
                if l > r:
                    raise ModelError(f"vertex {v}, line {i}: left endpoint {l} > right {r}")

    @property
    def n(self) -> int:
        return len(self.spans)

    def canonical(self) -> "KTrapezoidModel":
        """Rank all endpoints per line into distinct coordinates ``0..2n-1``.

        Ties go left endpoints first, then by vertex index, which keeps every
        touching pair intersecting.
        """
        out = [[None] * self.k for _ in range(self.n)]
        for i in range(self.k):
            events = []
            for v in range(self.n):
                l, r = self.spans[v][i]
                events.append((l, 0, v))
                events.append((r, 1, v))
            events.sort()
            pos: dict[tuple[int, int], int] = {}
            for rank, (_, kind, v) in enumerate(events):
                pos[(v, kind)] = rank
            for v in range(self.n):
                out[v][i] = (pos[(v, 0)], pos[(v, 1)])
        return KTrapezoidModel(self.k, tuple(tuple(row) for row in out))


def interval_model(intervals) -> KTrapezoidModel:
    return KTrapezoidModel(1, tuple(((int(l), int(r)),) for l, r in intervals))


@dataclass(frozen=True)
class CircularKTrapezoidModel:
    """``arcs[v][i] = (start, end)``: clockwise arc on circle ``i`` (0 innermost)."""

    k: int
    M: int
    arcs: tuple[tuple[Span, ...], ...]

    def __post_init__(self):
        if self.k < 1:
            raise ModelError("k must be at least 1")
        if self.M < 2:
            raise ModelError("circle must have at least 2 ticks")
        for v, row in enumerate(self.arcs):
            if len(row) != self.k:
                raise ModelError(f"vertex {v}: expected {self.k} arcs, got {len(row)}")
            for i, (s, e) in enumerate(row):
                if not (0 <= s < self.M and 0 <= e < self.M):
                    raise ModelError(f"vertex {v}, circle {i}: tick outside [0, {self.M})")
                if s == e:
                    raise ModelError(f"vertex {v}, circle {i}: arc start equals end")

    @property
    def n(self) -> int:
        return len(self.arcs)

    def lifted(self, v: int) -> tuple[Span, ...]:
        """Arcs of ``v`` unrolled onto the line: ``end`` gains ``M`` when it wraps."""
        return tuple((s, e if e > s else e + self.M) for s, e in self.arcs[v])

    def canonical(self) -> "CircularKTrapezoidModel":
        """Rank ticks per circle into ``0..2n-1`` (starts before ends on ties)."""
        out = [[None] * self.k for _ in range(self.n)]
        for i in range(self.k):
            events = []
            for v in range(self.n):
                s, e = self.arcs[v][i]
                events.append((s, 0, v))
                events.append((e, 1, v))
            events.sort()
            pos = {(v, kind): rank for rank, (_, kind, v) in enumerate(events)}
            for v in range(self.n):
                out[v][i] = (pos[(v, 0)], pos[(v, 1)])
        return CircularKTrapezoidModel(self.k, 2 * self.n, tuple(tuple(r) for r in out))


def arc_model(M: int, arcs) -> CircularKTrapezoidModel:
    return CircularKTrapezoidModel(1, M, tuple(((int(s), int(e)),) for s, e in arcs))


def arc_contains(M: int, arc: Span, p: int) -> bool:
    s, e = arc
    return (p - s) % M <= (e - s) % M


@dataclass(frozen=True)
class PermutationModel:
    """Segment of vertex ``v`` joins ``top[v]`` on the upper line to ``bottom[v]``."""

    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self):
        if len(self.top) != len(self.bottom):
            raise ModelError("top and bottom must have equal length")
        if len(set(self.top)) != len(self.top):
            raise ModelError("top endpoints must be distinct")
        if len(set(self.bottom)) != len(self.bottom):
            raise ModelError("bottom endpoints must be distinct")

    @property
    def n(self) -> int:
        return len(self.top)


@dataclass(frozen=True)
class CircularPermutationModel:
    """Curves between an inner and an outer circle.

    Curve ``v`` starts at ``inner[v]`` and reaches ``outer[v]`` turning
    clockwise if ``clockwise[v]`` else counter-clockwise, by less than a full
    turn.  Any two curves may cross at most once.
    """

    M: int
    outer: tuple[int, ...]
    inner: tuple[int, ...]
    clockwise: tuple[bool, ...]

    def __post_init__(self):
        n = len(self.inner)
        if len(self.outer) != n or len(self.clockwise) != n:
            raise ModelError("outer, inner and orientation lists must have equal length")
        for name, ticks in (("inner", self.inner), ("outer", self.outer)):
            if len(set(ticks)) != n:
                raise ModelError(f"{name} ticks must be distinct")
            if any(not 0 <= t < self.M for t in ticks):
                raise ModelError(f"{name} tick outside [0, {self.M})")
        for u in range(n):
            for v in range(u + 1, n):
                if self.crossings(u, v) > 1:
                    raise ModelError(f"curves {u} and {v} cross more than once")

    @property
    def n(self) -> int:
        return len(self.inner)

    def lifted_outer(self, v: int) -> int:
        a, b = self.inner[v], self.outer[v]
        if self.clockwise[v]:
            return a + (b - a) % self.M
        return a - (a - b) % self.M

    def crossings(self, u: int, v: int) -> int:
        # Unroll both curves into straight segments on a strip; the circular
        # crossings are the translates of v (by multiples of M) that u meets.
        da = self.inner[u] - self.inner[v]
        db = self.lifted_outer(u) - self.lifted_outer(v)
        lo, hi = min(da, db), max(da, db)
        # integers t with lo < t*M < hi
        return max(0, -((-hi) // self.M) - 1 - lo // self.M)


@dataclass(frozen=True)
class ConvexStructure:
    """Bipartition ``(X, Y)`` given by ``x_order`` (an order on X); Y is the rest."""

    n: int
    x_order: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.x_order)) != len(self.x_order):
            raise InputError("x_order repeats a vertex")
        if any(not 0 <= x < self.n for x in self.x_order):
            raise InputError("x_order vertex out of range")

    @property
    def x_set(self) -> int:
        return vset(self.x_order)

    @property
    def y_set(self) -> int:
        return full_set(self.n) & ~self.x_set


@dataclass(frozen=True)
class ConvexModel:
    graph: Graph
    structure: ConvexStructure

    @property
    def n(self) -> int:
        return self.graph.n


Model = Union[
    KTrapezoidModel, CircularKTrapezoidModel, PermutationModel, CircularPermutationModel, ConvexModel
]


def _ktrap_adjacent(su, sv) -> bool:
    if all(ru < lv for (_, ru), (lv, _) in zip(su, sv)):
        return False
    if all(rv < lu for (lu, _), (_, rv) in zip(su, sv)):
        return False
    return True


def _interval_graph(model: KTrapezoidModel) -> Graph:
    events = []
    for v, ((l, r),) in enumerate(model.spans):
        events.append((l, 0, v))
        events.append((r, 1, v))
    events.sort()
    rows = [0] * model.n
    active = 0
    for _, kind, v in events:
        if kind == 0:
            rows[v] |= active
            for u in bits(active):
                rows[u] |= 1 << v
            active |= 1 << v
        else:
            active &= ~(1 << v)
    return Graph(model.n, tuple(rows))


def realize(model: Model) -> Graph:
    """Intersection graph of ``model``."""
    if isinstance(model, KTrapezoidModel):
        if model.k == 1:
            return _interval_graph(model)
        n = model.n
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if _ktrap_adjacent(model.spans[u], model.spans[v])
        ]
        return graph_from_edges(n, edges)
    if isinstance(model, CircularKTrapezoidModel):
        n, M = model.n, model.M
        lifts = [model.lifted(v) for v in range(n)]
        edges = []
        for u in range(n):
            for v in range(u + 1, n):
                for t in (-M, 0, M):
                    shifted = tuple((l + t, r + t) for l, r in lifts[v])
                    if _ktrap_adjacent(lifts[u], shifted):
                        edges.append((u, v))
                        break
        return graph_from_edges(n, edges)
    if isinstance(model, PermutationModel):
        n = model.n
        top, bot = model.top, model.bottom
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if (top[u] < top[v]) != (bot[u] < bot[v])
        ]
        return graph_from_edges(n, edges)
    if isinstance(model, CircularPermutationModel):
        n = model.n
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if model.crossings(u, v) == 1]
        return graph_from_edges(n, edges)
    if isinstance(model, ConvexModel):
        if not validate_convex(model.graph, model.structure):
            raise ModelError("graph does not satisfy the adjacency property for the X order")
        return model.graph
    raise TypeError(f"not a model: {type(model).__name__}")


def convex_violation(g: Graph, s: ConvexStructure) -> int | None:
    """A vertex witnessing that ``s`` is not a convex structure of ``g``, or None."""
    if s.n != g.n:
        return 0
    xs, ys = s.x_set, s.y_set
    for x in s.x_order:
        if g.adj[x] & xs:
            return x
    pos = {x: i for i, x in enumerate(s.x_order)}
    for y in bits(ys):
        nb = g.adj[y]
        if nb & ys:
            return y
        idx = [pos[x] for x in bits(nb)]
        if idx and max(idx) - min(idx) + 1 != len(idx):
            return y
    return None


def validate_convex(g: Graph, s: ConvexStructure) -> bool:
    """True iff ``g`` is bipartite on ``(X, Y)`` and every ``N(y)`` is a run of the X order."""
    return convex_violation(g, s) is None


def max_point_load(model: Union[KTrapezoidModel, CircularKTrapezoidModel]) -> int:
    """Largest number of intervals (or arcs) sharing a point; this is the clique number."""
    if model.k != 1:
        raise InputError("max_point_load needs a single line or circle (k = 1)")
    if model.n == 0:
        return 0
    if isinstance(model, KTrapezoidModel):
        events = sorted((span[0][0], 0) for span in model.spans)
        events += [(span[0][1], 1) for span in model.spans]
        events.sort()
        load = best = 0
        for _, kind in events:
            load += 1 if kind == 0 else -1
            best = max(best, load)
        return best
    # Closed arcs: the load peaks at some start point.
    M = model.M
    arcs = [row[0] for row in model.arcs]
    return max(sum(arc_contains(M, a, s) for a in arcs) for s, _ in arcs)


def parse_model(text: str) -> Model:
    """Parse the ``model <kind> <n> [k] [M]`` text format."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append((lineno, line.split()))
    if not lines or lines[0][1][0] != "model" or len(lines[0][1]) < 3:
        raise InputError("missing 'model <kind> <n> ...' header")
    lineno, head = lines[0]
    kind = head[1]
    nums = [_int(t, lineno) for t in head[2:]]
    body = lines[1:]
    expected_header = {"interval": 1, "ktrap": 2, "circktrap": 3, "perm": 1, "circperm": 2, "convex": 1}
    if kind not in expected_header:
        raise InputError(f"unknown model kind {kind!r}")
    if len(nums) != expected_header[kind]:
        raise InputError(f"model {kind}: header expects {expected_header[kind]} numbers")
    n = nums[0]

    if kind == "convex":
        x_order = None
        edges = []
        for ln, tok in body:
            if tok[0] == "X":
                x_order = tuple(_int(t, ln) for t in tok[1:])
            elif tok[0] == "e" and len(tok) == 3:
                edges.append((_int(tok[1], ln), _int(tok[2], ln)))
            else:
                raise InputError(f"line {ln}: expected 'X ...' or 'e <x> <y>'")
        if x_order is None:
            raise InputError("convex model needs an 'X <order...>' line")
        return ConvexModel(graph_from_edges(n, edges), ConvexStructure(n, x_order))

    rows = []
    for ln, tok in body:
        if tok[0] != "o":
            raise InputError(f"line {ln}: expected 'o <coords...>'")
        rows.append((ln, tok[1:]))
    if len(rows) != n:
        raise InputError(f"model declares {n} objects but has {len(rows)} 'o' lines")

    if kind == "circperm":
        outer, inner, cw = [], [], []
        for ln, tok in rows:
            if len(tok) != 3 or tok[2] not in ("cw", "ccw"):
                raise InputError(f"line {ln}: circperm expects 'o <outer> <inner> cw|ccw'")
            outer.append(_int(tok[0], ln))
            inner.append(_int(tok[1], ln))
            cw.append(tok[2] == "cw")
        return CircularPermutationModel(nums[1], tuple(outer), tuple(inner), tuple(cw))
    if kind == "perm":
        for ln, tok in rows:
            if len(tok) != 2:
                raise InputError(f"line {ln}: perm expects 'o <top> <bottom>'")
        return PermutationModel(
            tuple(_int(t[0], ln) for ln, t in rows), tuple(_int(t[1], ln) for ln, t in rows)
        )

    k = 1 if kind == "interval" else nums[1]
    spans = []
    for ln, tok in rows:
        if len(tok) != 2 * k:
            raise InputError(f"line {ln}: {kind} expects {2 * k} coordinates, got {len(tok)}")
        c = [_int(t, ln) for t in tok]
        spans.append(tuple((c[2 * i], c[2 * i + 1]) for i in range(k)))
    if kind == "circktrap":
        return CircularKTrapezoidModel(k, nums[2], tuple(spans))
    return KTrapezoidModel(k, tuple(spans))


def format_model(model: Model) -> str:
    if isinstance(model, KTrapezoidModel):
        head = f"model interval {model.n}" if model.k == 1 else f"model ktrap {model.n} {model.k}"
        body = [" ".join(["o"] + [f"{l} {r}" for l, r in row]) for row in model.spans]
    elif isinstance(model, CircularKTrapezoidModel):
        head = f"model circktrap {model.n} {model.k} {model.M}"
        body = [" ".join(["o"] + [f"{s} {e}" for s, e in row]) for row in model.arcs]
    elif isinstance(model, PermutationModel):
        head = f"model perm {model.n}"
        body = [f"o {t} {b}" for t, b in zip(model.top, model.bottom)]
    elif isinstance(model, CircularPermutationModel):
        head = f"model circperm {model.n} {model.M}"
        body = [
            f"o {o} {i} {'cw' if c else 'ccw'}"
            for o, i, c in zip(model.outer, model.inner, model.clockwise)
        ]
    elif isinstance(model, ConvexModel):
        head = f"model convex {model.n}"
        body = ["X " + " ".join(map(str, model.structure.x_order))]
        body += [f"e {u} {v}" for u, v in model.graph.edges()]
    else:
        raise TypeError(f"not a model: {type(model).__name__}")
    return "\n".join([head] + body) + "\n"


def read_model(path) -> Model:
    with open(path) as fh:
        return parse_model(fh.read())


def write_model(model: Model, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_model(model))


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputError(f"line {lineno}: not an integer: {token!r}") from None
