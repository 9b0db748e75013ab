"""d-neighbour equivalence classes of the subsets of one side of a cut.

Two sets ``X, X'`` inside ``A`` are equivalent when every vertex outside
``A`` sees the same number of neighbours in both, counts of ``d`` or more
being identified.  Only outside vertices that actually touch ``A`` matter,
and duplicate rows impose identical constraints.

Signatures are stored in layered form: ``key[j]`` is the bitmask of outside
vertices that see at least ``j + 1`` members.  Adding a vertex, or adding
the signatures of two disjoint sets, is then a few bitwise operations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import CapExceededError, InputError
from .graph import Graph, bits, popcount

__all__ = [
    "FinCofinSet",
    "NATURALS",
    "EMPTY",
    "finite",
    "cofinite",
    "parse_set",
    "d_of_set",
    "member_trunc",
    "ClassTable",
    "DEFAULT_CLASS_CAP",
    "signature",
    "witnesses",
    "enumerate_classes",
    "build_table",
    "class_of",
    "format_class_table",
]

DEFAULT_CLASS_CAP = 10**6

Key = tuple[int, ...]


@dataclass(frozen=True)
class FinCofinSet:
    """A finite set of naturals, or the complement of one.

    ``exceptions`` are the members when finite and the non-members when
    cofinite.  ``FinCofinSet(True, ())`` is the whole of N.
    """

    cofinite: bool
    exceptions: tuple[int, ...] = ()

    def __post_init__(self):
        exc = tuple(sorted(set(self.exceptions)))
        if any(x < 0 for x in exc):
            raise InputError("sets of naturals cannot hold negative numbers")
        object.__setattr__(self, "exceptions", exc)

    def __contains__(self, t: int) -> bool:
        return (t in self.exceptions) != self.cofinite

    def __str__(self) -> str:
        inner = ",".join(map(str, self.exceptions))
        if self.cofinite:
            return "N" if not self.exceptions else f"N\\{{{inner}}}"
        return f"{{{inner}}}"


NATURALS = FinCofinSet(True, ())
EMPTY = FinCofinSet(False, ())


def finite(*members: int) -> FinCofinSet:
    return FinCofinSet(False, members)


def cofinite(*missing: int) -> FinCofinSet:
    return FinCofinSet(True, missing)


_SET_RE = re.compile(r"^(N)?\s*(\\)?\s*(\{[\d,\s]*\})?$")


def parse_set(text: str) -> FinCofinSet:
    """Parse ``N``, ``{a,b}`` or ``N\\{a,b}``."""
    text = text.strip()
    m = _SET_RE.match(text)
    if not m or (m.group(1) is None and m.group(3) is None):
        raise InputError(f"cannot parse set {text!r}")
    has_n, minus, braces = m.groups()
    if has_n and braces and not minus:
        raise InputError(f"cannot parse set {text!r}")
    if not has_n and minus:
        raise InputError(f"cannot parse set {text!r}")
    members = []
    if braces:
        body = braces[1:-1].strip()
        members = [int(x) for x in body.split(",") if x.strip()] if body else []
    return FinCofinSet(bool(has_n), tuple(members))


def d_of_set(mu: FinCofinSet) -> int:
    """Truncation threshold: counts at or above it are indistinguishable for ``mu``.

    The empty set is treated as threshold 1 (it rejects every count).
    """
    if mu.cofinite:
        return 1 + max(mu.exceptions) if mu.exceptions else 0
    return 1 + max(mu.exceptions) if mu.exceptions else 1


def member_trunc(mu: FinCofinSet, t: int, d: int) -> bool:
    """Membership of a count truncated at ``d`` (``t == d`` stands for any count >= d)."""
    if d < d_of_set(mu):
        raise InputError(f"truncation {d} is below d({mu}) = {d_of_set(mu)}")
    if not 0 <= t <= d:
        raise InputError(f"truncated count {t} outside 0..{d}")
    if t < d:
        return t in mu
    return mu.cofinite


def _add_vertex(key: Key, row: int) -> Key:
    layers = list(key)
    for j in range(len(layers) - 1, 0, -1):
        layers[j] |= layers[j - 1] & row
    layers[0] |= row
    return tuple(layers)


def _capped_sum(x: Key, y: Key, full: int) -> Key:
    d = len(x)
    out = []
    for j in range(d):
        # count >= j+1 iff (x >= i) and (y >= j+1-i) for some i in 0..j+1
        acc = x[j] | y[j]
        for i in range(1, j + 1):
            acc |= x[i - 1] & y[j - i]
        out.append(acc & full)
    return tuple(out)


@dataclass
class ClassTable:
    """Equivalence classes of subsets of ``side`` with minimum representatives.

    ``reps[i]`` is a smallest set in class ``i`` and ``keys[i]`` its layered
    signature; class 0 is the class of the empty set.
    """

    side: int
    d: int
    witness_mask: int
    rows: dict[int, int]
    reps: list[int] = field(default_factory=list)
    keys: list[Key] = field(default_factory=list)
    index: dict[Key, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.reps)

    def key_of(self, xs: int) -> Key:
        key = (0,) * self.d
        for v in bits(xs & self.side):
            row = self.rows.get(v)
            if row:
                key = _add_vertex(key, row)
        return key

    def sum_keys(self, x: Key, y: Key) -> Key:
        return _capped_sum(x, y, self.witness_mask)

    def lookup(self, key: Key) -> int:
        try:
            return self.index[key]
        except KeyError:
            raise AssertionError("signature missing from an exhaustive class table") from None

    def class_of(self, xs: int) -> int:
        if xs & ~self.side:
            raise InputError("set is not inside the table's side")
        return self.lookup(self.key_of(xs))

    def counts(self, key: Key) -> dict[int, int]:
        """Truncated count per outside vertex that touches the side."""
        return {w: sum(layer >> w & 1 for layer in key) for w in bits(self.witness_mask)}


def build_table(
    g: Graph,
    side: int,
    d: int,
    cap: int = DEFAULT_CLASS_CAP,
    boundary: int | None = None,
    witness_mask: int | None = None,
) -> ClassTable:
    """Breadth-first class enumeration from the empty set.

    ``boundary`` (vertices of ``side`` with outside neighbours) and
    ``witness_mask`` (outside vertices with neighbours in ``side``) may be
    passed in when the caller already knows them.
    """
    if d < 1:
        raise InputError("d must be at least 1")
    outside = g.vertices & ~side
    if boundary is None:
        boundary = 0
        for v in bits(side):
            if g.adj[v] & outside:
                boundary |= 1 << v
    if witness_mask is None:
        witness_mask = 0
        for v in bits(boundary):
            witness_mask |= g.adj[v]
        witness_mask &= outside
    rows = {v: g.adj[v] & witness_mask for v in bits(boundary)}
    table = ClassTable(side, d, witness_mask, rows)
    empty = (0,) * d
    table.reps.append(0)
    table.keys.append(empty)
    table.index[empty] = 0
    cand = list(rows.items())
    i = 0
    while i < len(table.reps):
        rep, key = table.reps[i], table.keys[i]
        for v, row in cand:
            if rep >> v & 1:
                continue
            nk = _add_vertex(key, row)
            if nk not in table.index:
                if len(table.reps) >= cap:
                    raise CapExceededError(
                        f"more than {cap} d-neighbour classes", len(table.reps), side
                    )
                table.index[nk] = len(table.reps)
                table.reps.append(rep | 1 << v)
                table.keys.append(nk)
        i += 1
    return table


def enumerate_classes(g: Graph, A: int, d: int, cap: int = DEFAULT_CLASS_CAP) -> ClassTable:
    return build_table(g, A, d, cap)


def class_of(table: ClassTable, xs: int) -> int:
    return table.class_of(xs)


def witnesses(g: Graph, A: int) -> list[int]:
    """Outside vertices touching ``A``, one per distinct ``N(v) & A``, ascending."""
    seen = set()
    out = []
    for v in bits(g.vertices & ~A):
        row = g.adj[v] & A
        if row and row not in seen:
            seen.add(row)
            out.append(v)
    return out


def signature(g: Graph, A: int, d: int, xs: int) -> tuple[int, ...]:
    """Truncated neighbour counts of ``xs`` seen by each witness of ``A``."""
    if xs & ~A:
        raise InputError("X must be a subset of A")
    return tuple(min(d, popcount(g.adj[w] & xs)) for w in witnesses(g, A))


def format_class_table(g: Graph, table: ClassTable) -> str:
    """TSV dump: class index, representative, signature over the witnesses."""
    wit = witnesses(g, table.side)
    lines = ["class\trepresentative\tsignature"]
    for i, rep in enumerate(table.reps):
        members = " ".join(map(str, bits(rep))) or "-"
        sig = " ".join(str(min(table.d, popcount(g.adj[w] & rep))) for w in wit)
        lines.append(f"{i}\t{members}\t{sig}")
    return "\n".join(lines) + "\n"
