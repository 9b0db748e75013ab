"""Dynamic programming over a rooted decomposition for (sigma, rho) and D_q problems.

Every tree node ``w`` splits the vertices into ``A_w`` (leaves below) and the
rest.  Partial solutions inside ``A_w`` are indexed by their d-neighbour class
and by the class of the set assumed to sit outside, whose minimum
representative stands in for the whole outside class.  Children are joined by
looking up, for every (left class, right class, outside class) triple, the
classes each side sees from the other.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .decomposition import DecompositionTree, RootedDecomposition, rooted
from .equivalence import (
    DEFAULT_CLASS_CAP,
    NATURALS,
    ClassTable,
    FinCofinSet,
    build_table,
    cofinite,
    d_of_set,
    finite,
    member_trunc,
    parse_set,
)
from .errors import CapExceededError, InputError
from .graph import Graph, bits, popcount

__all__ = [
    "SigmaRhoProblem",
    "DqProblem",
    "Solution",
    "DqSolution",
    "INFEASIBLE",
    "solve_sigma_rho",
    "solve_dq",
    "sigma_rho_as_dq",
    "problem_presets",
    "preset",
    "parse_problem",
    "format_problem",
    "read_problem",
    "parse_weights",
    "NodeTables",
    "node_tables",
]

MODES = ("min", "max", "exists")


class _Infeasible:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFEASIBLE"

    def __bool__(self) -> bool:
        return False


INFEASIBLE = _Infeasible()


@dataclass(frozen=True)
class SigmaRhoProblem:
    """Pick ``S``: members need a count in ``sigma``, non-members one in ``rho``.

    ``weights`` defaults to unit weights; ``mode`` is ``min``, ``max`` or
    ``exists``.
    """

    sigma: FinCofinSet
    rho: FinCofinSet
    mode: str = "min"
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise InputError(f"mode must be one of {MODES}")

    @property
    def d(self) -> int:
        return max(d_of_set(self.sigma), d_of_set(self.rho), 1)

    def with_weights(self, weights) -> "SigmaRhoProblem":
        return SigmaRhoProblem(self.sigma, self.rho, self.mode, tuple(int(w) for w in weights))


@dataclass(frozen=True)
class DqProblem:
    """Partition into ``q`` parts with ``|N(v) & V_j|`` in ``D[i][j]`` for ``v`` in ``V_i``.

    The objective, if any, is the weight of part 0.
    """

    D: tuple[tuple[FinCofinSet, ...], ...]
    mode: str = "exists"
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        q = len(self.D)
        if q < 1 or any(len(row) != q for row in self.D):
            raise InputError("degree constraint matrix must be q x q with q >= 1")
        if self.mode not in MODES:
            raise InputError(f"mode must be one of {MODES}")

    @property
    def q(self) -> int:
        return len(self.D)

    @property
    def d(self) -> int:
        return max([1] + [d_of_set(mu) for row in self.D for mu in row])

    def with_weights(self, weights) -> "DqProblem":
        return DqProblem(self.D, self.mode, tuple(int(w) for w in weights))


@dataclass(frozen=True)
class Solution:
    value: int
    witness: int  # vertex bitmask


@dataclass(frozen=True)
class DqSolution:
    value: int
    parts: tuple[int, ...]


def _weights(g: Graph, weights) -> list[int]:
    if weights is None:
        return [1] * g.n
    if len(weights) != g.n:
        raise InputError(f"expected {g.n} weights, got {len(weights)}")
    if any(w < 0 for w in weights):
        raise InputError("weights must be non-negative")
    return list(weights)


@dataclass
class NodeTables:
    """Class tables for ``A_w`` (inner) and its complement (outer), per tree node."""

    inner: list[ClassTable]
    outer: list[ClassTable]


def node_tables(
    g: Graph, rd: RootedDecomposition, d: int, cap: int = DEFAULT_CLASS_CAP
) -> NodeTables:
    """Build both tables for every node, reusing boundaries from the children."""
    size = len(rd.below)
    inner: list = [None] * size
    outer: list = [None] * size
    boundary = [0] * size
    full = g.vertices
    for x in rd.postorder:
        A = rd.below[x]
        out = full & ~A
        cand = 0
        if x < rd.n:
            cand = 1 << x
        for c in rd.children[x]:
            cand |= boundary[c]
        bnd = 0
        reach = 0
        for v in bits(cand):
            row = g.adj[v] & out
            if row:
                bnd |= 1 << v
                reach |= row
        boundary[x] = bnd
        try:
            inner[x] = build_table(g, A, d, cap, boundary=bnd, witness_mask=reach)
            outer[x] = build_table(g, out, d, cap, boundary=reach, witness_mask=bnd)
        except CapExceededError as exc:
            raise CapExceededError(
                f"cut below tree node {x}: {exc}", exc.partial, where=A
            ) from None
    return NodeTables(inner, outer)


def _pair_lookup(table: ClassTable, left: list[int], right: list[int]) -> np.ndarray:
    """``out[i, j]`` = class in ``table`` of ``left[i] | right[j]`` (disjoint sets)."""
    lk = [table.key_of(x) for x in left]
    rk = [table.key_of(y) for y in right]
    out = np.empty((len(left), len(right)), dtype=np.int64)
    for i, a in enumerate(lk):
        for j, b in enumerate(rk):
            out[i, j] = table.lookup(table.sum_keys(a, b))
    return out


_CHUNK = 1 << 22


def solve_sigma_rho(
    g: Graph,
    t: DecompositionTree | RootedDecomposition,
    prob: SigmaRhoProblem,
    cap: int = DEFAULT_CLASS_CAP,
):
    """Optimum (sigma, rho) set, as a :class:`Solution`, or ``INFEASIBLE``.

    Tables are dense ``inner class x outer class`` arrays of the best weight
    found; joins are vectorised over all class triples.
    """
    rd = t if isinstance(t, RootedDecomposition) else rooted(t)
    if rd.n != g.n:
        raise InputError(f"tree has {rd.n} leaves but graph has {g.n} vertices")
    d = prob.d
    weights = _weights(g, prob.weights)
    if sum(weights) >= 2**53:
        raise InputError("total weight too large for exact table arithmetic")
    sign = {"min": 1.0, "max": -1.0, "exists": 0.0}[prob.mode]
    cost = [sign * w for w in weights]
    sig_ok = [member_trunc(prob.sigma, c, d) for c in range(d + 1)]
    rho_ok = [member_trunc(prob.rho, c, d) for c in range(d + 1)]

    tabs = node_tables(g, rd, d, cap)
    value: dict[int, np.ndarray] = {}
    back: dict[int, np.ndarray] = {}
    joins: dict[int, tuple[np.ndarray, np.ndarray]] = {}

    for x in rd.postorder:
        tin, tout = tabs.inner[x], tabs.outer[x]
        ko = len(tout)
        if not rd.children[x]:
            v = x
            tab = np.full((len(tin), ko), np.inf)
            pick = np.zeros((len(tin), ko), dtype=np.int8)
            c_in = tin.class_of(1 << v)
            for co, rep in enumerate(tout.reps):
                seen = min(d, popcount(g.adj[v] & rep))
                if rho_ok[seen]:
                    tab[0, co] = 0.0
                if sig_ok[seen] and cost[v] < tab[c_in, co]:
                    tab[c_in, co] = cost[v]
                    pick[c_in, co] = 1
            value[x], back[x] = tab, pick
            continue

        a, b = rd.children[x]
        ka, kb = len(tabs.inner[a]), len(tabs.inner[b])
        reps_a, reps_b = tabs.inner[a].reps, tabs.inner[b].reps
        m_in = _pair_lookup(tin, reps_a, reps_b)  # (ka, kb) -> class of A_x
        m_a = _pair_lookup(tabs.outer[a], reps_b, tout.reps)  # (kb, ko) -> outer class of a
        m_b = _pair_lookup(tabs.outer[b], reps_a, tout.reps)  # (ka, ko) -> outer class of b
        joins[x] = (m_a, m_b)
        ta, tb = value[a], value[b]

        best = np.full(len(tin) * ko, np.inf)
        arg = np.full(len(tin) * ko, -1, dtype=np.int64)
        step = max(1, _CHUNK // max(1, kb * ko))
        for lo in range(0, ka, step):
            hi = min(ka, lo + step)
            ca = np.arange(lo, hi)[:, None, None]
            cb = np.arange(kb)[None, :, None]
            vals = ta[ca, m_a[None, :, :]] + tb[cb, m_b[lo:hi, None, :]]
            keys = m_in[lo:hi, :, None] * ko + np.arange(ko)[None, None, :]
            vals = vals.ravel()
            keys = np.broadcast_to(keys, (hi - lo, kb, ko)).ravel()
            ok = np.isfinite(vals)
            if not ok.any():
                continue
            flat = np.flatnonzero(ok)
            order = np.lexsort((vals[flat], keys[flat]))
            flat = flat[order]
            ks = keys[flat]
            first = np.ones(len(ks), dtype=bool)
            first[1:] = ks[1:] != ks[:-1]
            flat, ks = flat[first], ks[first]
            better = vals[flat] < best[ks]
            best[ks[better]] = vals[flat[better]]
            arg[ks[better]] = flat[better] + lo * kb * ko
        value[x] = best.reshape(len(tin), ko)
        back[x] = arg.reshape(len(tin), ko)
        del value[a], value[b]

    root = rd.root
    final = value[root]
    if not np.isfinite(final[0, 0]):
        return INFEASIBLE

    witness = 0
    stack = [(root, 0, 0)]
    while stack:
        x, ci, co = stack.pop()
        if not rd.children[x]:
            if back[x][ci, co]:
                witness |= 1 << x
            continue
        a, b = rd.children[x]
        kb, ko = len(tabs.inner[b]), len(tabs.outer[x])
        flat = int(back[x][ci, co])
        ca, rest = divmod(flat, kb * ko)
        cb = rest // ko
        m_a, m_b = joins[x]
        stack.append((a, ca, int(m_a[cb, co])))
        stack.append((b, cb, int(m_b[ca, co])))
    total = sum(weights[v] for v in bits(witness)) if prob.mode != "exists" else 0
    return Solution(total, witness)


def solve_dq(
    g: Graph,
    t: DecompositionTree | RootedDecomposition,
    prob: DqProblem,
    cap: int = DEFAULT_CLASS_CAP,
):
    """Optimum D_q-partition as a :class:`DqSolution`, or ``INFEASIBLE``.

    Keys are q-tuples of class indices.  A top-down pass first collects the
    outside keys each node can actually be asked about, then tables are
    filled bottom-up for those keys only.
    """
    rd = t if isinstance(t, RootedDecomposition) else rooted(t)
    if rd.n != g.n:
        raise InputError(f"tree has {rd.n} leaves but graph has {g.n} vertices")
    q, d = prob.q, prob.d
    weights = _weights(g, prob.weights)
    sign = {"min": 1, "max": -1, "exists": 0}[prob.mode]
    ok = [
        [[member_trunc(prob.D[i][j], c, d) for c in range(d + 1)] for j in range(q)]
        for i in range(q)
    ]
    tabs = node_tables(g, rd, d, cap)

    # inner keys realisable by partitions of A_x, and the pairwise class joins
    inner_keys: dict[int, set] = {}
    m_in: dict[int, np.ndarray] = {}
    m_a: dict[int, np.ndarray] = {}
    m_b: dict[int, np.ndarray] = {}
    for x in rd.postorder:
        if not rd.children[x]:
            c1 = tabs.inner[x].class_of(1 << x)
            inner_keys[x] = {tuple(c1 if j == i else 0 for j in range(q)) for i in range(q)}
            continue
        a, b = rd.children[x]
        ra, rb = tabs.inner[a].reps, tabs.inner[b].reps
        m_in[x] = _pair_lookup(tabs.inner[x], ra, rb)
        m_a[x] = _pair_lookup(tabs.outer[a], rb, tabs.outer[x].reps)
        m_b[x] = _pair_lookup(tabs.outer[b], ra, tabs.outer[x].reps)
        mi = m_in[x]
        inner_keys[x] = {
            tuple(int(mi[p, s]) for p, s in zip(ka, kb))
            for ka in inner_keys[a]
            for kb in inner_keys[b]
        }
        if len(inner_keys[x]) > cap:
            raise CapExceededError(
                f"more than {cap} partition keys below tree node {x}",
                len(inner_keys[x]),
                where=rd.below[x],
            )

    needed: dict[int, set] = {rd.root: {(0,) * q}}
    for x in reversed(rd.postorder):
        if not rd.children[x]:
            continue
        a, b = rd.children[x]
        ma, mb = m_a[x], m_b[x]
        needed[a] = {
            tuple(int(ma[s, o]) for s, o in zip(kb, ko)) for kb in inner_keys[b] for ko in needed[x]
        }
        needed[b] = {
            tuple(int(mb[p, o]) for p, o in zip(ka, ko)) for ka in inner_keys[a] for ko in needed[x]
        }

    # table[x][outer_key][inner_key] = (cost, back)
    table: dict[int, dict] = {}
    for x in rd.postorder:
        here: dict = {}
        if not rd.children[x]:
            v = x
            reps = tabs.outer[x].reps
            c1 = tabs.inner[x].class_of(1 << v)
            for ko in needed[x]:
                seen = [min(d, popcount(g.adj[v] & reps[c])) for c in ko]
                row = {}
                for i in range(q):
                    if all(ok[i][j][seen[j]] for j in range(q)):
                        key = tuple(c1 if j == i else 0 for j in range(q))
                        c = sign * weights[v] if i == 0 else 0
                        if key not in row or c < row[key][0]:
                            row[key] = (c, i)
                here[ko] = row
            table[x] = here
            continue
        a, b = rd.children[x]
        ma, mb, mi = m_a[x], m_b[x], m_in[x]
        ta, tb = table[a], table[b]
        for ko in needed[x]:
            row = {}
            for ka in inner_keys[a]:
                kob = tuple(int(mb[p, o]) for p, o in zip(ka, ko))
                hit_b = tb[kob]
                if not hit_b:
                    continue
                for kb, (cb_cost, _) in hit_b.items():
                    koa = tuple(int(ma[s, o]) for s, o in zip(kb, ko))
                    hit_a = ta[koa].get(ka)
                    if hit_a is None:
                        continue
                    c = hit_a[0] + cb_cost
                    key = tuple(int(mi[p, s]) for p, s in zip(ka, kb))
                    if key not in row or c < row[key][0]:
                        row[key] = (c, (ka, kb))
            here[ko] = row
        table[x] = here

    root = rd.root
    top = table[root][(0,) * q]
    if not top:
        return INFEASIBLE
    ki = min(top, key=lambda k: (top[k][0], k))
    parts = [0] * q
    stack = [(root, (0,) * q, ki)]
    while stack:
        x, ko, kin = stack.pop()
        entry = table[x][ko][kin]
        if not rd.children[x]:
            parts[entry[1]] |= 1 << x
            continue
        a, b = rd.children[x]
        ka, kb = entry[1]
        stack.append((a, tuple(int(m_a[x][s, o]) for s, o in zip(kb, ko)), ka))
        stack.append((b, tuple(int(m_b[x][p, o]) for p, o in zip(ka, ko)), kb))
    value = sum(weights[v] for v in bits(parts[0])) if prob.mode != "exists" else 0
    return DqSolution(value, tuple(parts))


def sigma_rho_as_dq(prob: SigmaRhoProblem) -> DqProblem:
    """Two-part encoding: part 0 is the chosen set, part 1 the rest."""
    return DqProblem(
        ((prob.sigma, NATURALS), (prob.rho, NATURALS)), prob.mode, prob.weights
    )


def _coloring(k: int) -> DqProblem:
    zero = finite(0)
    return DqProblem(
        tuple(tuple(zero if i == j else NATURALS for j in range(k)) for i in range(k)), "exists"
    )


def problem_presets() -> dict:
    """Named problems; ``k-coloring`` is available for any ``k`` through :func:`preset`."""
    return {
        "dominating-set": SigmaRhoProblem(NATURALS, cofinite(0), "min"),
        "total-dominating-set": SigmaRhoProblem(cofinite(0), cofinite(0), "min"),
        "independent-set": SigmaRhoProblem(finite(0), NATURALS, "max"),
        "independent-dominating-set": SigmaRhoProblem(finite(0), cofinite(0), "min"),
        "perfect-code": SigmaRhoProblem(finite(0), finite(1), "min"),
        "3-coloring": _coloring(3),
    }


def preset(name: str):
    m = re.fullmatch(r"(\d+)-coloring", name)
    if m:
        return _coloring(int(m.group(1)))
    table = problem_presets()
    if name not in table:
        raise InputError(f"unknown problem preset {name!r}")
    return table[name]


def parse_problem(text: str):
    """Parse a ``problem sigma-rho`` or ``problem dq <q>`` file."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append((lineno, line))
    if not lines:
        raise InputError("empty problem file")
    _, head = lines[0]
    tok = head.split()
    mode = None
    if tok[:2] == ["problem", "sigma-rho"] and len(tok) == 2:
        sigma = rho = None
        for ln, line in lines[1:]:
            key, _, rest = line.partition(" ")
            if key == "sigma":
                sigma = parse_set(rest)
            elif key == "rho":
                rho = parse_set(rest)
            elif key == "mode":
                mode = rest.strip()
            else:
                raise InputError(f"line {ln}: unexpected {key!r}")
        if sigma is None or rho is None:
            raise InputError("sigma-rho problem needs both 'sigma' and 'rho' lines")
        return SigmaRhoProblem(sigma, rho, mode or "min")
    if tok[:2] == ["problem", "dq"] and len(tok) == 3:
        q = int(tok[2])
        if q < 1:
            raise InputError("q must be at least 1")
        D = [[NATURALS] * q for _ in range(q)]
        for ln, line in lines[1:]:
            parts = line.split(None, 3)
            if parts[0] == "D" and len(parts) == 4:
                i, j = int(parts[1]), int(parts[2])
                if not (0 <= i < q and 0 <= j < q):
                    raise InputError(f"line {ln}: part index out of range")
                D[i][j] = parse_set(parts[3])
            elif parts[0] == "mode" and len(parts) == 2:
                mode = parts[1]
            else:
                raise InputError(f"line {ln}: expected 'D <i> <j> <set>' or 'mode ...'")
        return DqProblem(tuple(map(tuple, D)), mode or "exists")
    raise InputError("header must be 'problem sigma-rho' or 'problem dq <q>'")


def format_problem(prob) -> str:
    if isinstance(prob, SigmaRhoProblem):
        return f"problem sigma-rho\nsigma {prob.sigma}\nrho {prob.rho}\nmode {prob.mode}\n"
    lines = [f"problem dq {prob.q}"]
    for i, row in enumerate(prob.D):
        for j, mu in enumerate(row):
            lines.append(f"D {i} {j} {mu}")
    lines.append(f"mode {prob.mode}")
    return "\n".join(lines) + "\n"


def read_problem(path):
    with open(path) as fh:
        return parse_problem(fh.read())


def parse_weights(text: str) -> list[int]:
    """Whitespace-separated integer weights, one per vertex, ``#`` comments allowed."""
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0]
        for tok in line.split():
            try:
                out.append(int(tok))
            except ValueError:
                raise InputError(f"not an integer weight: {tok!r}") from None
    return out
