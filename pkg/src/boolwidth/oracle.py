"""Brute-force reference implementations.

Everything here works straight from the definitions by scanning subsets,
assignments or orderings.  Only the graph primitives are shared with the
rest of the package, so agreement with the fast paths is real evidence.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from .errors import InputError
from .graph import Graph, bits, popcount

__all__ = [
    "brute_cut_bool",
    "brute_cut_rank",
    "brute_sigma_rho",
    "brute_dq",
    "brute_dilworth",
    "brute_min_representative",
    "brute_max_min_representative",
    "brute_max_min_representative_within",
    "exhaustive_caterpillar_width",
    "is_sigma_rho_set",
    "is_dq_partition",
]


def _member(mu, t: int) -> bool:
    # a FinCofinSet read from its fields
    return (t in mu.exceptions) != mu.cofinite


def _subset_masks(members: list[int]) -> list[int]:
    """All subsets of ``members`` as global bitmasks, indexed by local bitmask."""
    out = [0] * (1 << len(members))
    for i in range(1, len(out)):
        low = i & -i
        out[i] = out[i ^ low] | 1 << members[low.bit_length() - 1]
    return out


def brute_cut_bool(g: Graph, A: int) -> int:
    """Number of distinct ``N(X) - A`` over all ``X`` inside ``A``."""
    members = list(bits(A))
    if len(members) > 20:
        raise InputError("brute force limited to |A| <= 20")
    out = g.vertices & ~A
    nb = [0] * (1 << len(members))
    for i in range(1, len(nb)):
        low = i & -i
        nb[i] = nb[i ^ low] | (g.adj[members[low.bit_length() - 1]] & out)
    return len(set(nb))


def brute_cut_rank(g: Graph, A: int) -> int:
    """log2 of the number of distinct XOR combinations of rows of the A x (V - A) matrix."""
    members = list(bits(A))
    if len(members) > 20:
        raise InputError("brute force limited to |A| <= 20")
    out = g.vertices & ~A
    span = [0] * (1 << len(members))
    for i in range(1, len(span)):
        low = i & -i
        span[i] = span[i ^ low] ^ (g.adj[members[low.bit_length() - 1]] & out)
    return len(set(span)).bit_length() - 1


def _popcounts(masks: np.ndarray) -> np.ndarray:
    return np.bitwise_count(masks).astype(np.int64)


def brute_sigma_rho(g: Graph, sigma, rho, mode: str = "min", weights=None):
    """Best weight of a (sigma, rho) set by scanning all subsets; ``None`` if there is none.

    ``exists`` mode returns 0 when some set qualifies.
    """
    n = g.n
    if n > 20:
        raise InputError("brute force limited to n <= 20")
    w = np.ones(n, dtype=np.int64) if weights is None else np.asarray(weights, dtype=np.int64)
    S = np.arange(1 << n, dtype=np.uint64)
    ok = np.ones(len(S), dtype=bool)
    total = np.zeros(len(S), dtype=np.int64)
    sig_ok = np.array([_member(sigma, t) for t in range(n + 1)])
    rho_ok = np.array([_member(rho, t) for t in range(n + 1)])
    for v in range(n):
        cnt = _popcounts(S & np.uint64(g.adj[v]))
        inside = (S >> np.uint64(v)) & np.uint64(1) == 1
        ok &= np.where(inside, sig_ok[cnt], rho_ok[cnt])
        total += np.where(inside, w[v], 0)
    if not ok.any():
        return None
    if mode == "exists":
        return 0
    vals = total[ok]
    return int(vals.min() if mode == "min" else vals.max())


def brute_dq(g: Graph, D, mode: str = "exists", weights=None):
    """Best part-0 weight over all ``q^n`` assignments; ``None`` if infeasible."""
    n, q = g.n, len(D)
    if q**n > 2 * 10**7:
        raise InputError("brute force limited to q^n <= 2e7")
    w = np.ones(n, dtype=np.int64) if weights is None else np.asarray(weights, dtype=np.int64)
    adj = np.array([[g.adj[v] >> u & 1 for u in range(n)] for v in range(n)], dtype=np.int64)
    allowed = np.array(
        [[[_member(D[i][j], t) for t in range(n + 1)] for j in range(q)] for i in range(q)]
    )
    best = None
    chunk = max(1, 2**20 // max(1, n))
    total = q**n
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        part = np.empty((len(idx), n), dtype=np.int64)
        rest = idx.copy()
        for v in range(n):
            part[:, v] = rest % q
            rest //= q
        ok = np.ones(len(idx), dtype=bool)
        for j in range(q):
            in_j = (part == j).astype(np.int64)
            cnt = in_j @ adj  # cnt[:, v] = |N(v) & V_j|
            for v in range(n):
                ok &= allowed[part[:, v], j, cnt[:, v]]
        if not ok.any():
            continue
        if mode == "exists":
            return 0
        vals = ((part[ok] == 0) * w).sum(axis=1)
        cand = int(vals.min() if mode == "min" else vals.max())
        if best is None:
            best = cand
        else:
            best = min(best, cand) if mode == "min" else max(best, cand)
    return best


def brute_dilworth(g: Graph) -> int:
    """Largest set of pairwise incomparable vertices under ``N(x) in N[y]``."""
    n = g.n
    if n > 16:
        raise InputError("brute force limited to n <= 16")
    if n == 0:
        return 0

    def leq(x, y):
        return g.adj[x] & ~(g.adj[y] | 1 << y) == 0

    clash = [0] * n
    for x in range(n):
        for y in range(n):
            if x != y and (leq(x, y) or leq(y, x)):
                clash[x] |= 1 << y
    good = [True] * (1 << n)
    best = 0
    for S in range(1, 1 << n):
        low = S & -S
        v = low.bit_length() - 1
        rest = S ^ low
        good[S] = good[rest] and not clash[v] & rest
        if good[S]:
            best = max(best, popcount(S))
    return best


def _signature_ids(g: Graph, A: int, d: int) -> tuple[list[int], np.ndarray]:
    """Class id of every subset of ``A`` (local indexing) under capped counts."""
    members = list(bits(A))
    if len(members) > 16:
        raise InputError("brute force limited to |A| <= 16")
    local = np.arange(1 << len(members), dtype=np.uint64)
    cols = []
    for w in bits(g.vertices & ~A):
        mask = 0
        for i, v in enumerate(members):
            if g.adj[w] >> v & 1:
                mask |= 1 << i
        if mask:
            cols.append(np.minimum(_popcounts(local & np.uint64(mask)), d))
    if not cols:
        return members, np.zeros(len(local), dtype=np.int64)
    _, ids = np.unique(np.stack(cols, axis=1), axis=0, return_inverse=True)
    return members, ids.ravel()


def brute_min_representative(g: Graph, A: int, d: int, X: int) -> tuple[int, int]:
    """Smallest ``|R|`` with ``R`` equivalent to ``X``: over all of ``A``, and inside ``X``."""
    if X & ~A:
        raise InputError("X must be a subset of A")
    members, ids = _signature_ids(g, A, d)
    x_local = sum(1 << i for i, v in enumerate(members) if X >> v & 1)
    target = ids[x_local]
    sizes = _popcounts(np.arange(len(ids), dtype=np.uint64))
    over_all = int(sizes[ids == target].min())
    within = min(
        popcount(r) for r in range(len(ids)) if r & ~x_local == 0 and ids[r] == target
    )
    return over_all, within


def brute_max_min_representative(g: Graph, A: int, d: int) -> int:
    """Largest class-minimum size over all classes of subsets of ``A``."""
    _, ids = _signature_ids(g, A, d)
    sizes = _popcounts(np.arange(len(ids), dtype=np.uint64))
    best = np.full(ids.max() + 1, np.iinfo(np.int64).max)
    np.minimum.at(best, ids, sizes)
    return int(best.max())


def brute_max_min_representative_within(g: Graph, A: int, d: int) -> int:
    """Largest, over ``S`` inside ``A``, of the smallest equivalent ``R`` contained in ``S``.

    Capped counts only grow with the set, so if ``R`` inside ``S`` is
    equivalent to ``S`` then so is every set between them; hence ``S`` can be
    shrunk one vertex at a time without leaving the class.
    """
    _, ids = _signature_ids(g, A, d)
    size = len(ids)
    a = size.bit_length() - 1
    sizes = _popcounts(np.arange(size, dtype=np.uint64))
    m = sizes.copy()
    order = np.argsort(sizes, kind="stable")
    layers = np.split(order, np.cumsum(np.bincount(sizes, minlength=a + 1))[:-1])
    for layer in layers[1:]:
        for i in range(a):
            has = (layer >> i) & 1 == 1
            S = layer[has]
            T = S ^ (1 << i)
            same = ids[T] == ids[S]
            m[S[same]] = np.minimum(m[S[same]], m[T[same]])
    return int(m.max())


def _caterpillar_cut_sets(order) -> list[int]:
    n = len(order)
    sets = [1 << v for v in order]
    prefix = 0
    for i, v in enumerate(order[:-2]):
        prefix |= 1 << v
        if i >= 1:
            sets.append(prefix)
    return sets


def exhaustive_caterpillar_width(g: Graph, measure: str = "bool") -> float:
    """Best caterpillar width over all vertex orders (``n <= 8``).

    ``bool`` gives log2 of the class count, ``rank`` the GF(2) rank.
    """
    if g.n > 8:
        raise InputError("exhaustive search limited to n <= 8")
    if measure not in ("bool", "rank"):
        raise InputError("measure must be 'bool' or 'rank'")
    if g.n <= 1:
        return 0.0 if measure == "bool" else 0
    value = brute_cut_bool if measure == "bool" else brute_cut_rank
    memo: dict[int, int] = {}
    best = None
    for order in itertools.permutations(range(g.n)):
        worst = 0
        for A in _caterpillar_cut_sets(order):
            if A not in memo:
                memo[A] = value(g, A)
            worst = max(worst, memo[A])
            if best is not None and worst >= best:
                break
        if best is None or worst < best:
            best = worst
    return math.log2(best) if measure == "bool" else best


def is_sigma_rho_set(g: Graph, sigma, rho, S: int) -> bool:
    """Direct check of the degree conditions with true counts."""
    for v in range(g.n):
        c = popcount(g.adj[v] & S)
        if not _member(sigma if S >> v & 1 else rho, c):
            return False
    return True


def is_dq_partition(g: Graph, D, parts) -> bool:
    """``parts`` partition the vertices and every degree constraint holds."""
    q = len(D)
    if len(parts) != q:
        return False
    union = 0
    for P in parts:
        if union & P:
            return False
        union |= P
    if union != g.vertices:
        return False
    for i, P in enumerate(parts):
        for v in bits(P):
            for j in range(q):
                if not _member(D[i][j], popcount(g.adj[v] & parts[j])):
                    return False
    return True
