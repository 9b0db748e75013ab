from __future__ import annotations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from boolwidth.graph import graph_from_edges

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return graph_from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def graph_and_side(draw, min_n=1, max_n=10):
    g = draw(graphs(min_n, max_n))
    A = draw(st.integers(0, (1 << g.n) - 1))
    return g, A
