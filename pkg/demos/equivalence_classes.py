"""The d-neighbour classes of one cut, with minimum representatives."""

from __future__ import annotations

from boolwidth import build_table, graph_from_edges
from boolwidth.equivalence import format_class_table

# vertex 3 sees all of A = {0, 1, 2}; vertex 4 sees only 2, so counting
# neighbours up to 2 splits more sets than counting up to 1
G = graph_from_edges(5, [(0, 3), (1, 3), (2, 3), (2, 4)])
A = 0b00111


def main() -> None:
    for d in (1, 2):
        table = build_table(G, A, d)
        print(f"d = {d}: {len(table)} classes")
        print(format_class_table(G, table))


if __name__ == "__main__":
    main()
