import random

from hypothesis import strategies as st

from kdis.graph import Graph

# filled by test_acceptance, printed by the terminal-summary hook in conftest
ACCEPTANCE_LINES: list[str] = []


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    p = rng.uniform(0.1, 0.9) if p is None else p
    return Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j) if rng.random() < p])


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 12):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])
