import pytest
from hypothesis import settings

from manyrobbers.graphs import Graph
from manyrobbers.smallgraphs import connected_graphs_up_to

settings.register_profile("suite", max_examples=40, deadline=None)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def corpus():
    """All connected graphs on 2..6 vertices, one per isomorphism class."""
    return connected_graphs_up_to(6)


@pytest.fixture(scope="session")
def corpus5():
    return connected_graphs_up_to(5)


def random_connected_graph(draw, max_n=7):
    """Hypothesis helper: a connected graph built from a random edge subset
    plus a random spanning tree to guarantee connectivity."""
    from hypothesis import strategies as st
    n = draw(st.integers(min_value=2, max_value=max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(min_value=0, max_value=v - 1))
        edges.add((u, v))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    extra = draw(st.lists(st.sampled_from(pairs), max_size=2 * n))
    edges.update(extra)
    return Graph.from_edge_list(n, sorted(edges))
