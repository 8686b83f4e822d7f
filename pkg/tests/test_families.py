from itertools import permutations

import pytest

from manyrobbers.errors import GraphError
from manyrobbers.families import (bipartition, caterpillar, complete,
                                  complete_bipartite, cycle, h_graph, h_label,
                                  h_vertex, path, star, subdivided_star, wheel)


def isomorphic(a, b):
    if a.n != b.n or a.edge_count() != b.edge_count():
        return False
    eb = set(b.edges())
    for perm in permutations(range(a.n)):
        if all(tuple(sorted((perm[u], perm[v]))) in eb for u, v in a.edges()):
            return True
    return False


def test_path_edges():
    assert path(4).edges() == [(0, 1), (1, 2), (2, 3)]
    assert path(1).n == 1


def test_cycle_equals_triangle():
    assert cycle(3) == complete(3)


def test_complete_edge_count():
    assert complete(5).edge_count() == 10


def test_bipartite_layout():
    g = complete_bipartite(2, 3)
    assert g.edge_count() == 6
    m_part, n_part = bipartition(2, 3)
    assert m_part == (0, 1) and n_part == (2, 3, 4)
    assert isomorphic(complete_bipartite(2, 2), cycle(4))
    assert complete_bipartite(1, 3) == star(3)


def test_star_layout():
    g = star(3)
    assert g.degree(0) == 3
    assert sorted(g.leaves()) == [1, 2, 3]
    assert star(1) == path(2)


def test_wheel_layout():
    assert wheel(4) == complete(4)
    g = wheel(6)
    assert g.degree(0) == 5
    assert all(g.degree(v) == 3 for v in range(1, 6))
    assert wheel(5).edge_count() == 8
    with pytest.raises(GraphError):
        wheel(3)


def test_caterpillar_generator():
    g = caterpillar(3, [0, 2, 0])
    assert g.n == 5 and g.is_caterpillar()
    assert caterpillar(1, [3]) == star(3)
    assert caterpillar(4, [0, 0, 0, 0]) == path(4)
    with pytest.raises(GraphError):
        caterpillar(2, [1])
    with pytest.raises(GraphError):
        caterpillar(2, [1, -1])


def test_subdivided_star_small_cases():
    assert isomorphic(subdivided_star(1), path(3))
    assert isomorphic(subdivided_star(2), path(5))
    t3 = subdivided_star(3)
    assert t3.n == 7 and t3.is_tree() and not t3.is_caterpillar()


@pytest.mark.parametrize("n", range(2, 6))
def test_subdivided_star_leaf_eccentricity(n):
    g = subdivided_star(n)
    assert len(g.leaves()) == n
    assert all(g.eccentricity(v) == 4 for v in g.leaves())


def test_hgraph_seed():
    g = h_graph(7)
    assert g.n == 7 and g.edge_count() == 14
    want = {(1, 2), (1, 4), (2, 6), (5, 6), (5, 2), (5, 1), (5, 4),
            (3, 6), (3, 2), (3, 1), (3, 4), (7, 6), (7, 4), (7, 3)}
    got = {tuple(sorted((h_label(a), h_label(b)))) for a, b in g.edges()}
    assert got == {tuple(sorted(e)) for e in want}


def test_hgraph_extension_rule():
    g8 = h_graph(8)
    extra = {tuple(sorted(e)) for e in g8.edges()} - \
            {tuple(sorted(e)) for e in h_graph(7).edges()}
    assert extra == {tuple(sorted((h_vertex(8), h_vertex(v))))
                     for v in (7, 5, 4)}


def test_hgraph_top_vertex_neighbors():
    g = h_graph(10)
    v10 = h_vertex(10)
    assert g.degree(v10) == 3
    assert {h_label(w) for w in g.adj[v10]} == {9, 7, 6}


@pytest.mark.parametrize("n", range(8, 13))
def test_hgraph_prefix_property(n):
    g, prev = h_graph(n), h_graph(n - 1)
    kept = [(a, b) for a, b in g.edges() if a < n - 1 and b < n - 1]
    assert sorted(kept) == sorted(prev.edges())


def test_hgraph_requires_seven_vertices():
    with pytest.raises(GraphError):
        h_graph(6)


def test_generators_reject_bad_sizes():
    for fn, bad in [(path, 0), (cycle, 2), (complete, 0), (star, 0),
                    (subdivided_star, 0)]:
        with pytest.raises(GraphError):
            fn(bad)
