import pytest

from manyrobbers.smallgraphs import (connected_graphs, connected_graphs_up_to,
                                     trees, trees_up_to)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 2), (4, 6),
                                     (5, 21), (6, 112)])
def test_connected_graph_counts(n, count):
    assert len(connected_graphs(n)) == count


def test_corpus_totals_142():
    assert len(connected_graphs_up_to(6)) == 1 + 2 + 6 + 21 + 112


@pytest.mark.parametrize("n,count", [(2, 1), (3, 1), (4, 2), (5, 3),
                                     (6, 6), (7, 11)])
def test_tree_counts(n, count):
    assert len(trees(n)) == count


def test_every_corpus_graph_is_valid(corpus):
    for g in corpus:
        assert g._is_connected()
        assert all(u not in g.adj[u] for u in range(g.n))


def test_corpus_has_no_duplicate_classes(corpus):
    # cheap isomorphism invariants must already be pairwise distinct often
    # enough; exact distinctness is guaranteed by construction (canonical
    # minimum edge encoding), spot-checked here via invariant collisions
    seen = {}
    for g in corpus:
        key = (g.n, g.edge_count(),
               tuple(sorted(g.degree(v) for v in range(g.n))),
               g.diameter())
        seen.setdefault(key, []).append(g)
    for key, group in seen.items():
        names = {x.name for x in group}
        assert len(names) == len(group)


def test_trees_subset_of_corpus_counts():
    assert len(trees_up_to(6)) == 1 + 1 + 2 + 3 + 6
    t7 = trees(7)
    non_caterpillars = [t for t in t7 if not t.is_caterpillar()]
    assert len(non_caterpillars) == 1  # the subdivided three-arm star


def test_enumeration_bounds_checked():
    with pytest.raises(ValueError):
        connected_graphs(8)
    with pytest.raises(ValueError):
        trees(9)
