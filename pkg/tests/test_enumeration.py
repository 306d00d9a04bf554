import pytest

from ramseylab.enumeration import (
    are_isomorphic,
    graphs_by_edge_count,
    graphs_on_vertices,
    graphs_up_to_vertices,
    regular_graphs,
    trees_on_vertices,
    trees_up_to_vertices,
)
from ramseylab.families import cycle, path, star
from ramseylab.graphs import Graph

# Published counts: graphs up to isomorphism by vertex count (A000088),
# by edge count without isolated vertices (A000664), and trees (A000055).
GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
EDGE_COUNTS = {1: 1, 2: 2, 3: 5, 4: 11, 5: 26, 6: 68, 7: 177, 8: 497, 9: 1476}
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47}


@pytest.mark.parametrize("n,count", sorted(GRAPH_COUNTS.items()))
def test_graph_counts_by_vertices(n, count):
    graphs = graphs_on_vertices(n)
    assert len(graphs) == count
    assert all(g.n == n for g in graphs)


def test_graphs_up_to_vertices():
    assert len(graphs_up_to_vertices(5)) == 1 + 2 + 4 + 11 + 34


def test_graph_counts_by_edges():
    levels = graphs_by_edge_count(9)
    assert {m: len(gs) for m, gs in levels.items()} == EDGE_COUNTS
    for m, graphs in levels.items():
        for g in graphs:
            assert g.m == m
            assert all(g.degree(v) >= 1 for v in range(g.n))


@pytest.mark.parametrize("n,count", sorted(TREE_COUNTS.items()))
def test_tree_counts(n, count):
    trees = trees_on_vertices(n)
    assert len(trees) == count
    assert all(t.is_tree() for t in trees)


def test_trees_up_to():
    assert len(trees_up_to_vertices(5)) == 8


def test_are_isomorphic():
    assert are_isomorphic(path(4), Graph(4, [(3, 1), (1, 0), (0, 2)]))
    assert not are_isomorphic(path(4), star(3))
    assert not are_isomorphic(cycle(6), Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))
    assert are_isomorphic(Graph(0), Graph(0))


def test_regular_graph_counts():
    assert len(regular_graphs(4, 3)) == 1
    assert len(regular_graphs(6, 3)) == 2
    cubic8 = regular_graphs(8, 3)
    assert len(cubic8) == 6  # five connected cubic graphs plus 2K_4
    assert sum(1 for g in cubic8 if g.is_connected()) == 5
    assert len(regular_graphs(6, 4)) == 1
    assert len(regular_graphs(9, 2)) == 4  # C9, C3+C6, C4+C5, 3C3
    assert regular_graphs(3, 4) == []
    assert regular_graphs(5, 1) == []  # parity
    assert regular_graphs(4, 0) == [Graph(4)]
