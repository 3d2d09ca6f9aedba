import random

import pytest

import worked_examples as ex
from oracles import random_shifting, spanning_tree_count_kirchhoff
from sandtile.graphs import (
    Graph,
    GraphError,
    count_spanning_trees,
    fundamental_circuit,
    fundamental_cocircuit,
    graph_to_srm,
    spanning_tree,
    tree_bases,
)
from sandtile.sandpile import SandpileLattice
from sandtile.srm import enumerate_bases
from sandtile.tiling import w_representatives


def example_graph():
    return Graph.undirected(ex.GRAPH_VERTICES, ex.GRAPH_EDGES)


def test_example_graph_matrix():
    G = example_graph()
    D, T = graph_to_srm(G, spanning_tree(G, ex.GRAPH_TREE))
    assert D.D == ex.GRAPH_D
    assert T.permutation == (1, 2, 3, 4, 5)
    assert SandpileLattice(D).order() == 8 == count_spanning_trees(G)
    assert spanning_tree_count_kirchhoff(4, ex.GRAPH_EDGES) == 8


def test_example_graph_bijection():
    G = example_graph()
    D, T = graph_to_srm(G, spanning_tree(G, ex.GRAPH_TREE))
    table = enumerate_bases(D)
    assert sorted(table.as_dict()) == tree_bases(G, T)
    assert set(table.as_dict().values()) == {1}
    f = w_representatives(D, [3, 5, 7, 11, -13])
    assert all(len(v) == 1 for v in f.fibers.values())


def test_circuit_and_cocircuit_signs():
    G = example_graph()
    T = spanning_tree(G, ex.GRAPH_TREE)
    # edge 4 = 3->4 closes the cycle 3->4, 4->1 (edge 1 backwards), 1->2, 2->3
    assert fundamental_circuit(G, T, 4) == {4: 1, 1: -1, 2: 1, 3: 1}
    # removing edge 1 leaves {1,2,3} on its tail side; edges 4 and 5 both leave it
    assert fundamental_cocircuit(G, T, 1) == {1: 1, 4: 1, 5: 1}
    with pytest.raises(GraphError):
        fundamental_circuit(G, T, 1)
    with pytest.raises(GraphError):
        fundamental_cocircuit(G, T, 4)


def test_tree_gives_identity():
    G = Graph.undirected(4, [(1, 2), (2, 3), (2, 4)])
    D, _ = graph_to_srm(G)
    assert D.D == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert SandpileLattice(D).order() == 1


def _random_connected(rng, nv, extra):
    edges = [(rng.randint(1, v - 1), v) for v in range(2, nv + 1)]
    for _ in range(extra):
        a, b = rng.sample(range(1, nv + 1), 2)
        edges.append((a, b))
    rng.shuffle(edges)
    return Graph(nv, tuple(edges))


def test_random_graphs_against_kirchhoff():
    rng = random.Random(51)
    for _ in range(25):
        G = _random_connected(rng, rng.randint(2, 6), rng.randint(0, 5))
        D, T = graph_to_srm(G)
        kirchhoff = spanning_tree_count_kirchhoff(G.vertex_count, G.edges)
        assert count_spanning_trees(G) == kirchhoff == SandpileLattice(D).order()
        table = enumerate_bases(D)
        assert set(table.as_dict().values()) <= {1}
        assert sorted(table.as_dict()) == tree_bases(G, T)


def test_random_graph_multijection_is_bijection():
    rng = random.Random(52)
    for _ in range(10):
        G = _random_connected(rng, rng.randint(3, 5), rng.randint(1, 4))
        D, _ = graph_to_srm(G)
        f = w_representatives(D, random_shifting(D, rng))
        assert all(len(v) == 1 for v in f.fibers.values())


def test_errors():
    with pytest.raises(GraphError):
        Graph(3, ((1, 1),))
    with pytest.raises(GraphError):
        Graph(2, ((1, 3),))
    with pytest.raises(GraphError):
        spanning_tree(Graph(4, ((1, 2), (3, 4))))
    G = example_graph()
    with pytest.raises(GraphError):
        spanning_tree(G, [1, 2])
    with pytest.raises(GraphError):
        spanning_tree(G, [3, 4, 5])  # cycle 2-3-4, vertex 1 left out
    with pytest.raises(ValueError):
        count_spanning_trees(G, budget=3)


def test_tree_choice_changes_columns_not_counts():
    G = example_graph()
    seen = set()
    for tree in ([1, 2, 3], [2, 3, 4], [1, 3, 5], [1, 4, 5]):
        D, _ = graph_to_srm(G, spanning_tree(G, tree))
        f = w_representatives(D, random_shifting(D, random.Random(tree[0])))
        seen.add((SandpileLattice(D).order(), tuple(sorted(len(v) for v in f.fibers.values()))))
    assert seen == {(8, (1,) * 8)}
