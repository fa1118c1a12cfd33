import itertools
import random

import pytest

from conftest import path, star
from mrank.errors import WrongClassError
from mrank.generate import generate
from mrank.graph import Graph
from mrank.treedp import GoodTriple, tree_dp_run


def _counting(tree):
    calls = {"edge": 0, "node": 0}

    def edge_fn(w, u, inc):
        calls["edge"] += 1
        return 1 + sum(inc.values())

    def node_fn(w, inc):
        calls["node"] += 1
        return len(inc)

    return GoodTriple(tree, edge_fn, node_fn), calls


def test_single_node():
    triple, calls = _counting(Graph(1))
    out = tree_dp_run(triple)
    assert out.node_values == {0: 0} and out.edge_values == {}
    assert calls == {"edge": 0, "node": 1}


def test_path_on_three_nodes():
    triple, calls = _counting(path(3))
    out = tree_dp_run(triple)
    assert len(out.edge_values) == 4 and len(out.node_values) == 3
    # f'(w, u) counts the nodes on w's side of the edge
    assert out.edge_values == {(0, 1): 1, (1, 0): 2, (1, 2): 2, (2, 1): 1}


def test_node_value_is_degree():
    for t in itertools.islice(generate("tree", 40, seed=8), 10):
        triple, calls = _counting(t)
        out = tree_dp_run(triple)
        assert out.node_values == {w: t.degree(w) for w in range(t.n)}
        assert calls == {"edge": 2 * t.n - 2, "node": t.n}


def test_messages_see_all_other_neighbours():
    seen = []

    def edge_fn(w, u, inc):
        assert set(inc) == set(star(4).adj[w]) - {u}
        seen.append((w, u))
        return 0

    tree_dp_run(GoodTriple(star(4), edge_fn, lambda w, inc: sorted(inc)))
    assert sorted(seen) == sorted([(0, i) for i in range(1, 5)] + [(i, 0) for i in range(1, 5)])


def test_leaf_order_does_not_matter():
    t = next(generate("tree", 200, seed=3))
    triple, _ = _counting(t)
    base = tree_dp_run(triple)
    for seed in range(5):
        other = tree_dp_run(triple, rng=random.Random(seed))
        assert other.edge_values == base.edge_values and other.node_values == base.node_values


def test_rejects_non_tree():
    with pytest.raises(WrongClassError):
        tree_dp_run(GoodTriple(Graph(3, [(0, 1), (1, 2), (0, 2)]), None, None))
