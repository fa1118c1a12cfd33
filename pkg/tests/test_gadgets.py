import pytest

from conftest import cycle, complete, path, star
from mrank.decomposition import atoms
from mrank.errors import WrongClassError
from mrank.gadgets import (alpha, alpha_bruteforce, gamma3_gadget, half_threshold, npc_gadget,
                           npc_threshold, split_to_bipartite, starlike_parts, is_starlike_partition)
from mrank.generate import all_connected
from mrank.graph import Graph, diameter, is_chordal
from mrank.rank import rank_flower_exact
from mrank.structure import is_bipartite

P3 = Graph(3, [(0, 1), (1, 2)])
K2 = complete(2)


def test_alpha_examples():
    assert alpha(complete(5)) == 1
    assert alpha(cycle(5)) == 2
    assert alpha(path(5)) == 3
    for g in all_connected(5):
        assert alpha(g) == alpha_bruteforce(g)


def test_split_to_bipartite_examples():
    inst = split_to_bipartite(complete(4))
    assert inst.graph.m == 0 and alpha(inst.graph) == 4
    inst = split_to_bipartite(Graph(4, [(0, 1), (0, 2), (1, 3)]))
    assert is_bipartite(inst.graph) and alpha(inst.graph) == 2
    inst = split_to_bipartite(star(3))
    assert inst.graph.m == 2 and alpha(inst.graph) == 3
    assert set(inst.vertex_legend) == set(range(4))
    with pytest.raises(WrongClassError):
        split_to_bipartite(cycle(5))


def test_npc_sizes_and_threshold():
    assert half_threshold(2) == 2 and half_threshold(3) == 2
    inst = npc_gadget(P3)
    assert inst.graph.n == 39 and inst.threshold == 25 == npc_threshold(3)
    assert set(inst.vertex_legend) == set(range(39))
    inst = npc_gadget(K2)
    assert inst.graph.n == 18 and inst.threshold == 16


def test_npc_structure():
    for src in (K2, P3):
        inst = npc_gadget(src)
        g = inst.graph
        assert diameter(g) == 3 and is_chordal(g)
        v0, groups = starlike_parts(inst)
        assert is_starlike_partition(g, v0, groups, 2)
        assert not is_starlike_partition(g, v0[1:], groups, 2)


def test_npc_k2_source_stays_below_threshold():
    inst = npc_gadget(K2)
    assert alpha(K2) < half_threshold(2)
    assert rank_flower_exact(inst.graph).value < inst.threshold


def test_npc_k3_threshold_is_reached_without_a_half_independent_set():
    # With k = 3 and the threshold n + kn * ceil((n+1)/2) the u-clique alone
    # (n(kn+1) vertices) reaches it, so the biconditional fails for K2.
    inst = npc_gadget(K2, 3)
    assert inst.graph.n == 26 and inst.threshold == 14
    r = rank_flower_exact(inst.graph).value
    assert r == 14 >= inst.threshold and alpha(K2) < half_threshold(2)
    # the k = 2 count with kn in place of 2n keeps K2 below the bar
    assert inst.provenance["consistent_threshold"] == 24 > r
    v0, groups = starlike_parts(inst)
    assert is_starlike_partition(inst.graph, v0, groups, 3)


def test_gamma3_examples():
    inst = gamma3_gadget(path(4))
    assert inst.graph.n == 17 and len(atoms(inst.graph)) == 2
    assert inst.provenance["expected_rank"] == 4 == rank_flower_exact(inst.graph).value
    inst = gamma3_gadget(cycle(5))
    assert inst.graph.n == 21
    assert inst.provenance["expected_rank"] == 5 == rank_flower_exact(inst.graph).value
    with pytest.raises(WrongClassError):
        gamma3_gadget(star(3))
