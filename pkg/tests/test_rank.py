import itertools

import pytest

from conftest import C5_PENDANT, K3_PENDANT, PETERSEN, complete, cycle, path, star
from mrank.errors import CapExceededError, WrongClassError
from mrank.convexity import is_independent_def
from mrank.generate import all_connected, generate
from mrank.graph import Graph, clique_number
from mrank.rank import (gamma2_recurrence_values, line_formula, rank, rank_auto, rank_bruteforce,
                        rank_flower_exact, rank_gamma1, rank_gamma2, rank_line, rank_split,
                        rank_tree)
from mrank.structure import line_graph

DIAMOND = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
THREE_TRIANGLES = Graph(7, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (3, 5), (3, 6), (5, 6)])


def _valid(g, res):
    assert len(res.witness) == res.value
    assert is_independent_def(g, res.witness)


# ---------------------------------------------------------------- exact solvers

def test_bruteforce_examples():
    t = Graph(7, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5), (0, 6)])
    assert rank_bruteforce(t).value == 4
    assert rank_bruteforce(complete(5)).value == 5
    assert rank_bruteforce(cycle(5)).value == 2
    _valid(cycle(5), rank_bruteforce(cycle(5)))


def test_bruteforce_cap():
    with pytest.raises(CapExceededError):
        rank_bruteforce(path(30))


def test_flower_examples():
    res = rank_flower_exact(C5_PENDANT)
    assert res.value == 3 and res.flower_used == set(range(6))
    assert rank_flower_exact(K3_PENDANT).value == 3
    assert rank_flower_exact(PETERSEN).value == clique_number(PETERSEN) == 2
    assert rank_flower_exact(cycle(7)).value == 2


def test_pruned_and_full_flower_search_agree():
    for g in itertools.islice(generate("chordal", 11, seed=31), 30):
        assert rank_flower_exact(g).value == rank_flower_exact(g, prune=False).value


def test_flower_matches_bruteforce_small():
    for n in range(1, 6):
        for g in all_connected(n):
            res = rank_flower_exact(g)
            assert res.value == rank_bruteforce(g).value
            _valid(g, res)


# ---------------------------------------------------------------- class solvers

def test_tree_examples():
    assert rank_tree(path(2)).value == 2
    assert rank_tree(star(4)).value == 4
    assert rank_tree(Graph(1)).value == 1
    for t in itertools.islice(generate("tree", 30, seed=6), 5):
        # every subtree is a flower; the pruned search stops at t itself
        leaves = sum(1 for v in range(t.n) if t.degree(v) == 1)
        assert rank_tree(t).value == leaves == rank_flower_exact(t).value
    with pytest.raises(WrongClassError):
        rank_tree(cycle(4))


def test_gamma1_examples():
    assert rank_gamma1(path(4)).value == 2
    assert rank_gamma1(K3_PENDANT).value == 3
    assert rank_gamma1(C5_PENDANT).value == 3
    with pytest.raises(WrongClassError):
        rank_gamma1(complete(4))


def test_gamma1_on_validated_subclasses():
    for kind in ("bipartite", "cactus", "triangle-free"):
        for g in itertools.islice(generate(kind, 10, seed=13), 20):
            res = rank_gamma1(g)
            assert res.value == rank_bruteforce(g).value
            _valid(g, res)


def test_gamma1_undercounts_the_diamond():
    # Atoms {0,1,2} and {0,1,3}, both petals with a one-vertex stamen.  Every
    # peel drops the petal count, yet the flower left after peeling one of
    # them is a triangle worth 3.
    assert rank_bruteforce(DIAMOND).value == 3
    assert rank_gamma1(DIAMOND).value == 2
    assert rank_gamma1(DIAMOND, strategy="greedy").value == 2
    # the dispatcher does not send it to the Gamma1 solver
    assert rank_auto(DIAMOND).value == 3


def test_gamma1_greedy_depends_on_scan_order():
    # pendant 0 at 7, a C5 (1 4 5 3 6) and a C4 (2 6 3 7) sharing the edge 36.
    # Peeling the pendant edge first keeps two Type-1 petals; peeling the C5
    # first turns the C4 into a Type-2 petal with stamen {2, 3}.
    g = Graph(8, [(0, 7), (1, 4), (1, 6), (2, 6), (2, 7), (3, 5), (3, 6), (3, 7), (4, 5)])
    assert rank_bruteforce(g).value == 3
    assert rank_gamma1(g, strategy="greedy").value == 2
    res = rank_gamma1(g)
    assert res.value == 3 and res.flower_used == {0, 2, 3, 6, 7}
    _valid(g, res)


def test_gamma2_examples():
    assert rank_gamma2(C5_PENDANT).value == 3
    assert rank_gamma2(K3_PENDANT).value == 3
    _valid(C5_PENDANT, rank_gamma2(C5_PENDANT))
    with pytest.raises(WrongClassError):
        rank_gamma2(Graph(7, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (0, 5), (0, 6), (5, 6)]))


def test_gamma2_recurrences_undercount():
    rec = gamma2_recurrence_values(C5_PENDANT)
    assert rec["node_max"] == 2 and rec["with_edges"] == 3
    rec = gamma2_recurrence_values(THREE_TRIANGLES)
    assert rec["with_edges"] == 4
    assert rank_bruteforce(THREE_TRIANGLES).value == 5
    assert rank_gamma2(THREE_TRIANGLES).value == 5


def test_gamma2_matches_flower_random():
    for g in itertools.islice(generate("gamma2", 12, seed=17), 40):
        res = rank_gamma2(g)
        assert res.value == rank_flower_exact(g).value
        _valid(g, res)


def test_line_examples():
    assert rank_line(path(3)).value == 2
    assert rank_line(complete(4)).value == 4
    assert rank_line(complete(3)).value == 3
    with pytest.raises(WrongClassError):
        rank_line(star(3))


def test_line_on_small_roots():
    from mrank.generate import connected_up_to_edges
    for h in connected_up_to_edges(6):
        g, _ = line_graph(h)
        res = rank_line(g)
        assert res.value == rank_bruteforce(g).value >= line_formula(g)
        _valid(g, res)


def test_split_examples():
    g = Graph(4, [(0, 1), (0, 2), (1, 3)])
    assert rank_split(g).value == 2 == rank_bruteforce(g).value
    assert rank_split(complete(5)).value == 5
    assert rank_split(star(3)).value == 3
    with pytest.raises(WrongClassError):
        rank_split(cycle(5))


# ---------------------------------------------------------------- dispatcher

def test_auto_examples():
    res = rank_auto(path(4))
    assert (res.method, res.value) == ("tree", 2)
    # C5 is a line graph (of itself) and line comes before gamma1
    res = rank_auto(cycle(5))
    assert (res.method, res.value) == ("line", 2)
    # Petersen is triangle-free, so gamma1 answers before gamma2 is tried
    res = rank_auto(PETERSEN)
    assert (res.method, res.value) == ("gamma1", 2)
    assert rank_gamma2(PETERSEN).value == 2


def test_auto_falls_back_to_exact():
    g = Graph(7, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
                  (3, 4), (3, 5), (4, 5), (3, 6), (4, 6), (5, 6), (0, 4)])
    res = rank_auto(g)
    assert res.value == rank_bruteforce(g).value


def test_auto_cap_error_names_caps():
    # three K4s at vertex 0 plus a tail: no class solver applies
    edges = []
    for base in (1, 4, 7):
        edges += itertools.combinations((0, base, base + 1, base + 2), 2)
    g = Graph(12, edges + [(9, 10), (10, 11)])
    assert rank_auto(g).method == "flower"
    with pytest.raises(CapExceededError, match="cap"):
        rank_auto(g, brute_cap=10, flower_cap=2)


def test_rank_by_name():
    assert rank(cycle(5), "brute").method == "brute"
    with pytest.raises(Exception):
        rank(cycle(5), "nope")
