import itertools
import random

import pytest

from conftest import K3_PENDANT, complete, cycle, path, star
from mrank._bits import bits, popcount
from mrank.errors import CapExceededError, NotBipartiteError, NotConnectedError, ParseError
from mrank.generate import all_connected, connected_corpus, generate
from mrank.graph import (Graph, connected_components, from_graph6, is_chordal, is_clique,
                         load_graph, max_clique, save_graph, to_graph6)
from mrank.structure import (bipartite_max_independent_set, blocks, line_graph, line_graph_root,
                             maximum_matching, relabel_line_graph, split_partition)


# ---------------------------------------------------------------- I/O

def test_load_k2_and_c5():
    assert load_graph("2 1\n0 1") == complete(2)
    assert load_graph("5 5\n0 1\n1 2\n2 3\n3 4\n0 4") == cycle(5)


def test_load_rejects_self_loop_with_line_number():
    with pytest.raises(ParseError) as exc:
        load_graph("3 3\n0 1\n1 1\n1 2")
    assert exc.value.line == 3
    assert "line 3" in str(exc.value)


@pytest.mark.parametrize("text, line", [
    ("x y\n0 1", 1),
    ("3 1\n0 3", 2),
    ("3 2\n0 1\n0 1", 3),
    ("3 1\n2 1", 2),
    ("3 1\n0 1\n1 2", 3),
    ("3 1 7\n0 1", 1),
])
def test_load_errors_name_the_line(text, line):
    with pytest.raises(ParseError) as exc:
        load_graph(text)
    assert exc.value.line == line


def test_load_missing_header_and_short_edge_list():
    with pytest.raises(ParseError):
        load_graph("# only a comment\n")
    with pytest.raises(ParseError):
        load_graph("3 2\n0 1\n")


def test_comments_and_blank_lines_are_skipped():
    g = load_graph("# a path\n\n3 2\n# middle\n0 1\n\n1 2\n")
    assert g == path(3)


def test_round_trip_on_generated_graphs():
    for kind in ("random", "tree", "split", "cactus", "chordal"):
        for g in itertools.islice(generate(kind, 9, seed=3), 5):
            assert load_graph(save_graph(g, "round trip")) == g


def test_graph6_round_trip():
    for g in connected_corpus(5):
        assert from_graph6(to_graph6(g)) == g


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])


# ---------------------------------------------------------------- components, cliques

def test_connected_components():
    assert connected_components(cycle(5)) == [[0, 1, 2, 3, 4]]
    assert connected_components(path(3), {1}) == [[0], [2]]
    assert connected_components(K3_PENDANT, {0}) == [[1, 2], [3]]


def test_is_clique():
    assert is_clique(complete(3), {0, 1, 2})
    assert not is_clique(cycle(5), {0, 1, 2})
    assert is_clique(cycle(5), set())
    assert is_clique(cycle(5), {3})


def test_max_clique_examples():
    assert len(max_clique(cycle(5))) == 2
    assert max_clique(complete(4)) == {0, 1, 2, 3}
    assert max_clique(K3_PENDANT, {1, 2, 3}) == {1, 2}


def _brute_clique(g):
    best = ()
    for s in range(1 << g.n):
        vs = list(bits(s))
        if len(vs) > len(best) and is_clique(g, vs):
            best = vs
        elif len(vs) == len(best) and vs < list(best) and is_clique(g, vs):
            best = vs
    return frozenset(best)


def test_max_clique_matches_brute_force():
    rng = random.Random(11)
    for _ in range(150):
        n = rng.randint(1, 10)
        p = rng.choice([0.3, 0.5, 0.8])
        g = Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])
        assert max_clique(g) == _brute_clique(g)


def test_is_chordal():
    assert is_chordal(complete(5))
    assert is_chordal(K3_PENDANT)
    assert not is_chordal(cycle(4))
    assert not is_chordal(cycle(5))


# ---------------------------------------------------------------- blocks

def test_blocks_examples():
    bd = blocks(path(4))
    assert len(bd.blocks) == 3 and bd.cut_vertices == {1, 2} and bd.leaf_block_count == 2
    bd = blocks(K3_PENDANT)
    assert set(bd.blocks) == {frozenset({0, 1, 2}), frozenset({0, 3})}
    assert bd.cut_vertices == {0} and bd.leaf_block_count == 2
    bd = blocks(cycle(5))
    assert len(bd.blocks) == 1 and bd.leaf_block_count == 1


def test_blocks_rejects_disconnected():
    with pytest.raises(NotConnectedError):
        blocks(Graph(3, [(0, 1)]))


def test_blocks_invariants():
    for n in range(2, 6):
        for g in all_connected(n):
            bd = blocks(g)
            for u, v in g.edges:
                assert sum(1 for b in bd.blocks if u in b and v in b) == 1
            for a, b in itertools.combinations(bd.blocks, 2):
                shared = a & b
                assert len(shared) <= 1 and shared <= bd.cut_vertices
            # the block-cut tree is a tree, so block sizes telescope to n - 1
            assert sum(len(b) - 1 for b in bd.blocks) == n - 1


# ---------------------------------------------------------------- bipartite

def _brute_alpha(g):
    return max(popcount(s) for s in range(1 << g.n)
               if all(not (s >> u & 1 and s >> v & 1) for u, v in g.edges))


def test_bipartite_mis_examples():
    assert len(bipartite_max_independent_set(cycle(6))) == 3
    assert bipartite_max_independent_set(star(4)) == {1, 2, 3, 4}
    assert len(bipartite_max_independent_set(path(5))) == 3


def test_bipartite_mis_rejects_odd_cycle_with_witness():
    with pytest.raises(NotBipartiteError) as exc:
        bipartite_max_independent_set(cycle(5))
    cyc = exc.value.odd_cycle
    assert len(cyc) % 2 == 1
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        assert cycle(5).has_edge(a, b)


def test_koenig_against_brute_force():
    for g in itertools.islice(generate("bipartite", 12, p=0.3, seed=5), 40):
        mis = bipartite_max_independent_set(g)
        matching = len(maximum_matching(g)) // 2
        assert len(mis) == g.n - matching == _brute_alpha(g)
        assert all(not (u in mis and v in mis) for u, v in g.edges)


# ---------------------------------------------------------------- split

def test_split_partition_examples():
    sp = split_partition(star(3))
    assert 0 in sp.clique_side and len(sp.clique_side) == 2
    assert len(sp.independent_side) == 2
    assert split_partition(cycle(5)) is None
    sp = split_partition(complete(4))
    assert sp.clique_side == {0, 1, 2, 3} and not sp.independent_side


def test_split_partition_is_valid_and_maximal():
    for g in itertools.islice(generate("split", 10, seed=7), 30):
        sp = split_partition(g)
        assert sp is not None
        assert is_clique(g, sp.clique_side)
        assert all(not g.has_edge(u, v) for u, v in itertools.combinations(sp.independent_side, 2))
        for v in sp.independent_side:
            assert not sp.clique_side <= set(g.adj[v])


# ---------------------------------------------------------------- line graphs

def test_line_graph_examples():
    assert line_graph(path(4))[0] == path(3)
    assert line_graph(star(3))[0] == complete(3)
    lg, mapping = line_graph(cycle(5))
    assert lg.n == 5 and lg.m == 5 and all(lg.degree(v) == 2 for v in range(5))
    assert set(mapping) == set(cycle(5).edges)


def test_line_graph_rejects_edgeless():
    with pytest.raises(Exception):
        line_graph(Graph(1))


def test_line_graph_root_examples():
    root, mapping = line_graph_root(path(3))
    assert root.n == 4 and root.m == 3 and relabel_line_graph(root, mapping) == path(3)
    root, mapping = line_graph_root(complete(3))
    assert sorted(root.degree(v) for v in range(4)) == [1, 1, 1, 3]
    assert line_graph_root(star(3)) is None


def test_line_graph_root_reproduces_every_line_graph():
    from mrank.generate import connected_up_to_edges
    for h in connected_up_to_edges(7):
        g, _ = line_graph(h)
        root = line_graph_root(g)
        assert root is not None
        assert relabel_line_graph(*root) == g


def test_line_graph_root_rejects_non_line_graphs():
    # claw, K5 minus an edge and the wheel W5 are forbidden line-graph subgraphs
    assert line_graph_root(star(3)) is None
    k5e = Graph(5, [e for e in itertools.combinations(range(5), 2) if e != (0, 1)])
    assert line_graph_root(k5e) is None
    w5 = Graph(6, list(cycle(5).edges) + [(i, 5) for i in range(5)])
    assert line_graph_root(w5) is None


# ---------------------------------------------------------------- generators

def test_all_connected_counts():
    assert [sum(1 for _ in all_connected(n)) for n in range(1, 6)] == [1, 1, 4, 38, 728]
    three = set(all_connected(3))
    assert complete(3) in three and len(three) == 4


def test_generators_are_deterministic_and_respect_classes():
    a = next(generate("tree", 5, seed=1))
    b = next(generate("tree", 5, seed=1))
    assert a == b and a.m == 4
    assert split_partition(next(generate("split", 6, seed=7))) is not None
    assert all(is_chordal(g) for g in itertools.islice(generate("chordal", 9, seed=2), 10))


def test_generator_caps_and_seed():
    with pytest.raises(CapExceededError):
        next(generate("random", 10_000, seed=1))
    with pytest.raises(CapExceededError):
        next(generate("all-connected", 9))
    with pytest.raises(ValueError):
        generate("tree", 5)


def test_corpus_counts():
    counts = [0] * 9
    for g in connected_corpus(8):
        counts[g.n] += 1
    assert counts[1:] == [1, 1, 2, 6, 21, 112, 853, 11117]
