"""Oracle-equivalence suites shared by the test-suite and ``mrank selftest``.

Each suite returns a ``SuiteResult``; a failure records the offending graph
(edge-list text) and the disagreeing values so it can be replayed.
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from ._bits import bits, to_mask
from .convexity import (hull_mask, interval_closure, interval_mask, is_convex_mask,
                        is_hull_set, is_independent_def, is_independent_mask)
from .decomposition import (atoms, atoms_bruteforce, enumerate_flowers, has_clique_separator,
                            is_gamma1, is_independent_charac)
from .gadgets import (alpha, alpha_bruteforce, gamma3_gadget, half_threshold, npc_gadget,
                      split_to_bipartite)
from .generate import all_connected, connected_corpus, connected_up_to_edges, generate
from .graph import Graph, diameter, is_chordal, is_clique_mask, save_graph
from .rank import (rank_bruteforce, rank_flower_exact, rank_gamma1, rank_gamma2, rank_line,
                   rank_split, rank_tree)
from .structure import bipartite_max_independent_set, line_graph, line_graph_root, relabel_line_graph
from .treedp import GoodTriple, tree_dp_run

MAX_DUMPS = 5


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    mismatches: int = 0
    failures: list = field(default_factory=list)   # (edge-list text, message)
    seconds: float = 0.0

    @property
    def ok(self):
        return self.mismatches == 0

    def fail(self, g: Graph, message: str):
        self.mismatches += 1
        if len(self.failures) < MAX_DUMPS:
            self.failures.append((save_graph(g), message))

    def summary(self):
        status = "ok" if self.ok else "FAIL"
        return f"{self.name}: {self.checked} checks, {self.mismatches} mismatches, {self.seconds:.1f}s [{status}]"


def _timed(fn):
    def run(*args, **kwargs):
        start = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - start
        return res
    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


def random_graphs(count, min_n, max_n, seed):
    """Seeded G(n, p) graphs conditioned on connectivity, n and p varying."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(min_n, max_n)
        p = rng.choice([0.2, 0.3, 0.45, 0.6])
        yield next(generate("random", n, p=p, seed=rng.getrandbits(32)))


def _class_stream(kind, count, min_n, max_n, seed):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(min_n, max_n)
        yield next(generate(kind, n, seed=rng.getrandbits(32)))


# --------------------------------------------------------------------------
# convexity

@_timed
def suite_hull(max_n=6, random_count=500, random_max_n=10, subsets=50, seed=0):
    """hull(s) equals the fixpoint of the brute-force interval."""
    res = SuiteResult("hull")
    rng = random.Random(seed)
    graphs = itertools.chain(
        (g for n in range(1, max_n + 1) for g in all_connected(n)),
        random_graphs(random_count, 2, random_max_n, seed))
    for g in graphs:
        for s in _subsets(g.n, subsets, rng):
            res.checked += 1
            h = hull_mask(g, s)
            c = to_mask(interval_closure(g, bits(s)))
            if h != c:
                res.fail(g, f"s={sorted(bits(s))}: hull={sorted(bits(h))} closure={sorted(bits(c))}")
    return res


def _subsets(n, count, rng):
    if 1 << n <= count:
        return range(1 << n)
    return [rng.getrandbits(n) for _ in range(count)]


@_timed
def suite_convexity(max_n=6, random_count=500, random_max_n=10, subsets=50, seed=0):
    """is_convex agrees with interval closure; cliques are convex; prime graphs
    are hulled by every non-adjacent pair."""
    res = SuiteResult("convexity")
    rng = random.Random(seed)
    graphs = itertools.chain(
        (g for n in range(1, max_n + 1) for g in all_connected(n)),
        random_graphs(random_count, 2, random_max_n, seed))
    for g in graphs:
        for s in _subsets(g.n, subsets, rng):
            res.checked += 1
            closed = interval_mask(g, s) == s
            if is_convex_mask(g, s) != closed:
                res.fail(g, f"s={sorted(bits(s))}: is_convex={not closed} closed={closed}")
            if is_clique_mask(g, s) and not closed:
                res.fail(g, f"clique {sorted(bits(s))} not convex")
        if g.n <= 8 and len(atoms(g)) == 1:
            for u, v in itertools.combinations(range(g.n), 2):
                if not g.has_edge(u, v):
                    res.checked += 1
                    if not is_hull_set(g, (u, v)):
                        res.fail(g, f"prime graph but hull of {u},{v} is not V")
    return res


@_timed
def suite_characterization(max_n=6, samples=1000, sample_max_n=10, seed=0):
    """is_independent_charac agrees with the definition."""
    res = SuiteResult("characterization")

    def check(g, s):
        res.checked += 1
        a = is_independent_mask(g, s)
        b = is_independent_charac(g, bits(s))
        if a != b:
            res.fail(g, f"s={sorted(bits(s))}: definition={a} characterization={b}")

    for n in range(1, max_n + 1):
        for g in all_connected(n):
            for s in range(1 << n):
                check(g, s)
    rng = random.Random(seed)
    for g in random_graphs(samples, 2, sample_max_n, seed):
        check(g, rng.getrandbits(g.n))
    return res


# --------------------------------------------------------------------------
# decomposition

@_timed
def suite_atoms(max_n=7, random_count=100, random_max_n=9, seed=0):
    """atoms() equals the brute oracle; atoms are free of clique separators."""
    res = SuiteResult("atoms")
    graphs = itertools.chain(connected_corpus(max_n), random_graphs(random_count, 2, random_max_n, seed))
    for g in graphs:
        res.checked += 1
        fast = {a.vertices for a in atoms(g).atoms}
        slow = {a.vertices for a in atoms_bruteforce(g).atoms}
        if fast != slow:
            res.fail(g, f"atoms={sorted(map(sorted, fast))} brute={sorted(map(sorted, slow))}")
        for a in fast:
            if len(a) <= 12 and has_clique_separator(g, a):
                res.fail(g, f"atom {sorted(a)} has a clique separator")
    return res


@_timed
def suite_petal_monotonicity(max_n=8, limit=10_000, seed=0):
    """Petal count never increases along peeling."""
    res = SuiteResult("petal-monotonicity")
    for g in _rank_corpus(max_n, limit, seed):
        flowers = enumerate_flowers(g)
        top = len(flowers[0].petals())
        by_alive = {f.alive: len(f.petals()) for f in flowers}
        for f in flowers:
            res.checked += 1
            count = by_alive[f.alive]
            if count > top:
                res.fail(g, f"flower {sorted(f.alive)} has {count} petals > {top}")
            if f.peel_history:
                parent = f.alive | f.peel_history[-1]
                if by_alive[parent] < count:
                    res.fail(g, f"peel {sorted(f.peel_history[-1])} raised the petal count")
    return res


# --------------------------------------------------------------------------
# rank

def _rank_corpus(max_n, limit, seed):
    """Unlabelled connected graphs up to max_n; if there are more than
    ``limit``, all smaller orders are kept and the largest order is sampled."""
    graphs = list(connected_corpus(max_n))
    if len(graphs) <= limit:
        return graphs
    small = [g for g in graphs if g.n < max_n]
    big = [g for g in graphs if g.n == max_n]
    rng = random.Random(seed)
    keep = sorted(rng.sample(range(len(big)), limit - len(small)))
    return small + [big[i] for i in keep]


@_timed
def suite_rank(max_n=8, limit=10_000, random_count=500, random_max_n=12, seed=0):
    """rank_flower_exact equals rank_bruteforce; witnesses are independent."""
    res = SuiteResult("rank")
    graphs = itertools.chain(_rank_corpus(max_n, limit, seed),
                             random_graphs(random_count, 2, random_max_n, seed))
    for g in graphs:
        res.checked += 1
        b = rank_bruteforce(g)
        f = rank_flower_exact(g)
        if b.value != f.value:
            res.fail(g, f"brute={b.value} flower={f.value}")
        for r in (b, f):
            if len(r.witness) != r.value or not is_independent_def(g, r.witness):
                res.fail(g, f"{r.method} witness {sorted(r.witness)} is not independent")
    return res


def _against(res, g, result, expected, label):
    res.checked += 1
    if result.value != expected:
        res.fail(g, f"{label}={result.value} expected={expected}")
    elif g.n <= 18 and not is_independent_def(g, result.witness):
        res.fail(g, f"{label} witness {sorted(result.witness)} is not independent")


@_timed
def suite_trees(count=200, max_n=18, big_n=10_000, seed=0):
    res = SuiteResult("trees")
    for g in _class_stream("tree", count, 2, max_n, seed):
        leaves = sum(1 for v in range(g.n) if g.degree(v) == 1)
        r = rank_tree(g)
        if r.value != leaves:
            res.fail(g, f"tree={r.value} leaves={leaves}")
        _against(res, g, r, rank_bruteforce(g).value, "tree")
    big = next(generate("tree", big_n, seed=seed))
    start = time.perf_counter()
    r = rank_tree(big)
    elapsed = time.perf_counter() - start
    res.checked += 1
    leaves = sum(1 for v in range(big.n) if big.degree(v) == 1)
    if r.value != leaves or elapsed >= 1.0:
        res.fail(big, f"n={big_n}: value={r.value} leaves={leaves} time={elapsed:.3f}s")
    return res


@_timed
def suite_gamma1(count=300, max_n=12, seed=0, solver=None):
    """rank_gamma1 against brute force on bipartite, cactus and triangle-free graphs."""
    solver = solver or rank_gamma1
    res = SuiteResult("gamma1")
    fixed = [Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)]),
             Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5)])]
    per = count // 3
    streams = [_class_stream(kind, per if i < 2 else count - 2 * per, 3, max_n, seed + i)
               for i, kind in enumerate(("bipartite", "cactus", "triangle-free"))]
    for g in itertools.chain(fixed, *streams):
        if not is_gamma1(g):
            res.fail(g, "generated graph is not in Gamma1")
            continue
        _against(res, g, solver(g), rank_bruteforce(g).value, "gamma1")
    return res


C5_PENDANT = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5)])


@_timed
def suite_gamma2(count=300, max_n=14, seed=0, solver=None):
    """rank_gamma2 against rank_flower_exact; C5 plus a pendant must give 3."""
    solver = solver or rank_gamma2
    res = SuiteResult("gamma2")
    res.checked += 1
    got = solver(C5_PENDANT).value
    if got != 3:
        res.fail(C5_PENDANT, f"gamma2={got} expected=3")
    for g in _class_stream("gamma2", count, 2, max_n, seed):
        _against(res, g, solver(g), rank_flower_exact(g).value, "gamma2")
    return res


@_timed
def suite_metaalg(count=50, max_n=1000, seed=0):
    """Call counts 2k-2 / k and invariance under shuffled leaf order."""
    res = SuiteResult("meta-algorithm")
    rng = random.Random(seed)
    for t in _class_stream("tree", count, 1, max_n, seed):
        calls = [0, 0]

        def edge_fn(w, u, inc):
            calls[0] += 1
            return 1 + sum(inc.values())

        def node_fn(w, inc):
            calls[1] += 1
            return (1 + sum(inc.values()), len(inc))

        base = tree_dp_run(GoodTriple(t, edge_fn, node_fn))
        res.checked += 1
        if calls != [2 * t.n - 2, t.n]:
            res.fail(t, f"calls={calls} expected={[2 * t.n - 2, t.n]}")
        if any(v != (t.n, t.degree(w)) for w, v in base.node_values.items()):
            res.fail(t, "node values differ from (tree size, degree)")
        calls[:] = [0, 0]
        shuffled = tree_dp_run(GoodTriple(t, edge_fn, node_fn), rng=rng)
        if shuffled.edge_values != base.edge_values or shuffled.node_values != base.node_values:
            res.fail(t, "tables depend on the leaf order")
        if calls != [2 * t.n - 2, t.n]:
            res.fail(t, f"shuffled calls={calls}")
    return res


@_timed
def suite_line(max_m=8):
    """rank_line against brute force on L(H) for every connected H with <= max_m edges."""
    res = SuiteResult("line")
    for h in connected_up_to_edges(max_m):
        g, _ = line_graph(h)
        root = line_graph_root(g)
        res.checked += 1
        if root is None:
            res.fail(g, "line graph rejected")
            continue
        if relabel_line_graph(root[0], root[1]) != g:
            res.fail(g, "root does not reproduce the input")
        _against(res, g, rank_line(g), rank_bruteforce(g).value, "line")
    return res


@_timed
def suite_split(count=300, max_n=12, seed=0):
    res = SuiteResult("split")
    for g in _class_stream("split", count, 2, max_n, seed):
        _against(res, g, rank_split(g), rank_bruteforce(g).value, "split")
        bip = split_to_bipartite(g).graph
        res.checked += 1
        a, b = len(bipartite_max_independent_set(bip)), alpha_bruteforce(bip)
        if a != b:
            res.fail(bip, f"matching alpha={a} subset alpha={b}")
    return res


@_timed
def suite_npc(ns=(2, 3), k=2):
    """Order, threshold, diameter, chordality and the rank biconditional."""
    res = SuiteResult("npc")
    for n in ns:
        for src in all_connected(n):
            inst = npc_gadget(src, k)
            g = inst.graph
            res.checked += 1
            if k == 2 and g.n != 4 * n * n + n:
                res.fail(src, f"order {g.n} != {4 * n * n + n}")
            if diameter(g) != 3:
                res.fail(src, f"diameter {diameter(g)}")
            if not is_chordal(g):
                res.fail(src, "gadget is not chordal")
            r = rank_flower_exact(g).value
            big_rank = r >= inst.threshold
            big_alpha = alpha(src) >= half_threshold(n)
            if big_rank != big_alpha:
                res.fail(src, f"rank={r} threshold={inst.threshold} alpha={alpha(src)} "
                              f"half={half_threshold(n)}")
    return res


@_timed
def suite_gamma3(max_n=5):
    res = SuiteResult("gamma3")
    for g in connected_corpus(max_n):
        if g.n < 2 or any(g.degree(v) == g.n - 1 for v in range(g.n)):
            continue
        inst = gamma3_gadget(g)
        res.checked += 1
        count = len(atoms(inst.graph))
        if count != 2:
            res.fail(g, f"gadget has {count} atoms")
        r = rank_flower_exact(inst.graph).value
        if r != inst.provenance["expected_rank"]:
            res.fail(g, f"rank={r} expected={inst.provenance['expected_rank']}")
    return res


SUITES = {
    "hull": suite_hull,
    "convexity": suite_convexity,
    "characterization": suite_characterization,
    "atoms": suite_atoms,
    "petals": suite_petal_monotonicity,
    "rank": suite_rank,
    "trees": suite_trees,
    "gamma1": suite_gamma1,
    "gamma2": suite_gamma2,
    "meta": suite_metaalg,
    "line": suite_line,
    "split": suite_split,
    "npc": suite_npc,
    "gamma3": suite_gamma3,
}


def quick_params(max_n: int, seed: int = 0, npc_n=None):
    """Reduced sizes for ``mrank selftest`` driven by a single --max-n."""
    small = max(1, min(max_n, 6))
    return {
        "hull": dict(max_n=min(small, 5), random_count=50, random_max_n=max_n, seed=seed),
        "convexity": dict(max_n=min(small, 5), random_count=50, random_max_n=max_n, seed=seed),
        "characterization": dict(max_n=min(small, 5), samples=200, sample_max_n=max_n, seed=seed),
        "atoms": dict(max_n=min(max_n, 6), random_count=30, random_max_n=max(max_n, 2), seed=seed),
        "petals": dict(max_n=min(max_n, 6), limit=10_000, seed=seed),
        "rank": dict(max_n=min(max_n, 7), random_count=50, random_max_n=max(max_n, 2), seed=seed),
        "trees": dict(count=30, max_n=max(max_n, 2), big_n=10_000, seed=seed),
        "gamma1": dict(count=30, max_n=max(max_n, 3), seed=seed),
        "gamma2": dict(count=30, max_n=max(max_n, 2), seed=seed),
        "meta": dict(count=10, max_n=200, seed=seed),
        "line": dict(max_m=min(max_n, 8)),
        "split": dict(count=30, max_n=max(max_n, 2), seed=seed),
        "npc": dict(ns=tuple(npc_n) if npc_n else (2,)),
        "gamma3": dict(max_n=min(max_n, 5)),
    }
