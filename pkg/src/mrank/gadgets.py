"""Reduction gadgets used as instance generators.

* ``split_to_bipartite``: drop the clique-side edges of a split graph.
* ``npc_gadget``: the k-starlike construction from Half Independent Set.
* ``gamma3_gadget``: two prime pieces glued at one vertex, built from g.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ._bits import popcount, to_mask
from .errors import CapExceededError, MrankError, WrongClassError
from .graph import Graph, clique_number, is_clique_mask, require_connected
from .structure import split_partition

ALPHA_CAP = 20


@dataclass(frozen=True)
class GadgetInstance:
    graph: Graph
    threshold: int | None
    provenance: dict = field(default_factory=dict)
    vertex_legend: dict = field(default_factory=dict)   # vertex -> role label


def half_threshold(n: int) -> int:
    """ceil((n + 1) / 2)"""
    return (n + 2) // 2


def complement(g: Graph) -> Graph:
    return Graph(g.n, [(u, v) for u, v in itertools.combinations(range(g.n), 2)
                       if not g.has_edge(u, v)])


def alpha(g: Graph, cap: int = ALPHA_CAP) -> int:
    """Independence number (maximum clique of the complement)."""
    if g.n > cap:
        raise CapExceededError(f"alpha is capped at n = {cap}")
    if g.n == 0:
        return 0
    return clique_number(complement(g))


def alpha_bruteforce(g: Graph) -> int:
    """Subset enumeration; only for small graphs."""
    best = 0
    for s in range(1 << g.n):
        size = popcount(s)
        if size > best and all(not (s >> u & 1 and s >> v & 1) for u, v in g.edges):
            best = size
    return best


def split_to_bipartite(g: Graph) -> GadgetInstance:
    part = split_partition(g)
    if part is None:
        raise WrongClassError("graph is not a split graph")
    c = part.clique_side
    out = Graph(g.n, [(u, v) for u, v in g.edges if not (u in c and v in c)])
    legend = {v: ("C'" if v in c else "I'") for v in range(g.n)}
    prov = {"construction": "split-reduction", "source_n": g.n,
            "source_edges": [list(e) for e in g.edges],
            "clique_side": sorted(c)}
    return GadgetInstance(out, None, prov, legend)


def npc_threshold(n: int, k: int = 2) -> int:
    h = half_threshold(n)
    if k == 2:
        return n + (4 * n - 1) * h
    return n + k * n * h


def npc_gadget(g: Graph, k: int = 2) -> GadgetInstance:
    """k-starlike instance whose rank reaches the threshold iff g has an
    independent set of size ceil((n+1)/2).

    Per source vertex i: u-vertices u_i^1..u_i^{kn+1} (all u's form one
    clique) and kn w-vertices split into n twin groups of size k, each group
    a clique.  The last group is joined to u_i^{kn+1}; for every source edge
    ij, u_i^p is joined to w_j^q and u_j^p to w_i^q for p, q <= kn.
    """
    require_connected(g)
    n = g.n
    if n < 2:
        raise MrankError("npc_gadget needs a source graph with at least 2 vertices")
    if k < 2:
        raise MrankError("k must be at least 2")
    span = k * n
    legend = {}
    u = {}
    w = {}
    nxt = 0
    for i in range(n):
        for p in range(1, span + 2):
            u[i, p] = nxt
            legend[nxt] = f"u_{i}^{p}"
            nxt += 1
    for i in range(n):
        for q in range(1, span + 1):
            w[i, q] = nxt
            legend[nxt] = f"w_{i}^{q}"
            nxt += 1
    edges = set()
    for a, b in itertools.combinations(sorted(u.values()), 2):
        edges.add((a, b))
    for i in range(n):
        for grp in range(n):
            members = [w[i, grp * k + t] for t in range(1, k + 1)]
            edges.update(itertools.combinations(members, 2))
        for t in range(1, k + 1):
            edges.add((u[i, span + 1], w[i, span - k + t]))
    for i, j in g.edges:
        for p in range(1, span + 1):
            for q in range(1, span + 1):
                edges.add((u[i, p], w[j, q]))
                edges.add((u[j, p], w[i, q]))
    out = Graph(nxt, [(min(a, b), max(a, b)) for a, b in edges])
    prov = {"construction": "npc-gadget", "k": k, "source_n": n,
            "source_edges": [list(e) for e in g.edges],
            "half_threshold": half_threshold(n),
            # n + (2kn - 1)h: the k = 2 count with kn in place of 2n.  The
            # k > 2 threshold n + kn*h is already reached by the u-clique alone.
            "consistent_threshold": n + (2 * span - 1) * half_threshold(n)}
    return GadgetInstance(out, npc_threshold(n, k), prov, legend)


def starlike_parts(inst: GadgetInstance):
    """(V0, groups) read off an npc_gadget legend."""
    v0 = [v for v, lab in inst.vertex_legend.items() if lab.startswith("u_")]
    k = inst.provenance["k"]
    groups = {}
    for v, lab in inst.vertex_legend.items():
        if lab.startswith("w_"):
            i, q = lab[2:].split("^")
            groups.setdefault((int(i), (int(q) - 1) // k), []).append(v)
    return sorted(v0), [sorted(x) for _, x in sorted(groups.items())]


def is_starlike_partition(g: Graph, v0, groups, k: int) -> bool:
    """Check the k-starlike conditions for an explicit partition."""
    m0 = to_mask(v0)
    if not is_clique_mask(g, m0):
        return False
    if any(m0 & ~g.masks[x] == m0 & ~(1 << x) for x in range(g.n) if not m0 >> x & 1):
        return False          # V0 must be a maximal clique
    covered = m0
    for grp in groups:
        gm = to_mask(grp)
        if len(grp) > k or not is_clique_mask(g, gm) or covered & gm:
            return False
        covered |= gm
        outside = {(g.masks[x] | 1 << x) & ~gm for x in grp}
        if len(outside) != 1 or next(iter(outside)) & ~m0:
            return False
    return covered == g.full


def gamma3_gadget(g: Graph) -> GadgetInstance:
    """Two copies of g, each with a matched clique, joined through a hub w."""
    require_connected(g)
    n = g.n
    if n < 2:
        raise MrankError("gamma3_gadget needs at least 2 vertices")
    if any(len(g.adj[v]) == n - 1 for v in range(n)):
        raise WrongClassError("source graph has a universal vertex")
    # V1 = 0..n-1, V2 = n..2n-1, V3 = 2n..3n-1, V4 = 3n..4n-1, hub = 4n
    hub = 4 * n
    edges = []
    for base in (0, 2 * n):
        edges += [(base + a, base + b) for a, b in itertools.combinations(range(n), 2)]
        copy = base + n
        edges += [(copy + a, copy + b) for a, b in g.edges]
        edges += [(base + v, copy + v) for v in range(n)]
        edges += [(copy + v, hub) for v in range(n)]
    legend = {}
    for part, base in enumerate((0, n, 2 * n, 3 * n), start=1):
        for v in range(n):
            legend[base + v] = f"V{part}:{v}"
    legend[hub] = "w"
    prov = {"construction": "gamma3", "source_n": n,
            "source_edges": [list(e) for e in g.edges],
            "expected_rank": max(n, 2 * clique_number(g))}
    return GadgetInstance(Graph(4 * n + 1, edges), None, prov, legend)
