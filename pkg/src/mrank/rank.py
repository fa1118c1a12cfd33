"""Monophonic rank solvers.

Every solver returns a ``RankResult`` whose witness is an m-convexly
independent set of size ``value``.  ``rank_auto`` tries the class solvers in
the fixed order tree, split, line, gamma1, gamma2, flower, brute.
"""
from __future__ import annotations

from dataclasses import dataclass

from ._bits import bits, popcount, to_mask, to_set
from .convexity import hull_mask
from .decomposition import (atoms, enumerate_flowers, flower_of, is_gamma1, is_gamma2,
                            peel, stamen_for, stamen_max, FLOWER_CAP)
from .errors import CapExceededError, MrankError, WrongClassError
from .graph import (Graph, clique_number, is_clique_mask, is_tree, max_clique_mask,
                    require_connected)
from .structure import (bipartite_max_independent_set, blocks, is_bipartite, is_cactus, line_graph_root,
                        split_partition)
from .treedp import GoodTriple, tree_dp_run

BRUTE_CAP = 18
METHODS = ("brute", "flower", "tree", "gamma1", "gamma2", "line", "split")


@dataclass(frozen=True)
class RankResult:
    value: int
    witness: frozenset
    method: str
    flower_used: frozenset | None = None


# --------------------------------------------------------------------------
# exact solvers

def rank_bruteforce(g: Graph, cap: int = BRUTE_CAP) -> RankResult:
    """Branch and bound over the (hereditary) family of independent sets."""
    require_connected(g)
    if g.n > cap:
        raise CapExceededError(f"rank_bruteforce is capped at n = {cap}")
    memo = {}

    def h(mask):
        out = memo.get(mask)
        if out is None:
            out = memo[mask] = hull_mask(g, mask)
        return out

    def extends(s, c):
        if h(s) >> c & 1:
            return False
        for v in bits(s):
            if h(s & ~(1 << v) | 1 << c) >> v & 1:
                return False
        return True

    best = max_clique_mask(g, g.full)
    best_size = popcount(best)

    def search(s, size, cand):
        nonlocal best, best_size
        if size > best_size:
            best, best_size = s, size
        while cand and size + popcount(cand) > best_size:
            c = cand & -cand
            cand ^= c
            t = s | c
            nxt = 0
            for x in bits(cand):
                if extends(t, x):
                    nxt |= 1 << x
            search(t, size + 1, nxt)

    search(0, 0, g.full)
    return RankResult(best_size, to_set(best), "brute")


def _flower_value(f):
    total = 0
    witness = set()
    for i in f.petals():
        st = stamen_max(f, i)
        total += st.size
        witness |= st.stamen
    return total, witness


def rank_flower_exact(g: Graph, cap: int = FLOWER_CAP, prune: bool = True) -> RankResult:
    """Maximum over all flowers of the summed maximum stamen sizes.

    With ``prune`` the search skips the flowers below f when no flower
    reachable from f can beat the best value so far.  Peeling keeps the
    remaining atoms as they are and never raises the petal count, so a
    reachable flower with several atoms scores at most the sum of the
    ``petals(f)`` largest per-atom stamen bounds.  A single-atom one
    scores at most its clique number, or 2.
    """
    if not prune:
        best = None
        for f in enumerate_flowers(g, cap):
            total, witness = _flower_value(f)
            if best is None or total > best.value:
                best = RankResult(total, frozenset(witness), "flower", f.alive)
        return best

    atom_bound = {}

    def bounds(a):
        if a.mask not in atom_bound:
            w = popcount(max_clique_mask(g, a.mask))
            size = len(a.vertices)
            alone = max(w, min(2, size))
            atom_bound[a.mask] = (alone, max(1, min(size - 1, alone)))
        return atom_bound[a.mask]

    def upper(f):
        bs = [bounds(a) for a in f.decomposition.atoms]
        alone = max(b[0] for b in bs)
        shared = sorted((b[1] for b in bs), reverse=True)[:len(f.petals())]
        return max(alone, sum(shared))

    root = flower_of(g)
    seen = {root.alive}
    stack = [root]
    best = None
    while stack:
        f = stack.pop()
        total, witness = _flower_value(f)
        if best is None or total > best.value:
            best = RankResult(total, frozenset(witness), "flower", f.alive)
        if upper(f) <= best.value:
            continue
        for i in reversed(f.petals()):
            inner = f.decomposition.atoms[i].inner
            if inner == f.alive or f.alive - inner in seen:
                continue
            if len(seen) >= cap:
                raise CapExceededError(f"more than {cap} flowers; raise the flower cap")
            seen.add(f.alive - inner)
            stack.append(peel(f, i))
    return best


# --------------------------------------------------------------------------
# trees, gamma1, split

def rank_tree(g: Graph) -> RankResult:
    if not is_tree(g):
        raise WrongClassError("rank_tree needs a tree")
    if g.n == 1:
        return RankResult(1, frozenset({0}), "tree")
    leaves = frozenset(v for v in range(g.n) if len(g.adj[v]) == 1)
    return RankResult(len(leaves), leaves, "tree")


def _stamen_total(f):
    witness = set()
    for i in f.petals():
        witness |= stamen_max(f, i).stamen
    return witness


def rank_gamma1(g: Graph, strategy: str = "search", cap: int = FLOWER_CAP) -> RankResult:
    """Best flower among those keeping the petal count of g.

    ``strategy="search"`` visits every flower reachable by peels that keep
    the petal count (the count never rises, so this reaches all of them) and
    returns the best stamen total.  ``strategy="greedy"`` peels the first
    Type-1 petal, by atom index, that keeps the count and stops when none is
    left; the result then depends on the scan order and can fall short.
    """
    if not is_gamma1(g):
        raise WrongClassError("graph is not in Gamma1")
    if strategy not in ("search", "greedy"):
        raise MrankError(f"unknown strategy {strategy!r}")
    root = flower_of(g)
    target = len(root.petals())
    if strategy == "greedy":
        f = root
        while True:
            petals = f.petals()
            for i in petals:
                if f.decomposition.atoms[i].inner == f.alive or stamen_max(f, i).size != 1:
                    continue
                nxt = peel(f, i)
                if len(nxt.petals()) == target:
                    f = nxt
                    break
            else:
                break
        witness = _stamen_total(f)
        return RankResult(len(witness), frozenset(witness), "gamma1", f.alive)

    best = None
    seen = {root.alive}
    stack = [root]
    while stack:
        f = stack.pop()
        witness = _stamen_total(f)
        if best is None or len(witness) > best.value:
            best = RankResult(len(witness), frozenset(witness), "gamma1", f.alive)
        for i in f.petals():
            inner = f.decomposition.atoms[i].inner
            if inner == f.alive or f.alive - inner in seen:
                continue
            nxt = peel(f, i)
            if len(nxt.petals()) != target:
                continue
            if len(seen) >= cap:
                raise CapExceededError(f"more than {cap} flowers; raise the flower cap")
            seen.add(nxt.alive)
            stack.append(nxt)
    return best


def rank_split(g: Graph) -> RankResult:
    """Drop the clique-side edges and solve independent set on the bipartite rest."""
    part = split_partition(g)
    if part is None:
        raise WrongClassError("graph is not a split graph")
    c = part.clique_side
    bip = Graph(g.n, [(u, v) for u, v in g.edges if not (u in c and v in c)])
    mis = bipartite_max_independent_set(bip)
    return RankResult(len(mis), frozenset(mis), "split")


# --------------------------------------------------------------------------
# gamma2: subtree dynamic programme over the atom tree

def _gamma2_setup(g: Graph):
    d = atoms(g)
    masks = [to_mask(a.vertices) for a in d.atoms]
    tree = d.intersection_graph
    inter = {(w, v): masks[w] & masks[v] for w in range(tree.n) for v in tree.adj[w]}
    return masks, tree, inter


def rank_gamma2(g: Graph) -> RankResult:
    """Best subtree of the atom tree, each kept atom scored as a petal whose
    border is its intersection with the kept neighbours."""
    if not is_gamma2(g):
        raise WrongClassError("graph is not in Gamma2")
    masks, tree, inter = _gamma2_setup(g)
    stamen_cache = {}

    def score(w, border):
        key = (w, border)
        if key not in stamen_cache:
            inner = masks[w] & ~border
            if inner and is_clique_mask(g, border):
                stamen_cache[key] = stamen_for(g, inner, border)
            else:
                stamen_cache[key] = None
        st = stamen_cache[key]
        return (0, None) if st is None else (st.size, st)

    def best_choice(w, forced, incoming):
        """Max over R of score(w, R + forced) + sum of messages from R."""
        others = sorted(incoming)
        base = inter[(w, forced)] if forced is not None else 0
        everything = base
        for v in others:
            everything |= inter[(w, v)]
        best = (sum(incoming[v][0] for v in others), tuple(others))
        # kept-neighbour sets whose border is a clique are closed under subsets
        stack = [((), base, 0, 0)]
        while stack:
            chosen, border, start, msgsum = stack.pop()
            value = score(w, border)[0] + msgsum
            if value > best[0]:
                best = (value, chosen)
            for j in range(start, len(others)):
                v = others[j]
                nb = border | inter[(w, v)]
                if is_clique_mask(g, nb):
                    stack.append((chosen + (v,), nb, j + 1, msgsum + incoming[v][0]))
        return best

    tables = tree_dp_run(GoodTriple(tree,
                                    lambda w, u, inc: best_choice(w, u, inc),
                                    lambda w, inc: best_choice(w, None, inc)))
    root = max(range(tree.n), key=lambda w: (tables.node_values[w][0], -w))
    witness = set()

    def collect(w, parent, chosen):
        border = inter[(w, parent)] if parent is not None else 0
        for v in chosen:
            border |= inter[(w, v)]
        st = score(w, border)[1]
        if st is not None:
            witness.update(st.stamen)
        for v in chosen:
            collect(v, w, tables.edge_values[(v, w)][1])

    collect(root, None, tables.node_values[root][1])
    value = tables.node_values[root][0]
    assert value == len(witness)
    return RankResult(value, frozenset(witness), "gamma2")


def gamma2_recurrence_values(g: Graph) -> dict:
    """The simpler two-case recurrences for the atom tree, kept for comparison.

    f'(w,u) = max(s(M_w with border M_w & M_u), sum of f'(v,w), v != u) and
    f(w) = max(omega(M_w), sum of f'(v,w)).  Returns the best node value and
    the best value once the per-edge sums f'(w,u) + f'(u,w) are included.
    These recurrences undercount on some graphs; rank_gamma2 does not use them.
    """
    if not is_gamma2(g):
        raise WrongClassError("graph is not in Gamma2")
    masks, tree, inter = _gamma2_setup(g)

    def edge_fn(w, u, inc):
        b = inter[(w, u)]
        own = stamen_for(g, masks[w] & ~b, b).size
        return max(own, sum(inc.values()))

    def node_fn(w, inc):
        return max(popcount(max_clique_mask(g, masks[w])), sum(inc.values()))

    tables = tree_dp_run(GoodTriple(tree, edge_fn, node_fn))
    node_max = max(tables.node_values.values())
    edge_max = max((tables.edge_values[(w, u)] + tables.edge_values[(u, w)]
                    for w, u in tree.edges), default=0)
    return {"node_max": node_max, "with_edges": max(node_max, edge_max),
            "tables": tables}


# --------------------------------------------------------------------------
# line graphs

def _line_tables(h: Graph):
    """Messages on the block-cut tree of the root graph h."""
    bd = blocks(h)
    blist = bd.blocks
    cuts = sorted(bd.cut_vertices)
    nb = len(blist)
    cut_node = {c: nb + i for i, c in enumerate(cuts)}
    bc_edges = [(i, cut_node[c]) for i, b in enumerate(blist) for c in sorted(b) if c in cut_node]
    bc = Graph(nb + len(cuts), bc_edges)
    bmask = [to_mask(b) for b in blist]
    leaf = [1 if sum(1 for c in b if c in cut_node) == 1 else 0 for b in blist]

    def deg_in(i, c):
        return popcount(h.masks[c] & bmask[i])

    def edge_fn(w, u, inc):
        if w < nb:
            return leaf[w] + sum(inc.values())
        c = cuts[w - nb]
        return sum(max(val, deg_in(b, c)) for b, val in inc.items())

    def node_fn(w, inc):
        if w < nb:
            return leaf[w] + sum(inc.values())
        return 0

    return bd, bc, cuts, nb, leaf, deg_in, tree_dp_run(GoodTriple(bc, edge_fn, node_fn))


def _has_triangle(h: Graph, bmask: int) -> bool:
    for u, v in h.edges:
        if bmask >> u & 1 and bmask >> v & 1 and h.masks[u] & h.masks[v] & bmask:
            return True
    return False


def line_formula(g: Graph) -> int:
    """max(max degree, leaf blocks) of the root; a lower bound on the rank."""
    root = line_graph_root(g)
    if root is None:
        raise WrongClassError("graph is not a line graph")
    h = root[0]
    return max(h.max_degree(), blocks(h).leaf_block_count)


def rank_line(g: Graph) -> RankResult:
    require_connected(g)
    root = line_graph_root(g)
    if root is None:
        raise WrongClassError("graph is not a line graph")
    h, mapping = root
    vertex_of = {e: v for v, e in mapping.items()}
    bd, bc, cuts, nb, leaf, deg_in, tables = _line_tables(h)
    blist = bd.blocks

    delta = h.max_degree()
    options = [(delta, "star")]
    block_best = max(range(nb), key=lambda i: (tables.node_values[i], -i))
    options.append((tables.node_values[block_best], "core"))
    tri = [i for i, b in enumerate(blist) if len(b) > 2 and _has_triangle(h, to_mask(b))]
    if tri:
        options.append((3, "triangle"))
    value, kind = max(options, key=lambda o: o[0])

    def edges_at(v, within=None):
        return [(min(v, x), max(v, x)) for x in h.adj[v] if within is None or x in within]

    chosen = []
    if kind == "star":
        centre = max(range(h.n), key=lambda v: (h.degree(v), -v))
        chosen = edges_at(centre)
    elif kind == "triangle":
        b = to_mask(blist[tri[0]])
        u, v = next((u, v) for u, v in h.edges
                    if b >> u & 1 and b >> v & 1 and h.masks[u] & h.masks[v] & b)
        x = next(bits(h.masks[u] & h.masks[v] & b))
        chosen = [tuple(sorted(p)) for p in ((u, v), (u, x), (v, x))]
    else:
        def collect(i, via):
            b = blist[i]
            if leaf[i]:
                inner = [e for e in h.edges if e[0] in b and e[1] in b and via not in e]
                chosen.append(inner[0] if inner else next(e for e in h.edges if set(e) <= b))
            for c in sorted(b):
                if c == via or c not in bd.cut_vertices:
                    continue
                cn = nb + cuts.index(c)
                for j in bc.adj[cn]:
                    if j == i:
                        continue
                    if tables.edge_values[(j, cn)] > deg_in(j, c):
                        collect(j, c)
                    else:
                        chosen.extend(edges_at(c, blist[j]))
        collect(block_best, None)
    witness = frozenset(vertex_of[e] for e in chosen)
    assert len(witness) == value
    return RankResult(value, witness, "line")


# --------------------------------------------------------------------------
# dispatcher

def rank_auto(g: Graph, brute_cap: int = BRUTE_CAP, flower_cap: int = FLOWER_CAP) -> RankResult:
    require_connected(g)
    if is_tree(g):
        return rank_tree(g)
    if split_partition(g) is not None:
        return rank_split(g)
    if line_graph_root(g) is not None:
        return rank_line(g)
    if is_gamma1(g) and _gamma1_validated(g):
        return rank_gamma1(g)
    if is_gamma2(g):
        return rank_gamma2(g)
    try:
        return rank_flower_exact(g, flower_cap)
    except CapExceededError:
        pass
    if g.n <= brute_cap:
        return rank_bruteforce(g, brute_cap)
    raise CapExceededError(
        f"no class solver applies and the exact solvers exceed their caps "
        f"(flower cap {flower_cap}, brute cap {brute_cap}); raise the caps to continue")


def _gamma1_validated(g: Graph) -> bool:
    """rank_gamma1 is exact on bipartite, cactus and triangle-free graphs but
    undercounts on some other Gamma1 members (e.g. the diamond), so the
    dispatcher only routes these subclasses to it."""
    return is_bipartite(g) or is_cactus(g) or clique_number(g) <= 2


SOLVERS = {
    "brute": rank_bruteforce,
    "flower": rank_flower_exact,
    "tree": rank_tree,
    "gamma1": rank_gamma1,
    "gamma2": rank_gamma2,
    "line": rank_line,
    "split": rank_split,
    "auto": rank_auto,
}


def rank(g: Graph, method: str = "auto") -> RankResult:
    if method not in SOLVERS:
        raise MrankError(f"unknown method {method!r}")
    return SOLVERS[method](g)
