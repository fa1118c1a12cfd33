"""Classical structure routines: blocks, bipartite matching, split
partitions, line graphs and line-graph roots."""
from __future__ import annotations

from dataclasses import dataclass
from collections import deque

from ._bits import bits, to_mask
from .errors import NotBipartiteError, NotConnectedError, WrongClassError
from .graph import Graph, is_clique_mask, is_connected


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple          # frozensets of vertices, sorted by their sorted tuples
    cut_vertices: frozenset
    leaf_block_count: int

    def blocks_at(self, v):
        return [i for i, b in enumerate(self.blocks) if v in b]


def blocks(g: Graph) -> BlockDecomposition:
    """Biconnected components by the low-point method (iterative DFS)."""
    if not is_connected(g):
        raise NotConnectedError("blocks() needs a connected graph")
    if g.n == 1:
        return BlockDecomposition((frozenset([0]),), frozenset(), 1)
    disc = [-1] * g.n
    low = [0] * g.n
    found = []
    cuts = set()
    edge_stack = []
    root = 0
    disc[root] = low[root] = 0
    counter = 1
    root_children = 0
    stack = [(root, -1, iter(g.adj[root]))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for u in it:
            if u == parent:
                continue
            if disc[u] < 0:
                disc[u] = low[u] = counter
                counter += 1
                edge_stack.append((v, u))
                stack.append((u, v, iter(g.adj[u])))
                advanced = True
                break
            if disc[u] < disc[v]:
                low[v] = min(low[v], disc[u])
                edge_stack.append((v, u))
        if advanced:
            continue
        stack.pop()
        if parent < 0:
            continue
        low[parent] = min(low[parent], low[v])
        if low[v] >= disc[parent]:
            if parent == root:
                root_children += 1
            else:
                cuts.add(parent)
            comp = set()
            while True:
                a, b = edge_stack.pop()
                comp.add(a)
                comp.add(b)
                if (a, b) == (parent, v):
                    break
            found.append(frozenset(comp))
    if root_children > 1:
        cuts.add(root)
    found.sort(key=lambda b: tuple(sorted(b)))
    if len(found) == 1:
        leaves = 1
    else:
        leaves = sum(1 for b in found if len(b & cuts) <= 1)
    return BlockDecomposition(tuple(found), frozenset(cuts), leaves)


# --------------------------------------------------------------------------
# bipartite graphs

def two_coloring(g: Graph) -> list[int]:
    """0/1 colouring of every component (smallest vertex gets 0).

    Raises NotBipartiteError carrying an odd cycle when none exists.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    parent[u] = v
                    queue.append(u)
                elif color[u] == color[v]:
                    raise NotBipartiteError(_odd_cycle(parent, v, u))
    return color


def _odd_cycle(parent, a, b):
    path_a = [a]
    while parent[path_a[-1]] >= 0:
        path_a.append(parent[path_a[-1]])
    path_b = [b]
    while parent[path_b[-1]] >= 0:
        path_b.append(parent[path_b[-1]])
    on_a = {v: i for i, v in enumerate(path_a)}
    for j, v in enumerate(path_b):
        if v in on_a:
            return path_a[: on_a[v] + 1] + path_b[:j][::-1]
    raise AssertionError("BFS tree paths must meet")


def maximum_matching(g: Graph, color=None) -> dict:
    """Maximum matching of a bipartite graph by augmenting paths (Kuhn).

    Returns a symmetric mate dictionary.
    """
    if color is None:
        color = two_coloring(g)
    mate = {}

    def augment(v, visited):
        for u in g.adj[v]:
            if u in visited:
                continue
            visited.add(u)
            if u not in mate or augment(mate[u], visited):
                mate[v] = u
                mate[u] = v
                return True
        return False

    for v in range(g.n):
        if color[v] == 0 and v not in mate:
            augment(v, set())
    return mate


def bipartite_max_independent_set(g: Graph) -> frozenset:
    """Maximum independent set as the complement of a König vertex cover."""
    color = two_coloring(g)
    mate = maximum_matching(g, color)
    left = [v for v in range(g.n) if color[v] == 0]
    # alternating reachability from unmatched left vertices
    reached = set(v for v in left if v not in mate)
    queue = deque(reached)
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if u in reached or mate.get(v) == u:
                continue
            reached.add(u)
            w = mate.get(u)
            if w is not None and w not in reached:
                reached.add(w)
                queue.append(w)
    return frozenset(v for v in range(g.n) if (color[v] == 0) == (v in reached))


# --------------------------------------------------------------------------
# split graphs

@dataclass(frozen=True)
class SplitPartition:
    clique_side: frozenset
    independent_side: frozenset


def split_partition(g: Graph) -> SplitPartition | None:
    """Hammer-Simeone degree-sequence test; ``None`` when g is not split.

    The clique side is made maximal by moving in an independent-side vertex
    adjacent to all of it.
    """
    if g.n == 0:
        return SplitPartition(frozenset(), frozenset())
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    deg = [g.degree(v) for v in order]
    m = 0
    for i, d in enumerate(deg, start=1):
        if d >= i - 1:
            m = i
    if sum(deg[:m]) != m * (m - 1) + sum(deg[m:]):
        return None
    clique = to_mask(order[:m])
    rest = g.full & ~clique
    for v in bits(rest):
        if clique & ~g.masks[v] == 0:
            clique |= 1 << v
            rest &= ~(1 << v)
            break
    assert is_clique_mask(g, clique)
    assert all(not (g.masks[v] & rest) for v in bits(rest))
    return SplitPartition(frozenset(bits(clique)), frozenset(bits(rest)))


# --------------------------------------------------------------------------
# line graphs

def line_graph(h: Graph):
    """L(h) with vertex i standing for the i-th edge of ``h.edges``.

    Returns ``(graph, mapping)`` where mapping sends each edge to its vertex.
    """
    if h.m == 0:
        raise WrongClassError("line graph of an edgeless graph is empty")
    mapping = {e: i for i, e in enumerate(h.edges)}
    out = []
    for v in range(h.n):
        incident = [mapping[(min(u, v), max(u, v))] for u in h.adj[v]]
        for i in range(len(incident)):
            for j in range(i + 1, len(incident)):
                a, b = incident[i], incident[j]
                out.append((min(a, b), max(a, b)))
    return Graph(h.m, out), mapping


def line_graph_root(g: Graph):
    """A root ``H`` with ``L(H) = g``, or ``None`` when g is not a line graph.

    Vertices of g are placed in BFS order; each new vertex must become an
    edge meeting exactly the edges of its already-placed neighbours.  Given
    which endpoint of one placed neighbour-edge it shares, the other endpoint
    is new or an endpoint of the remaining neighbour-edges, so there are at
    most four choices per step; dead ends are undone by backtracking.  By
    Whitney's theorem only tiny prefixes are ambiguous, which keeps the
    search polynomial in practice.

    K3 is answered with the star K1,3.  Returns ``(H, mapping)`` with mapping
    from vertices of g to sorted edges of H.
    """
    if not is_connected(g):
        raise NotConnectedError("line_graph_root() needs a connected graph")
    if g.n == 0:
        return None
    if g.n == 3 and g.m == 3:
        return Graph(4, [(0, 1), (0, 2), (0, 3)]), {0: (0, 1), 1: (0, 2), 2: (0, 3)}
    order = []
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        order.append(v)
        for u in g.adj[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)

    edge_of = {}                   # g-vertex -> (a, b) endpoints in H
    incident = {}                  # H-vertex -> set of g-vertices on it
    next_id = [0]

    def candidates(v):
        placed_nbrs = [u for u in g.adj[v] if u in edge_of]
        if not placed_nbrs:
            return [(None, None)]
        first = edge_of[min(placed_nbrs)]
        out = []
        for p in first:
            others = [edge_of[u] for u in placed_nbrs if p not in edge_of[u]]
            if others:
                common = set(others[0])
                for e in others[1:]:
                    common &= set(e)
                common.discard(p)
                out.extend((p, q) for q in sorted(common))
            else:
                out.append((p, None))
        return out

    def fits(v, a, b):
        if a == b:
            return False
        for u in incident.get(a, ()):
            if not g.has_edge(u, v):
                return False
        for u in incident.get(b, ()):
            if not g.has_edge(u, v):
                return False
        if incident.get(a, set()) & incident.get(b, set()):
            return False           # parallel edge
        touched = incident.get(a, set()) | incident.get(b, set())
        return all(u in touched for u in g.adj[v] if u in edge_of)

    def place(i):
        if i == len(order):
            return True
        v = order[i]
        for a, b in candidates(v):
            fresh = []
            if a is None:
                a = next_id[0]
                next_id[0] += 1
                fresh.append(a)
            if b is None:
                b = next_id[0]
                next_id[0] += 1
                fresh.append(b)
            if fits(v, a, b):
                edge_of[v] = (a, b)
                incident.setdefault(a, set()).add(v)
                incident.setdefault(b, set()).add(v)
                if place(i + 1):
                    return True
                del edge_of[v]
                incident[a].discard(v)
                incident[b].discard(v)
            for x in fresh:
                incident.pop(x, None)
            next_id[0] -= len(fresh)
        return False

    import sys
    limit = sys.getrecursionlimit()
    if limit < 2 * g.n + 100:
        sys.setrecursionlimit(2 * g.n + 100)
    try:
        if not place(0):
            return None
    finally:
        sys.setrecursionlimit(limit)
    root = Graph(next_id[0], [edge_of[v] for v in range(g.n)])
    mapping = {v: tuple(sorted(edge_of[v])) for v in range(g.n)}
    return root, mapping


def relabel_line_graph(h: Graph, mapping) -> Graph:
    """Rebuild g from a root and a vertex->edge mapping (explicit relabelling)."""
    verts = sorted(mapping)
    edges = []
    for i, x in enumerate(verts):
        for y in verts[i + 1:]:
            if set(mapping[x]) & set(mapping[y]):
                edges.append((x, y))
    return Graph(len(verts), edges)


# --------------------------------------------------------------------------
# small recognizers

def is_bipartite(g: Graph) -> bool:
    try:
        two_coloring(g)
    except NotBipartiteError:
        return False
    return True


def is_cactus(g: Graph) -> bool:
    """Connected and every block is an edge or a cycle."""
    if not is_connected(g):
        return False
    for b in blocks(g).blocks:
        if len(b) <= 2:
            continue
        inner = sum(1 for u, v in g.edges if u in b and v in b)
        if inner != len(b):
            return False
    return True
