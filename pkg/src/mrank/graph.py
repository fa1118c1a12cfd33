"""Simple undirected graphs on vertices ``0..n-1`` and the edge-list format.

Vertex sets are handled internally as int bitmasks (bit ``v`` set iff vertex
``v`` is present); the public functions accept any iterable of ints and return
frozensets or sorted lists.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable

from ._bits import bits, lowest, popcount, to_mask
from .errors import NotConnectedError, ParseError


class Graph:
    """Immutable simple graph with dense integer vertex ids.

    ``Graph(n, edges)`` validates its input: no self-loops, no duplicate
    edges, every endpoint in ``range(n)``.  Equality and hashing are by
    ``(n, edges)`` so graphs can key caches.
    """

    __slots__ = ("n", "edges", "adj", "masks", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen = set()
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.edges = tuple(sorted(seen))
        self.adj = tuple(tuple(sorted(s)) for s in nbrs)
        self.masks = tuple(to_mask(s) for s in nbrs)
        self._hash = hash((n, self.edges))

    @property
    def m(self):
        return len(self.edges)

    @property
    def full(self):
        return (1 << self.n) - 1

    def neighbors(self, v):
        return self.adj[v]

    def degree(self, v):
        return len(self.adj[v])

    def max_degree(self):
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u, v):
        return bool(self.masks[u] >> v & 1)

    def induced(self, vertices):
        """Induced subgraph relabelled to ``0..k-1``; returns ``(graph, old_ids)``."""
        old = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(old), edges), old

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


# --------------------------------------------------------------------------
# edge-list I/O

def load_graph(text: str) -> Graph:
    """Parse the edge-list format.

    ``#`` lines and blank lines are ignored.  The first data line is ``n m``,
    followed by exactly ``m`` lines ``u v`` with ``0 <= u < v < n``.
    """
    header = None
    edges = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"non-integer field in {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("negative count in header", lineno)
            header = (a, b)
            continue
        n, m = header
        if len(edges) == m:
            raise ParseError(f"more than the declared {m} edges", lineno)
        if a == b:
            raise ParseError(f"self-loop at vertex {a}", lineno)
        if not (0 <= a < b):
            raise ParseError(f"edge must satisfy 0 <= u < v, got {a} {b}", lineno)
        if b >= n:
            raise ParseError(f"vertex id {b} >= n = {n}", lineno)
        if (a, b) in seen:
            raise ParseError(f"duplicate edge {a} {b} (first on line {seen[(a, b)]})", lineno)
        seen[(a, b)] = lineno
        edges.append((a, b))
    if header is None:
        raise ParseError("missing 'n m' header")
    if len(edges) != header[1]:
        raise ParseError(f"declared {header[1]} edges, found {len(edges)}")
    return Graph(header[0], edges)


def save_graph(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend("# " + c for c in comment.splitlines())
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path) as fh:
        return load_graph(fh.read())


def write_graph(g: Graph, path, comment=None):
    with open(path, "w") as fh:
        fh.write(save_graph(g, comment))


# --------------------------------------------------------------------------
# graph6 (compact corpus storage)

def to_graph6(g: Graph) -> str:
    n = g.n
    if n > 62:
        raise ValueError("graph6 helper supports n <= 62")
    out = [n + 63]
    acc = nbits = 0
    for v in range(1, n):
        for u in range(v):
            acc = (acc << 1) | (g.masks[u] >> v & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out).decode("ascii")


def from_graph6(s: str) -> Graph:
    data = s.strip().encode("ascii")
    n = data[0] - 63
    if n > 62:
        raise ValueError("graph6 helper supports n <= 62")
    stream = []
    for ch in data[1:]:
        x = ch - 63
        stream.extend((x >> k) & 1 for k in range(5, -1, -1))
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if stream[i]:
                edges.append((u, v))
            i += 1
    return Graph(n, edges)


# --------------------------------------------------------------------------
# connectivity

def component_masks(g: Graph, alive: int) -> list[int]:
    """Components of the subgraph induced by ``alive``, ordered by minimum vertex."""
    masks = g.masks
    out = []
    rest = alive
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= masks[v]
            nxt &= rest & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        rest &= ~comp
    return out


def reach_mask(g: Graph, start: int, alive: int) -> int:
    """Vertices of ``alive`` reachable from the set ``start`` inside ``alive``."""
    masks = g.masks
    seen = start & alive
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= masks[v]
        nxt &= alive & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def neighborhood_mask(g: Graph, s: int) -> int:
    """Open neighbourhood N(s) minus s itself."""
    out = 0
    for v in bits(s):
        out |= g.masks[v]
    return out & ~s


def connected_components(g: Graph, removed: Iterable[int] = ()) -> list[list[int]]:
    alive = g.full & ~to_mask(removed)
    return [list(bits(c)) for c in component_masks(g, alive)]


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or reach_mask(g, 1, g.full) == g.full


def require_connected(g: Graph):
    if not is_connected(g):
        raise NotConnectedError("graph must be connected")


def is_clique_mask(g: Graph, s: int) -> bool:
    masks = g.masks
    for v in bits(s):
        if (s & ~masks[v]) != 1 << v:
            return False
    return True


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    return is_clique_mask(g, to_mask(s))


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def diameter(g: Graph) -> int:
    require_connected(g)
    return max((max(bfs_distances(g, v)) for v in range(g.n)), default=0)


# --------------------------------------------------------------------------
# cliques

def _color_bound(masks, cand: int) -> int:
    """Number of colours in a greedy colouring of ``cand`` (upper bound on omega)."""
    colors = 0
    rest = cand
    while rest:
        colors += 1
        avail = rest
        while avail:
            v = lowest(avail)
            rest &= ~(1 << v)
            avail &= ~(masks[v] | (1 << v))
    return colors


def max_clique_mask(g: Graph, within: int) -> int:
    """Maximum clique inside ``within``; lexicographically smallest among ties.

    Branches include the smallest candidate first, so cliques are met in
    lexicographic order of their sorted vertex lists and only strict
    improvements replace the incumbent.
    """
    if not within:
        return 0
    masks = g.masks
    best = [1 << lowest(within), 1]

    def expand(clique, size, cand):
        if size + _color_bound(masks, cand) <= best[1]:
            return
        while cand:
            if size + popcount(cand) <= best[1]:
                return
            v = lowest(cand)
            bit = 1 << v
            nxt = cand & masks[v]
            if nxt:
                expand(clique | bit, size + 1, nxt)
            elif size + 1 > best[1]:
                best[0], best[1] = clique | bit, size + 1
            cand &= ~bit

    expand(0, 0, within)
    return best[0]


def max_clique(g: Graph, restrict: Iterable[int] | None = None) -> frozenset:
    within = g.full if restrict is None else to_mask(restrict)
    return frozenset(bits(max_clique_mask(g, within)))


def clique_number(g: Graph) -> int:
    return popcount(max_clique_mask(g, g.full))


# --------------------------------------------------------------------------
# chordality

def is_chordal(g: Graph) -> bool:
    """Maximum cardinality search followed by a perfect-elimination check."""
    n = g.n
    weight = [0] * n
    numbered = 0
    order = []
    for _ in range(n):
        v = max((u for u in range(n) if not numbered >> u & 1), key=lambda u: (weight[u], -u))
        order.append(v)
        numbered |= 1 << v
        for u in g.adj[v]:
            if not numbered >> u & 1:
                weight[u] += 1
    # order is the reverse of a perfect elimination ordering iff chordal
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [u for u in g.adj[v] if pos[u] < pos[v]]
        if len(earlier) < 2:
            continue
        parent = max(earlier, key=pos.__getitem__)
        rest = to_mask(earlier) & ~(1 << parent)
        if rest & ~g.masks[parent]:
            return False
    return True
