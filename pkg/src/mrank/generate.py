"""Deterministic graph streams used as test corpora.

Every random stream owns a private ``random.Random(seed)``.  Class streams
only emit graphs that pass the corresponding recognizer.
"""
from __future__ import annotations

import itertools
import random

from .errors import CapExceededError
from .graph import Graph, clique_number, is_chordal, is_connected
from .structure import is_bipartite, is_cactus, split_partition

MAX_ALL_CONNECTED = 7
MAX_RANDOM = 200
MAX_TREE = 100_000


def all_connected(n: int):
    """Every connected labelled graph on ``0..n-1`` exactly once."""
    if n > MAX_ALL_CONNECTED:
        raise CapExceededError(f"all-connected enumeration capped at n = {MAX_ALL_CONNECTED}")
    if n == 1:
        yield Graph(1)
        return
    pairs = list(itertools.combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if code >> i & 1]
        if len(edges) < n - 1:
            continue
        g = Graph(n, edges)
        if is_connected(g):
            yield g


def random_connected(n: int, p: float, seed):
    """G(n, p) conditioned on connectivity (rejection)."""
    rng = random.Random(seed)
    pairs = list(itertools.combinations(range(n), 2))
    while True:
        g = Graph(n, [e for e in pairs if rng.random() < p])
        if is_connected(g):
            yield g


def random_tree(n: int, seed):
    """Uniform labelled trees via Pruefer sequences."""
    rng = random.Random(seed)
    while True:
        yield _pruefer_tree(n, rng)


def _pruefer_tree(n, rng):
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    import heapq
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, edges)


def random_split(n: int, seed):
    rng = random.Random(seed)
    while True:
        k = rng.randint(1, n)
        verts = list(range(n))
        rng.shuffle(verts)
        clique, indep = verts[:k], verts[k:]
        edges = list(itertools.combinations(clique, 2))
        for v in indep:
            nbrs = [c for c in clique if rng.random() < 0.5] or [rng.choice(clique)]
            edges.extend((v, c) for c in nbrs)
        g = Graph(n, edges)
        if is_connected(g) and split_partition(g) is not None:
            yield g


def random_cactus(n: int, seed):
    """Glue cycles and edges at single vertices."""
    rng = random.Random(seed)
    while True:
        edges = []
        size = 1
        while size < n:
            anchor = rng.randrange(size)
            room = n - size
            length = rng.choice([1, 1, 2, 3, 4, 5])
            if length == 1 or room < 2:
                edges.append((anchor, size))
                size += 1
                continue
            k = min(length, room)
            cyc = [anchor] + list(range(size, size + k))
            edges.extend(zip(cyc, cyc[1:] + cyc[:1]))
            size += k
        g = Graph(n, edges)
        if is_cactus(g):
            yield g


def random_chordal(n: int, seed):
    """Each new vertex is joined to a clique of the current graph."""
    rng = random.Random(seed)
    while True:
        adj = [set() for _ in range(n)]
        edges = []
        for v in range(1, n):
            u = rng.randrange(v)
            clique = [u]
            for w in sorted(adj[u]):
                if all(w in adj[x] for x in clique) and rng.random() < 0.5:
                    clique.append(w)
            for w in clique:
                adj[v].add(w)
                adj[w].add(v)
                edges.append((w, v))
        g = Graph(n, edges)
        if is_chordal(g):
            yield g


def random_bipartite(n: int, p: float, seed):
    rng = random.Random(seed)
    while True:
        side = [rng.random() < 0.5 for _ in range(n)]
        edges = [(u, v) for u, v in itertools.combinations(range(n), 2)
                 if side[u] != side[v] and rng.random() < p]
        g = Graph(n, edges)
        if is_connected(g) and is_bipartite(g):
            yield g


def random_triangle_free(n: int, p: float, seed):
    rng = random.Random(seed)
    while True:
        adj = [set() for _ in range(n)]
        edges = []
        pairs = list(itertools.combinations(range(n), 2))
        rng.shuffle(pairs)
        for u, v in pairs:
            if rng.random() < p and not (adj[u] & adj[v]):
                adj[u].add(v)
                adj[v].add(u)
                edges.append((u, v))
        g = Graph(n, edges)
        if is_connected(g) and (g.n < 3 or clique_number(g) <= 2):
            yield g


def random_gamma2(n: int, seed):
    """Prime pieces (cycles, cliques, small dense graphs) glued along cliques,
    filtered by the Gamma2 recognizer."""
    from .decomposition import is_gamma2
    rng = random.Random(seed)
    while True:
        g = _glued_pieces(n, rng)
        if is_gamma2(g):
            yield g


def _glued_pieces(n, rng):
    adj = [set() for _ in range(n)]
    edges = set()
    uses = [0] * n

    def add(u, v):
        if u != v and v not in adj[u]:
            adj[u].add(v)
            adj[v].add(u)
            edges.add((min(u, v), max(u, v)))

    size = 0
    while size < n:
        if size == 0:
            glue = []
        else:
            # a clique of at most two vertices used by a single piece so far
            a = rng.randrange(size)
            glue = [a]
            partners = [b for b in sorted(adj[a]) if uses[b] <= 1]
            if partners and rng.random() < 0.4:
                glue.append(rng.choice(partners))
        new = min(n - size, rng.randint(1, 4))
        piece = glue + list(range(size, size + new))
        size += new
        shape = rng.choice(["cycle", "clique", "dense", "edge"])
        if shape == "edge" or len(piece) <= 2:
            for x, y in zip(piece, piece[1:]):
                add(x, y)
        elif shape == "cycle":
            for x, y in zip(piece, piece[1:] + piece[:1]):
                add(x, y)
        elif shape == "clique":
            for x, y in itertools.combinations(piece, 2):
                add(x, y)
        else:
            for x, y in zip(piece, piece[1:] + piece[:1]):
                add(x, y)
            for x, y in itertools.combinations(piece, 2):
                if rng.random() < 0.4:
                    add(x, y)
        for x in piece:
            uses[x] += 1
    return Graph(n, sorted(edges))


GENERATORS = {
    "all-connected": lambda n, p, seed: all_connected(n),
    "random": lambda n, p, seed: random_connected(n, 0.3 if p is None else p, seed),
    "tree": lambda n, p, seed: random_tree(n, seed),
    "split": lambda n, p, seed: random_split(n, seed),
    "cactus": lambda n, p, seed: random_cactus(n, seed),
    "chordal": lambda n, p, seed: random_chordal(n, seed),
    "bipartite": lambda n, p, seed: random_bipartite(n, 0.3 if p is None else p, seed),
    "triangle-free": lambda n, p, seed: random_triangle_free(n, 0.4 if p is None else p, seed),
    "gamma2": lambda n, p, seed: random_gamma2(n, seed),
}


def generate(kind: str, n: int, p: float | None = None, seed=None):
    """Stream of graphs of the named kind.

    ``all-connected`` is finite; the random kinds are infinite streams, so
    take what you need with ``itertools.islice``.
    """
    if kind not in GENERATORS:
        raise ValueError(f"unknown generator kind {kind!r}; choose from {sorted(GENERATORS)}")
    if n < 1:
        raise ValueError("n must be at least 1")
    if kind != "all-connected":
        if seed is None:
            raise ValueError("random generators need an explicit seed")
        cap = MAX_TREE if kind == "tree" else MAX_RANDOM
        if n > cap:
            raise CapExceededError(f"the {kind} generator is capped at n = {cap}")
    return GENERATORS[kind](n, p, seed)


def connected_corpus(max_n: int = 8):
    """One graph per isomorphism class of connected graphs on 1..max_n vertices,
    read from the bundled graph6 file (max_n <= 8)."""
    from importlib.resources import files
    from .graph import from_graph6
    if max_n > 8:
        raise CapExceededError("the bundled corpus stops at n = 8")
    text = files("mrank").joinpath("data/connected_n8.g6").read_text()
    for line in text.split():
        g = from_graph6(line)
        if g.n <= max_n:
            yield g


def connected_up_to_edges(max_m: int = 8):
    """One graph per isomorphism class of connected graphs with 1..max_m edges."""
    from importlib.resources import files
    from .graph import from_graph6
    if max_m > 8:
        raise CapExceededError("the bundled corpora cover at most 8 edges")
    for g in connected_corpus(8):
        if 1 <= g.m <= max_m:
            yield g
    if max_m == 8:
        for line in files("mrank").joinpath("data/trees_n9.g6").read_text().split():
            yield from_graph6(line)
