"""Atoms (maximal prime subgraphs), petals, flowers and stamen sets.

Vertex sets in the public types are frozensets of original vertex ids; a
flower keeps the ids of the graph it was peeled from.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import lru_cache

from ._bits import bits, popcount, to_mask, to_set
from .convexity import hull_mask
from .errors import CapExceededError, MrankError
from .graph import (Graph, clique_number, component_masks, is_clique_mask,
                    max_clique_mask, reach_mask, require_connected)

BRUTE_ATOM_CAP = 12
FLOWER_CAP = 5000


@dataclass(frozen=True)
class Atom:
    vertices: frozenset
    border: frozenset
    inner: frozenset
    # bitmask views of the three sets, for the hot loops
    mask: int = field(default=0, compare=False, repr=False)
    border_mask: int = field(default=0, compare=False, repr=False)
    inner_mask: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class AtomDecomposition:
    graph: Graph
    atoms: tuple[Atom, ...]
    membership: tuple[tuple[int, ...], ...]   # vertex -> atom indices
    intersection_graph: Graph
    petal_flags: tuple[bool, ...] = field(default=(), compare=False, repr=False)

    def __len__(self):
        return len(self.atoms)


@dataclass(frozen=True)
class AtomClass:
    is_petal: bool
    is_extreme: bool


@dataclass(frozen=True)
class Flower:
    graph: Graph
    alive: frozenset
    decomposition: AtomDecomposition
    peel_history: tuple[frozenset, ...] = ()

    def petals(self):
        return [i for i in range(len(self.decomposition)) if _is_petal(self.decomposition, i)]


@dataclass(frozen=True)
class StamenResult:
    stamen: frozenset
    stype: int
    size: int


# --------------------------------------------------------------------------
# polynomial atoms: MCS-M+ followed by the atom extraction pass

def _mcs_m_plus(g: Graph, alive: int):
    """Minimal elimination ordering with clique-minimal-separator generators.

    Returns ``(order, madj, generators)`` where ``order`` lists vertices by
    increasing elimination number, ``madj[x]`` is the mask of neighbours of x
    in the filled graph numbered after it, and ``generators`` is the set X.
    """
    masks = g.masks
    weight = {v: 0 for v in bits(alive)}
    unnumbered = alive
    picked = []
    madj = {}
    generators = set()
    last = -1
    while unnumbered:
        x = max(bits(unnumbered), key=lambda v: (weight[v], -v))
        if weight[x] <= last:
            generators.add(x)
        last = weight[x]
        unnumbered &= ~(1 << x)
        # bottleneck search: y is reached if some x-y path through unnumbered
        # vertices has every interior weight below weight[y]
        best = {}
        heap = []
        for y in bits(masks[x] & unnumbered):
            best[y] = -1
            heap.append((-1, y))
        heapq.heapify(heap)
        reached = []
        while heap:
            b, z = heapq.heappop(heap)
            if best.get(z) != b:
                continue
            if b < weight[z]:
                reached.append(z)
            via = max(b, weight[z])
            for y in bits(masks[z] & unnumbered):
                if y not in best or via < best[y]:
                    best[y] = via
                    heapq.heappush(heap, (via, y))
        for y in reached:
            weight[y] += 1
            madj[y] = madj.get(y, 0) | 1 << x
        picked.append(x)
    order = picked[::-1]
    return order, madj, generators


def _atom_masks(g: Graph, alive: int) -> list[int]:
    order, madj, generators = _mcs_m_plus(g, alive)
    rest = alive
    out = []
    for x in order:
        if x not in generators or not rest >> x & 1:
            continue
        sep = madj.get(x, 0)
        if not is_clique_mask(g, sep):
            continue
        comp = reach_mask(g, 1 << x, rest & ~sep)
        out.append(comp | sep)
        rest &= ~comp
    out.append(rest)
    return out


def _brute_atom_masks(g: Graph, alive: int) -> list[int]:
    pieces = set()

    def separator(vs):
        """Some clique whose removal disconnects g[vs], or None."""
        members = list(bits(vs))

        def grow(clique, cand):
            if clique and len(component_masks(g, vs & ~clique)) > 1:
                return clique
            for v in bits(cand):
                found = grow(clique | 1 << v, cand & g.masks[v] & ~((2 << v) - 1))
                if found is not None:
                    return found
            return None

        return grow(0, to_mask(members))

    seen = set()

    def split(vs):
        if vs in seen:
            return
        seen.add(vs)
        sep = separator(vs)
        if sep is None:
            pieces.add(vs)
            return
        for comp in component_masks(g, vs & ~sep):
            split(comp | sep)

    split(alive)
    return [p for p in pieces if not any(p != q and p & q == p for q in pieces)]


def _build(g: Graph, alive: int, masks: list[int]) -> AtomDecomposition:
    masks = sorted(set(masks), key=lambda m: list(bits(m)))
    count = {}
    for m in masks:
        for v in bits(m):
            count[v] = count.get(v, 0) + 1
    shared = to_mask(v for v, c in count.items() if c > 1)
    atoms = tuple(Atom(to_set(m), to_set(m & shared), to_set(m & ~shared), m, m & shared, m & ~shared)
                  for m in masks)
    petal = tuple(bool(a.inner_mask) and is_clique_mask(g, a.border_mask) for a in atoms)
    membership = [[] for _ in range(g.n)]
    for i, m in enumerate(masks):
        for v in bits(m):
            membership[v].append(i)
    edges = [(i, j) for i in range(len(masks)) for j in range(i + 1, len(masks)) if masks[i] & masks[j]]
    return AtomDecomposition(g, atoms, tuple(tuple(x) for x in membership),
                             Graph(len(masks), edges), petal)


@lru_cache(maxsize=4096)
def atoms_of(g: Graph, alive: int) -> AtomDecomposition:
    """Atoms of the subgraph induced by the mask ``alive`` (which must be connected)."""
    return _build(g, alive, _atom_masks(g, alive))


def atoms(g: Graph) -> AtomDecomposition:
    """Maximal prime subgraphs of a connected graph."""
    require_connected(g)
    return atoms_of(g, g.full)


def atoms_bruteforce(g: Graph) -> AtomDecomposition:
    """Oracle: split along every clique separator found by exhaustive search."""
    require_connected(g)
    if g.n > BRUTE_ATOM_CAP:
        raise CapExceededError(f"atoms_bruteforce is capped at n = {BRUTE_ATOM_CAP}")
    return _build(g, g.full, _brute_atom_masks(g, g.full))


def has_clique_separator(g: Graph, vertices) -> bool:
    """Brute check used to validate atoms: does some clique separate g[vertices]?"""
    vs = to_mask(vertices)
    return len(_brute_atom_masks(g, vs)) > 1 or len(component_masks(g, vs)) > 1


# --------------------------------------------------------------------------
# petals and flowers

def _is_petal(d: AtomDecomposition, i: int) -> bool:
    return d.petal_flags[i]


def classify_atom(d: AtomDecomposition, i: int) -> AtomClass:
    if not 0 <= i < len(d.atoms):
        raise IndexError(f"atom index {i} out of range")
    petal = _is_petal(d, i)
    border = d.atoms[i].border
    extreme = petal and any(j != i and border <= d.atoms[j].border for j in range(len(d.atoms)))
    return AtomClass(petal, extreme)


def flower_of(g: Graph) -> Flower:
    """The trivial flower: g itself."""
    require_connected(g)
    return Flower(g, frozenset(range(g.n)), atoms_of(g, g.full))


def peel(f: Flower, i: int) -> Flower:
    d = f.decomposition
    if not 0 <= i < len(d.atoms):
        raise IndexError(f"atom index {i} out of range")
    if not _is_petal(d, i):
        raise MrankError(f"atom {i} is not a petal")
    inner = d.atoms[i].inner
    if inner == f.alive:
        raise MrankError("peeling the only atom would leave an empty graph")
    alive = f.alive - inner
    return Flower(f.graph, alive, atoms_of(f.graph, to_mask(alive)), f.peel_history + (inner,))


def enumerate_flowers(g: Graph, cap: int = FLOWER_CAP) -> list[Flower]:
    """Every flower reachable by peeling, g first, depth-first over petals."""
    root = flower_of(g)
    found = {root.alive: root}
    stack = [root]
    while stack:
        f = stack.pop()
        for i in reversed(f.petals()):
            if f.decomposition.atoms[i].inner == f.alive:
                continue
            alive = f.alive - f.decomposition.atoms[i].inner
            if alive in found:
                continue
            if len(found) >= cap:
                raise CapExceededError(f"more than {cap} flowers; raise the flower cap")
            child = peel(f, i)
            found[alive] = child
            stack.append(child)
    return list(found.values())


def minimal_flower_containing(g: Graph, x) -> Flower:
    """Peel petals whose inner misses ``x`` until none is left.

    Petals are scanned in atom-index order and the scan restarts after
    every peel.
    """
    require_connected(g)
    return _minimal_flower(g, to_mask(x))


@lru_cache(maxsize=8192)
def _minimal_flower(g: Graph, keep: int) -> Flower:
    f = flower_of(g)
    while True:
        d = f.decomposition
        for i in range(len(d.atoms)):
            a = d.atoms[i]
            if d.petal_flags[i] and not a.inner_mask & keep and a.inner != f.alive:
                f = peel(f, i)
                break
        else:
            return f


def _dominators(g: Graph, inner: int, border: int) -> int:
    out = 0
    for v in bits(inner):
        if border & ~g.masks[v] == 0:
            out |= 1 << v
    return out


def stamen_for(g: Graph, inner: int, border: int) -> StamenResult:
    """Largest stamen set of a petal given by its inner and border masks."""
    dom = _dominators(g, inner, border)
    clique = max_clique_mask(g, dom)
    best = StamenResult(to_set(inner & -inner), 1, 1)
    if popcount(dom) >= 2:
        first = dom & -dom
        second = (dom & ~first) & -(dom & ~first)
        best = StamenResult(to_set(first | second), 2, 2)
    if popcount(clique) >= 2 and popcount(clique) >= best.size:
        best = StamenResult(to_set(clique), 3, popcount(clique))
    return best


def stamen_max(f: Flower, i: int) -> StamenResult:
    d = f.decomposition
    if not _is_petal(d, i):
        raise MrankError(f"atom {i} is not a petal")
    a = d.atoms[i]
    return stamen_for(f.graph, a.inner_mask, a.border_mask)


def is_stamen_set(g: Graph, inner: int, border: int, x: int) -> bool:
    """Does ``x`` fit inside some stamen set of the petal (inner, border)?"""
    if x & ~inner:
        return False
    if popcount(x) <= 1:
        return True
    if x & ~_dominators(g, inner, border):
        return False
    return popcount(x) == 2 or is_clique_mask(g, x)


# --------------------------------------------------------------------------
# classes and the characterization test

def is_gamma1(g: Graph) -> bool:
    require_connected(g)
    if clique_number(g) > 3:
        return False
    for a in atoms(g).atoms:
        if len(a.vertices) > 3 and popcount(max_clique_mask(g, to_mask(a.vertices))) == 3:
            return False
    return True


def is_gamma2(g: Graph) -> bool:
    d = atoms(g)
    ok = all(len(m) <= 2 for m in d.membership)
    t = d.intersection_graph
    assert ok == (t.m == t.n - 1), "atom intersection graph should be a tree exactly on Gamma2"
    return ok


def is_independent_charac(g: Graph, s) -> bool:
    """Independence decided on the minimal flower containing the hull of s."""
    require_connected(g)
    sm = to_mask(s)
    f = _minimal_flower(g, hull_mask(g, sm))
    d = f.decomposition
    for i, a in enumerate(d.atoms):
        part = sm & a.mask
        if not part:
            continue
        if not d.petal_flags[i]:
            return False
        if not is_stamen_set(g, a.inner_mask, a.border_mask, part):
            return False
    return True
