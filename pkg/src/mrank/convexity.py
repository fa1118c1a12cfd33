"""Monophonic (induced-path) interval, hull and convexity tests."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from ._bits import bits, lowest, to_mask, to_set
from .errors import CapExceededError
from .graph import Graph, component_masks, is_clique_mask, neighborhood_mask, require_connected

INTERVAL_CAP = 14


@dataclass(frozen=True)
class HullStep:
    vertex: int
    pair: tuple[int, int]
    component: frozenset


@dataclass
class HullTrace:
    start: frozenset
    additions: list[HullStep] = field(default_factory=list)
    result: frozenset = frozenset()


# --------------------------------------------------------------------------
# brute-force interval

@lru_cache(maxsize=256)
def _pair_table(g: Graph):
    """table[a][b] = union of the vertex sets of all induced a-b paths."""
    n = g.n
    masks = g.masks
    table = [[0] * n for _ in range(n)]

    def extend(start, last, path, blocked):
        # blocked = closed neighbourhoods of every path vertex except ``last``
        row = table[start]
        row[last] |= path
        for y in bits(masks[last] & ~path & ~blocked):
            extend(start, y, path | 1 << y, blocked | masks[last] | 1 << last)

    for a in range(n):
        extend(a, a, 1 << a, 0)
    return table


def interval_mask(g: Graph, s: int) -> int:
    table = _pair_table(g)
    out = s
    members = list(bits(s))
    for i, a in enumerate(members):
        row = table[a]
        for b in members[i + 1:]:
            out |= row[b]
    return out


def interval_bruteforce(g: Graph, s, cap: int = INTERVAL_CAP) -> frozenset:
    """Vertices on induced paths between members of ``s`` (exhaustive search)."""
    if g.n > cap:
        raise CapExceededError(
            f"interval_bruteforce is capped at n = {cap}; use hull() for larger graphs")
    return to_set(interval_mask(g, to_mask(s)))


def interval_closure(g: Graph, s) -> frozenset:
    """Fixpoint of the brute-force interval operator."""
    if g.n > INTERVAL_CAP:
        raise CapExceededError(
            f"interval_bruteforce is capped at n = {INTERVAL_CAP}; use hull() for larger graphs")
    cur = to_mask(s)
    while True:
        nxt = interval_mask(g, cur)
        if nxt == cur:
            return to_set(cur)
        cur = nxt


# --------------------------------------------------------------------------
# hull

def _first_gap(g: Graph, att: int):
    """Lexicographically first non-adjacent pair in ``att`` or None."""
    masks = g.masks
    for u in bits(att):
        rest = att & ~masks[u] & ~((2 << u) - 1)
        if rest:
            return u, lowest(rest)
    return None


def _path_interior(g: Graph, comp: int, u: int, v: int) -> list[int]:
    """Interior of a shortest u-v path through ``comp``.

    BFS from u; neighbours are scanned in increasing id so every vertex keeps
    the smallest-id parent among those at the previous level.
    """
    allowed = comp | 1 << v
    parent = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for y in bits(g.masks[x] & allowed):
            if y not in parent:
                parent[y] = x
                queue.append(y)
    path = []
    x = parent[v]
    while x != u:
        path.append(x)
        x = parent[x]
    path.reverse()
    return path


@lru_cache(maxsize=1 << 16)
def hull_mask(g: Graph, s: int) -> int:
    """Monophonic hull of a vertex mask.  Assumes g connected."""
    if not s:
        return 0
    closed = s
    work = component_masks(g, g.full & ~s)
    while work:
        comp = work.pop()
        att = neighborhood_mask(g, comp) & closed
        gap = _first_gap(g, att)
        if gap is None:
            continue
        inner = to_mask(_path_interior(g, comp, *gap))
        closed |= inner
        rest = comp & ~inner
        if rest:
            work.extend(component_masks(g, rest))
    return closed


def hull(g: Graph, s):
    """Return ``(hull, trace)`` for the vertex set ``s``.

    The traced loop rescans from the first component after every addition,
    components by minimum vertex and witness pairs lexicographically.
    """
    require_connected(g)
    start = to_mask(s)
    if start & ~g.full:
        raise ValueError("vertex set contains ids outside the graph")
    trace = HullTrace(start=to_set(start))
    closed = start
    while closed:
        for comp in component_masks(g, g.full & ~closed):
            gap = _first_gap(g, neighborhood_mask(g, comp) & closed)
            if gap is not None:
                break
        else:
            break
        for x in _path_interior(g, comp, *gap):
            trace.additions.append(HullStep(x, gap, to_set(comp)))
            closed |= 1 << x
    trace.result = to_set(closed)
    return trace.result, trace


def is_convex_mask(g: Graph, c: int) -> bool:
    for comp in component_masks(g, g.full & ~c):
        if not is_clique_mask(g, neighborhood_mask(g, comp) & c):
            return False
    return True


def is_convex(g: Graph, c) -> bool:
    """A set is convex iff every component of G - c attaches to it in a clique."""
    require_connected(g)
    return is_convex_mask(g, to_mask(c))


def is_independent_mask(g: Graph, s: int) -> bool:
    for v in bits(s):
        if hull_mask(g, s & ~(1 << v)) >> v & 1:
            return False
    return True


def is_independent_def(g: Graph, s) -> bool:
    """No member of ``s`` lies in the hull of the others."""
    require_connected(g)
    return is_independent_mask(g, to_mask(s))


def is_hull_set(g: Graph, s) -> bool:
    require_connected(g)
    return hull_mask(g, to_mask(s)) == g.full
