"""Two-phase message passing over a tree (leaf peeling, then regrowth).

``edge_fn(w, u, incoming)`` computes the message f'(w, u) from the dict
``incoming = {v: f'(v, w) for v in N(w) - u}``; ``node_fn(w, incoming)``
computes f(w) from the messages of all neighbours.  Each function is called
once per directed edge / node, after all of its inputs exist.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from .errors import WrongClassError
from .graph import Graph, is_tree


@dataclass
class GoodTriple:
    tree: Graph
    edge_fn: Callable[[int, int, dict], Any]
    node_fn: Callable[[int, dict], Any]


@dataclass
class MessageTables:
    edge_values: dict = field(default_factory=dict)   # (w, u) -> f'(w, u)
    node_values: dict = field(default_factory=dict)   # w -> f(w)


def tree_dp_run(t: GoodTriple, rng=None) -> MessageTables:
    """Run the meta-algorithm.  Leaves are peeled smallest id first unless an
    ``rng`` (anything with ``choice``) is given."""
    tree = t.tree
    if not is_tree(tree):
        raise WrongClassError("tree_dp_run needs a tree")
    out = MessageTables()
    k = tree.n
    if k == 1:
        out.node_values[0] = t.node_fn(0, {})
        return out

    def send(w, u):
        incoming = {v: out.edge_values[(v, w)] for v in tree.adj[w] if v != u}
        out.edge_values[(w, u)] = t.edge_fn(w, u, incoming)

    def settle(w):
        out.node_values[w] = t.node_fn(w, {v: out.edge_values[(v, w)] for v in tree.adj[w]})

    degree = [len(a) for a in tree.adj]
    present = set(range(k))
    leaves = {v for v in range(k) if degree[v] == 1}
    removed = []                                       # (leaf, its neighbour)
    while len(present) > 2:
        w = rng.choice(sorted(leaves)) if rng is not None else min(leaves)
        leaves.discard(w)
        u = next(v for v in tree.adj[w] if v in present)
        send(w, u)
        present.discard(w)
        removed.append((w, u))
        degree[u] -= 1
        if degree[u] == 1:
            leaves.add(u)
    a, b = sorted(present)
    send(a, b)
    send(b, a)
    settle(a)
    settle(b)
    for w, u in reversed(removed):
        send(u, w)
        settle(w)
    return out
