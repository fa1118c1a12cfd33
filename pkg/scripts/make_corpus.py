"""Regenerate the bundled corpora (networkx is needed only here).

connected_n8.g6: one graph per isomorphism class of connected graphs on 1..8
vertices.  trees_n9.g6: the non-isomorphic trees on 9 vertices, which
together with the first file cover every connected graph with at most 8 edges.
"""
from collections import Counter
from pathlib import Path

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

from mrank.graph import Graph, to_graph6

DATA = Path(__file__).resolve().parent.parent / "src" / "mrank" / "data"
OUT = DATA / "connected_n8.g6"


def main():
    small = [g for g in graph_atlas_g() if g.number_of_nodes() >= 1 and nx.is_connected(g)]
    by_n = {}
    for g in small:
        by_n.setdefault(g.number_of_nodes(), []).append(g)
    buckets = {}
    eight = []
    for g in by_n[7]:
        for subset in range(1, 1 << 7):
            h = g.copy()
            h.add_edges_from((7, v) for v in range(7) if subset >> v & 1)
            key = (h.number_of_edges(), nx.weisfeiler_lehman_graph_hash(h, iterations=3),
                   tuple(sorted(d for _, d in h.degree())))
            bucket = buckets.setdefault(key, [])
            if any(nx.is_isomorphic(h, other) for other in bucket):
                continue
            bucket.append(h)
            eight.append(h)
    by_n[8] = eight
    lines = []
    for n in sorted(by_n):
        for g in by_n[n]:
            lines.append(to_graph6(Graph(n, [tuple(sorted(e)) for e in g.edges()])))
    OUT.write_text("\n".join(lines) + "\n")
    trees = [to_graph6(Graph(9, [tuple(sorted(e)) for e in t.edges()]))
             for t in nx.nonisomorphic_trees(9)]
    (DATA / "trees_n9.g6").write_text("\n".join(trees) + "\n")
    print(Counter(len(by_n[n]) for n in by_n), {n: len(v) for n, v in by_n.items()})


if __name__ == "__main__":
    main()
