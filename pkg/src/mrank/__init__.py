"""Monophonic convexity and monophonic rank of graphs."""
from .errors import (CapExceededError, MrankError, NotBipartiteError, NotConnectedError,
                     ParseError, WrongClassError)
from .graph import (Graph, connected_components, is_clique, load_graph, max_clique,
                    read_graph, save_graph, write_graph)
from .structure import (BlockDecomposition, SplitPartition, bipartite_max_independent_set,
                        blocks, line_graph, line_graph_root, split_partition)
from .generate import generate
from .convexity import HullTrace, hull, interval_bruteforce, is_convex, is_hull_set, is_independent_def
from .decomposition import (Atom, AtomDecomposition, Flower, StamenResult, atoms, atoms_bruteforce,
                            classify_atom, enumerate_flowers, is_gamma1, is_gamma2,
                            is_independent_charac, minimal_flower_containing, peel, stamen_max)
from .treedp import GoodTriple, MessageTables, tree_dp_run
from .rank import (RankResult, rank, rank_auto, rank_bruteforce, rank_flower_exact, rank_gamma1,
                   rank_gamma2, rank_line, rank_split, rank_tree)
from .gadgets import GadgetInstance, alpha, gamma3_gadget, npc_gadget, split_to_bipartite

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "MrankError",
    "NotBipartiteError",
    "NotConnectedError",
    "ParseError",
    "WrongClassError",
    "Graph",
    "connected_components",
    "is_clique",
    "load_graph",
    "max_clique",
    "read_graph",
    "save_graph",
    "write_graph",
    "BlockDecomposition",
    "SplitPartition",
    "bipartite_max_independent_set",
    "blocks",
    "line_graph",
    "line_graph_root",
    "split_partition",
    "generate",
    "HullTrace",
    "hull",
    "interval_bruteforce",
    "is_convex",
    "is_hull_set",
    "is_independent_def",
    "Atom",
    "AtomDecomposition",
    "Flower",
    "StamenResult",
    "atoms",
    "atoms_bruteforce",
    "classify_atom",
    "enumerate_flowers",
    "is_gamma1",
    "is_gamma2",
    "is_independent_charac",
    "minimal_flower_containing",
    "peel",
    "stamen_max",
    "GoodTriple",
    "MessageTables",
    "tree_dp_run",
    "RankResult",
    "rank",
    "rank_auto",
    "rank_bruteforce",
    "rank_flower_exact",
    "rank_gamma1",
    "rank_gamma2",
    "rank_line",
    "rank_split",
    "rank_tree",
    "GadgetInstance",
    "alpha",
    "gamma3_gadget",
    "npc_gadget",
    "split_to_bipartite",
]
