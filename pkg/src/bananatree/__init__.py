"""Certified constructions for induced subdivisions in graphs of large chromatic number.

Graphs are bitmask-backed (``Graph``); vertex sets are Python ints.  Every
construction returns an outcome object that an independent verifier rechecks.
"""
from .graphs import Graph, Multigraph, RootedTree, read_graph, write_graph
from .invariants import BudgetExhausted, chi, chi_rho, chromatic_number, clique_number
from .subdivision import (
    SubdivisionEmbedding, SubdivisionSpec, find_immersion, find_induced_subdivision,
    verify_immersion, verify_subdivision_embedding,
)
from .extraction import (
    DenseBall, DistantFamily, DistantPair, HypothesisError, ImmersionFound, SubdivisionFound,
    TooSmall, distant_split, getstar, moredistant_split, router_find_knu1, verify_outcome,
)
from .pineapple import (
    PineappleTree, classify_triples, gettree, platonic, prune, summary, treeramsey,
    verify_pineapple_tree,
)
from .banana import (
    Banana, bigshare, extract_banana_cycle, extract_banana_tree, extract_fat_triangle,
    getforest, internalroute, overlap_graph,
)
from .certificates import encode, verify_certificate

__version__ = "0.1.0"
