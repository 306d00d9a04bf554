"""Ramsey arrowing, graph factors, and gadget constructions for tree/clique pairs."""

from .arrowing import (
    ArrowingVerdict,
    arrows,
    arrows_parallel,
    coloring_is_free,
    equivalence_scan,
    exhaustive_arrows,
    minimal_ramsey_check,
    ramsey_number,
    sampled_arrows,
)
from .errors import (
    BudgetExhaustedError,
    CapExceededError,
    InvariantViolationError,
    RamseyLabError,
    SearchExhaustedError,
)
from .factors import (
    BelckCertificate,
    FactorWitness,
    belck_check,
    find_belck,
    has_k_factor,
    odd_components,
    star_pair_regular_arrows,
)
from .families import (
    ConstructionTrace,
    DeterminerGadget,
    Hypergraph,
    RootedGadget,
    basic_family,
    c_gadget,
    clique,
    clique_with_pendants,
    cycle,
    determiner_chain,
    diameter_distinguisher,
    factor_extremal_graph,
    hypergraph_blowup,
    hypergraph_girth,
    lambda_gadget,
    path,
    star,
    suitable_caterpillar,
    uniform_tree,
)
from .formats import coloring_from_text, coloring_to_text, graph_from_graph6, graph_to_graph6
from .graphs import BLUE, RED, Edge, EdgeColoring, Embedding, Graph
from .matching import maximum_matching
from .recolor import (
    RecolorTrace,
    WalkTrace,
    WovenCertificate,
    alternating_walk_step,
    star_clique_recolor,
    woven_recolor,
    yuv_certificate,
)
from .subgraph import chromatic_number, clique_number, cliques_of_size, contains_copy
from .trees import TreeProfile, greedy_min_degree_embed, tree_classify

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
