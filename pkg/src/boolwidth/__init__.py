"""Boolean-width toolkit: decompositions for intersection-model graph classes,
exact cut measures, Hsu lower-bound families and (sigma, rho) / D_q solvers.
"""

from __future__ import annotations

from .builders import (
    ChainCover,
    dilworth_chain_cover,
    order_circular_model,
    order_co_degenerate,
    order_convex,
    order_dilworth,
    order_for_class,
    order_linear_model,
)
from .decomposition import (
    DecompositionTree,
    caterpillar_from_order,
    cut_bool,
    cut_rank,
    cut_values,
    cuts_of,
    random_decomposition,
    rooted,
    tree_width_of,
)
from .equivalence import (
    NATURALS,
    FinCofinSet,
    build_table,
    cofinite,
    d_of_set,
    enumerate_classes,
    finite,
    member_trunc,
    parse_set,
)
from .errors import CapExceededError, InputError, ModelError
from .generators import (
    HsuChainSpec,
    clique_chain_interval_model,
    hsu_clique_chain,
    hsu_graph,
    hsu_join_chain,
    hsu_stable_chain,
    random_graph,
    random_model,
    stable_chain_permutation_model,
)
from .graph import Graph, bits, complement, graph_from_edges, parse_graph, vset
from .models import (
    CircularKTrapezoidModel,
    CircularPermutationModel,
    ConvexModel,
    ConvexStructure,
    KTrapezoidModel,
    PermutationModel,
    arc_model,
    interval_model,
    max_point_load,
    realize,
    validate_convex,
)
from .solver import (
    INFEASIBLE,
    DqProblem,
    SigmaRhoProblem,
    preset,
    problem_presets,
    sigma_rho_as_dq,
    solve_dq,
    solve_sigma_rho,
)

__version__ = "0.1.0"
