"""Minimum vertex covers of generalized Petersen graphs P(n, k)."""

from .bounds import BoundReport, bound_report, exact_formula, lower_bound, upper_bounds
from .constructions import (
    ConstructionResult,
    TilingParams,
    alternating_cycles_cover,
    best_construction,
    bipartite_cover,
    even_k_cover,
    k1_cover,
    odd_odd_cover,
    reduce_strips,
    tiled_cover,
)
from .cover import (
    Cover,
    CoverStats,
    Strip,
    d_value_bruteforce,
    is_cover,
    is_trivial,
    optimal_twin_selection,
    semi_optimal,
    stats,
    strips,
    uncovered_edge,
)
from .errors import CoverDomainError, InvariantViolation, ParameterError, ResourceLimitError
from .graph import PetersenGraph, Vertex, build_graph, inner_cycles, is_bipartite, sector, twin
from .harness import export, sweep, verify_theorems
from .solver import BetaResult, beta_bruteforce, beta_exact, enumerate_min_covers

__version__ = "0.1.0"
