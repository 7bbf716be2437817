"""State graphs for toss and spin juggling, and random walks on them."""

from .combine import CombinedPattern, combine
from .graph import StateGraph
from .poi import PoiState, build_poi_graph, find_entry, is_cycle, poi_advance, poi_kernel, run_word
from .random_walk import (
    StateDistribution,
    TransitionKernel,
    WalkTrace,
    empirical_frequencies,
    sample_walk,
    stationary_exact,
    stationary_numeric,
    stirling2,
    uniform_kernel,
    warrington_distribution,
    warrington_frequency,
)
from .siteswap import SiteswapPattern, ValidityReport, canonical_rotation, parse_siteswap, particle_count, validate
from .toss import (
    TossState,
    admissible_throws,
    advance,
    build_state_graph,
    cycle_to_pattern,
    find_transition,
    pattern_states,
)

__version__ = "0.1.0"
