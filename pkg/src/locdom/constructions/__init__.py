"""Constructive algorithms that return self-checking LD certificates."""

from .basic import (
    TournamentWitness,
    clique_code_size,
    clique_subset_construction,
    matching_construction,
    orient_from_undirected_ld,
    orient_spanning_ld,
    source_forcing_orientation,
    transitive_tournament_witness,
    worst_upper_witness,
)
from .regular import (
    RandomizedConfig,
    RandomizedReport,
    greedy_distinct_subsets,
    regular_matching_construction,
    regular_random_construction,
)
from .trees import forest_min_ld, is_in_TSL, normalized_tree_ld, tree_bound, tree_gamma_ld, tree_ld_construction
from .twinfree import twin_free_half_construction
from .worm import check_no_directed_c4_path, check_worm_coloring, worm_orientation

__all__ = [
    "RandomizedConfig",
    "RandomizedReport",
    "TournamentWitness",
    "check_no_directed_c4_path",
    "check_worm_coloring",
    "clique_code_size",
    "clique_subset_construction",
    "forest_min_ld",
    "greedy_distinct_subsets",
    "is_in_TSL",
    "matching_construction",
    "normalized_tree_ld",
    "orient_from_undirected_ld",
    "orient_spanning_ld",
    "regular_matching_construction",
    "regular_random_construction",
    "source_forcing_orientation",
    "transitive_tournament_witness",
    "tree_bound",
    "tree_gamma_ld",
    "tree_ld_construction",
    "twin_free_half_construction",
    "worm_orientation",
    "worst_upper_witness",
]
