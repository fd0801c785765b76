"""Exact reference computations used by the colorers and as test oracles."""

from __future__ import annotations

from chromalab.oracle.cliques import (
    CliqueReport,
    clique_number,
    max_weight_clique,
    maximal_cliques,
    maximum_weight_cliques,
)
from chromalab.oracle.coloring import (
    chromatic_number_exact,
    color_from_lists,
    color_within,
    greedy_coloring,
)
from chromalab.oracle.covering import (
    StableSetCover,
    WeightedBase,
    blowup_chromatic_exact,
    cover_to_bag_colors,
    cover_within,
)
from chromalab.oracle.decomposition import CliqueCutset, find_clique_cutset, find_universal_vertex
from chromalab.oracle.matching import MatchingCertificate, max_bipartite_matching
from chromalab.oracle.strong import (
    find_strong_stable_set,
    find_strong_stable_set_weighted,
    iter_strong_stable_sets,
    iter_strong_stable_sets_weighted,
)

__all__ = [
    "CliqueCutset",
    "CliqueReport",
    "MatchingCertificate",
    "StableSetCover",
    "WeightedBase",
    "blowup_chromatic_exact",
    "chromatic_number_exact",
    "clique_number",
    "color_from_lists",
    "color_within",
    "cover_to_bag_colors",
    "cover_within",
    "find_clique_cutset",
    "find_strong_stable_set",
    "find_strong_stable_set_weighted",
    "find_universal_vertex",
    "greedy_coloring",
    "iter_strong_stable_sets",
    "iter_strong_stable_sets_weighted",
    "max_bipartite_matching",
    "max_weight_clique",
    "maximal_cliques",
    "maximum_weight_cliques",
]
