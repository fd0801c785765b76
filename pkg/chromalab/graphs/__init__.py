"""Graph core: representation, freeness checks, twin quotients and small isomorphism."""

from __future__ import annotations

from chromalab.graphs.coloring import Coloring, ColoringCheck, verify_coloring
from chromalab.graphs.core import Edge, Graph, blowup, disjoint_union, embed_induced
from chromalab.graphs.freeness import (
    FreenessReport,
    ForbiddenKind,
    check_freeness,
    find_induced_cycle,
    find_induced_path,
    verify_witness,
)
from chromalab.graphs.isomorphism import (
    automorphisms,
    canonical_hash,
    is_isomorphic_small,
    is_perfect_small,
)
from chromalab.graphs.twins import TwinQuotient, quotient_by_true_twins

__all__ = [
    "Coloring",
    "ColoringCheck",
    "Edge",
    "ForbiddenKind",
    "FreenessReport",
    "Graph",
    "TwinQuotient",
    "automorphisms",
    "blowup",
    "canonical_hash",
    "check_freeness",
    "disjoint_union",
    "embed_induced",
    "find_induced_cycle",
    "find_induced_path",
    "is_isomorphic_small",
    "is_perfect_small",
    "quotient_by_true_twins",
    "verify_coloring",
    "verify_witness",
]
