"""Emerald blowups and 7-bracelets: typed specs, validation, realization, recognition."""

from __future__ import annotations

from chromalab.structure.blowup import BlowupSpec, p_value
from chromalab.structure.bracelet import (
    CROSS_RELATIONS,
    PART_KEYS,
    BraceletSpec,
    Violation,
    validate_bracelet,
)
from chromalab.structure.catalog import (
    BASES,
    C7,
    C7_PLUS_2F,
    C7_PLUS_2T,
    C7_PLUS_V,
    E_MINUS_8,
    EMERALD,
    EMERALD_TRIANGLES,
    G9,
    GX,
    SPECIAL_EMERALD,
    ek3_stable_system,
    emerald_automorphisms,
    end_triangles,
    middle_triangle,
    special_emerald_weights,
)
from chromalab.structure.realization import Realization, realize
from chromalab.structure.recognize import (
    BlowupEmbedding,
    embed_blowup,
    embed_emerald_blowup,
    recognize_emerald_blowup,
)
from chromalab.structure.serialization import dumps_spec, loads_spec, spec_from_dict, spec_to_dict

__all__ = [
    "BASES",
    "C7",
    "C7_PLUS_2F",
    "C7_PLUS_2T",
    "C7_PLUS_V",
    "CROSS_RELATIONS",
    "EMERALD",
    "EMERALD_TRIANGLES",
    "E_MINUS_8",
    "G9",
    "GX",
    "PART_KEYS",
    "SPECIAL_EMERALD",
    "BlowupEmbedding",
    "BlowupSpec",
    "BraceletSpec",
    "Realization",
    "Violation",
    "dumps_spec",
    "ek3_stable_system",
    "embed_blowup",
    "embed_emerald_blowup",
    "emerald_automorphisms",
    "end_triangles",
    "loads_spec",
    "middle_triangle",
    "p_value",
    "realize",
    "recognize_emerald_blowup",
    "special_emerald_weights",
    "spec_from_dict",
    "spec_to_dict",
    "validate_bracelet",
]
