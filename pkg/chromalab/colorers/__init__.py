"""Constructive colorers for emerald blowups, 7-bracelets and their decompositions."""

from __future__ import annotations

from chromalab.colorers.bracelet import (
    ColorBlocks,
    color_bracelet,
    color_bracelet_equal,
    color_bracelet_one_pair,
    cross_omega,
)
from chromalab.colorers.budget import BoundKind, ColorBudget, eleven_ninths, seven_sixths
from chromalab.colorers.c7 import c7_layout, c7_palette, color_c7_equal
from chromalab.colorers.driver import ColoredSpec, color_graph, color_spec
from chromalab.colorers.emerald import (
    color_emerald_blowup,
    color_emerald_p_ge_3,
    color_emerald_p_le_2,
    color_emerald_seven_sixths_plus_one,
)
from chromalab.colorers.gx import color_g9, color_gx, g9_budget, gx_budget
from chromalab.colorers.layers import BagColoring
from chromalab.colorers.subemerald import (
    color_c7_plus_2f,
    color_c7_plus_2t,
    color_c7_plus_v,
    color_e_minus_8,
    color_subemerald_blowup,
)

__all__ = [
    "BagColoring",
    "BoundKind",
    "ColorBlocks",
    "ColorBudget",
    "ColoredSpec",
    "c7_layout",
    "c7_palette",
    "color_bracelet",
    "color_bracelet_equal",
    "color_bracelet_one_pair",
    "color_c7_equal",
    "color_c7_plus_2f",
    "color_c7_plus_2t",
    "color_c7_plus_v",
    "color_e_minus_8",
    "color_emerald_blowup",
    "color_emerald_p_ge_3",
    "color_emerald_p_le_2",
    "color_emerald_seven_sixths_plus_one",
    "color_g9",
    "color_graph",
    "color_gx",
    "color_spec",
    "color_subemerald_blowup",
    "cross_omega",
    "eleven_ninths",
    "g9_budget",
    "gx_budget",
    "seven_sixths",
]
