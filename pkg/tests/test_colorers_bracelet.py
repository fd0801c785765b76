import logging

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromalab.colorers.bracelet import (
    ColorBlocks,
    color_bracelet,
    color_bracelet_equal,
    color_bracelet_one_pair,
    non_neighbor_map,
    palettes_for,
)
from chromalab.colorers.budget import seven_sixths
from chromalab.colorers.c7 import c7_layout, c7_palette
from chromalab.errors import ColoringDefectError, InvalidSpecError, PreconditionError
from chromalab.graphs.coloring import verify_coloring
from chromalab.structure.bracelet import BraceletSpec


def _one_pair(x: int) -> BraceletSpec:
    """Bags of size ``x`` with a single cross edge from A7^+ to A2^-."""
    keys = ("A1^0", "A2^0", "A3^0", "A4", "A5", "A6^0", "A7^0")
    full = {key: tuple(range(10 * i, 10 * i + x)) for i, key in enumerate(keys, start=1)}
    full["A2^0"], full["A2^-"] = full["A2^0"][1:], full["A2^0"][:1]
    full["A7^0"], full["A7^+"] = full["A7^0"][1:], full["A7^0"][:1]
    return BraceletSpec(parts=full, e72=frozenset({(70, 20)}))



def _nested(
    sources: tuple[int, ...], targets: tuple[int, ...], degrees: list[int]
) -> set[tuple[int, int]]:
    """``sources[j]`` is adjacent to the first ``degrees[j]`` targets."""
    return {(s, t) for s, d in zip(sources, degrees, strict=True) for t in targets[:d]}


def _three_pairs(
    x: int, *, plus_degrees: list[int], minus_degrees: list[int], a6_plus: int, a3_minus: int
) -> BraceletSpec:
    """Bags of size ``x`` with ids ``100 * i + j``; ``A1^+`` and ``A1^-`` lead ``A1``."""
    bags = {i: tuple(range(100 * i, 100 * i + x)) for i in range(1, 8)}
    n_plus, n_minus = len(plus_degrees), len(minus_degrees)
    parts = {
        "A1^+": bags[1][:n_plus],
        "A1^-": bags[1][n_plus : n_plus + n_minus],
        "A1^0": bags[1][n_plus + n_minus :],
        "A2^0": bags[2],
        "A3^-": bags[3][:a3_minus],
        "A3^0": bags[3][a3_minus:],
        "A4": bags[4],
        "A5": bags[5],
        "A6^+": bags[6][:a6_plus],
        "A6^0": bags[6][a6_plus:],
        "A7^0": bags[7],
    }
    e13 = _nested(parts["A1^+"], parts["A3^-"], plus_degrees)
    e61 = {(a6, a1) for a1, a6 in _nested(parts["A1^-"], parts["A6^+"], minus_degrees)}
    return BraceletSpec(parts=parts, e13=frozenset(e13), e61=frozenset(e61))


def _color_logged(spec: BraceletSpec, x: int, caplog: pytest.LogCaptureFixture) -> list[str]:
    with caplog.at_level(logging.DEBUG, logger="chromalab.colorers.bracelet"):
        coloring = color_bracelet_equal(spec, x)
    assert verify_coloring(spec.realize().graph, coloring).is_proper
    assert coloring.k <= c7_palette(x)
    return [record.getMessage() for record in caplog.records]


def test_palettes_for_use_c7_palette_colors() -> None:
    palettes = palettes_for(2)
    assert sorted(palettes) == [1, 2, 3, 4, 5, 6, 7]
    assert all(len(colors) == 2 for colors in palettes.values())
    assert {c for colors in palettes.values() for c in colors} == set(range(c7_palette(2)))



@pytest.mark.parametrize("x", range(1, 13))
def test_palettes_for_is_proper_on_the_cycle(x: int) -> None:
    palettes = palettes_for(x)
    assert all(len(set(colors)) == x for colors in palettes.values())
    assert all(0 <= c < c7_palette(x) for colors in palettes.values() for c in colors)
    for i in range(1, 8):
        assert not set(palettes[i]) & set(palettes[i % 7 + 1])


@pytest.mark.parametrize("x", [3, 6, 9])
def test_palettes_for_match_the_c7_layout_when_three_divides_x(x: int) -> None:
    assert tuple(palettes_for(x).values()) == c7_layout(x)


@pytest.mark.parametrize("x", range(1, 13))
def test_color_blocks_are_near_equal(x: int) -> None:
    blocks = ColorBlocks.of(palettes_for(x))
    side = (x + 1) // 3
    outer = (blocks.only_6, blocks.six_one, blocks.one_three, blocks.only_3)
    assert [len(part) for part in outer] == [side] * 4
    assert len(blocks.six_one_three) == x - 2 * side
    assert len(blocks.six_one_three) <= len(blocks.one_three) + 1

@pytest.mark.parametrize("x", [1, 2, 3])
def test_equal_sized_bracelet(x: int) -> None:
    spec = BraceletSpec.sized([x] * 7)
    coloring = color_bracelet_equal(spec, x)
    assert verify_coloring(spec.realize().graph, coloring).is_proper
    assert coloring.k == c7_palette(x)



def test_short_a1_plus_takes_the_six_one_block(caplog: pytest.LogCaptureFixture) -> None:
    spec = _three_pairs(3, plus_degrees=[1], minus_degrees=[1, 1], a6_plus=1, a3_minus=1)
    messages = _color_logged(spec, 3, caplog)
    assert any("A1^+ takes colors from C61" in m for m in messages)
    assert not any("mirrored" in m for m in messages)


def test_short_a1_minus_is_handled_by_mirroring(caplog: pytest.LogCaptureFixture) -> None:
    spec = _three_pairs(3, plus_degrees=[1, 1], minus_degrees=[1], a6_plus=1, a3_minus=1)
    messages = _color_logged(spec, 3, caplog)
    assert any("A1^+ is the short side" in m for m in messages)
    assert any("A1^+ takes colors from C61" in m for m in messages)


def test_leftover_a1_minus_shares_colors_with_a6_zero(caplog: pytest.LogCaptureFixture) -> None:
    spec = _three_pairs(6, plus_degrees=[5, 4, 3], minus_degrees=[5, 4, 3], a6_plus=5, a3_minus=5)
    messages = _color_logged(spec, 6, caplog)
    assert any("R1^- fits on A6^0" in m for m in messages)


def _exchange_spec() -> BraceletSpec:
    degrees = [9, 8, 7, 6, 5]
    return _three_pairs(10, plus_degrees=degrees, minus_degrees=degrees, a6_plus=9, a3_minus=9)


@pytest.mark.slow
def test_leftover_a1_vertices_move_to_non_neighbors(caplog: pytest.LogCaptureFixture) -> None:
    messages = _color_logged(_exchange_spec(), 10, caplog)
    assert any("injective non-neighbor maps" in m for m in messages)
    assert not any("searching" in m for m in messages)


def test_non_neighbor_maps_are_injective() -> None:
    spec = _exchange_spec()
    f = non_neighbor_map(spec, "e61", [108, 109], spec.parts["A6^+"])
    g = non_neighbor_map(spec, "e13", [103, 104], spec.parts["A3^-"])
    assert f == {108: 606, 109: 605}
    assert g == {103: 306, 104: 305}
    for name, chosen in (("e61", f), ("e13", g)):
        assert len(set(chosen.values())) == len(chosen)
        assert all(s not in spec.cross_neighbors(name, r) for r, s in chosen.items())
    with pytest.raises(ColoringDefectError, match="no unused non-neighbor"):
        non_neighbor_map(spec, "e61", [105], spec.parts["A6^+"])

@pytest.mark.parametrize("x", [2, 3])
def test_one_uncertain_pair(x: int) -> None:
    spec = _one_pair(x)
    coloring = color_bracelet_one_pair(spec, x)
    assert verify_coloring(spec.realize().graph, coloring).is_proper
    assert coloring.k <= c7_palette(x)


def test_one_pair_preconditions_are_all_reported() -> None:
    with pytest.raises(PreconditionError) as info:
        color_bracelet_one_pair(BraceletSpec.sized([2, 2, 2, 2, 2, 2, 1]), 1)
    assert len(info.value.failures) == 6


def test_color_bracelet_rejects_invalid_specs() -> None:
    with pytest.raises(InvalidSpecError, match="invalid bracelet"):
        color_bracelet(BraceletSpec.sized([1, 1, 1, 0, 1, 1, 1]))


def test_unequal_bracelet_removes_strong_stable_sets() -> None:
    spec = BraceletSpec.sized([3, 2, 2, 2, 2, 2, 2])
    coloring = color_bracelet(spec)
    assert verify_coloring(spec.realize().graph, coloring).is_proper
    assert coloring.k <= seven_sixths(5)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(min_value=1, max_value=3), min_size=7, max_size=7))
def test_sized_bracelets_within_seven_sixths(sizes: list[int]) -> None:
    spec = BraceletSpec.sized(sizes)
    omega = max(sizes[i] + sizes[(i + 1) % 7] for i in range(7))
    coloring = color_bracelet(spec)
    assert verify_coloring(spec.realize().graph, coloring).is_proper
    assert coloring.k <= seven_sixths(omega)
