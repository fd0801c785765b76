import pytest

from chromalab.colorers.c7 import c7_layer, c7_layout, c7_palette, color_c7_equal
from chromalab.graphs.coloring import verify_coloring
from chromalab.structure.blowup import BlowupSpec
from chromalab.structure.catalog import C7_PLUS_V


@pytest.mark.parametrize(("t", "m"), [(1, 3), (2, 5), (3, 7), (4, 10), (5, 12), (6, 14)])
def test_c7_palette(t: int, m: int) -> None:
    assert c7_palette(t) == m


@pytest.mark.parametrize("t", range(1, 10))
def test_layout_is_proper_on_the_cycle(t: int) -> None:
    layout = c7_layout(t)
    m = c7_palette(t)
    assert len(layout) == 7
    for i, bag in enumerate(layout):
        assert len(set(bag)) == t
        assert all(0 <= c < m for c in bag)
        assert not set(bag) & set(layout[(i + 1) % 7])
    assert {c for bag in layout for c in bag} == set(range(m))


def test_layout_of_empty_bags() -> None:
    assert c7_layout(0) == ((),) * 7
    with pytest.raises(ValueError):
        c7_layout(-1)


@pytest.mark.parametrize("t", range(1, 7))
def test_color_c7_equal_meets_the_stability_bound(t: int) -> None:
    coloring = color_c7_equal(t)
    graph = BlowupSpec.uniform("c7", t).realize().graph
    assert verify_coloring(graph, coloring).is_proper
    assert coloring.k == c7_palette(t)


def test_color_c7_equal_rejects_zero() -> None:
    with pytest.raises(ValueError, match="t must be"):
        color_c7_equal(0)


def test_layer_along_a_cycle_leaves_other_bags_empty() -> None:
    layer = c7_layer(C7_PLUS_V, ("1", "2", "3", "4", "5", "6", "7"), 2)
    assert layer.colors_of(C7_PLUS_V, "v") == ()
    assert layer.colors_of(C7_PLUS_V, "1") == (0, 1)
    assert layer.k == 5
    with pytest.raises(ValueError, match="seven"):
        c7_layer(C7_PLUS_V, ("1", "2", "3"), 2)
