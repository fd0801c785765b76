import pytest

from chromalab.colorers.budget import BoundKind, ColorBudget, eleven_ninths, seven_sixths
from chromalab.colorers.c7 import c7_layout
from chromalab.colorers.layers import BagColoring, certify, cycle_order
from chromalab.errors import ColoringDefectError
from chromalab.structure.blowup import BlowupSpec
from chromalab.structure.catalog import C7, EMERALD


@pytest.mark.parametrize(
    ("omega", "expected"), [(0, 0), (1, 2), (3, 4), (6, 8), (9, 11), (12, 15), (18, 22)]
)
def test_eleven_ninths(omega: int, expected: int) -> None:
    assert eleven_ninths(omega) == expected


@pytest.mark.parametrize(("omega", "expected"), [(0, 0), (1, 2), (2, 3), (4, 5), (6, 7), (7, 9)])
def test_seven_sixths(omega: int, expected: int) -> None:
    assert seven_sixths(omega) == expected


def test_for_bound_covers_every_kind() -> None:
    assert ColorBudget.for_bound(BoundKind.ELEVEN_NINTHS, 6).budget == 8
    assert ColorBudget.for_bound(BoundKind.SEVEN_SIXTHS, 6).budget == 7
    assert ColorBudget.for_bound(BoundKind.SEVEN_SIXTHS_PLUS_ONE, 6).budget == 8
    exact = ColorBudget.for_bound(BoundKind.EXACT, 6, exact=8)
    assert exact.budget == 8
    assert exact.allows(8)
    assert not exact.allows(9)


def test_for_bound_rejects_bad_input() -> None:
    with pytest.raises(ValueError, match="exact value"):
        ColorBudget.for_bound(BoundKind.EXACT, 3)
    with pytest.raises(ValueError, match="omega"):
        ColorBudget.for_bound(BoundKind.SEVEN_SIXTHS, -1)


def test_bound_kind_strings() -> None:
    assert [str(k) for k in BoundKind] == ["11/9", "7/6", "7/6+1", "exact"]


def test_stacked_moves_second_coloring_above_the_first() -> None:
    first = BagColoring(bags=((0,), (1,), ()))
    second = BagColoring(bags=((0,), (), (0, 1)))
    stacked = first.stacked(second)
    assert stacked.bags == ((0, 2), (1,), (2, 3))
    assert stacked.k == 4


def test_with_new_color_and_compacted() -> None:
    coloring = BagColoring(bags=((5,), (9,), ()))
    grown = coloring.with_new_color([0, 2])
    assert grown.bags == ((5, 10), (9,), (10,))
    assert grown.compacted().bags == ((0, 2), (1,), (2,))


def test_from_labels_rejects_unknown_label() -> None:
    with pytest.raises(ValueError, match="not in base"):
        BagColoring.from_labels(C7, {"8": (0,)})


def test_problems_lists_every_defect() -> None:
    spec = BlowupSpec.uniform("c7", 1)
    assert BagColoring(bags=c7_layout(1)).problems(spec) == []
    bad = BagColoring(bags=((0,), (0,), (1,), (0,), (1,), (0,), (1, 1)))
    found = bad.problems(spec)
    assert "bag 7 has 2 colors, needs 1" in found
    assert "bag 7 repeats a color" in found
    assert "adjacent bags 1, 2 share [0]" in found


def test_certify_raises_on_budget_and_defects() -> None:
    spec = BlowupSpec.uniform("c7", 1)
    coloring = BagColoring(bags=c7_layout(1))
    certify(spec, coloring, ColorBudget.for_bound(BoundKind.SEVEN_SIXTHS, 2), what="C7")
    with pytest.raises(ColoringDefectError, match="exceed"):
        certify(spec, coloring, ColorBudget.for_bound(BoundKind.EXACT, 2, exact=2), what="C7")


def test_to_coloring_numbers_bags_in_base_order() -> None:
    coloring = BagColoring(bags=((3, 7), (5,))).to_coloring()
    assert coloring.n == 3
    assert coloring.k == 3


def test_cycle_order_walks_from_smallest_index() -> None:
    assert cycle_order(C7, ["5", "3", "1", "2", "4", "7", "6"]) == C7.labels
    order = cycle_order(EMERALD, ["1", "2", "3", "10", "5", "11", "7"])
    assert order[0] == "1"
    assert set(order) == {"1", "2", "3", "10", "5", "11", "7"}


def test_cycle_order_rejects_non_cycles() -> None:
    with pytest.raises(ValueError, match="cycle"):
        cycle_order(C7, ["1", "2", "3"])
