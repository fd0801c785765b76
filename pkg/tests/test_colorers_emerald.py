import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromalab.colorers.budget import eleven_ninths, seven_sixths
from chromalab.colorers.emerald import (
    color_emerald_blowup,
    color_emerald_p_ge_3,
    color_emerald_p_le_2,
    color_emerald_seven_sixths_plus_one,
    emerald_blowup_bags,
)
from chromalab.errors import PreconditionError
from chromalab.generators import Family, GenConfig, gen
from chromalab.graphs.coloring import verify_coloring
from chromalab.structure.blowup import BlowupSpec
from chromalab.structure.catalog import EMERALD, special_emerald_weights


def _check(spec: BlowupSpec, k: int, budget: int) -> None:
    assert k <= budget, f"{spec.weights}: {k} colors, budget {budget}"


@pytest.mark.parametrize(("t", "chi"), [(1, 4), (2, 8), (3, 11)])
def test_equal_blowups_are_colored_optimally(t: int, chi: int) -> None:
    spec = BlowupSpec.uniform("emerald", t)
    coloring = color_emerald_blowup(spec)
    assert verify_coloring(spec.realize().graph, coloring).is_proper
    assert coloring.k == chi


def test_large_bags_peel_emerald_k3_layers() -> None:
    spec = BlowupSpec.uniform("emerald", 4)
    bags = emerald_blowup_bags(spec)
    assert bags.problems(spec) == []
    assert bags.k <= eleven_ninths(12)


@pytest.mark.parametrize(
    "params", [(3, 2, 2, 0, 0, 1), (4, 3, 3, 1, 1, 2), (2, 2, 1, 0, 0, 1), (5, 4, 3, 2, 1, 2)]
)
def test_special_emeralds_within_eleven_ninths(params: tuple[int, ...]) -> None:
    spec = BlowupSpec.of("special_emerald", special_emerald_weights(*params))
    coloring = color_emerald_blowup(spec)
    assert verify_coloring(spec.realize().graph, coloring).is_proper
    _check(spec, coloring.k, eleven_ninths(spec.omega))


def test_empty_bag_routes_to_the_seven_sixths_bound() -> None:
    weights = dict.fromkeys(EMERALD.labels, 2)
    weights["5"] = 0
    spec = BlowupSpec.of("emerald", weights)
    coloring = color_emerald_p_le_2(spec)
    assert verify_coloring(spec.realize().graph, coloring).is_proper
    _check(spec, coloring.k, seven_sixths(spec.omega))


def test_p_variants_check_their_preconditions() -> None:
    with pytest.raises(PreconditionError, match="p <= 2"):
        color_emerald_p_le_2(BlowupSpec.uniform("emerald", 3))
    with pytest.raises(PreconditionError, match="p >= 3"):
        color_emerald_p_ge_3(BlowupSpec.uniform("emerald", 2))
    with pytest.raises(PreconditionError, match="7/6\\+1"):
        color_emerald_seven_sixths_plus_one(BlowupSpec.uniform("emerald", 3))
    with pytest.raises(PreconditionError):
        color_emerald_blowup(BlowupSpec.uniform("c7", 1))


def test_p_ge_3_with_unequal_bags() -> None:
    weights = dict.fromkeys(EMERALD.labels, 3)
    weights.update({"1": 5, "9": 4})
    spec = BlowupSpec.of("emerald", weights)
    coloring = color_emerald_p_ge_3(spec)
    assert verify_coloring(spec.realize().graph, coloring).is_proper
    _check(spec, coloring.k, eleven_ninths(spec.omega))


def test_seven_sixths_plus_one_is_tight_on_ek2() -> None:
    spec = BlowupSpec.uniform("emerald", 2)
    coloring = color_emerald_seven_sixths_plus_one(spec)
    assert verify_coloring(spec.realize().graph, coloring).is_proper
    assert coloring.k == seven_sixths(6) + 1


@st.composite
def emerald_weights(draw: st.DrawFn) -> list[int]:
    weights = draw(st.lists(st.integers(min_value=0, max_value=6), min_size=11, max_size=11))
    # keep at least one bag nonempty so omega >= 1
    weights[draw(st.integers(min_value=0, max_value=10))] = draw(st.integers(1, 6))
    return weights


@pytest.mark.slow
@settings(max_examples=25, deadline=None)
@given(emerald_weights())
def test_random_blowups_stay_within_budget(weights: list[int]) -> None:
    spec = BlowupSpec.of("emerald", weights)
    coloring = color_emerald_blowup(spec)
    assert verify_coloring(spec.realize().graph, coloring).is_proper
    _check(spec, coloring.k, eleven_ninths(spec.omega))


@pytest.mark.slow
@pytest.mark.parametrize("seed", [2, 6, 12, 56, 63, 71, 90, 100, 128, 154, 165, 176])
def test_generated_heavy_blowups_stay_within_budget(seed: int) -> None:
    spec = gen(GenConfig(Family.EMERALD_RANDOM, seed=seed, params={"w_max": 6}))
    coloring = color_emerald_blowup(spec)
    assert verify_coloring(spec.realize().graph, coloring).is_proper
    _check(spec, coloring.k, eleven_ninths(spec.omega))
