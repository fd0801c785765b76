from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromalab.errors import InvalidSpecError
from chromalab.generators import (
    FIXTURE_VERSION_DIR,
    Family,
    GenConfig,
    gen,
    gen_cross_pattern,
    instance_id,
    iter_fixtures,
    read_fixture,
    staircase_omega,
    write_fixture,
)
from chromalab.graphs.freeness import check_freeness
from chromalab.structure.blowup import BlowupSpec
from chromalab.structure.bracelet import BraceletSpec, validate_bracelet
from chromalab.structure.catalog import gx_violations

FIXTURES_DIR = Path(__file__).resolve().parents[1] / "fixtures" / FIXTURE_VERSION_DIR


@pytest.mark.parametrize("family", list(Family))
def test_gen_is_deterministic(family: Family) -> None:
    config = GenConfig(family, seed=7)
    assert gen(config) == gen(config)


def test_equal_families_follow_their_parameter() -> None:
    assert gen(GenConfig(Family.C7_EQUAL)) == BlowupSpec.uniform("c7", 3)
    assert gen(GenConfig(Family.EMERALD_EQUAL, params={"t": 2})) == BlowupSpec.uniform(
        "emerald", 2
    )


def test_special_emerald_defaults() -> None:
    spec = gen(GenConfig(Family.SPECIAL_EMERALD))
    assert isinstance(spec, BlowupSpec)
    assert spec.name == "special_emerald"
    assert spec.weights == (5, 5, 3, 3, 3, 3, 3, 1, 3, 5, 5)


@pytest.mark.parametrize("seed", range(5))
def test_gx_family_meets_its_constraints(seed: int) -> None:
    spec = gen(GenConfig(Family.GX, seed=seed, params={"x": 3}))
    assert isinstance(spec, BlowupSpec)
    assert gx_violations(spec.weight_map(), 3) == []


@pytest.mark.parametrize("seed", range(5))
def test_random_weights_stay_in_range(seed: int) -> None:
    spec = gen(GenConfig(Family.EMERALD_RANDOM, seed=seed, params={"w_min": 1, "w_max": 2}))
    assert isinstance(spec, BlowupSpec)
    assert all(1 <= w <= 2 for w in spec.weights)
    assert check_freeness(spec.realize().graph).is_free


@pytest.mark.parametrize("seed", range(5))
def test_bracelets_are_valid(seed: int) -> None:
    spec = gen(GenConfig(Family.BRACELET_RANDOM, seed=seed, params={"bag_max": 2}))
    assert isinstance(spec, BraceletSpec)
    assert validate_bracelet(spec) == []
    assert all(1 <= size <= 2 for size in spec.bag_sizes())


def test_config_validation() -> None:
    with pytest.raises(ValueError, match="does not take"):
        GenConfig(Family.C7_EQUAL, params={"x": 1})
    with pytest.raises(ValueError, match="seed"):
        GenConfig(Family.C7_EQUAL, seed=-1)
    with pytest.raises(ValueError, match="x\\+p"):
        GenConfig(Family.SPECIAL_EMERALD, params={"y": 4})
    with pytest.raises(ValueError, match="percentage"):
        GenConfig(Family.BRACELET_RANDOM, params={"pair_chance": 150})
    with pytest.raises(ValueError, match="w_max"):
        GenConfig(Family.C7_PLUS_V, params={"w_min": 3, "w_max": 2})
    with pytest.raises(ValueError):
        GenConfig("no_such_family")  # type: ignore[arg-type]


def test_config_dict_round_trip_pins_the_prng() -> None:
    config = GenConfig(Family.GX, seed=3, params={"x": 2})
    data = config.to_dict()
    assert data["prng"] == "PCG64"
    assert data["params"] == {"x": 2}
    assert GenConfig.from_dict(data) == config
    with pytest.raises(ValueError, match="MT19937"):
        GenConfig.from_dict({**data, "prng": "MT19937"})


def test_staircase_omega() -> None:
    assert staircase_omega(2, 2, [2, 1]) == 3
    assert staircase_omega(5, 1, [1, 1, 1, 1, 1]) == 6


@settings(max_examples=50, deadline=None)
@given(
    st.integers(min_value=1, max_value=6),
    st.integers(min_value=1, max_value=6),
    st.integers(min_value=0, max_value=3),
    st.integers(min_value=0, max_value=2**32),
)
def test_cross_pattern_covers_both_sides(a: int, b: int, slack: int, seed: int) -> None:
    target = max(a, b) + 1 + slack
    pairs = gen_cross_pattern(a, b, target, seed=seed)
    assert {i for i, _ in pairs} == set(range(a))
    assert {j for _, j in pairs} == set(range(b))
    prefixes = [len({j for i2, j in pairs if i2 == i}) for i in range(a)]
    assert prefixes == sorted(prefixes, reverse=True)
    assert staircase_omega(a, b, prefixes) <= target
    assert gen_cross_pattern(a, b, target, seed=seed) == pairs


def test_cross_pattern_rejects_infeasible_targets() -> None:
    with pytest.raises(ValueError, match="infeasible"):
        gen_cross_pattern(3, 2, 3)
    with pytest.raises(ValueError, match="both sides"):
        gen_cross_pattern(0, 2)


def test_instance_id_encodes_changed_parameters() -> None:
    assert instance_id(GenConfig(Family.EMERALD_EQUAL)) == "emerald_equal-seed0"
    assert instance_id(GenConfig(Family.EMERALD_EQUAL, params={"t": 3})) == "emerald_equal-seed0"
    config = GenConfig(Family.SPECIAL_EMERALD, seed=4, params={"x": 4, "p": 2})
    assert instance_id(config) == "special_emerald-seed4-p2-x4"


def test_write_then_read_fixture(tmp_path: Path) -> None:
    config = GenConfig(Family.C7_PLUS_2F, seed=11)
    path = write_fixture(tmp_path / "v1", config)
    assert path.name == "c7_plus_2f-seed11.json"
    fixture = read_fixture(path)
    assert fixture.instance_id == instance_id(fixture.config)
    assert fixture.config.resolved == config.resolved
    assert fixture.spec == gen(config)


def test_shipped_fixtures_regenerate_identically() -> None:
    fixtures = list(iter_fixtures(FIXTURES_DIR))
    assert len(fixtures) >= 5
    for fixture in fixtures:
        assert fixture.instance_id == instance_id(fixture.config), fixture.path
        assert gen(fixture.config) == fixture.spec, fixture.path


def test_read_fixture_errors(tmp_path: Path) -> None:
    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")
    with pytest.raises(InvalidSpecError, match="not JSON"):
        read_fixture(broken)
    broken.write_text('{"schema": 99}', encoding="utf-8")
    with pytest.raises(InvalidSpecError, match="schema 1"):
        read_fixture(broken)
    broken.write_text(
        '{"schema": 1, "generator": {"family": "c7_equal", "seed": 0, "prng": "MT19937"},'
        ' "spec": {}}',
        encoding="utf-8",
    )
    with pytest.raises(InvalidSpecError, match="bad generator header"):
        read_fixture(broken)
