import pytest

from chromalab.config import (
    DEFAULT_CONFIG,
    NODE_BUDGET_ENV,
    OracleConfig,
    load_oracle_config,
    resolve_config,
)


def test_load_oracle_config_default() -> None:
    assert load_oracle_config({}) is DEFAULT_CONFIG
    assert load_oracle_config({NODE_BUDGET_ENV: "  "}) is DEFAULT_CONFIG


def test_load_oracle_config_override() -> None:
    cfg = load_oracle_config({NODE_BUDGET_ENV: "1000"})
    assert cfg.node_budget == 1000
    assert cfg.exact_vertex_limit == DEFAULT_CONFIG.exact_vertex_limit


@pytest.mark.parametrize("raw", ["many", "0", "-5"])
def test_load_oracle_config_rejects_bad_values(raw: str) -> None:
    with pytest.raises(ValueError, match=NODE_BUDGET_ENV):
        load_oracle_config({NODE_BUDGET_ENV: raw})


def test_resolve_config() -> None:
    custom = OracleConfig(node_budget=10)
    assert resolve_config(None) is DEFAULT_CONFIG
    assert resolve_config(custom) is custom
    assert custom.with_node_budget(20).node_budget == 20
