from __future__ import annotations

import os
from collections.abc import Mapping
from dataclasses import dataclass, replace

# ------------------------------------------------------------------------------
NODE_BUDGET_ENV = "CHROMA_NODE_BUDGET"


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class OracleConfig:
    """Search limits shared by the exact oracles and the colorers that call them.

    Args:
        node_budget: Maximum number of search nodes a single branch-and-bound call may visit.
        clique_enumeration_limit: Largest graph (vertex count) for which all maximum
            cliques are enumerated and strong stable sets are searched.
        exact_vertex_limit: Largest graph accepted by ``chromatic_number_exact``.
        blowup_base_limit: Largest base graph accepted by ``blowup_chromatic_exact``.
        isomorphism_limit: Largest graph accepted by ``is_isomorphic_small``.
        bench_jobs: Default worker count for ``chroma bench``.
    """

    node_budget: int = 5_000_000
    clique_enumeration_limit: int = 64
    exact_vertex_limit: int = 20
    blowup_base_limit: int = 16
    isomorphism_limit: int = 12
    bench_jobs: int = 1

    def with_node_budget(self, node_budget: int) -> OracleConfig:
        """Return a copy with a different node budget."""
        return replace(self, node_budget=node_budget)


DEFAULT_CONFIG = OracleConfig()


# ------------------------------------------------------------------------------
def load_oracle_config(environ: Mapping[str, str] | None = None) -> OracleConfig:
    """Build an OracleConfig, honoring the ``CHROMA_NODE_BUDGET`` override.

    Args:
        environ: Environment mapping. Defaults to ``os.environ``.

    Returns:
        The configuration to use for this process.

    Raises:
        ValueError: If the variable is set but is not a positive integer.
    """
    env = os.environ if environ is None else environ
    raw = env.get(NODE_BUDGET_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_CONFIG
    try:
        budget = int(raw.strip())
    except ValueError as exc:
        raise ValueError(f"{NODE_BUDGET_ENV} must be an integer, got {raw!r}") from exc
    if budget <= 0:
        raise ValueError(f"{NODE_BUDGET_ENV} must be positive, got {budget}")
    return DEFAULT_CONFIG.with_node_budget(budget)


# ------------------------------------------------------------------------------
def resolve_config(config: OracleConfig | None) -> OracleConfig:
    """Return ``config`` or the process default."""
    return DEFAULT_CONFIG if config is None else config
