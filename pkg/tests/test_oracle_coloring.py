import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromalab.config import OracleConfig
from chromalab.errors import BudgetExceededError, SizeGuardError
from chromalab.graphs.coloring import verify_coloring
from chromalab.graphs.core import Graph
from chromalab.oracle.coloring import (
    chromatic_number_exact,
    color_from_lists,
    color_within,
    greedy_coloring,
)
from chromalab.structure.catalog import EMERALD


@st.composite
def small_graphs(draw: st.DrawFn, max_n: int = 6) -> Graph:
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, k in zip(pairs, keep, strict=True) if k])


def _brute_force_chi(g: Graph) -> int:
    for k in range(1, g.n + 1):
        for rest in itertools.product(range(k), repeat=g.n - 1):
            colors = (0, *rest)
            if all(colors[u] != colors[v] for u, v in g.edges()):
                return k
    return g.n


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_chromatic_number_matches_brute_force(g: Graph) -> None:
    chi, coloring = chromatic_number_exact(g)
    assert chi == _brute_force_chi(g)
    assert coloring.k == chi
    assert verify_coloring(g, coloring).is_proper


@pytest.mark.parametrize(
    ("graph", "chi"),
    [
        (Graph.from_edges(0, []), 0),
        (Graph.cycle(5), 3),
        (Graph.cycle(7), 3),
        (Graph.cycle(6), 2),
        (Graph.complete(4), 4),
        (EMERALD, 4),
    ],
)
def test_chromatic_number_exact(graph: Graph, chi: int) -> None:
    assert chromatic_number_exact(graph)[0] == chi


def test_chromatic_number_size_guard() -> None:
    with pytest.raises(SizeGuardError):
        chromatic_number_exact(EMERALD, config=OracleConfig(exact_vertex_limit=10))


def test_color_within() -> None:
    assert color_within(Graph.cycle(5), 2) is None
    found = color_within(Graph.cycle(5), 3)
    assert found is not None
    assert found.k == 3
    assert verify_coloring(Graph.cycle(5), found).is_proper


def test_color_within_budget() -> None:
    with pytest.raises(BudgetExceededError):
        color_within(EMERALD, 3, config=OracleConfig(node_budget=2))


def test_greedy_coloring_is_proper() -> None:
    coloring = greedy_coloring(EMERALD)
    assert verify_coloring(EMERALD, coloring).is_proper
    assert coloring.k >= 4


def test_color_from_lists() -> None:
    c4 = Graph.cycle(4)
    found = color_from_lists(c4, [[7, 9]] * 4)
    assert found is not None
    assert set(found.values()) == {7, 9}
    assert all(found[u] != found[v] for u, v in c4.edges())
    assert color_from_lists(Graph.complete(3), [[1, 2]] * 3) is None
    assert color_from_lists(Graph.complete(3), [[1], [1, 2], [1, 2, 3]]) == {0: 1, 1: 2, 2: 3}
    with pytest.raises(ValueError):
        color_from_lists(c4, [[1]])
