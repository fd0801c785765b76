import pytest

from chromalab.config import OracleConfig
from chromalab.errors import BudgetExceededError
from chromalab.graphs.core import Graph
from chromalab.oracle.cliques import (
    clique_number,
    max_weight_clique,
    maximal_cliques,
    maximum_weight_cliques,
)
from chromalab.structure.catalog import C7, EMERALD


def test_clique_number_of_cycle() -> None:
    report = clique_number(Graph.cycle(5))
    assert report.omega == 2
    assert report.witness == (0, 1)
    assert len(report.all_maximum_cliques) == 5


def test_clique_number_empty_graph() -> None:
    report = clique_number(Graph.from_edges(0, []))
    assert report.omega == 0
    assert report.witness == ()


def test_emerald_maximum_cliques_are_its_triangles() -> None:
    report = clique_number(EMERALD)
    assert report.omega == 3
    assert len(report.all_maximum_cliques) == 11


def test_maximum_cliques_omitted_above_enumeration_limit() -> None:
    report = clique_number(EMERALD, config=OracleConfig(clique_enumeration_limit=10))
    assert report.omega == 3
    assert report.all_maximum_cliques == ()


def test_maximal_cliques_budget() -> None:
    assert len(maximal_cliques(EMERALD)) == 11
    with pytest.raises(BudgetExceededError):
        maximal_cliques(EMERALD, config=OracleConfig(node_budget=3))


def test_max_weight_clique() -> None:
    weight, clique = max_weight_clique(C7, [1, 2, 3, 1, 1, 1, 1])
    assert weight == 5
    assert clique == (1, 2)
    assert max_weight_clique(Graph.from_edges(0, []), []) == (0, ())


def test_maximum_weight_cliques_ignore_empty_bags() -> None:
    omega, cliques = maximum_weight_cliques(C7, [2, 1, 0, 0, 0, 0, 1])
    assert omega == 3
    assert cliques == [(0, 1), (0, 6)]
    assert maximum_weight_cliques(C7, [0] * 7) == (0, [])
