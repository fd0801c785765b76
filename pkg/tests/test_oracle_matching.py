import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromalab.graphs.core import Edge
from chromalab.oracle.matching import max_bipartite_matching


@st.composite
def bipartite_instances(
    draw: st.DrawFn, max_side: int = 6
) -> tuple[list[int], list[int], list[Edge]]:
    a = draw(st.integers(min_value=0, max_value=max_side))
    b = draw(st.integers(min_value=0, max_value=max_side))
    left = list(range(a))
    right = list(range(100, 100 + b))
    pairs = [(u, v) for u in left for v in right]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return left, right, [p for p, k in zip(pairs, keep, strict=True) if k]


def _min_cover_size(vertices: list[int], edges: list[Edge]) -> int:
    for size in range(len(vertices) + 1):
        for chosen in itertools.combinations(vertices, size):
            picked = set(chosen)
            if all(u in picked or v in picked for u, v in edges):
                return size
    raise AssertionError("unreachable")


@settings(max_examples=150, deadline=None)
@given(bipartite_instances())
def test_koenig_certificate(instance: tuple[list[int], list[int], list[Edge]]) -> None:
    left, right, edges = instance
    cert = max_bipartite_matching(left, right, edges)
    assert cert.is_valid_for(edges)
    g = nx.Graph()
    g.add_edges_from(edges)
    assert cert.size == len(nx.max_weight_matching(g, maxcardinality=True))


def test_matching_on_a_path() -> None:
    cert = max_bipartite_matching([0, 2], [1, 3], [(0, 1), (1, 2), (3, 2)])
    assert cert.size == 2
    assert cert.matching == ((0, 1), (2, 3))
    assert cert.partner(3) == 2
    assert cert.partner(1) == 0
    assert len(cert.cover) == 2


def test_unmatched_vertex_has_no_partner() -> None:
    cert = max_bipartite_matching([0, 1], [2], [(0, 2), (1, 2)])
    assert cert.size == 1
    assert None in (cert.partner(0), cert.partner(1))


def test_rejects_bad_sides() -> None:
    with pytest.raises(ValueError, match="overlap"):
        max_bipartite_matching([0, 1], [1, 2], [])
    with pytest.raises(ValueError, match="between"):
        max_bipartite_matching([0, 1], [2, 3], [(0, 1)])


@pytest.mark.slow
@settings(max_examples=500, deadline=None)
@given(bipartite_instances(max_side=12))
def test_koenig_on_larger_sides(instance: tuple[list[int], list[int], list[Edge]]) -> None:
    left, right, edges = instance
    cert = max_bipartite_matching(left, right, edges)
    assert cert.is_valid_for(edges)
    if len(left) <= 7 and len(right) <= 7:
        assert len(cert.cover) == _min_cover_size(left + right, edges)
