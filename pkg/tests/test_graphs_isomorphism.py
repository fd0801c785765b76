import pytest

from chromalab.config import OracleConfig
from chromalab.errors import SizeGuardError
from chromalab.graphs.core import Graph
from chromalab.graphs.isomorphism import (
    automorphisms,
    canonical_hash,
    is_isomorphic_small,
    is_perfect_small,
)
from chromalab.structure.catalog import C7, EMERALD


def test_is_isomorphic_small_returns_bijection() -> None:
    relabeled = Graph.from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)])
    mapping = is_isomorphic_small(Graph.cycle(5), relabeled)
    assert mapping is not None
    c5 = Graph.cycle(5)
    assert all(relabeled.has_edge(mapping[u], mapping[v]) for u, v in c5.edges())


def test_is_isomorphic_small_rejects_different_graphs() -> None:
    assert is_isomorphic_small(Graph.cycle(6), Graph.from_edges(6, [])) is None
    assert is_isomorphic_small(Graph.cycle(6), Graph.path(6)) is None


def test_is_isomorphic_small_size_guard() -> None:
    with pytest.raises(SizeGuardError):
        is_isomorphic_small(EMERALD, EMERALD, config=OracleConfig(isomorphism_limit=10))


def test_automorphism_counts() -> None:
    assert len(automorphisms(C7)) == 14
    assert automorphisms(C7)[0] == tuple(range(7))
    assert len(automorphisms(Graph.complete(3))) == 6


def test_canonical_hash_is_label_free() -> None:
    shuffled = Graph.from_edges(4, [(2, 0), (0, 3), (3, 1), (1, 2)])
    assert canonical_hash(shuffled) == canonical_hash(Graph.cycle(4))


def test_is_perfect_small() -> None:
    assert is_perfect_small(Graph.cycle(6))
    assert not is_perfect_small(Graph.cycle(7))
    assert not is_perfect_small(Graph.cycle(7).complement())
    assert not is_perfect_small(EMERALD)
