import itertools
from collections import Counter

import pytest

from chromalab.graphs.core import embed_induced
from chromalab.structure.catalog import (
    BASES,
    C7_PLUS_2T,
    EMERALD,
    EMERALD_TRIANGLES,
    automorphisms_sending,
    ek3_stable_system,
    emerald_automorphisms,
    end_triangles,
    gx_violations,
    middle_triangle,
    special_emerald_parameters,
    special_emerald_violations,
    special_emerald_weights,
    triangles_of,
)


def test_emerald_shape() -> None:
    assert EMERALD.n == 11
    assert EMERALD.edge_count == 22
    assert set(EMERALD.degree_sequence()) == {4}


def test_emerald_clique_and_stability_numbers() -> None:
    vertices = range(EMERALD.n)
    assert any(EMERALD.is_clique(t) for t in itertools.combinations(vertices, 3))
    assert not any(EMERALD.is_clique(q) for q in itertools.combinations(vertices, 4))
    assert any(EMERALD.is_stable(s) for s in itertools.combinations(vertices, 3))
    assert not any(EMERALD.is_stable(s) for s in itertools.combinations(vertices, 4))


def test_triangle_list_is_complete() -> None:
    found = {
        frozenset(EMERALD.labels[v] for v in t)
        for t in itertools.combinations(range(EMERALD.n), 3)
        if EMERALD.is_clique(t)
    }
    assert found == {frozenset(t) for t in EMERALD_TRIANGLES}


def test_ek3_system_covers_every_vertex_three_times() -> None:
    system = ek3_stable_system()
    assert len(system) == 11
    counts = Counter(label for triple in system for label in triple)
    assert counts == dict.fromkeys(EMERALD.labels, 3)
    for triple in system:
        assert EMERALD.is_stable([EMERALD.index_of(label) for label in triple])


def test_triangles_through_vertex_8() -> None:
    assert triangles_of("8") == (("1", "7", "8"), ("1", "2", "8"), ("2", "8", "9"))
    assert middle_triangle("8") == ("1", "2", "8")
    assert end_triangles("8") == (("1", "7", "8"), ("2", "8", "9"))
    with pytest.raises(KeyError):
        triangles_of("12")


def test_emerald_automorphisms() -> None:
    autos = emerald_automorphisms()
    assert len(autos) == 22
    assert autos[0] == {label: label for label in EMERALD.labels}
    for sigma in autos:
        for u, v in EMERALD.edges():
            a, b = sigma[EMERALD.labels[u]], sigma[EMERALD.labels[v]]
            assert EMERALD.has_edge(EMERALD.index_of(a), EMERALD.index_of(b))
    assert len(automorphisms_sending("8", "3")) == 2


@pytest.mark.parametrize("name", sorted(BASES))
def test_catalog_bases_are_induced_in_emerald(name: str) -> None:
    assert embed_induced(BASES[name], EMERALD) is not None


def test_special_emerald_weights_round_trip() -> None:
    weights = special_emerald_weights(x=5, y=3, z=3, r=0, s=0, p=1)
    assert weights == (5, 5, 3, 3, 3, 3, 3, 1, 3, 5, 5)
    by_label = dict(zip(EMERALD.labels, weights, strict=True))
    assert special_emerald_parameters(by_label) == (5, 3, 3, 0, 0, 1)
    assert special_emerald_violations(by_label) == []


def test_special_emerald_weights_rejects_unbalanced() -> None:
    with pytest.raises(ValueError, match="y\\+z"):
        special_emerald_weights(x=5, y=3, z=2, r=0, s=0, p=1)


def test_special_emerald_violations_collects_everything() -> None:
    by_label = dict(zip(EMERALD.labels, (5, 4, 3, 3, 3, 3, 3, 1, 3, 5, 6), strict=True))
    failures = special_emerald_violations(by_label)
    assert len(failures) == 2
    assert any("|L2|" in f for f in failures)
    assert any("|L11|" in f for f in failures)


def test_gx_violations() -> None:
    good = {"1": 4, "3": 4, "4": 4, "5": 4, "6": 4, "7": 4, "t7": 2, "2": 3, "t2": 3}
    assert set(good) == set(C7_PLUS_2T.labels)
    assert gx_violations(good, 4) == []
    bad = good | {"t7": 3, "t2": 4, "2": 2, "7": 3}
    assert gx_violations(bad, 4) == ["|Lt7|+|Lt2| = 7 > 6"]
