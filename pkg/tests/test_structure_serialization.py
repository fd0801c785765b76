import json

import pytest

from chromalab.errors import InvalidSpecError
from chromalab.graphs.core import Graph
from chromalab.structure.blowup import BlowupSpec
from chromalab.structure.bracelet import BraceletSpec
from chromalab.structure.serialization import (
    dumps_spec,
    loads_spec,
    spec_from_dict,
    spec_to_dict,
)


def test_catalog_blowup_dict() -> None:
    spec = BlowupSpec.of("c7", [1, 2, 3, 4, 5, 6, 7])
    data = spec_to_dict(spec)
    assert data == {
        "kind": "blowup",
        "base": "c7",
        "weights": {"1": 1, "2": 2, "3": 3, "4": 4, "5": 5, "6": 6, "7": 7},
    }
    assert spec_from_dict(data) == spec


def test_custom_base_keeps_edges() -> None:
    spec = BlowupSpec(base=Graph.path(3), weights=(1, 0, 2))
    data = spec_to_dict(spec)
    assert data["base"] == "custom"
    assert data["edges"] == [["0", "1"], ["1", "2"]]
    assert spec_from_dict(data) == spec


def test_bracelet_text_is_deterministic() -> None:
    spec = BraceletSpec(
        parts={
            "A1^0": (1,),
            "A2^-": (21, 20),
            "A3^0": (3,),
            "A4": (4,),
            "A5": (5,),
            "A6^0": (6,),
            "A7^+": (7,),
        },
        e72=frozenset({(7, 21), (7, 20)}),
    )
    text = dumps_spec(spec)
    data = json.loads(text)
    assert data["bags"]["A2^-"] == [20, 21]
    assert data["cross"] == {"e13": [], "e61": [], "e72": [[7, 20], [7, 21]]}
    assert loads_spec(text) == spec
    assert dumps_spec(loads_spec(text)) == text


def test_loads_spec_unwraps_fixture() -> None:
    text = json.dumps({"schema": 1, "spec": {"kind": "blowup", "base": "c7", "weights": {}}})
    spec = loads_spec(text)
    assert isinstance(spec, BlowupSpec)
    assert spec.n == 0


@pytest.mark.parametrize(
    "data",
    [
        {"kind": "hypergraph"},
        {"kind": "blowup", "base": "c7"},
        {"kind": "blowup", "base": "c7", "weights": {"1": "many"}},
        {"kind": "blowup", "base": "nope", "weights": {}},
        {"kind": "blowup", "base": "c7", "weights": {"1": -1}},
        {"kind": "bracelet", "bags": {"A1^0": [1]}, "cross": {"e72": [[1]]}},
    ],
)
def test_spec_from_dict_rejects_bad_input(data: dict[str, object]) -> None:
    with pytest.raises(InvalidSpecError):
        spec_from_dict(data)


def test_loads_spec_rejects_non_object() -> None:
    with pytest.raises(InvalidSpecError):
        loads_spec("[1, 2]")
