"""JSON form of structure specs.

Blowups::

    {"kind": "blowup", "base": "emerald", "weights": {"1": 2, ...}}

Custom bases add ``"labels"`` and ``"edges"`` (label pairs). Bracelets::

    {"kind": "bracelet", "bags": {"A1^0": [0, 1], ...},
     "cross": {"e72": [[u, v], ...], "e13": [...], "e61": [...]}}

Output is deterministic: keys sorted, pairs sorted.
"""

from __future__ import annotations

import json
from typing import Any

from chromalab.errors import InvalidSpecError
from chromalab.graphs.core import Graph
from chromalab.structure.blowup import BlowupSpec
from chromalab.structure.bracelet import CROSS_RELATIONS, PART_KEYS, BraceletSpec
from chromalab.structure.catalog import BASES

type Spec = BlowupSpec | BraceletSpec


# ------------------------------------------------------------------------------
def spec_to_dict(spec: Spec) -> dict[str, Any]:
    """JSON-compatible dict for a blowup or bracelet spec."""
    if isinstance(spec, BlowupSpec):
        data: dict[str, Any] = {
            "kind": "blowup",
            "base": spec.name,
            "weights": spec.weight_map(),
        }
        if spec.name not in BASES or BASES[spec.name] != spec.base:
            data["base"] = "custom"
            labels = spec.base.labels
            data["labels"] = list(labels)
            data["edges"] = [[labels[u], labels[v]] for u, v in spec.base.edges()]
        return data
    return {
        "kind": "bracelet",
        "bags": {key: list(spec.parts[key]) for key in PART_KEYS if spec.parts[key]},
        "cross": {name: [list(p) for p in sorted(spec.cross(name))] for name in CROSS_RELATIONS},
    }


# ------------------------------------------------------------------------------
def spec_from_dict(data: dict[str, Any]) -> Spec:
    """Inverse of :func:`spec_to_dict`.

    Raises:
        InvalidSpecError: On unknown kinds, bases or malformed fields.
    """
    kind = data.get("kind")
    try:
        if kind == "blowup":
            name = data["base"]
            weights = {str(k): int(v) for k, v in data["weights"].items()}
            if name == "custom":
                labels = [str(x) for x in data["labels"]]
                edges = [(str(a), str(b)) for a, b in data["edges"]]
                base = Graph.from_labeled_edges(labels, edges)
                return BlowupSpec(
                    base=base, weights=tuple(weights.get(label, 0) for label in labels)
                )
            return BlowupSpec.of(name, weights)
        if kind == "bracelet":
            parts = {str(k): tuple(int(v) for v in vs) for k, vs in data["bags"].items()}
            cross = data.get("cross", {})
            return BraceletSpec(
                parts=parts,
                **{
                    name: frozenset((int(a), int(b)) for a, b in cross.get(name, []))
                    for name in CROSS_RELATIONS
                },
            )
    except InvalidSpecError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidSpecError(f"malformed {kind} spec: {exc}") from exc
    raise InvalidSpecError(f"unknown spec kind {kind!r}")


# ------------------------------------------------------------------------------
def dumps_spec(spec: Spec) -> str:
    return json.dumps(spec_to_dict(spec), indent=2, sort_keys=True) + "\n"


# ------------------------------------------------------------------------------
def loads_spec(text: str) -> Spec:
    """Parse a spec, accepting either the bare form or a fixture wrapper with ``"spec"``."""
    data = json.loads(text)
    if isinstance(data, dict) and "spec" in data and "kind" not in data:
        data = data["spec"]
    if not isinstance(data, dict):
        raise InvalidSpecError("spec JSON must be an object")
    return spec_from_dict(data)
