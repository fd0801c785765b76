"""Recognition of blowups of induced subgraphs of a fixed base.

A graph is a blowup of an induced subgraph of ``H`` iff its true-twin quotient
embeds into ``H`` as an induced subgraph; the class sizes become the bag sizes and
every unused base vertex gets an empty bag.
"""

from __future__ import annotations

from dataclasses import dataclass

from chromalab.exp.logging import get_logger
from chromalab.graphs.core import Graph, embed_induced
from chromalab.graphs.twins import quotient_by_true_twins
from chromalab.structure.blowup import BlowupSpec
from chromalab.structure.catalog import BASES, EMERALD

# ------------------------------------------------------------------------------
logger = get_logger(__name__)


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class BlowupEmbedding:
    """A recognized blowup together with the vertices realizing each bag.

    Args:
        spec: The recognized spec.
        bags: ``bags[u]`` lists the input vertices substituted for base vertex ``u``.
    """

    spec: BlowupSpec
    bags: tuple[tuple[int, ...], ...]


# ------------------------------------------------------------------------------
def embed_blowup(g: Graph, base: Graph, *, name: str = "custom") -> BlowupEmbedding | None:
    """Recognize ``g`` as a blowup of an induced subgraph of ``base``.

    Returns:
        The first embedding in lexicographic order, or None.
    """
    quotient = quotient_by_true_twins(g)
    if quotient.base.n > base.n:
        return None
    mapping = embed_induced(quotient.base, base)
    if mapping is None:
        return None
    weights = [0] * base.n
    bags: list[tuple[int, ...]] = [() for _ in range(base.n)]
    for c, host in enumerate(mapping):
        weights[host] = quotient.weights[c]
        bags[host] = quotient.classes[c]
    logger.debug("embedded %d-class quotient into %s", quotient.base.n, name)
    return BlowupEmbedding(
        spec=BlowupSpec(base=base, weights=tuple(weights), name=name), bags=tuple(bags)
    )


# ------------------------------------------------------------------------------
def embed_emerald_blowup(g: Graph) -> BlowupEmbedding | None:
    """Like :func:`recognize_emerald_blowup`, also returning the bag vertices."""
    return embed_blowup(g, EMERALD, name="emerald")


# ------------------------------------------------------------------------------
def recognize_emerald_blowup(g: Graph) -> BlowupSpec | None:
    """Recognize ``g`` as a blowup of an induced subgraph of the emerald.

    Args:
        g: Any graph.

    Returns:
        A spec over the emerald (zero weights on unused vertices) whose realization
        is isomorphic to ``g``, or None.
    """
    found = embed_emerald_blowup(g)
    return None if found is None else found.spec


# ------------------------------------------------------------------------------
def recognize_in_catalog(g: Graph, names: tuple[str, ...]) -> BlowupEmbedding | None:
    """Try the catalog bases ``names`` in order and return the first embedding."""
    for name in names:
        found = embed_blowup(g, BASES[name], name=name)
        if found is not None:
            return found
    return None
