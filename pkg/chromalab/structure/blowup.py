"""Blowups of fixed base graphs.

A :class:`BlowupSpec` substitutes a clique of size ``weights[u]`` (possibly empty)
for every base vertex ``u``. The realized graph's clique number is the maximum
weight of a base clique.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

from chromalab.errors import InvalidSpecError
from chromalab.graphs.core import Graph, blowup
from chromalab.oracle.cliques import max_weight_clique
from chromalab.structure.catalog import BASES, EMERALD
from chromalab.structure.realization import Realization


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class BlowupSpec:
    """Base graph plus one nonnegative bag size per base vertex.

    Args:
        base: The base graph (usually a catalog constant).
        weights: Bag sizes in base vertex order.
        name: Catalog name of the base, or ``"custom"``.

    Raises:
        InvalidSpecError: On a length mismatch or a negative weight.
    """

    base: Graph
    weights: tuple[int, ...]
    name: str = "custom"

    def __post_init__(self) -> None:
        problems: list[str] = []
        if len(self.weights) != self.base.n:
            problems.append(f"{len(self.weights)} weights for {self.base.n} base vertices")
        problems.extend(
            f"negative weight {w} on {self.base.labels[u]}"
            for u, w in enumerate(self.weights)
            if w < 0
        )
        if problems:
            raise InvalidSpecError(
                "invalid blowup spec: " + "; ".join(problems), violations=problems
            )

    # --------------------------------------------------------------------------
    @classmethod
    def of(cls, name: str, weights: Mapping[str, int] | Sequence[int]) -> BlowupSpec:
        """Spec over the catalog base ``name``; weights by label or in vertex order.

        Labels missing from a mapping get weight 0.
        """
        try:
            base = BASES[name]
        except KeyError:
            raise InvalidSpecError(f"unknown base {name!r}") from None
        if isinstance(weights, Mapping):
            unknown = set(weights) - set(base.labels)
            if unknown:
                raise InvalidSpecError(f"labels {sorted(unknown)} not in base {name!r}")
            values = tuple(int(weights.get(label, 0)) for label in base.labels)
        else:
            values = tuple(int(w) for w in weights)
        return cls(base=base, weights=values, name=name)

    @classmethod
    def uniform(cls, name: str, t: int) -> BlowupSpec:
        """Every bag of the catalog base ``name`` has size ``t``."""
        return cls.of(name, [t] * BASES[name].n)

    # --------------------------------------------------------------------------
    @property
    def n(self) -> int:
        """Number of realized vertices."""
        return sum(self.weights)

    @property
    def omega(self) -> int:
        """Clique number of the realization."""
        return max_weight_clique(self.base, self.weights)[0]

    def weight(self, label: str) -> int:
        return self.weights[self.base.index_of(label)]

    def weight_map(self) -> dict[str, int]:
        return dict(zip(self.base.labels, self.weights, strict=True))

    def support(self) -> tuple[int, ...]:
        """Base vertices with a nonempty bag."""
        return tuple(u for u, w in enumerate(self.weights) if w > 0)

    def with_weights(self, weights: Sequence[int]) -> BlowupSpec:
        return BlowupSpec(base=self.base, weights=tuple(weights), name=self.name)

    def minus(self, labels: Iterable[str], amount: int = 1) -> BlowupSpec:
        """Shrink the named bags by ``amount`` each.

        Raises:
            InvalidSpecError: If a bag would become negative.
        """
        values = list(self.weights)
        for label in labels:
            values[self.base.index_of(label)] -= amount
        return self.with_weights(values)

    def permuted(self, sigma: Mapping[str, str]) -> BlowupSpec:
        """Move the bag of ``u`` to ``sigma[u]``; ``sigma`` should be an automorphism."""
        values = [0] * self.base.n
        for label, w in zip(self.base.labels, self.weights, strict=True):
            values[self.base.index_of(sigma[label])] = w
        return self.with_weights(values)

    def realize(self) -> Realization:
        graph, bags = blowup(self.base, self.weights)
        return Realization(
            graph=graph, bags=bags, bag_names=self.base.labels, ids=tuple(range(graph.n))
        )


# ------------------------------------------------------------------------------
def p_value(spec: BlowupSpec) -> int:
    """Minimum bag size of an emerald blowup.

    Raises:
        InvalidSpecError: If the base is not the emerald.
    """
    if spec.base != EMERALD:
        raise InvalidSpecError(f"p_value needs the emerald base, got {spec.name!r}")
    return min(spec.weights)
