import pytest

from chromalab.colorers.budget import BoundKind, eleven_ninths
from chromalab.colorers.driver import color_graph, color_spec
from chromalab.errors import NotInClassError, PreconditionError, SizeGuardError
from chromalab.generators import Family, GenConfig, gen
from chromalab.graphs.coloring import verify_coloring
from chromalab.graphs.core import Graph, disjoint_union
from chromalab.oracle.cliques import clique_number
from chromalab.structure.blowup import BlowupSpec
from chromalab.structure.bracelet import BraceletSpec
from chromalab.structure.catalog import C7, EMERALD


def _with_universal_vertex(g: Graph) -> Graph:
    edges = [*g.edges(), *((v, g.n) for v in range(g.n))]
    return Graph.from_edges(g.n + 1, edges)


def test_color_graph_on_the_emerald() -> None:
    coloring = color_graph(EMERALD)
    assert verify_coloring(EMERALD, coloring).is_proper
    assert coloring.k == 4


def test_color_graph_on_components() -> None:
    g = disjoint_union(EMERALD, C7)
    coloring = color_graph(g)
    assert verify_coloring(g, coloring).is_proper
    assert coloring.k <= 4


def test_color_graph_splits_at_a_clique_cutset() -> None:
    # two triangles sharing vertex 1, with a pendant edge at 3
    g = Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (3, 4), (3, 5)])
    coloring = color_graph(g)
    assert verify_coloring(g, coloring).is_proper
    assert coloring.k == 3


def test_bowtie_keeps_three_colors() -> None:
    # two triangles sharing vertex 0
    g = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
    coloring = color_graph(g)
    assert verify_coloring(g, coloring).is_proper
    assert coloring.k == 3


def test_color_graph_on_empty_and_edgeless_graphs() -> None:
    assert color_graph(Graph.from_edges(0, [])).k == 0
    assert color_graph(Graph.from_edges(3, [])).k == 1


@pytest.mark.slow
def test_universal_vertex_costs_one_color() -> None:
    g = _with_universal_vertex(BlowupSpec.uniform("emerald", 2).realize().graph)
    coloring = color_graph(g)
    assert verify_coloring(g, coloring).is_proper
    assert coloring.k == 9


@pytest.mark.parametrize("g", [Graph.cycle(4), Graph.cycle(5), Graph.path(7)])
def test_color_graph_rejects_non_members(g: Graph) -> None:
    with pytest.raises(NotInClassError) as info:
        color_graph(g)
    assert info.value.report.witness is not None


def test_color_spec_uses_the_spec_bound() -> None:
    colored = color_spec(BlowupSpec.uniform("emerald", 2))
    assert colored.budget.bound_kind is BoundKind.ELEVEN_NINTHS
    assert colored.budget.budget == 8
    assert colored.coloring.k == 8
    assert colored.realization.graph.n == 22


@pytest.mark.parametrize(
    ("name", "t"), [("c7", 2), ("c7v", 1), ("c7_2t", 2), ("c7_2f", 1), ("e_minus_8", 1)]
)
def test_color_spec_seven_sixths_bases(name: str, t: int) -> None:
    colored = color_spec(BlowupSpec.uniform(name, t))
    assert colored.budget.bound_kind is BoundKind.SEVEN_SIXTHS
    assert colored.coloring.k <= colored.budget.budget


def test_color_spec_accepts_a_looser_bound() -> None:
    colored = color_spec(BlowupSpec.uniform("c7", 2), bound=BoundKind.ELEVEN_NINTHS)
    assert colored.budget.bound_kind is BoundKind.ELEVEN_NINTHS
    assert colored.budget.budget == 5


def test_color_spec_refuses_a_tighter_bound() -> None:
    with pytest.raises(PreconditionError, match="promises 8 colors"):
        color_spec(BlowupSpec.uniform("emerald", 2), bound=BoundKind.SEVEN_SIXTHS)


def test_color_spec_exact() -> None:
    colored = color_spec(BlowupSpec.uniform("c7", 2), bound=BoundKind.EXACT)
    assert colored.budget.bound_kind is BoundKind.EXACT
    assert colored.coloring.k == 5


def test_color_spec_exact_is_size_guarded() -> None:
    spec = BraceletSpec.sized([4] * 7)
    with pytest.raises(SizeGuardError):
        color_spec(spec, bound=BoundKind.EXACT)


def test_color_spec_on_a_bracelet() -> None:
    colored = color_spec(BraceletSpec.sized([1] * 7))
    assert colored.budget.bound_kind is BoundKind.SEVEN_SIXTHS
    assert colored.budget.budget == 3
    assert colored.coloring.k == 3


def test_color_spec_on_gx() -> None:
    weights = dict.fromkeys(("1", "3", "4", "5", "6"), 2)
    weights.update({"7": 3, "t7": 1, "2": 2, "t2": 2})
    colored = color_spec(BlowupSpec.of("gx", weights))
    assert colored.budget.budget == 6
    assert colored.coloring.k <= 6


COMPOSITE_PARTNERS = (Family.C7_PLUS_V, Family.C7_PLUS_2T, Family.C7_PLUS_2F, Family.E_MINUS_8)


def _composite(seed: int) -> Graph:
    first = gen(GenConfig(Family.EMERALD_RANDOM, seed=seed, params={"w_max": 2}))
    partner = COMPOSITE_PARTNERS[seed % len(COMPOSITE_PARTNERS)]
    second = gen(GenConfig(partner, seed=seed, params={"w_max": 2}))
    g = disjoint_union(first.realize().graph, second.realize().graph)
    for _ in range(1 + seed % 2):
        g = _with_universal_vertex(g)
    return g


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(50))
def test_color_graph_on_composite_instances(seed: int) -> None:
    g = _composite(seed)
    coloring = color_graph(g)
    assert verify_coloring(g, coloring).is_proper
    assert coloring.k <= eleven_ninths(clique_number(g).omega)
