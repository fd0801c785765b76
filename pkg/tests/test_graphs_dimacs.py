from pathlib import Path

import pytest

from chromalab.errors import DimacsParseError
from chromalab.graphs.coloring import Coloring
from chromalab.graphs.core import Graph
from chromalab.graphs.dimacs import (
    format_coloring,
    format_dimacs,
    parse_dimacs,
    read_dimacs,
    write_dimacs,
)

C4_TEXT = """\
c a four-cycle
p edge 4 4
e 1 2
e 2 3

e 3 4
e 4 1
"""


def test_parse_dimacs_keeps_comments() -> None:
    parsed = parse_dimacs(C4_TEXT)
    assert parsed.comments == ("a four-cycle",)
    assert parsed.graph.n == 4
    assert list(parsed.graph.edges()) == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert parsed.graph.labels == ("1", "2", "3", "4")


@pytest.mark.parametrize(
    ("text", "line_number"),
    [
        ("e 1 2\n", 1),
        ("p edge 3 1\ne 1 4\n", 2),
        ("p edge 3 1\ne 2 2\n", 2),
        ("p edge 3\n", 1),
        ("p edge 2 1\np edge 2 1\n", 2),
        ("p edge 2 1\ne 1 x\n", 2),
        ("c ok\nq 1 2\n", 2),
        ("c only comments\n", 0),
    ],
)
def test_parse_dimacs_errors_carry_line_numbers(text: str, line_number: int) -> None:
    with pytest.raises(DimacsParseError) as excinfo:
        parse_dimacs(text)
    assert excinfo.value.line_number == line_number


def test_format_dimacs() -> None:
    assert format_dimacs(Graph.path(3)) == "p edge 3 2\ne 1 2\ne 2 3\n"


def test_write_then_read(tmp_path: Path) -> None:
    path = tmp_path / "c5.col"
    write_dimacs(path, Graph.cycle(5))
    assert list(read_dimacs(path).graph.edges()) == list(Graph.cycle(5).edges())


def test_format_coloring() -> None:
    assert format_coloring(Coloring(assignment=(1, 2, 1))) == "s 2\nv 1 1\nv 2 2\nv 3 1\n"
