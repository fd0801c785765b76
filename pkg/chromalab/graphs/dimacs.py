"""DIMACS ``.col`` reading and writing.

Input lines are ``c ...`` comments, one ``p edge n m`` problem line and ``e u v`` edges
with 1-indexed endpoints. Comments are kept on read and never written.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from chromalab.errors import DimacsParseError
from chromalab.graphs.coloring import Coloring
from chromalab.graphs.core import Graph


# ------------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class DimacsGraph:
    """A parsed DIMACS file: the graph and its comment lines (without the ``c``)."""

    graph: Graph
    comments: tuple[str, ...]


# ------------------------------------------------------------------------------
def parse_dimacs(text: str) -> DimacsGraph:
    """Parse DIMACS ``.col`` text.

    Raises:
        DimacsParseError: On any malformed line, with its 1-based line number.
    """
    comments: list[str] = []
    n: int | None = None
    declared_edges = 0
    edges: list[tuple[int, int]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        tag, _, rest = line.partition(" ")
        if tag == "c":
            comments.append(rest)
        elif tag == "p":
            fields = rest.split()
            if n is not None:
                raise DimacsParseError("duplicate problem line", line_number=number)
            if len(fields) != 3 or fields[0] not in ("edge", "col"):
                raise DimacsParseError(f"expected 'p edge n m', got {line!r}", line_number=number)
            try:
                n, declared_edges = int(fields[1]), int(fields[2])
            except ValueError:
                raise DimacsParseError(
                    f"non-integer sizes in {line!r}", line_number=number
                ) from None
            if n < 0 or declared_edges < 0:
                raise DimacsParseError("negative sizes", line_number=number)
        elif tag == "e":
            if n is None:
                raise DimacsParseError("edge before problem line", line_number=number)
            fields = rest.split()
            if len(fields) != 2:
                raise DimacsParseError(f"expected 'e u v', got {line!r}", line_number=number)
            try:
                u, v = int(fields[0]), int(fields[1])
            except ValueError:
                raise DimacsParseError(
                    f"non-integer endpoint in {line!r}", line_number=number
                ) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsParseError(f"endpoint out of range 1..{n}", line_number=number)
            if u == v:
                raise DimacsParseError(f"self-loop at {u}", line_number=number)
            edges.append((u - 1, v - 1))
        else:
            raise DimacsParseError(f"unknown line type {tag!r}", line_number=number)
    if n is None:
        raise DimacsParseError("missing problem line", line_number=0)
    graph = Graph.from_edges(n, edges, labels=[str(v + 1) for v in range(n)])
    return DimacsGraph(graph=graph, comments=tuple(comments))


# ------------------------------------------------------------------------------
def read_dimacs(path: Path) -> DimacsGraph:
    """Read and parse a DIMACS file (UTF-8)."""
    return parse_dimacs(path.read_text(encoding="utf-8"))


# ------------------------------------------------------------------------------
def format_dimacs(g: Graph) -> str:
    """Render ``g`` as DIMACS text with a trailing newline."""
    lines = [f"p edge {g.n} {g.edge_count}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------------------------
def write_dimacs(path: Path, g: Graph) -> None:
    path.write_text(format_dimacs(g), encoding="utf-8")


# ------------------------------------------------------------------------------
def format_coloring(coloring: Coloring) -> str:
    """Render a coloring as ``s <k>`` followed by 1-indexed ``v <vertex> <color>`` lines."""
    lines = [f"s {coloring.k}"]
    lines.extend(f"v {v + 1} {c}" for v, c in enumerate(coloring.assignment))
    return "\n".join(lines) + "\n"
