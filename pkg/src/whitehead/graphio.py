"""Text graph files, tuple files and DOT export.

Graph file::

    # comments and blank lines are ignored
    agraph <vertex_count> <rank> [base]
    <u> <letter> <v>          one line per positive edge, vertices 1-based

An edge written with an inverse letter (``2 A 1``) is stored as its
positive dual (``1 a 2``).  A tuple file holds several ``agraph`` blocks
and/or ``cyclic <word>`` lines.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .agraph import AGraph, PointedAGraph, graph_from_word
from .words import WordError, letter_name, parse_letter, parse_word


class GraphFileError(ValueError):
    pass


@dataclass
class GraphFile:
    graph: AGraph
    base: int | None = None

    @property
    def pointed(self) -> PointedAGraph:
        return PointedAGraph(self.graph, self.base or 0)


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _parse_header(no: int, parts: list[str]) -> tuple[int, int, int | None]:
    if len(parts) not in (3, 4):
        raise GraphFileError(f"line {no}: expected 'agraph <vertex_count> <rank> [base]'")
    try:
        n, rank = int(parts[1]), int(parts[2])
        base = int(parts[3]) - 1 if len(parts) == 4 else None
    except ValueError as e:
        raise GraphFileError(f"line {no}: bad header token ({e})") from None
    if n < 0 or rank < 1:
        raise GraphFileError(f"line {no}: bad vertex count or rank")
    if base is not None and not 0 <= base < max(n, 1):
        raise GraphFileError(f"line {no}: base {base + 1} is not a vertex")
    return n, rank, base


def _parse_blocks(text: str):
    """Yield ('graph', GraphFile) and ('cyclic', word) items in file order."""
    current = None
    edges: list[tuple[int, int, int]] = []
    seen: set = set()

    def close():
        n, rank, base = current
        return GraphFile(AGraph(n, tuple(edges), rank), base)

    for no, line in _lines(text):
        parts = line.split()
        if parts[0] == "agraph":
            if current is not None:
                yield "graph", close()
            current = _parse_header(no, parts)
            edges, seen = [], set()
            continue
        if parts[0] == "cyclic":
            if current is not None:
                yield "graph", close()
                current = None
            if len(parts) != 2:
                raise GraphFileError(f"line {no}: expected 'cyclic <word>'")
            try:
                yield "cyclic", parse_word(parts[1])
            except WordError as e:
                raise GraphFileError(f"line {no}: {e}") from None
            continue
        if current is None:
            raise GraphFileError(f"line {no}: edge {line!r} before 'agraph' header")
        n, rank, _ = current
        if len(parts) != 3:
            raise GraphFileError(f"line {no}: expected '<u> <letter> <v>', got {line!r}")
        try:
            x, y = int(parts[0]) - 1, int(parts[2]) - 1
        except ValueError:
            raise GraphFileError(f"line {no}: bad vertex id in {line!r}") from None
        try:
            a = parse_letter(parts[1])
        except WordError:
            raise GraphFileError(f"line {no}: bad letter {parts[1]!r}") from None
        if abs(a) > rank:
            raise GraphFileError(f"line {no}: letter {parts[1]!r} exceeds rank {rank}")
        for z in (x, y):
            if not 0 <= z < n:
                raise GraphFileError(f"line {no}: dangling vertex id {z + 1}")
        if a < 0:
            x, a, y = y, -a, x
        if (x, a, y) in seen:
            raise GraphFileError(f"line {no}: duplicate edge {line!r}")
        seen.add((x, a, y))
        edges.append((x, a, y))
    if current is not None:
        yield "graph", close()


def parse_graph_file(text: str) -> GraphFile:
    items = list(_parse_blocks(text))
    graphs = [g for kind, g in items if kind == "graph"]
    if len(items) != 1 or len(graphs) != 1:
        raise GraphFileError("expected exactly one 'agraph' block")
    return graphs[0]


def parse_tuple_file(text: str) -> list[AGraph]:
    out = []
    for kind, item in _parse_blocks(text):
        out.append(item.graph if kind == "graph" else graph_from_word(item))
    if not out:
        raise GraphFileError("tuple file is empty")
    return out


def write_graph_file(g: AGraph, base: int | None = None) -> str:
    head = f"agraph {g.vertex_count} {g.rank}" + ("" if base is None else f" {base + 1}")
    lines = [head]
    for x, a, y in g.edges:
        lines.append(f"{x + 1} {letter_name(a, g.rank)} {y + 1}")
    return "\n".join(lines) + "\n"


def normalize_graph_text(text: str) -> str:
    """Canonical text of a graph file: comments stripped, inverse edges flipped."""
    f = parse_graph_file(text)
    return write_graph_file(f.graph, f.base)


def to_dot(g: AGraph, base: int | None = None, name: str = "G") -> str:
    """DOT drawing with positively labelled edges only."""
    lines = [f"digraph {name} {{", "  node [shape=circle];"]
    for x in range(g.vertex_count):
        shape = ' [shape=doublecircle]' if x == base else ""
        lines.append(f'  {x + 1}{shape};')
    for x, a, y in g.edges:
        lines.append(f'  {x + 1} -> {y + 1} [label="{letter_name(a, g.rank)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graphs_to_text(graphs: Sequence[AGraph]) -> str:
    return "".join(write_graph_file(g) for g in graphs)
