"""Plain-text edge-list format.

One record per line: ``TAIL HEAD [MULT]``. Blank lines and lines whose first
non-space character is ``#`` are ignored. Vertices are registered in order
of first appearance; a record with multiplicity ``k`` expands to ``k``
consecutive edge ids.
"""

from __future__ import annotations

import re

from .errors import BadMultiplicity, EmptyGraph, GraphSyntaxError
from .graph import DirectedMultigraph

_TOKEN = re.compile(r"[A-Za-z0-9_]+\Z")


def parse_graph_file(text: str) -> DirectedMultigraph:
    vertices: dict[str, None] = {}
    edges: list[tuple[str, str]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split()
        if len(fields) not in (2, 3):
            raise GraphSyntaxError(lineno, f"expected 'TAIL HEAD [MULT]', got {len(fields)} field(s)")
        tail, head = fields[0], fields[1]
        for tok in (tail, head):
            if not _TOKEN.match(tok):
                raise GraphSyntaxError(lineno, f"invalid vertex token {tok!r}")
        mult = 1
        if len(fields) == 3:
            if not fields[2].isdigit() or int(fields[2]) < 1:
                raise BadMultiplicity(lineno, f"multiplicity must be a positive integer, got {fields[2]!r}")
            mult = int(fields[2])
        vertices.setdefault(tail)
        vertices.setdefault(head)
        edges.extend([(tail, head)] * mult)
    if not edges:
        raise EmptyGraph("graph file has no edge records")
    return DirectedMultigraph(list(vertices), edges)


def dump_graph(g: DirectedMultigraph) -> str:
    """Render ``g`` as edge records, folding runs of identical edges into a multiplicity."""
    lines = []
    pairs = g.edge_pairs()
    i = 0
    while i < len(pairs):
        j = i
        while j + 1 < len(pairs) and pairs[j + 1] == pairs[i]:
            j += 1
        tail, head = pairs[i]
        count = j - i + 1
        lines.append(f"{tail} {head}" if count == 1 else f"{tail} {head} {count}")
        i = j + 1
    return "\n".join(lines) + "\n"
