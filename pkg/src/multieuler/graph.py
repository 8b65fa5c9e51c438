"""Directed multigraphs, degree queries, the Laplacian and the lifted multigraph."""

from __future__ import annotations

from collections import deque
from collections.abc import Hashable, Iterable, Mapping, Sequence
from dataclasses import dataclass
from typing import Union

from .errors import (
    DimensionMismatch,
    DuplicateVertex,
    EmptyGraph,
    NonPositiveEntry,
    NotStronglyConnected,
    UnknownEdge,
    UnknownVertex,
)

Vertex = Hashable
VectorLike = Union[Sequence[int], Mapping[Vertex, int]]


@dataclass(frozen=True)
class Edge:
    id: int
    tail: Vertex
    head: Vertex


class DirectedMultigraph:
    """Finite directed multigraph with loops and parallel edges.

    Vertices keep their insertion order and are addressed internally by
    position; edges are numbered ``0..m-1`` in insertion order.
    """

    __slots__ = ("vertices", "edges", "_index", "_tails", "_heads", "_out", "_in")

    def __init__(self, vertices: Iterable[Vertex], edges: Iterable[tuple[Vertex, Vertex]]):
        self.vertices: tuple[Vertex, ...] = tuple(vertices)
        if not self.vertices:
            raise EmptyGraph("a graph needs at least one vertex")
        index: dict[Vertex, int] = {}
        for i, v in enumerate(self.vertices):
            if v in index:
                raise DuplicateVertex(f"duplicate vertex {v!r}")
            index[v] = i
        self._index = index

        tails, heads, out, inn = [], [], [[] for _ in index], [[] for _ in index]
        built = []
        for eid, (u, v) in enumerate(edges):
            if u not in index:
                raise UnknownVertex(f"edge {eid} has unknown tail {u!r}")
            if v not in index:
                raise UnknownVertex(f"edge {eid} has unknown head {v!r}")
            tails.append(index[u])
            heads.append(index[v])
            out[index[u]].append(eid)
            inn[index[v]].append(eid)
            built.append(Edge(eid, u, v))
        self.edges: tuple[Edge, ...] = tuple(built)
        self._tails = tuple(tails)
        self._heads = tuple(heads)
        self._out = tuple(tuple(x) for x in out)
        self._in = tuple(tuple(x) for x in inn)

    def __repr__(self) -> str:
        pairs = ", ".join(f"{e.tail}->{e.head}" for e in self.edges)
        return f"DirectedMultigraph({list(self.vertices)!r}, [{pairs}])"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DirectedMultigraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def index(self, v: Vertex) -> int:
        try:
            return self._index[v]
        except (KeyError, TypeError):
            raise UnknownVertex(f"unknown vertex {v!r}") from None

    def edge(self, eid: int) -> Edge:
        if not isinstance(eid, int) or not 0 <= eid < len(self.edges):
            raise UnknownEdge(f"unknown edge id {eid!r}")
        return self.edges[eid]

    # Position-based accessors used by the numeric kernels.
    def tail_index(self, eid: int) -> int:
        return self._tails[eid]

    def head_index(self, eid: int) -> int:
        return self._heads[eid]

    def out_edges(self, i: int) -> tuple[int, ...]:
        """Edge ids leaving the vertex at position ``i``, ascending."""
        return self._out[i]

    def in_edges(self, i: int) -> tuple[int, ...]:
        return self._in[i]

    def out_degrees(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self._out)

    def in_degrees(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self._in)

    def edge_pairs(self) -> list[tuple[Vertex, Vertex]]:
        return [(e.tail, e.head) for e in self.edges]


def build_graph(vertex_names: Iterable[Vertex], edge_list: Iterable[tuple[Vertex, Vertex]]) -> DirectedMultigraph:
    return DirectedMultigraph(vertex_names, edge_list)


def out_degree(g: DirectedMultigraph, v: Vertex) -> int:
    return len(g.out_edges(g.index(v)))


def in_degree(g: DirectedMultigraph, v: Vertex) -> int:
    return len(g.in_edges(g.index(v)))


def multiplicity(g: DirectedMultigraph, u: Vertex, v: Vertex) -> int:
    """Number of edges directed from ``u`` to ``v``."""
    j = g.index(v)
    return sum(1 for e in g.out_edges(g.index(u)) if g.head_index(e) == j)


def _reach(n: int, adjacency: list[list[int]], start: int) -> list[bool]:
    seen = [False] * n
    seen[start] = True
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in adjacency[u]:
            if not seen[v]:
                seen[v] = True
                queue.append(v)
    return seen


def unreachable_pair(g: DirectedMultigraph) -> tuple[Vertex, Vertex] | None:
    """Return ``(u, v)`` with no directed path from ``u`` to ``v``, or None.

    Uses a forward and a reverse sweep from the first vertex.
    """
    fwd: list[list[int]] = [[] for _ in range(g.n)]
    rev: list[list[int]] = [[] for _ in range(g.n)]
    for e in range(g.m):
        fwd[g.tail_index(e)].append(g.head_index(e))
        rev[g.head_index(e)].append(g.tail_index(e))
    root = g.vertices[0]
    for i, ok in enumerate(_reach(g.n, fwd, 0)):
        if not ok:
            return root, g.vertices[i]
    for i, ok in enumerate(_reach(g.n, rev, 0)):
        if not ok:
            return g.vertices[i], root
    return None


def is_strongly_connected(g: DirectedMultigraph) -> bool:
    return unreachable_pair(g) is None


def require_strongly_connected(g: DirectedMultigraph) -> None:
    pair = unreachable_pair(g)
    if pair is not None:
        raise NotStronglyConnected(*pair)


@dataclass(frozen=True)
class LaplacianMatrix:
    """Integer Laplacian in column convention.

    ``entries[u][v]`` is ``d_v - d_vv`` on the diagonal and ``-d_vu`` off it,
    so every column sums to zero and ``apply(p)`` is zero exactly when the
    outflow ``d_u p_u`` of each vertex equals its inflow ``sum_v d_vu p_v``.
    """

    vertices: tuple[Vertex, ...]
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, key: tuple[int, int]) -> int:
        u, v = key
        return self.entries[u][v]

    def entry(self, u: Vertex, v: Vertex) -> int:
        return self.entries[self.vertices.index(u)][self.vertices.index(v)]

    def as_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def column_sums(self) -> list[int]:
        n = len(self.vertices)
        return [sum(self.entries[u][v] for u in range(n)) for v in range(n)]

    def apply(self, p: Sequence[int]) -> list[int]:
        if len(p) != len(self.vertices):
            raise DimensionMismatch(f"vector of length {len(p)} for {len(self.vertices)} vertices")
        return [sum(a * x for a, x in zip(row, p)) for row in self.entries]

    def annihilates(self, p: Sequence[int]) -> bool:
        return not any(self.apply(p))

    def minor(self, k: int) -> list[list[int]]:
        """Matrix with row ``k`` and column ``k`` removed."""
        return [[x for j, x in enumerate(row) if j != k] for i, row in enumerate(self.entries) if i != k]


def laplacian(g: DirectedMultigraph) -> LaplacianMatrix:
    n = g.n
    rows = [[0] * n for _ in range(n)]
    for v in range(n):
        rows[v][v] += len(g.out_edges(v))
    for e in range(g.m):
        v, u = g.tail_index(e), g.head_index(e)
        rows[u][v] -= 1
    return LaplacianMatrix(g.vertices, tuple(tuple(r) for r in rows))


def is_eulerian(g: DirectedMultigraph) -> bool:
    """In-degree equals out-degree at every vertex."""
    return g.in_degrees() == g.out_degrees()


def as_vector(g: DirectedMultigraph, p: VectorLike) -> tuple[int, ...]:
    """Normalize a per-vertex vector (sequence in vertex order or mapping) to a tuple."""
    if isinstance(p, Mapping):
        unknown = [k for k in p if k not in g._index]
        if unknown:
            raise UnknownVertex(f"unknown vertex {unknown[0]!r}")
        missing = [v for v in g.vertices if v not in p]
        if missing:
            raise DimensionMismatch(f"no entry for vertex {missing[0]!r}")
        values = [p[v] for v in g.vertices]
    else:
        values = list(p)
        if len(values) != g.n:
            raise DimensionMismatch(f"vector of length {len(values)} for {g.n} vertices")
    for x in values:
        if isinstance(x, bool) or not isinstance(x, int):
            raise DimensionMismatch(f"vector entries must be integers, got {x!r}")
    return tuple(values)


def as_positive_vector(g: DirectedMultigraph, p: VectorLike) -> tuple[int, ...]:
    values = as_vector(g, p)
    for v, x in zip(g.vertices, values):
        if x <= 0:
            raise NonPositiveEntry(f"entry for vertex {v!r} is {x}, expected a positive integer")
    return values


@dataclass(frozen=True)
class EdgeLiftMap:
    """Correspondence between lifted edges and the original edges they copy.

    ``forward[k]`` is ``(original_id, copy)`` with ``copy`` counted from 1;
    ``backward[e]`` lists the lifted ids of the copies of ``e``.
    """

    forward: tuple[tuple[int, int], ...]
    backward: tuple[tuple[int, ...], ...]

    def original(self, lifted_id: int) -> int:
        return self.forward[lifted_id][0]


def lift(g: DirectedMultigraph, pi: VectorLike) -> tuple[DirectedMultigraph, EdgeLiftMap]:
    """Replace every edge with tail ``u`` by ``pi[u]`` parallel copies.

    Copies of one edge get consecutive ids. The result is Eulerian exactly
    when the Laplacian annihilates ``pi``.
    """
    pi = as_positive_vector(g, pi)
    pairs = []
    forward = []
    backward = []
    for e in g.edges:
        copies = pi[g.tail_index(e.id)]
        ids = []
        for c in range(1, copies + 1):
            ids.append(len(pairs))
            forward.append((e.id, c))
            pairs.append((e.tail, e.head))
        backward.append(tuple(ids))
    return DirectedMultigraph(g.vertices, pairs), EdgeLiftMap(tuple(forward), tuple(backward))
