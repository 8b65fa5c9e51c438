"""Validation, construction and counting of pi-Eulerian tours.

A pi-Eulerian tour is a closed walk using every edge ``e`` exactly
``pi[tail(e)]`` times. Tours are edge-id sequences; two tours are the same
only if the sequences are identical, so rotations count separately.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from .errors import NoEdges, NotEulerian, NotPeriodVector, SearchSpaceTooLarge
from .graph import (
    DirectedMultigraph,
    Vertex,
    VectorLike,
    as_positive_vector,
    is_eulerian,
    laplacian,
    lift,
    require_strongly_connected,
)
from .period import PeriodVector, primitive_period_vector
from .trees import kappa

DEFAULT_TOUR_CAP = 16


@dataclass(frozen=True)
class Tour:
    edge_ids: tuple[int, ...]

    def __iter__(self) -> Iterator[int]:
        return iter(self.edge_ids)

    def __len__(self) -> int:
        return len(self.edge_ids)

    def __getitem__(self, i):
        return self.edge_ids[i]

    def rotated(self, k: int) -> Tour:
        k %= len(self.edge_ids)
        return Tour(self.edge_ids[k:] + self.edge_ids[:k])


@dataclass(frozen=True)
class TourValidation:
    valid: bool
    reason: str | None = None
    edge: int | None = None
    position: int | None = None
    mismatches: tuple[tuple[int, int, int], ...] = ()

    def __bool__(self) -> bool:
        return self.valid


@dataclass(frozen=True)
class TourCount:
    value: int
    start_edge: int
    pi: PeriodVector


def _period_or_primitive(g: DirectedMultigraph, pi: VectorLike | None) -> tuple[int, ...]:
    if pi is None:
        return primitive_period_vector(g).entries
    return as_positive_vector(g, pi)


def _require_period(g: DirectedMultigraph, pi: tuple[int, ...]) -> None:
    residual = laplacian(g).apply(pi)
    if any(residual):
        raise NotPeriodVector(f"Laplacian applied to {list(pi)} gives {residual}, not zero")


def validate_tour(g: DirectedMultigraph, pi: VectorLike, t: Tour | Sequence[int]) -> TourValidation:
    """Check that ``t`` is a closed walk using each edge ``pi[tail]`` times."""
    pi = as_positive_vector(g, pi)
    ids = tuple(t)
    if not ids:
        return TourValidation(False, "tour is empty")
    for pos, e in enumerate(ids):
        if not isinstance(e, int) or not 0 <= e < g.m:
            return TourValidation(False, f"unknown edge id {e!r}", edge=None, position=pos)
    for pos, e in enumerate(ids):
        nxt = ids[(pos + 1) % len(ids)]
        if g.head_index(e) != g.tail_index(nxt):
            what = "does not close" if pos == len(ids) - 1 else "breaks the chain"
            return TourValidation(
                False,
                f"edge {e} ends at {g.edges[e].head!s} but edge {nxt} starts at {g.edges[nxt].tail!s}; walk {what}",
                edge=e,
                position=pos,
            )
    used = [0] * g.m
    for e in ids:
        used[e] += 1
    mismatches = tuple((e, used[e], pi[g.tail_index(e)]) for e in range(g.m) if used[e] != pi[g.tail_index(e)])
    if mismatches:
        e, got, want = mismatches[0]
        return TourValidation(False, f"edge {e} used {got} times, expected {want}", edge=e, mismatches=mismatches)
    return TourValidation(True)


def _hierholzer(g: DirectedMultigraph, start: int) -> list[int]:
    """Eulerian circuit of an Eulerian graph from vertex position ``start``.

    Unused edges at a vertex are taken in ascending id order.
    """
    nxt = [0] * g.n
    stack: list[tuple[int, int | None]] = [(start, None)]
    circuit: list[int] = []
    while stack:
        v, via = stack[-1]
        outs = g.out_edges(v)
        if nxt[v] < len(outs):
            e = outs[nxt[v]]
            nxt[v] += 1
            stack.append((g.head_index(e), e))
        else:
            stack.pop()
            if via is not None:
                circuit.append(via)
    circuit.reverse()
    return circuit


def construct_tour(
    g: DirectedMultigraph,
    pi: VectorLike | None = None,
    start_vertex: Vertex | None = None,
    start_edge: int | None = None,
) -> Tour:
    """Build a pi-Eulerian tour (primitive period vector when ``pi`` is None).

    Finds an Eulerian circuit of the lifted multigraph and maps each lifted
    edge back to its original. The result starts with ``start_edge`` if
    given, else with the lowest-id edge leaving ``start_vertex`` (default:
    the first vertex).
    """
    require_strongly_connected(g)
    if g.m == 0:
        raise NoEdges("graph has no edges")
    pi = _period_or_primitive(g, pi)
    _require_period(g, pi)
    if start_edge is not None:
        first = g.edge(start_edge).id
    else:
        sv = g.index(start_vertex) if start_vertex is not None else 0
        first = g.out_edges(sv)[0]
    lifted, emap = lift(g, pi)
    circuit = _hierholzer(lifted, g.tail_index(first))
    assert len(circuit) == lifted.m, "lifted graph is not connected"
    ids = [emap.original(e) for e in circuit]
    k = ids.index(first)
    return Tour(tuple(ids[k:] + ids[:k]))


def count_tours(g: DirectedMultigraph, pi: VectorLike | None, e: int) -> TourCount:
    """Number of pi-Eulerian tours whose first edge is ``e``, in closed form."""
    require_strongly_connected(g)
    pi = _period_or_primitive(g, pi)
    _require_period(g, pi)
    w = g.edge(e).tail

    factorials: dict[int, int] = {}

    def fact(k: int) -> int:
        if k not in factorials:
            factorials[k] = math.factorial(k)
        return factorials[k]

    value = kappa(g, w)
    for v, d in enumerate(g.out_degrees()):
        p = pi[v]
        num = fact(d * p - 1)
        den = fact(p) ** (d - 1) * fact(p - 1)
        ratio, rem = divmod(num, den)
        assert rem == 0, f"multinomial ratio at vertex {g.vertices[v]!r} is not an integer"
        value *= ratio
    return TourCount(value, e, PeriodVector(pi))


def count_eulerian_best(g: DirectedMultigraph, e: int) -> TourCount:
    """Eulerian tours starting with edge ``e`` (each edge used once)."""
    if not is_eulerian(g):
        raise NotEulerian("in-degree differs from out-degree at some vertex")
    w = g.edge(e).tail
    value = kappa(g, w)
    for d in g.out_degrees():
        value *= math.factorial(d - 1)
    return TourCount(value, e, PeriodVector((1,) * g.n))


def _tour_length(g: DirectedMultigraph, pi: tuple[int, ...]) -> int:
    return sum(p * d for p, d in zip(pi, g.out_degrees()))


def _check_cap(g: DirectedMultigraph, pi: tuple[int, ...], cap: int) -> None:
    size = _tour_length(g, pi)
    if size > cap:
        raise SearchSpaceTooLarge(size, cap)


def _closed_walk_counter(g: DirectedMultigraph, target: int):
    """Count walks from a vertex that spend every edge budget and end at ``target``."""
    memo: dict[tuple[int, tuple[int, ...]], int] = {}
    heads = [g.head_index(f) for f in range(g.m)]

    def count(v: int, budget: tuple[int, ...]) -> int:
        key = (v, budget)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if not any(budget):
            total = 1 if v == target else 0
        else:
            total = 0
            for f in g.out_edges(v):
                if budget[f]:
                    nb = list(budget)
                    nb[f] -= 1
                    total += count(heads[f], tuple(nb))
        memo[key] = total
        return total

    return count


def count_tours_bruteforce(
    g: DirectedMultigraph, pi: VectorLike, e: int, cap: int = DEFAULT_TOUR_CAP
) -> TourCount:
    """Count pi-Eulerian tours starting with ``e`` by exhaustive search.

    Depth-first over edge sequences with a remaining-use budget per edge;
    subtrees are memoized on (vertex, remaining budgets). Does not require
    ``pi`` to be a period vector: the count is simply 0 when none exist.
    """
    pi = as_positive_vector(g, pi)
    g.edge(e)
    _check_cap(g, pi, cap)
    budget = [pi[g.tail_index(f)] for f in range(g.m)]
    budget[e] -= 1
    counter = _closed_walk_counter(g, g.tail_index(e))
    return TourCount(counter(g.head_index(e), tuple(budget)), e, PeriodVector(pi))


def count_tours_from_vertex_bruteforce(
    g: DirectedMultigraph, pi: VectorLike, w: Vertex, cap: int = DEFAULT_TOUR_CAP
) -> int:
    """Count pi-Eulerian tours whose first edge leaves ``w``, by exhaustive search."""
    pi = as_positive_vector(g, pi)
    start = g.index(w)
    _check_cap(g, pi, cap)
    budget = tuple(pi[g.tail_index(f)] for f in range(g.m))
    return _closed_walk_counter(g, start)(start, budget)


def enumerate_tours(
    g: DirectedMultigraph, pi: VectorLike, e: int, cap: int = DEFAULT_TOUR_CAP
) -> Iterator[Tour]:
    """Yield every pi-Eulerian tour starting with ``e``, in lexicographic order."""
    pi = as_positive_vector(g, pi)
    g.edge(e)
    _check_cap(g, pi, cap)
    budget = [pi[g.tail_index(f)] for f in range(g.m)]
    budget[e] -= 1
    remaining = sum(budget)
    target = g.tail_index(e)
    path = [e]

    def walk(v: int, left: int) -> Iterable[Tour]:
        if left == 0:
            if v == target:
                yield Tour(tuple(path))
            return
        for f in g.out_edges(v):
            if budget[f]:
                budget[f] -= 1
                path.append(f)
                yield from walk(g.head_index(f), left - 1)
                path.pop()
                budget[f] += 1

    yield from walk(g.head_index(e), remaining)
