"""Simple rotor walks and their settling into a multi-Eulerian tour.

Each vertex holds a cyclic order of its outgoing edges and a rotor pointing
at the most recently used exit. A step first advances the walker's rotor
one place, then moves the walker along the edge it now points to.

Random initial states (``random_rotor_state``) draw from a ``SplitMix64``
in this order: for each vertex in vertex order, shuffle its ascending
out-edge list; then for each vertex, a rotor position ``below(d_v)``; then
the walker position ``below(n)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CapExceeded, GraphError, NoEdges
from .graph import DirectedMultigraph, Vertex, require_strongly_connected
from .period import analyze
from .rng import SplitMix64
from .tours import Tour, validate_tour

FALLBACK_STEP_CAP = 10**7


@dataclass(frozen=True)
class RotorState:
    cyclic_orders: tuple[tuple[int, ...], ...]
    positions: tuple[int, ...]
    walker: Vertex


@dataclass(frozen=True)
class SettlingReport:
    transient_length: int
    period: int
    periodic_tour: Tour
    is_multi_eulerian: bool


@dataclass(frozen=True)
class SettlingSummary:
    trials: int
    passed: int
    failed: int
    expected_period: int
    periods: tuple[int, ...]
    max_transient: int


def default_rotor_state(g: DirectedMultigraph, walker: Vertex | None = None) -> RotorState:
    """Ascending cyclic orders, rotors set so the first exit is the lowest edge id."""
    orders = tuple(g.out_edges(i) for i in range(g.n))
    positions = tuple(max(len(o) - 1, 0) for o in orders)
    return RotorState(orders, positions, g.vertices[0] if walker is None else walker)


def random_rotor_state(g: DirectedMultigraph, rng: SplitMix64) -> RotorState:
    orders = []
    for i in range(g.n):
        order = list(g.out_edges(i))
        rng.shuffle(order)
        orders.append(tuple(order))
    positions = tuple(rng.below(len(o)) if o else 0 for o in orders)
    walker = g.vertices[rng.below(g.n)]
    return RotorState(tuple(orders), positions, walker)


def check_rotor_state(g: DirectedMultigraph, s: RotorState) -> None:
    if len(s.cyclic_orders) != g.n or len(s.positions) != g.n:
        raise GraphError("rotor state does not match the graph's vertex count")
    for i, (order, pos) in enumerate(zip(s.cyclic_orders, s.positions)):
        if sorted(order) != list(g.out_edges(i)):
            raise GraphError(f"cyclic order at {g.vertices[i]!r} is not a permutation of its out-edges")
        if order and not 0 <= pos < len(order):
            raise GraphError(f"rotor position {pos} out of range at {g.vertices[i]!r}")
    g.index(s.walker)


def rotor_step(g: DirectedMultigraph, s: RotorState) -> tuple[RotorState, int]:
    """Advance the walker's rotor, then move along it. Returns the new state and edge used."""
    v = g.index(s.walker)
    order = s.cyclic_orders[v]
    pos = (s.positions[v] + 1) % len(order)
    e = order[pos]
    positions = s.positions[:v] + (pos,) + s.positions[v + 1 :]
    return RotorState(s.cyclic_orders, positions, g.edges[e].head), e


def default_step_cap(g: DirectedMultigraph) -> int:
    """Steps guaranteed to reach a repeated state: |V| * prod(d_v) + minimal tour length."""
    states = g.n * math.prod(g.out_degrees())
    if states > FALLBACK_STEP_CAP:
        return FALLBACK_STEP_CAP
    return states + analyze(g).minimal_tour_length


def run_until_periodic(g: DirectedMultigraph, s0: RotorState, cap: int | None = None) -> SettlingReport:
    """Iterate rotor steps until a full state (walker and all rotors) repeats."""
    require_strongly_connected(g)
    if g.m == 0:
        raise NoEdges("graph has no edges")
    check_rotor_state(g, s0)
    summary = analyze(g)
    if cap is None:
        cap = default_step_cap(g)

    orders = s0.cyclic_orders
    positions = list(s0.positions)
    walker = g.index(s0.walker)
    seen: dict[tuple[int, tuple[int, ...]], int] = {}
    traversed: list[int] = []
    for step in range(cap + 1):
        key = (walker, tuple(positions))
        first = seen.get(key)
        if first is not None:
            tour = Tour(tuple(traversed[first:]))
            ok = validate_tour(g, summary.primitive_period, tour).valid
            return SettlingReport(first, step - first, tour, ok)
        seen[key] = step
        order = orders[walker]
        positions[walker] = (positions[walker] + 1) % len(order)
        e = order[positions[walker]]
        traversed.append(e)
        walker = g.head_index(e)
    raise CapExceeded(f"no repeated rotor state within {cap} steps")


def check_settles(g: DirectedMultigraph, trials: int, seed: int, cap: int | None = None) -> SettlingSummary:
    """Run seeded random rotor walks and check each settles into a minimal multi-Eulerian tour."""
    expected = analyze(g).minimal_tour_length
    rng = SplitMix64(seed)
    passed = 0
    periods = []
    max_transient = 0
    for _ in range(trials):
        report = run_until_periodic(g, random_rotor_state(g, rng), cap)
        periods.append(report.period)
        max_transient = max(max_transient, report.transient_length)
        if report.period == expected and report.is_multi_eulerian:
            passed += 1
    return SettlingSummary(trials, passed, trials - passed, expected, tuple(periods), max_transient)
