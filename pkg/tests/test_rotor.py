from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multieuler import (
    CapExceeded,
    GraphError,
    RotorState,
    analyze,
    build_graph,
    check_settles,
    default_rotor_state,
    random_rotor_state,
    rotor_step,
    run_until_periodic,
)
from multieuler.rng import SplitMix64
from multieuler.rotor import default_step_cap

from .conftest import strongly_connected_graphs


def test_step_on_cycle(C3):
    s = default_rotor_state(C3)
    walked = []
    for _ in range(6):
        s, e = rotor_step(C3, s)
        walked.append(e)
    assert walked == [0, 1, 2, 0, 1, 2]
    assert s.walker == "a"


def test_step_increments_then_moves(G2):
    s = RotorState(((0,), (1, 2)), (0, 0), "b")
    s2, e = rotor_step(G2, s)
    assert e == 2
    assert s2.positions == (0, 1)
    assert s2.walker == "a"


def test_step_on_loop(LOOP):
    s, e = rotor_step(LOOP, default_rotor_state(LOOP))
    assert (e, s.walker) == (0, "a")


def test_run_examples(C3, G2, LOOP):
    for start in C3.vertices:
        r = run_until_periodic(C3, default_rotor_state(C3, start))
        assert r.period == 3 and r.is_multi_eulerian
        assert sorted(r.periodic_tour) == [0, 1, 2]

    r = run_until_periodic(G2, RotorState(((0,), (1, 2)), (0, 1), "a"))
    assert r.period == 4 and r.is_multi_eulerian
    assert Counter(r.periodic_tour) == {0: 2, 1: 1, 2: 1}

    r = run_until_periodic(LOOP, default_rotor_state(LOOP))
    assert (r.transient_length, r.period, r.periodic_tour.edge_ids) == (0, 1, (0,))


def test_run_cap(T3):
    with pytest.raises(CapExceeded):
        run_until_periodic(T3, default_rotor_state(T3), cap=2)
    assert default_step_cap(T3) == 3 * 2**3 + 6


def test_bad_rotor_state(G2):
    with pytest.raises(GraphError):
        run_until_periodic(G2, RotorState(((0,), (1,)), (0, 0), "a"))
    with pytest.raises(GraphError):
        run_until_periodic(G2, RotorState(((0,), (1, 2)), (0, 5), "a"))


@pytest.mark.parametrize("name, trials, seed, period", [("C3", 10, 0, 3), ("G2", 50, 7, 4), ("T3", 50, 7, 6)])
def test_check_settles_examples(name, trials, seed, period, request):
    g = request.getfixturevalue(name)
    s = check_settles(g, trials, seed)
    assert (s.passed, s.failed) == (trials, 0)
    assert set(s.periods) == {period}
    assert s.expected_period == period


def test_check_settles_is_deterministic(T3):
    assert check_settles(T3, 20, 99) == check_settles(T3, 20, 99)
    a, b = SplitMix64(5), SplitMix64(5)
    assert random_rotor_state(T3, a) == random_rotor_state(T3, b)


@settings(max_examples=100)
@given(strongly_connected_graphs(max_vertices=5, max_extra=4), st.integers(0, 2**64 - 1))
def test_walks_settle_into_minimal_tours(g, seed):
    s0 = random_rotor_state(g, SplitMix64(seed))
    report = run_until_periodic(g, s0)
    summary = analyze(g)
    assert report.period == summary.minimal_tour_length == len(report.periodic_tour)
    assert report.is_multi_eulerian

    # Per-vertex exit counts, checked without validate_tour.
    pi = summary.primitive_period
    used = Counter(report.periodic_tour)
    for i in range(g.n):
        outs = g.out_edges(i)
        assert sum(used[e] for e in outs) == pi[i] * len(outs)
        assert all(used[e] == pi[i] for e in outs)

    # The full-state sequence repeats with the same period once settled.
    states, edges = [s0], []
    for _ in range(report.transient_length + 2 * report.period):
        nxt, e = rotor_step(g, states[-1])
        states.append(nxt)
        edges.append(e)
    t, p = report.transient_length, report.period
    assert len(set(states[: t + p])) == t + p
    assert all(states[k] == states[k + p] for k in range(t, t + p))
    assert tuple(edges[t : t + p]) == report.periodic_tour.edge_ids == tuple(edges[t + p : t + 2 * p])
