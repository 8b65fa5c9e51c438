import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from multieuler import (
    NotEulerian,
    NotPeriodVector,
    SearchSpaceTooLarge,
    Tour,
    UnknownEdge,
    analyze,
    build_graph,
    construct_tour,
    count_eulerian_best,
    count_tours,
    count_tours_bruteforce,
    count_tours_from_vertex_bruteforce,
    enumerate_tours,
    is_eulerian,
    laplacian,
    lift,
    primitive_period_vector,
    validate_tour,
)

from .conftest import strongly_connected_graphs


def test_validate_examples(G2, C3):
    assert validate_tour(C3, (1, 1, 1), Tour((0, 1, 2)))
    assert validate_tour(G2, (2, 1), [0, 1, 0, 2]).valid
    report = validate_tour(G2, (2, 1), [0, 1, 0, 1])
    assert not report.valid
    assert report.edge == 1
    assert report.mismatches == ((1, 2, 1), (2, 0, 1))


def test_validate_reports_first_chain_break(G2, C3):
    report = validate_tour(G2, (2, 1), [0, 0, 1, 2])
    assert not report.valid and report.position == 0 and report.edge == 0
    report = validate_tour(C3, (1, 1, 1), [0, 1])
    assert not report.valid and report.position == 1 and "close" in report.reason
    assert not validate_tour(C3, (1, 1, 1), []).valid
    assert validate_tour(C3, (1, 1, 1), [0, 1, 7]).position == 2


def test_construct_examples(G2, C3):
    assert construct_tour(C3, (1, 1, 1)) == Tour((0, 1, 2))
    tour = construct_tour(G2, (2, 1))
    assert len(tour) == 4
    assert validate_tour(G2, (2, 1), tour)
    assert tour[0] == 0
    with pytest.raises(NotPeriodVector):
        construct_tour(G2, (1, 1))


def test_construct_start_options(G2):
    assert construct_tour(G2, start_vertex="b")[0] == 1
    assert construct_tour(G2, start_edge=2)[0] == 2
    assert validate_tour(G2, (2, 1), construct_tour(G2, start_edge=2))


def test_count_examples(G2, C3):
    for e in range(3):
        assert count_tours(C3, (1, 1, 1), e).value == 1
    assert count_tours(G2, (2, 1), 0).value == 2
    assert count_tours(G2, (2, 1), 1).value == 1
    assert count_tours(G2, None, 1).value == 1
    with pytest.raises(NotPeriodVector):
        count_tours(G2, (1, 1), 0)
    with pytest.raises(UnknownEdge):
        count_tours(G2, (2, 1), 3)


def test_bruteforce_examples(G2, C3):
    assert count_tours_bruteforce(C3, (1, 1, 1), 0).value == 1
    assert count_tours_bruteforce(G2, (2, 1), 0).value == 2
    assert count_tours_bruteforce(G2, (1, 1), 0).value == 0
    assert [t.edge_ids for t in enumerate_tours(G2, (2, 1), 0)] == [(0, 1, 0, 2), (0, 2, 0, 1)]
    assert [t.edge_ids for t in enumerate_tours(G2, (2, 1), 1)] == [(1, 0, 2, 0)]
    with pytest.raises(SearchSpaceTooLarge):
        count_tours_bruteforce(G2, (20, 10), 0)


def test_best_examples(C3, T3, G2):
    assert count_eulerian_best(C3, 0).value == 1
    for e in range(T3.m):
        assert count_eulerian_best(T3, e).value == 3
        assert count_tours_bruteforce(T3, (1, 1, 1), e).value == 3
    with pytest.raises(NotEulerian):
        count_eulerian_best(G2, 0)


def test_count_grows_beyond_machine_words():
    g = build_graph(["a"], [("a", "a")] * 30)
    # 30 parallel loops: any ordering of the remaining 29 loops.
    assert count_tours(g, (1,), 0).value == math.factorial(29)


def _small_pi(g):
    pi = primitive_period_vector(g).entries
    return pi, sum(p * d for p, d in zip(pi, g.out_degrees()))


@settings(max_examples=150)
@given(strongly_connected_graphs(max_vertices=4, max_extra=3))
def test_formula_matches_bruteforce(g):
    pi, length = _small_pi(g)
    assume(length <= 14)
    for e in range(g.m):
        assert count_tours(g, pi, e).value == count_tours_bruteforce(g, pi, e).value


@settings(max_examples=60)
@given(strongly_connected_graphs(max_vertices=3, max_extra=2))
def test_memoized_oracle_matches_plain_enumeration(g):
    pi, length = _small_pi(g)
    assume(length <= 10)
    for e in range(g.m):
        tours = list(enumerate_tours(g, pi, e))
        assert len(tours) == count_tours_bruteforce(g, pi, e).value
        assert len(set(tours)) == len(tours)
        assert all(validate_tour(g, pi, t) for t in tours)


@settings(max_examples=80)
@given(strongly_connected_graphs(max_vertices=3, max_extra=2), st.data())
def test_tour_exists_iff_kernel(g, data):
    p = data.draw(st.lists(st.integers(1, 3), min_size=g.n, max_size=g.n))
    count = count_tours_bruteforce(g, p, 0, cap=18).value
    assert (count > 0) == laplacian(g).annihilates(p)


@settings(max_examples=80)
@given(strongly_connected_graphs(max_vertices=4, max_extra=3))
def test_count_independent_of_head_and_tail_ratio(g):
    pi, length = _small_pi(g)
    assume(length <= 12)
    for i, w in enumerate(g.vertices):
        outs = g.out_edges(i)
        counts = {count_tours_bruteforce(g, pi, e).value for e in outs}
        assert len(counts) == 1
        (per_edge,) = counts
        assert count_tours_from_vertex_bruteforce(g, pi, w) == len(outs) * per_edge


@settings(max_examples=40)
@given(strongly_connected_graphs(max_vertices=3, max_extra=2))
def test_labeling_bijection_with_lift(g):
    pi, length = _small_pi(g)
    assume(length <= 9)
    lifted, _ = lift(g, pi)
    labelings = math.prod(math.factorial(p) ** d for p, d in zip(pi, g.out_degrees()))
    for w in g.vertices:
        lifted_count = count_tours_from_vertex_bruteforce(lifted, [1] * g.n, w)
        assert lifted_count == count_tours_from_vertex_bruteforce(g, pi, w) * labelings


@given(strongly_connected_graphs(max_vertices=5, max_extra=3))
def test_best_equals_general_formula_at_ones(g):
    assume(is_eulerian(g))
    for e in range(g.m):
        assert count_eulerian_best(g, e).value == count_tours(g, [1] * g.n, e).value


@given(strongly_connected_graphs(max_vertices=5, max_extra=5))
def test_constructed_tours_are_minimal_and_valid(g):
    s = analyze(g)
    tour = construct_tour(g)
    assert validate_tour(g, s.primitive_period, tour)
    assert len(tour) == s.minimal_tour_length
    doubled = s.primitive_period.scaled(2)
    tour2 = construct_tour(g, doubled)
    assert validate_tour(g, doubled, tour2)
    assert len(tour2) == 2 * s.minimal_tour_length
    for e in range(g.m):
        assert construct_tour(g, start_edge=e)[0] == e


def test_construct_rejects_edgeless_graph():
    from multieuler import NoEdges

    with pytest.raises(NoEdges):
        construct_tour(build_graph(["a"], []))
