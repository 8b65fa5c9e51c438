import pytest
from hypothesis import settings
from hypothesis import strategies as st

from multieuler import build_graph

settings.register_profile("repo", deadline=None)
settings.load_profile("repo")


def g2():
    return build_graph(["a", "b"], [("a", "b"), ("b", "a"), ("b", "a")])


def c3():
    return build_graph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])


def t3():
    return build_graph(["a", "b", "c"], [("a", "b"), ("b", "a"), ("b", "c"), ("c", "b"), ("a", "c"), ("c", "a")])


def loop():
    return build_graph(["a"], [("a", "a")])


@pytest.fixture
def G2():
    return g2()


@pytest.fixture
def C3():
    return c3()


@pytest.fixture
def T3():
    return t3()


@pytest.fixture
def LOOP():
    return loop()


@st.composite
def strongly_connected_graphs(draw, max_vertices=4, max_extra=4):
    """A random spanning cycle (so strongly connected) plus random extra edges."""
    n = draw(st.integers(1, max_vertices))
    names = [chr(ord("a") + i) for i in range(n)]
    perm = draw(st.permutations(range(n)))
    pairs = [(perm[i], perm[(i + 1) % n]) for i in range(n)]
    vertex = st.integers(0, n - 1)
    pairs += draw(st.lists(st.tuples(vertex, vertex), max_size=max_extra))
    order = draw(st.permutations(range(len(pairs))))
    return build_graph(names, [(names[pairs[k][0]], names[pairs[k][1]]) for k in order])


@st.composite
def any_graphs(draw, max_vertices=4, max_edges=6):
    n = draw(st.integers(1, max_vertices))
    names = [chr(ord("a") + i) for i in range(n)]
    vertex = st.sampled_from(names)
    return build_graph(names, draw(st.lists(st.tuples(vertex, vertex), max_size=max_edges)))


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
