"""Graph families for sweeps: exhaustive small multigraphs and seeded random ones."""

from __future__ import annotations

import itertools
from collections.abc import Iterator

from .graph import DirectedMultigraph, is_strongly_connected
from .rng import SplitMix64

VERTEX_NAMES = "abcdefghijklmnopqrstuvwxyz"


def _names(n: int) -> list[str]:
    return list(VERTEX_NAMES[:n])


def _canonical(n: int, edges: tuple[tuple[int, int], ...]) -> tuple[tuple[int, int], ...]:
    best = None
    for perm in itertools.permutations(range(n)):
        relabeled = tuple(sorted((perm[u], perm[v]) for u, v in edges))
        if best is None or relabeled < best:
            best = relabeled
    return best


def _strongly_connected_pairs(n: int, edges) -> bool:
    if n == 1:
        return True
    adj = [set() for _ in range(n)]
    radj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        radj[v].add(u)
    for graph in (adj, radj):
        seen = {0}
        stack = [0]
        while stack:
            for w in graph[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != n:
            return False
    return True


def small_strongly_connected_graphs(max_vertices: int, max_edges: int) -> Iterator[DirectedMultigraph]:
    """Every strongly connected multigraph with at least one edge, up to isomorphism.

    Loops and parallel edges included. Each isomorphism class is yielded once,
    in its lexicographically smallest labelling with edges sorted.
    """
    for n in range(1, max_vertices + 1):
        slots = [(u, v) for u in range(n) for v in range(n)]
        seen = set()
        for m in range(max(n, 1), max_edges + 1):
            for combo in itertools.combinations_with_replacement(slots, m):
                if not _strongly_connected_pairs(n, combo):
                    continue
                key = _canonical(n, combo)
                if key in seen:
                    continue
                seen.add(key)
                names = _names(n)
                yield DirectedMultigraph(names, [(names[u], names[v]) for u, v in key])


def random_strongly_connected_graph(rng: SplitMix64, max_vertices: int, max_edges: int) -> DirectedMultigraph:
    """Uniform vertex count, then rejection-sampled random edges.

    Falls back to a random spanning cycle plus random extra edges when
    rejection keeps failing.
    """
    n = 1 + rng.below(max_vertices)
    names = _names(n)
    lo = n
    m = lo + rng.below(max_edges - lo + 1)
    for _ in range(200):
        pairs = [(rng.below(n), rng.below(n)) for _ in range(m)]
        g = DirectedMultigraph(names, [(names[u], names[v]) for u, v in pairs])
        if is_strongly_connected(g):
            return g
    perm = list(range(n))
    rng.shuffle(perm)
    pairs = [(perm[i], perm[(i + 1) % n]) for i in range(n)]
    pairs += [(rng.below(n), rng.below(n)) for _ in range(m - n)]
    return DirectedMultigraph(names, [(names[u], names[v]) for u, v in pairs])


def random_eulerian_graph(rng: SplitMix64, max_vertices: int, max_extra_cycles: int = 2) -> DirectedMultigraph:
    """Strongly connected Eulerian multigraph built as a union of closed walks.

    A random spanning cycle guarantees strong connectivity; extra random
    closed walks (loops allowed) keep every vertex balanced.
    """
    n = 1 + rng.below(max_vertices)
    names = _names(n)
    perm = list(range(n))
    rng.shuffle(perm)
    pairs = [(perm[i], perm[(i + 1) % n]) for i in range(n)]
    for _ in range(rng.below(max_extra_cycles + 1)):
        length = 1 + rng.below(n + 1)
        walk = [rng.below(n) for _ in range(length)]
        pairs += [(walk[i], walk[(i + 1) % length]) for i in range(length)]
    return DirectedMultigraph(names, [(names[u], names[v]) for u, v in pairs])
