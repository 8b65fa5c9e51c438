"""Oriented spanning tree counts via the directed Matrix-Tree theorem."""

from __future__ import annotations

import itertools
import math
from collections.abc import Sequence

from .errors import NonSquare, SearchSpaceTooLarge
from .graph import DirectedMultigraph, Vertex, laplacian, require_strongly_connected

DEFAULT_ARBORESCENCE_CAP = 10**7


def determinant_exact(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix by Bareiss elimination.

    Every intermediate division is exact, so the computation never leaves
    the integers. The 0x0 matrix has determinant 1.
    """
    n = len(m)
    a = [list(row) for row in m]
    if any(len(row) != n for row in a):
        raise NonSquare(f"expected a square matrix, got {n} rows of lengths {[len(r) for r in a]}")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def kappa(g: DirectedMultigraph, w: Vertex) -> int:
    """Number of spanning trees of ``g`` oriented toward ``w``."""
    require_strongly_connected(g)
    k = g.index(w)
    return determinant_exact(laplacian(g).minor(k))


def kappa_vector(g: DirectedMultigraph) -> tuple[int, ...]:
    """Tree counts for every root, in vertex order."""
    require_strongly_connected(g)
    lap = laplacian(g)
    return tuple(determinant_exact(lap.minor(k)) for k in range(g.n))


def arborescence_search_space(g: DirectedMultigraph, w: Vertex) -> int:
    k = g.index(w)
    return math.prod(len(g.out_edges(i)) for i in range(g.n) if i != k)


def enumerate_arborescences(
    g: DirectedMultigraph, w: Vertex, cap: int = DEFAULT_ARBORESCENCE_CAP
) -> list[frozenset[int]]:
    """All spanning trees oriented toward ``w`` by exhaustive search.

    Tries every choice of one outgoing edge per non-root vertex and keeps
    those in which every vertex reaches the root. Sorted by edge-id sequence.
    """
    require_strongly_connected(g)
    root = g.index(w)
    size = arborescence_search_space(g, w)
    if size > cap:
        raise SearchSpaceTooLarge(size, cap)

    others = [i for i in range(g.n) if i != root]
    found = []
    for choice in itertools.product(*(g.out_edges(i) for i in others)):
        succ = {i: g.head_index(e) for i, e in zip(others, choice)}
        if all(_leads_to_root(i, succ, root, g.n) for i in others):
            found.append(tuple(sorted(choice)))
    found.sort()
    return [frozenset(t) for t in found]


def _leads_to_root(i: int, succ: dict[int, int], root: int, n: int) -> bool:
    for _ in range(n):
        if i == root:
            return True
        i = succ[i]
    return i == root
