"""Period vectors, Pham index and minimal multi-Eulerian tour length."""

from __future__ import annotations

import math
from collections.abc import Iterator
from dataclasses import dataclass
from functools import reduce

from .errors import NoEdges
from .graph import DirectedMultigraph, VectorLike, as_vector, laplacian, require_strongly_connected
from .trees import kappa_vector


@dataclass(frozen=True)
class PeriodVector:
    """Strictly positive integer vector in the kernel of the Laplacian."""

    entries: tuple[int, ...]

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    @property
    def primitive(self) -> bool:
        return reduce(math.gcd, self.entries, 0) == 1

    def scaled(self, factor: int) -> PeriodVector:
        return PeriodVector(tuple(factor * x for x in self.entries))


@dataclass(frozen=True)
class EulerianessSummary:
    kappa: tuple[int, ...]
    pham_index: int
    primitive_period: PeriodVector
    unicycles: int
    minimal_tour_length: int


def gcd_all(values) -> int:
    return reduce(math.gcd, values, 0)


def is_period_vector(g: DirectedMultigraph, p: VectorLike) -> bool:
    p = as_vector(g, p)
    if any(x < 0 for x in p) or not any(p):
        return False
    return laplacian(g).annihilates(p)


def analyze(g: DirectedMultigraph) -> EulerianessSummary:
    """Compute tree counts and every quantity derived from them in one pass."""
    require_strongly_connected(g)
    if g.m == 0:
        raise NoEdges("graph has no edges")
    kap = kappa_vector(g)
    pham = gcd_all(kap)
    pi = tuple(k // pham for k in kap)
    degrees = g.out_degrees()
    unicycles = sum(k * d for k, d in zip(kap, degrees))
    length, rem = divmod(unicycles, pham)
    assert rem == 0, "unicycle count not divisible by the Pham index"
    assert length == sum(p * d for p, d in zip(pi, degrees))
    return EulerianessSummary(kap, pham, PeriodVector(pi), unicycles, length)


def pham_index(g: DirectedMultigraph) -> int:
    """gcd of the oriented spanning tree counts."""
    require_strongly_connected(g)
    return gcd_all(kappa_vector(g))


def primitive_period_vector(g: DirectedMultigraph) -> PeriodVector:
    require_strongly_connected(g)
    kap = kappa_vector(g)
    pham = gcd_all(kap)
    return PeriodVector(tuple(k // pham for k in kap))


def unicycle_count(g: DirectedMultigraph) -> int:
    """Pairs of an oriented spanning tree and an out-edge of its root."""
    require_strongly_connected(g)
    return sum(k * d for k, d in zip(kappa_vector(g), g.out_degrees()))


def minimal_tour_length(g: DirectedMultigraph) -> int:
    return analyze(g).minimal_tour_length
