"""Exception types raised across the package."""

from __future__ import annotations


class MultiEulerError(Exception):
    """Base class for all package errors."""


class GraphError(MultiEulerError, ValueError):
    """A structural problem with a graph or its inputs."""


class UnknownVertex(GraphError):
    pass


class DuplicateVertex(GraphError):
    pass


class EmptyGraph(GraphError):
    pass


class UnknownEdge(GraphError):
    pass


class NoEdges(GraphError):
    pass


class NotStronglyConnected(GraphError):
    def __init__(self, source, target):
        self.source = source
        self.target = target
        super().__init__(f"graph is not strongly connected: {target!s} is unreachable from {source!s}")


class NotEulerian(GraphError):
    pass


class DimensionMismatch(GraphError):
    pass


class NonPositiveEntry(GraphError):
    pass


class NotPeriodVector(GraphError):
    pass


class NonSquare(MultiEulerError, ValueError):
    pass


class SearchSpaceTooLarge(MultiEulerError):
    """An exhaustive search would exceed its configured cap."""

    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"search space {size} exceeds cap {cap}")


class CapExceeded(MultiEulerError):
    """A rotor walk did not become periodic within its step budget."""


class GraphSyntaxError(GraphError):
    def __init__(self, lineno: int, reason: str):
        self.lineno = lineno
        self.reason = reason
        super().__init__(f"line {lineno}: {reason}")


class BadMultiplicity(GraphSyntaxError):
    pass
