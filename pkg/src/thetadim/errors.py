"""Exception types raised by the public API."""

from __future__ import annotations


class GraphInputError(ValueError):
    """Invalid data passed to a graph constructor."""


class SelfLoopError(GraphInputError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(GraphInputError):
    """The same unordered pair appears twice in an edge list."""


class VertexRangeError(GraphInputError):
    """An edge endpoint is outside 0..n-1."""


class DisconnectedGraphError(ValueError):
    """Operation requires a connected graph."""


class NotAnEdgeError(ValueError):
    """The given pair is not an edge of the graph."""


class BudgetExceededError(RuntimeError):
    """Exhaustive search would exceed the configured comparison budget."""


class FormatError(ValueError):
    """Malformed edge-list or graph6 input."""


class ConstructionError(RuntimeError):
    """A closed-form landmark construction failed its self-check."""
