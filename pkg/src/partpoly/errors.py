"""Exception hierarchy shared by all modules."""


class PartpolyError(Exception):
    """Base class for every error raised by this package."""


class GraphError(PartpolyError, ValueError):
    """An argument does not belong to the graph, or a graph precondition fails."""


class GraphParseError(PartpolyError, ValueError):
    """Malformed graph6 or edge-list input.

    ``position`` is the byte offset (graph6) or 1-based line number (edgelist)
    where the problem was detected.
    """

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at {position})"
        super().__init__(message)
        self.position = position


class PartitionError(PartpolyError, ValueError):
    """Set partitions with incompatible ground sets or malformed blocks."""


class ResourceCapError(PartpolyError):
    """An exponential enumeration was asked to exceed its configured cap."""


class InvariantViolation(PartpolyError, AssertionError):
    """Internal consistency check failed. Indicates a bug, not bad input."""


class MalformedPolynomialError(PartpolyError, ValueError):
    """The polynomial handed in cannot be a partition polynomial of any graph."""
