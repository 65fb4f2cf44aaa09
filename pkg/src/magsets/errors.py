"""Exception hierarchy shared by every module."""


class GraphError(Exception):
    """Base class for all errors raised by this package."""


class SelfLoopError(GraphError):
    """An arc or edge joins a vertex to itself."""


class DuplicatePairError(GraphError):
    """Both directions of one unordered pair (or a repeated edge) were supplied."""


class OutOfRangeError(GraphError):
    """A vertex, arc or edge index is outside the valid range."""


class EqualVerticesError(GraphError):
    """A monitoring query was made with x == y."""


class DisconnectedInputError(GraphError):
    """The operation requires a (weakly) connected graph."""


class BadParamError(GraphError):
    """A family generator was called with parameters outside its validity range."""


class NotATreeError(BadParamError):
    """The input graph is not a tree."""


class NotBipartiteError(BadParamError):
    """The input graph is not bipartite, or the given bipartition is invalid."""


class AcyclicError(BadParamError):
    """The input graph contains no cycle."""


class WidthMismatchError(GraphError):
    """An orientation mask has the wrong number of bits."""


class TooManyEdgesError(GraphError):
    """The edge count exceeds the exhaustive-enumeration cap."""


class BudgetExceededError(GraphError):
    """The search-node budget was exhausted before optimality was certified."""


class InvalidInstanceError(GraphError):
    """A reduction input instance violates its invariants."""


class TooLargeError(GraphError):
    """A brute-force oracle was asked to enumerate beyond its size cap."""


class ParseError(GraphError):
    """A text input could not be parsed."""
