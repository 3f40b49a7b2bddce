"""Exception hierarchy shared by every topoidx module."""

from __future__ import annotations


class TopoIdxError(Exception):
    """Base class for all library errors."""


class InvalidParameterError(TopoIdxError, ValueError):
    """A family parameter or index parameter is outside its valid domain."""


class GraphError(TopoIdxError, ValueError):
    pass


class OutOfRangeVertexError(GraphError):
    def __init__(self, pair, vertex_count: int):
        self.pair = pair
        self.vertex_count = vertex_count
        super().__init__(f"vertex out of range in {pair!r} (vertex_count={vertex_count})")


class SelfLoopError(GraphError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"self-loop {pair!r}")


class DuplicateEdgeError(GraphError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"duplicate edge {pair!r}")


class EmptyGraphError(GraphError):
    pass


class EdgeListParseError(TopoIdxError):
    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class NegativeExponentError(TopoIdxError, ValueError):
    """Decimal rendering was requested for a value with a negative exponent."""


class NonIntegerParameterError(InvalidParameterError):
    """Exact mode was asked for a non-integral exponent."""


class IsolatedVertexError(TopoIdxError):
    """A degree-0 vertex makes a vertex-power product vanish."""

    def __init__(self, count: int):
        self.count = count
        super().__init__(f"graph has {count} isolated vertex(es); vertex-power index is zero")
