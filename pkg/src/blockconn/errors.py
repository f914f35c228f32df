"""Exception types raised across the package.

Labels and positions carried by these exceptions are 1-based, the same
convention used by every external surface.
"""


class GraphError(ValueError):
    """Base class for invalid graph input or a violated precondition."""


class NotSquare(GraphError):
    def __init__(self, shape):
        self.shape = tuple(shape)
        super().__init__(f"adjacency matrix must be square, got shape {self.shape}")


class NonBinaryEntry(GraphError):
    def __init__(self, i, j, value=None):
        self.i, self.j, self.value = i, j, value
        super().__init__(f"entry ({i},{j}) is {value!r}, expected 0 or 1")


class Asymmetric(GraphError):
    def __init__(self, i, j):
        self.i, self.j = i, j
        super().__init__(f"entry ({i},{j}) differs from entry ({j},{i})")


class SelfLoop(GraphError):
    def __init__(self, i, line=None):
        self.i, self.line = i, line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"self loop at vertex {i}{where}")


class PositionOutOfRange(GraphError, IndexError):
    def __init__(self, position, n):
        self.position, self.n = position, n
        super().__init__(f"position {position} outside 1..{n}")


class ZeroRow(GraphError):
    """A candidate row has no nonzero entry (broken sweep invariant)."""

    def __init__(self, j):
        self.j = j
        super().__init__(f"row {j} has no nonzero entry")


class EmptyCandidateRange(GraphError):
    def __init__(self, p, n_active):
        self.p, self.n_active = p, n_active
        super().__init__(f"no candidate rows in {p}..{n_active}")


class ParseError(GraphError):
    def __init__(self, line, message="malformed input"):
        self.line = line
        super().__init__(f"line {line}: {message}")


class LabelOutOfRange(ParseError):
    def __init__(self, line, label, n):
        self.label, self.n = label, n
        super().__init__(line, f"label {label} outside 1..{n}")


class UnsupportedHeader(ParseError):
    def __init__(self, header):
        self.header = header
        super().__init__(1, f"unsupported MatrixMarket header {header!r}")


class RaggedRows(ParseError):
    def __init__(self, line, expected, got):
        self.expected, self.got = expected, got
        super().__init__(line, f"row has {got} entries, expected {expected}")


class InvalidSpec(GraphError):
    pass


class UnknownNeighbor(GraphError):
    def __init__(self, label, n):
        self.label, self.n = label, n
        super().__init__(f"neighbor {label} outside 1..{n}")
