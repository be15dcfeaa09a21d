"""Exception hierarchy shared by every module of the package."""


class OrientedIdealError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(OrientedIdealError, ValueError):
    """A graph description violates a structural requirement."""


class DuplicateVertex(ValidationError):
    def __init__(self, vertex):
        super().__init__(f"duplicate vertex {vertex!r}")
        self.vertex = vertex


class LoopEdge(ValidationError):
    def __init__(self, vertex):
        super().__init__(f"loop edge at vertex {vertex!r}")
        self.vertex = vertex


class AntiparallelPair(ValidationError):
    def __init__(self, tail, head):
        super().__init__(f"edges ({tail!r}, {head!r}) and ({head!r}, {tail!r}) are both present")
        self.edge = (tail, head)


class NonpositiveWeight(ValidationError):
    def __init__(self, vertex, weight):
        super().__init__(f"vertex {vertex!r} has invalid weight {weight!r}; weights must be integers >= 1")
        self.vertex = vertex
        self.weight = weight


class UnknownVertex(ValidationError, KeyError):
    def __init__(self, vertex):
        super().__init__(f"unknown vertex {vertex!r}")
        self.vertex = vertex

    def __str__(self):
        return self.args[0]


class NotStableSet(ValidationError):
    def __init__(self, edge):
        super().__init__(f"vertex set is not stable: it contains both ends of edge {edge!r}")
        self.edge = edge


class NotACover(ValidationError):
    def __init__(self, edge):
        super().__init__(f"not a vertex cover: edge {edge!r} is uncovered")
        self.edge = edge


class ShapeError(ValidationError):
    """Raised when a shape-specific characterization is applied to the wrong shape."""


class NotAWhisker(ShapeError):
    pass


class NotBipartite(ShapeError):
    pass


class NotACycle(ShapeError):
    pass


class NotAPath(ShapeError):
    pass


class NotComplete(ShapeError):
    pass


class SizeCap(OrientedIdealError):
    """An exhaustive enumeration would exceed its configured bound."""

    def __init__(self, what, size, cap):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class ExponentOverflow(OrientedIdealError, OverflowError):
    pass


class UnitIdeal(OrientedIdealError, ValueError):
    """The unit ideal is not representable."""


class VerificationFailure(OrientedIdealError):
    """The combinatorial decomposition disagreed with the brute-force oracle."""

    def __init__(self, message, component=None):
        super().__init__(message)
        self.component = component


class CriteriaDisagreement(OrientedIdealError):
    """The equivalent unmixedness criteria gave different answers."""


class ParseError(ValidationError):
    """Malformed graph JSON; carries the 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{where}")
        self.line = line
        self.column = column
