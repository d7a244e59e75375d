"""Exception hierarchy shared by every module."""

__all__ = [
    "GraphcatError", "InvalidInputError", "UnsupportedInputError", "InvalidPartitionError",
    "NotWellFoundedError", "UndefinedArityError", "EmptyObjectsError", "ResourceLimitError",
]


class GraphcatError(Exception):
    """Base class for all library errors."""


class InvalidInputError(GraphcatError, ValueError):
    """Input violates an operation's precondition."""


class UnsupportedInputError(InvalidInputError):
    """Input is well formed but outside what the operation handles (e.g. loops)."""


class InvalidPartitionError(InvalidInputError):
    def __init__(self, message, block=None):
        super().__init__(message)
        self.block = block


class NotWellFoundedError(InvalidInputError):
    """Raised by induction over a relation whose strict part has a cycle."""

    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__("relation is not well-founded; strict cycle: "
                         + " < ".join(map(repr, self.cycle + self.cycle[:1])))


class UndefinedArityError(InvalidInputError):
    pass


class EmptyObjectsError(InvalidInputError):
    """A transformation graph would have no objects (e.g. no perfect matching)."""


class ResourceLimitError(GraphcatError):
    """A search space exceeds its budget. Raised before any search starts."""

    def __init__(self, what, needed, budget):
        self.what = what
        self.needed = needed
        self.budget = budget
        super().__init__(f"{what}: search space {needed} exceeds budget {budget}")
