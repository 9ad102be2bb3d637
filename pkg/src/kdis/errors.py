"""Exception types raised across the package."""


class KdisError(Exception):
    """Base class for all package errors."""


class GraphSizeError(KdisError, ValueError):
    """A construction would exceed the 64-vertex capacity."""


class Graph6Error(KdisError, ValueError):
    """Malformed graph6 input. ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class DomainError(KdisError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class ContractError(KdisError, ValueError):
    """A caller-side precondition does not hold."""


class BudgetError(KdisError, ValueError):
    """Requested search exceeds the configured generation budget."""


class DependencyError(KdisError, KeyError):
    """A required precomputed value (e.g. an mi_k table entry) is missing."""
