"""Exception hierarchy shared by every module."""


class SignedIntervalError(Exception):
    """Base class for all errors raised by this package."""


class GraphInputError(SignedIntervalError, ValueError):
    """Malformed graph, matrix, model or ordering input."""


class NotBipartiteError(GraphInputError):
    """The underlying graph has an odd cycle.

    The cycle is stored in ``cycle`` as a closed vertex sequence
    (first vertex not repeated).
    """

    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__(f"not bipartite: odd cycle {self.cycle}")


class NotOneDirectionalError(GraphInputError):
    """Arcs of a bipartite graph cannot all be oriented from one part to the other."""


class InvalidOrderingError(GraphInputError):
    """An ordering failed min-ordering verification.

    ``violation`` holds the :class:`~signed_interval.ordering.MinOrderViolation`
    witness when one is available.
    """

    def __init__(self, message, violation=None):
        self.violation = violation
        super().__init__(message)


class ModelError(GraphInputError):
    """A geometric model violates its structural invariants."""


class BudgetExceededError(SignedIntervalError):
    """A brute-force search was refused because its size exceeds the bound."""


class ConstructionError(SignedIntervalError, RuntimeError):
    """Internal guard: a certified construction failed its own re-check."""
