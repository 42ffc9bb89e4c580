"""Exception types shared across the package."""


class GraphError(ValueError):
    """Malformed graph input (bad endpoint, self-loop)."""


class FormatError(ValueError):
    """A text file could not be parsed."""


class NoSeed(RuntimeError):
    """No connected set of at most 7 vertices has the whole graph within distance 3."""


class NotP9Free(RuntimeError):
    """Input lies outside the structured solver's guarantee.

    Raised when the graph contains an induced P_9, when no seed exists, or when
    a structural property that holds for P_9-free inputs fails at runtime.
    """


class Unsupported(ValueError):
    """Cycle length not handled by the structured solvers."""


class ListTooLarge(ValueError):
    pass


class CapExceeded(RuntimeError):
    pass


class NotAWalk(ValueError):
    pass
