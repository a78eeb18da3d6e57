"""Exception hierarchy shared by every module of the package."""


class CoronaLabError(Exception):
    """Base class for all errors raised by coronalab."""


class GraphError(CoronaLabError, ValueError):
    """Invalid graph construction input (self-loop, out-of-range vertex)."""


class GraphFormatError(CoronaLabError, ValueError):
    """Malformed DIMACS text. ``line`` is the 1-based offending line, if known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SizeLimitError(CoronaLabError):
    """The instance is larger than the configured cap of an exact solver."""

    def __init__(self, what, n, cap):
        self.what = what
        self.n = n
        self.cap = cap
        super().__init__(f"{what}: instance has {n} vertices, above the cap of {cap}")


class PreconditionError(CoronaLabError, ValueError):
    """Input violates a solver precondition (e.g. a disconnected graph)."""


class InapplicableError(CoronaLabError, ValueError):
    """A closed formula or bound was requested outside its hypothesis."""


class MalformedWitnessError(CoronaLabError, ValueError):
    """A witness does not cover the vertex set it is checked against."""


class ConstructionError(CoronaLabError, RuntimeError):
    """A constructive witness failed its own verification. Indicates a bug."""
