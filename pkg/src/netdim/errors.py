"""Exception hierarchy shared by every netdim module."""


class NetdimError(Exception):
    """Base class for all errors raised by netdim."""


class ParseError(NetdimError, ValueError):
    """Malformed edge-list input."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class EmptyGraphError(NetdimError, ValueError):
    """An operation needs at least one edge or node and got none."""


class DegenerateProfileError(NetdimError, ValueError):
    """Volume profile of a node with eccentricity 0 (an isolated node)."""


class DegenerateFitError(NetdimError, ValueError):
    """Least-squares fit with fewer than two points or no spread in x."""


class ConfigError(NetdimError, ValueError):
    """Unknown method name or inconsistent experiment configuration."""


class ConvergenceError(NetdimError, ArithmeticError):
    """Iterative solver did not converge; ``last_iterate`` holds its final state."""

    def __init__(self, message, last_iterate=None):
        super().__init__(message)
        self.last_iterate = last_iterate


class DatasetError(NetdimError, OSError):
    """A dataset file is missing or unreadable."""
