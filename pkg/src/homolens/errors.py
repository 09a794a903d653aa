"""Exception types shared across the package."""


class HomolensError(Exception):
    """Base class for all package-specific errors."""


class ParameterError(HomolensError, ValueError):
    """A model hypothesis or parameter constraint is violated.

    Raised when inputs fall outside the regime an estimator or
    calculator is valid for (e.g. a noise scale too large relative to
    the reach of the manifold). The message names the violated
    constraint. The CLI maps this to exit code 3.
    """


class ConfigError(HomolensError, ValueError):
    """Bad configuration file or command-line usage (CLI exit code 2)."""


class FormatError(HomolensError, ValueError):
    """Malformed data file; carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
