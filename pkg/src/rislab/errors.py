"""Exception types shared across the package.

The CLI maps these onto distinct exit codes, so keep the hierarchy flat:
configuration problems, violated model assumptions, and numerical failures
are different kinds of bad news.
"""


class RislabError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(RislabError):
    """Malformed or inconsistent run configuration."""

    def __init__(self, message: str, field: str | None = None, code: str = "config"):
        self.field = field
        self.code = code
        super().__init__(message if field is None else f"{field}: {message}")


class AssumptionError(RislabError):
    """A model assumption (ergodicity, non-entanglement, time reversal) fails
    beyond tolerance."""

    def __init__(self, message: str, residual: float | None = None):
        self.residual = residual
        super().__init__(message)


class NonPrimitiveError(RislabError):
    """Spectral computation detected a degenerate peripheral spectrum."""

    def __init__(self, message: str, radius: float | None = None, gap: float | None = None):
        self.radius = radius
        self.gap = gap
        super().__init__(message)


class NumericalError(RislabError):
    """A numerical routine failed to converge or hit a singular system."""
