"""Exception hierarchy shared by the whole package."""


class RennerError(Exception):
    """Base class for all errors raised by :mod:`renner`."""


class ConfigurationError(RennerError, ValueError):
    """Invalid Cartan type, weight index, or run configuration."""


class UsageError(RennerError, ValueError):
    """An argument is out of range or not allowed in this context."""


class CapacityError(RennerError):
    """A computation would exceed a configured size limit."""


class FixtureError(RennerError, ValueError):
    """Malformed class-table fixture."""

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno
