"""Exception hierarchy shared by all modules."""


class BingslingError(Exception):
    """Base class for library errors."""


class UsageError(BingslingError, ValueError):
    """Invalid arguments, mismatched variables or out-of-range parameters."""


class DomainError(BingslingError, ArithmeticError):
    """A mathematically undefined request, e.g. inexact division."""


class ResourceError(BingslingError, RuntimeError):
    """A request that exceeds the configured size limits."""


class LibraryDefect(BingslingError, AssertionError):
    """An internal consistency check failed."""
