class AnnealError(Exception):
    """Base class for all errors raised by spinanneal."""


class ConfigError(AnnealError, ValueError):
    """Bad user configuration (unknown preset, unknown key, bad value)."""


class ValidationError(AnnealError, ValueError):
    """An input violates a structural invariant."""


class NumericalError(AnnealError, ArithmeticError):
    """Eigensolver failure or a non-finite intermediate result."""
