class CanonvecError(Exception):
    """Base class for every error raised by canonvec."""


class DegreeMismatchError(CanonvecError, ValueError):
    """A permutation, vector or group does not have the expected degree."""


class CostBoundExceeded(CanonvecError):
    """A brute-force computation was asked to go beyond its configured bound."""


class ConfigError(CanonvecError, ValueError):
    """An environment override or a generation config is unusable."""


class IncompleteChainError(CanonvecError):
    """A refinement chain does not reach the target group."""


class ErrorBoundViolation(CanonvecError):
    """The measured relative error exceeded its theoretical bound."""
