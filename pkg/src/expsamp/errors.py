"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class ConfigurationError(ValueError):
    """A parameter or configuration value is invalid or insufficient."""


class UnsupportedOrderError(ValueError):
    """A derivative or moment order beyond the supported range was requested."""


class PreconditionError(RuntimeError):
    """A mathematical hypothesis required by the operation does not hold."""
