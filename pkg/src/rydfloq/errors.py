"""Exception types shared across the package.

The CLI maps these onto exit codes: config problems exit with 2,
numerical-invariant violations with 3.
"""


class CapacityError(ValueError):
    """Requested full product space is larger than the supported cap."""


class DimensionMismatchError(ValueError):
    """Operands live in spaces of different dimension."""


class ConfigError(Exception):
    """Configuration file is missing, malformed, or schema-invalid."""


class NumericalInvariantError(RuntimeError):
    """A runtime numerical invariant (unitarity, trace, positivity) failed."""


class UndefinedCorrelationError(ValueError):
    """g2 requested for a state with no excited-state population."""
