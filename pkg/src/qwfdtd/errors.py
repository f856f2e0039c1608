"""Exception types raised by the simulator."""


class QwfdtdError(Exception):
    """Base class for all simulator errors."""


class InvalidGeometryError(QwfdtdError, ValueError):
    """Grid dimensions or spacings are unusable."""


class InvalidRegionError(QwfdtdError, ValueError):
    """A material region does not fit inside the grid."""


class InvalidParameterError(QwfdtdError, ValueError):
    """A numeric parameter is outside its allowed range."""


class StabilityError(QwfdtdError, ValueError):
    """A time step exceeds the Courant stability limit."""


class InvalidSourceError(QwfdtdError, ValueError):
    """A source event points outside the grid."""


class TopologyError(QwfdtdError, ValueError):
    """A walk operation was applied to the wrong topology."""


class ScheduleOverflowError(QwfdtdError, ValueError):
    """A walk site maps outside the grid."""


class IntegratorAccuracyError(QwfdtdError, RuntimeError):
    """State-vector norm drifted beyond the accepted bound."""


class ConfigError(QwfdtdError, ValueError):
    """Configuration document is malformed or invalid."""


class SnapshotFormatError(QwfdtdError, ValueError):
    """A snapshot file does not match the expected format."""
