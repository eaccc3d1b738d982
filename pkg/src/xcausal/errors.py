"""Exception hierarchy for xcausal.

Every error raised on purpose by this package derives from XCausalError so
callers (and the CLI) can distinguish our diagnostics from genuine bugs.
The CLI maps ConfigError subclasses to exit code 2, DataError subclasses to
exit code 3 and NumericalError subclasses to exit code 4.
"""


class XCausalError(Exception):
    """Base class for all xcausal errors."""


class ConfigError(XCausalError):
    """Invalid parameters, grids or configuration values."""


class DataError(XCausalError):
    """Input data that cannot be used (malformed, empty, inconsistent)."""


class NumericalError(XCausalError):
    """A computation that cannot proceed for numerical reasons."""


class EmptySeriesError(DataError):
    """Fewer than two distinct observations."""


class NonFiniteError(DataError):
    """NaN or infinity in timestamps or values."""


class CsvFormatError(DataError):
    """A CSV row that does not parse as timestamp,value."""


class NoOverlapError(DataError):
    """Two series whose observation spans are disjoint."""


class SignatureFormatError(DataError):
    """A binary projection record that does not parse."""


class GridMismatchError(ConfigError):
    """Operands built on different frequency or lag grids."""


class GridBeforeDataError(ConfigError):
    """A resampling grid that starts before the first observation."""


class NotCenteredError(ConfigError):
    """A series handed to the projector without prior demeaning."""


class AlphaOutOfRangeError(ConfigError):
    """A fractional order outside the supported interval."""


class TruncationTooLongError(ConfigError):
    """A fractional-difference truncation longer than the series."""


class TooFewFrequenciesError(ConfigError):
    """Not enough low frequencies for a stable spectral-slope fit."""


class WindowTooWideError(ConfigError):
    """A smoothing window too wide for the frequency grid."""


class EmbeddingFailureError(NumericalError):
    """A circulant embedding with a materially negative eigenvalue."""


class TooFewTrialsError(ConfigError):
    """Not enough Monte Carlo trials for a percentile band."""


class CliUsageError(ConfigError):
    """Command-line flags that do not make sense together."""


class DegenerateVarianceError(NumericalError):
    """A variance estimate of zero (or below) where a ratio needs it."""
