"""Exception taxonomy shared across the pipeline.

The CLI maps these onto process exit codes: ConfigError -> 2,
DataError -> 3, NumericError -> 4, BoundViolationError -> 5.
"""

from __future__ import annotations


class CrossBetaError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(CrossBetaError):
    """Invalid configuration value or malformed config file."""


class DataError(CrossBetaError):
    """Input data violates a documented contract."""


class FormatError(DataError):
    """Malformed dataset file (bad header, row, or label token)."""


class InsufficientDataError(DataError):
    """Too few samples for the requested operation."""


class DegenerateDataError(DataError):
    """Data collapsed to a single point where spread is required."""


class NumericError(CrossBetaError):
    """A numerical procedure failed to produce a usable result."""


class NoRootError(NumericError):
    """The likelihood-ratio had no sign change inside the bracket."""

    def __init__(self, message: str, bracket: tuple[float, float],
                 ratio_extremes: tuple[float, float]):
        super().__init__(message)
        self.bracket = bracket
        self.ratio_extremes = ratio_extremes


class FactorizationError(NumericError):
    """Covariance factorization failed even after maximum jitter."""


class TrainingError(NumericError):
    """Training diverged (non-finite loss)."""

    def __init__(self, message: str, epoch: int):
        super().__init__(message)
        self.epoch = epoch


class BoundViolationError(CrossBetaError):
    """The empirical lower bound was violated; carries the full report."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report
