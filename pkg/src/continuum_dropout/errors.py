"""Exception taxonomy shared across the package."""


class ContinuumDropoutError(Exception):
    """Base class for all library errors."""


class ConfigError(ContinuumDropoutError, ValueError):
    """Invalid configuration value or structure."""


class ShapeMismatch(ContinuumDropoutError, ValueError):
    """Array shapes are inconsistent with the declared architecture."""


class LengthMismatch(ShapeMismatch):
    """Paired sequences have different lengths."""


class EmptyInput(ContinuumDropoutError, ValueError):
    """An operation received no data."""


class NoSolution(ContinuumDropoutError, RuntimeError):
    """The rate solver could not bracket a root on its admissible domain."""

    def __init__(self, message, residual_low=None, residual_high=None):
        super().__init__(message)
        self.residual_low = residual_low
        self.residual_high = residual_high


class NonConvergence(ContinuumDropoutError, RuntimeError):
    """Iteration cap reached before meeting the residual tolerance."""


class EventCapExceeded(ContinuumDropoutError, RuntimeError):
    """A sampled switching path exceeded the per-dimension event cap."""


class OutOfHorizon(ContinuumDropoutError, ValueError):
    """Time query outside the path's [0, T] horizon."""


class NonFiniteState(ContinuumDropoutError, FloatingPointError):
    """Integration produced a non-finite state entry."""


class TapeMismatch(ContinuumDropoutError, ValueError):
    """Backward pass received a tape inconsistent with the drift network."""


class WrongMode(ContinuumDropoutError, RuntimeError):
    """Operation is not defined for the configured dropout mode."""


class InvalidLabel(ContinuumDropoutError, ValueError):
    """Class label outside [0, n_classes)."""


class InsufficientSamples(ContinuumDropoutError, ValueError):
    """Too few Monte Carlo samples for the requested statistic."""


class ZeroCount(ContinuumDropoutError, ValueError):
    """Calibration report requested over zero predictions."""


class EmptySplit(ContinuumDropoutError, ValueError):
    """Dataset split holds no rows."""


class ParseError(ContinuumDropoutError, ValueError):
    """Malformed input file; message carries the offending line number."""


class MissingColumn(ContinuumDropoutError, KeyError):
    """CSV header lacks a required column."""


class CheckpointMismatch(ContinuumDropoutError, ValueError):
    """Checkpoint descriptor incompatible with the provided configuration."""


class DegenerateFeature(UserWarning):
    """A feature column had zero variance on the training split."""
