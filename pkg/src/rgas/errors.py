"""Shared exception types."""


class RgasError(Exception):
    """Base class for all library errors."""


class PoleError(RgasError, ValueError):
    """Evaluation requested exactly at a pole."""


class DomainError(RgasError, ValueError):
    """Argument outside the supported domain."""


class AccuracyError(RgasError, RuntimeError):
    """Requested accuracy cannot be met within the term/evaluation budget."""


class HagedornError(RgasError, ValueError):
    """Partition function diverges: beta * omega at or below the pole."""


class ConvergenceError(RgasError, RuntimeError):
    """Adaptive quadrature exhausted its budget without converging."""


class MissedZeroError(RgasError, RuntimeError):
    """Zero search failed the counting-formula audit."""


class TableFormatError(RgasError, ValueError):
    """Zero-table file is malformed."""
