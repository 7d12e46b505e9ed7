"""Exception hierarchy shared by all spectralgas modules."""


class SpectralGasError(Exception):
    """Base class for all library errors."""


class DomainError(SpectralGasError):
    """Input lies outside the mathematical domain of the operation."""


class CapabilityError(SpectralGasError):
    """Request exceeds a documented limit (e.g. maximum degree)."""


class DegenerateInputError(SpectralGasError):
    """Input is degenerate (coincident points, vanishing pivot, ...)."""


class ConfigurationError(SpectralGasError):
    """Inconsistent or malformed parameters / run configuration."""


class NumericError(SpectralGasError):
    """An iteration or quadrature failed to converge."""


class CollisionError(NumericError):
    """Two poles/charges came closer than the collision threshold.

    Carries the offending index pair and, when raised mid-integration,
    the partial trajectory computed so far.
    """

    def __init__(self, message, pair=None, trajectory=None):
        super().__init__(message)
        self.pair = pair
        self.trajectory = trajectory


class ConventionError(SpectralGasError):
    """A quantity that must be constant under the chosen sign conventions
    is not; usually signals a mis-configured drift/superpotential sign."""


class ContourError(SpectralGasError):
    """A pole lies on (or too close to) an integration contour."""


class PoleEvaluationError(DomainError):
    """Evaluation was requested exactly at a pole."""
