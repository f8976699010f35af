"""Exception types shared across the package."""


class DomainError(ValueError):
    """A physical parameter is outside its allowed range."""


class NonPhysicalCovariance(ValueError):
    """Covariance data violates the physicality conditions for a Gaussian state."""


class CutoffTooSmall(ValueError):
    """Fock truncation leaves too much probability mass beyond the cutoff."""


class SolverError(RuntimeError):
    """A root-finding or optimization routine could not produce a valid result."""


class NoKeyAtZeroDistance(SolverError):
    """The target key rate is unreachable even with a zero-length channel."""


class NoKeyAtZeroNoise(SolverError):
    """The key rate is non-positive even at zero excess noise."""
