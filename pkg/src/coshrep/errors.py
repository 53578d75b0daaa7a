"""Exception types shared across the package."""


class InvalidOrderError(ValueError):
    """Quadrature or grid order outside the supported range."""


class InvalidIntervalError(ValueError):
    """Integration interval with lo >= hi."""


class NonFiniteError(ValueError):
    """A non-finite value where a finite one is required."""


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class SpectralRangeError(ValueError):
    """Spectral parameter lambda outside its admissible interval."""


class BranchCutError(ValueError):
    """Point on or too close to the branch slit."""


class DegenerateSlitError(ValueError):
    """b = 0 collapses the slit; contour/branch operations are undefined."""


class DepthGuardError(ValueError):
    """Recursion or truncation guard exceeded."""


class ReductionError(ValueError):
    """Internal inconsistency while reducing a Hermitian pair."""


class InvariantError(ValueError):
    """A structural invariant of a computed object failed to hold."""
