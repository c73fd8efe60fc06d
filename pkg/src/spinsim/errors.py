"""Exception types shared across the package."""


class SpinsimError(ValueError):
    """Base class for spinsim errors."""


class NormalizationError(SpinsimError):
    """A direction vector is not normalized to unit length."""


class EigenvalueError(SpinsimError):
    """A requested outcome is not in the eigenvalue ladder."""


class ResourceMismatchError(SpinsimError):
    """A shared-randomness bundle does not match the protocol's resource counts."""


class UnsupportedRegimeError(SpinsimError):
    """Protocol inputs lie outside the protocol's validity region."""


class InstanceTooLargeError(SpinsimError):
    """A brute-force oracle instance exceeds the desk-scale path cap."""


class InsufficientDataError(SpinsimError):
    """A statistical test was requested on an undersized sample."""


class DegenerateComparisonError(SpinsimError):
    """A z-score comparison with zero standard error and a nonzero deviation."""
