"""Exception types raised across the package."""


class CQError(ArithmeticError):
    """Base class for algebraic failures in H⊗C computations."""


class ZeroDivisorError(CQError, ZeroDivisionError):
    """Raised when inverting an element whose quaternionic norm vanishes."""


class NonScalarNormError(CQError):
    """Raised when a product expected to be a complex scalar has a quaternion part."""


class NonUnitElementError(CQError):
    """Raised when a spin-group element does not have unit quaternionic norm."""


class NonPositiveMassError(ValueError):
    pass


class RestFrameSingularError(CQError):
    """Raised when an E - m denominator vanishes for a raw negative-branch amplitude."""


class ZeroMomentumError(ValueError):
    pass


class DomainEscapeError(ValueError):
    """Raised when a finite-difference stencil leaves a field's domain."""


class InconsistentChargeError(CQError):
    pass


class NoRightEigenvalueError(CQError):
    pass


class UnknownSuiteError(KeyError):
    pass


class UnknownCheckError(KeyError):
    pass


class IoFailureError(OSError):
    """Raised when a report cannot be written."""
