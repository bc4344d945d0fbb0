"""Relativistic quantum mechanics over the complexified quaternions H⊗C."""
from __future__ import annotations

from .errors import (
    CQError, DomainEscapeError, InconsistentChargeError, IoFailureError, NonPositiveMassError,
    NonScalarNormError, NonUnitElementError, NoRightEigenvalueError, RestFrameSingularError,
    UnknownCheckError, UnknownSuiteError, ZeroDivisorError, ZeroMomentumError,
)
from .linalg import CQMatrix2, CQVector2
from .quaternion import CQ, ComplexQuaternion, conj_both, conj_complex, conj_quat, exp_pure, mul

__version__ = "0.1.0"

__all__ = [
    "CQ", "ComplexQuaternion", "CQMatrix2", "CQVector2", "conj_both", "conj_complex", "conj_quat",
    "exp_pure", "mul", "CQError", "DomainEscapeError", "InconsistentChargeError", "IoFailureError",
    "NonPositiveMassError", "NonScalarNormError", "NonUnitElementError", "NoRightEigenvalueError",
    "RestFrameSingularError", "UnknownCheckError", "UnknownSuiteError", "ZeroDivisorError",
    "ZeroMomentumError",
]
