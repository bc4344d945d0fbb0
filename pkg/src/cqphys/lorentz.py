"""Embeddings of 3- and 4-vectors in H⊗C and the spin-group action on them.

A real 3-vector ``x`` embeds as the Pauli vector ``x1 ih + x2 ij + x3 ik``.
A four-vector embeds right-chirally as ``x0 - i(x1 h + x2 j + x3 k)`` and
left-chirally as ``x0 + i(x1 h + x2 j + x3 k)``.  Spin-group elements are
``g = exp(β1 h + β2 j + β3 k)`` for complex β; real β rotates, imaginary β
boosts.

Sign conventions (active transformations, pinned by tests against the
standard 3×3 and 4×4 matrices):

* ``β = (0, 0, θ/2)`` rotates embedded vectors by ``+θ`` about z
  (``ih -> ij`` for ``θ = π/2``).
* ``β = (0, 0, iφ/2)`` acting on a right-embedded vector maps
  ``(t, z) -> (t coshφ - z sinhφ, z coshφ - t sinhφ)``, i.e. a boost with
  rapidity ``-φ`` along z.  Left-embedded vectors with the complex-conjugate
  element receive the same 4×4 transformation.
"""
from __future__ import annotations

import enum
import math
from typing import NamedTuple, Sequence

import numpy as np

from .errors import NonScalarNormError, NonUnitElementError
from .quaternion import (
    CQ, ComplexQuaternion, conj_both, conj_complex, conj_quat, exp_pure, mul, quat_norm,
)

__all__ = [
    "FourVector", "Chirality", "embed_pauli", "embed_four", "extract_four", "spin_element",
    "lorentz_act", "conjugation_act", "interval", "pauli_inner", "rotation_matrix",
    "boost_matrix", "vector_transform", "left_partner",
]


class FourVector(NamedTuple):
    x0: float
    x1: float
    x2: float
    x3: float

    @property
    def spatial(self) -> tuple[float, float, float]:
        return (self.x1, self.x2, self.x3)

    def minkowski_square(self) -> float:
        return self.x0 ** 2 - self.x1 ** 2 - self.x2 ** 2 - self.x3 ** 2


class Chirality(enum.Enum):
    RIGHT = "right"
    LEFT = "left"


def embed_pauli(x: Sequence[float]) -> ComplexQuaternion:
    x1, x2, x3 = x
    return CQ(0, 1j * x1, 1j * x2, 1j * x3)


def embed_four(x: Sequence[float], chirality: Chirality = Chirality.RIGHT) -> ComplexQuaternion:
    x0, x1, x2, x3 = x
    s = -1j if chirality is Chirality.RIGHT else 1j
    return CQ(x0, s * x1, s * x2, s * x3)


def extract_four(X: ComplexQuaternion, chirality: Chirality = Chirality.RIGHT) -> FourVector:
    """Recover the real four-vector from an embedded element (imaginary residue is dropped)."""
    s = -1j if chirality is Chirality.RIGHT else 1j
    return FourVector(X.c0.real, (X.c1 / s).real, (X.c2 / s).real, (X.c3 / s).real)


def spin_element(beta: Sequence[complex]) -> ComplexQuaternion:
    return exp_pure(beta)


def _check_unit(g: ComplexQuaternion, tol: float) -> None:
    n = quat_norm(g)
    if (n - 1).max_abs() > tol:
        raise NonUnitElementError(f"g^⋆g = {n}, expected 1")


def lorentz_act(g: ComplexQuaternion, X: ComplexQuaternion, tol: float = 1e-10) -> ComplexQuaternion:
    """Transform an embedded four-vector: ``X' = g X g^*``.

    ``g^*`` is the double conjugate.  For real β it equals ``g^{-1}``, so
    rotations act by ordinary conjugation; for complex β the double conjugate
    keeps ``X'`` Hermitian and hence inside the image of :func:`embed_four`,
    which plain conjugation does not.
    """
    _check_unit(g, tol)
    return mul(mul(g, X), conj_both(g))


def conjugation_act(g: ComplexQuaternion, X: ComplexQuaternion, tol: float = 1e-10) -> ComplexQuaternion:
    """Plain two-sided conjugation ``g X g^{-1}``; preserves ``X^⋆X`` but fixes the scalar part."""
    _check_unit(g, tol)
    return mul(mul(g, X), conj_quat(g))


def interval(X: ComplexQuaternion, tol: float = 1e-10) -> complex:
    """``X^⋆ X`` as a complex scalar."""
    n = quat_norm(X)
    if not n.is_scalar(tol * (1.0 + X.abs2())):
        raise NonScalarNormError(f"X^⋆X = {n} is not scalar")
    return n.c0


def pauli_inner(a: ComplexQuaternion, b: ComplexQuaternion) -> ComplexQuaternion:
    """Hermitian inner product ``a^* b`` of single-component Pauli spinors."""
    return mul(conj_both(a), b)


def rotation_matrix(axis: Sequence[float], angle: float) -> np.ndarray:
    """Active right-handed rotation (Rodrigues)."""
    n = np.asarray(axis, dtype=float)
    n = n / np.linalg.norm(n)
    K = np.array([[0, -n[2], n[1]], [n[2], 0, -n[0]], [-n[1], n[0], 0]])
    return np.eye(3) + math.sin(angle) * K + (1 - math.cos(angle)) * (K @ K)


def boost_matrix(direction: Sequence[float], rapidity: float) -> np.ndarray:
    """4×4 boost of a contravariant four-vector; positive rapidity moves +direction."""
    n = np.asarray(direction, dtype=float)
    n = n / np.linalg.norm(n)
    ch, sh = math.cosh(rapidity), math.sinh(rapidity)
    L = np.eye(4)
    L[0, 0] = ch
    L[0, 1:] = sh * n
    L[1:, 0] = sh * n
    L[1:, 1:] += (ch - 1) * np.outer(n, n)
    return L


def vector_transform(beta: Sequence[complex]) -> np.ndarray:
    """Real 4×4 matrix of ``x -> extract(g embed(x) g^*)`` for ``g = exp_pure(beta)``.

    Built column by column from the quaternionic action; useful for comparing
    against the matrix forms above.
    """
    g = exp_pure(beta)
    cols = []
    for e in np.eye(4):
        cols.append(extract_four(lorentz_act(g, embed_four(e))))
    return np.array(cols, dtype=float).T


def left_partner(g: ComplexQuaternion) -> ComplexQuaternion:
    """Spin element of the left-chiral representation paired with ``g``."""
    return conj_complex(g)
