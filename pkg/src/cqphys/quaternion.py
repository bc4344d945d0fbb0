"""Complexified quaternions H⊗C.

An element is stored as four complex coefficients on the ordered basis
``{1, h, j, k}`` with ``h*h = j*j = k*k = -1`` and ``h*j = k``, ``j*k = h``,
``k*h = j``.  The complex unit ``i`` commutes with everything.

Three conjugations are provided:

* :func:`conj_quat` (``q^⋆``) negates the h, j, k parts,
* :func:`conj_complex` (``q̃``) conjugates all four coefficients,
* :func:`conj_both` (``q^*``) does both; this is the Hermitian conjugate.
"""
from __future__ import annotations

import cmath
from typing import Iterable, Sequence, Union

from .errors import NonScalarNormError, ZeroDivisorError

Number = Union[int, float, complex]

__all__ = [
    "ComplexQuaternion", "CQ", "ONE", "ZERO", "I", "H", "J", "K", "OMEGA", "SIGMA",
    "mul", "conj_quat", "conj_complex", "conj_both", "quat_norm", "exp_pure",
    "inverse", "is_idempotent", "is_unit", "pure", "commutator", "anticommutator",
    "ZERO_DIVISOR_RTOL",
]

# |q^⋆q| below this fraction of (1 + |q|^2) counts as a zero divisor.
ZERO_DIVISOR_RTOL = 1e-12
_SERIES_RADIUS = 1e-4


class ComplexQuaternion:
    __slots__ = ("c0", "c1", "c2", "c3")

    def __init__(self, c0: Number = 0, c1: Number = 0, c2: Number = 0, c3: Number = 0):
        self.c0 = complex(c0)
        self.c1 = complex(c1)
        self.c2 = complex(c2)
        self.c3 = complex(c3)

    @classmethod
    def from_real8(cls, row: Sequence[float]) -> "ComplexQuaternion":
        """Inverse of :meth:`to_real8`."""
        r = list(row)
        return cls(complex(r[0], r[1]), complex(r[2], r[3]),
                   complex(r[4], r[5]), complex(r[6], r[7]))

    @property
    def coeffs(self) -> tuple[complex, complex, complex, complex]:
        return (self.c0, self.c1, self.c2, self.c3)

    @property
    def scalar(self) -> complex:
        return self.c0

    @property
    def vector(self) -> tuple[complex, complex, complex]:
        return (self.c1, self.c2, self.c3)

    def to_real8(self) -> list[float]:
        """Serialize as ``[Re c0, Im c0, ..., Re c3, Im c3]``."""
        out = []
        for c in self.coeffs:
            out.extend((c.real, c.imag))
        return out

    def abs2(self) -> float:
        return sum(abs(c) ** 2 for c in self.coeffs)

    def max_abs(self) -> float:
        return max(abs(c) for c in self.coeffs)

    def is_scalar(self, tol: float = 1e-12) -> bool:
        return max(abs(self.c1), abs(self.c2), abs(self.c3)) <= tol

    def isclose(self, other: "ComplexQuaternion | Number", tol: float = 1e-12) -> bool:
        return (self - _coerce(other)).max_abs() <= tol

    def is_finite(self) -> bool:
        return all(cmath.isfinite(c) for c in self.coeffs)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return ComplexQuaternion(self.c0 + o.c0, self.c1 + o.c1, self.c2 + o.c2, self.c3 + o.c3)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return ComplexQuaternion(self.c0 - o.c0, self.c1 - o.c1, self.c2 - o.c2, self.c3 - o.c3)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return ComplexQuaternion(-self.c0, -self.c1, -self.c2, -self.c3)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, ComplexQuaternion):
            return mul(self, other)
        if isinstance(other, (int, float, complex)):
            return ComplexQuaternion(self.c0 * other, self.c1 * other, self.c2 * other, self.c3 * other)
        return NotImplemented

    def __rmul__(self, other):
        # scalars commute with every element
        if isinstance(other, (int, float, complex)):
            return ComplexQuaternion(other * self.c0, other * self.c1, other * self.c2, other * self.c3)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float, complex)):
            return ComplexQuaternion(self.c0 / other, self.c1 / other, self.c2 / other, self.c3 / other)
        return NotImplemented

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "ComplexQuaternion({!r}, {!r}, {!r}, {!r})".format(*self.coeffs)

    def __str__(self):
        parts = []
        for c, unit in zip(self.coeffs, ("", "h", "j", "k")):
            if c != 0:
                parts.append(f"{_fmt(c)}{unit}")
        return " + ".join(parts) if parts else "0"


CQ = ComplexQuaternion


def _fmt(c: complex) -> str:
    if c.imag == 0:
        return f"{c.real:g}"
    if c.real == 0:
        return f"{c.imag:g}i"
    return f"({c.real:g}{c.imag:+g}i)"


def _coerce(x) -> ComplexQuaternion | None:
    if isinstance(x, ComplexQuaternion):
        return x
    if isinstance(x, (int, float, complex)):
        return ComplexQuaternion(x)
    return None


ONE = CQ(1)
ZERO = CQ(0)
I = CQ(1j)
H = CQ(0, 1)
J = CQ(0, 0, 1)
K = CQ(0, 0, 0, 1)
OMEGA = (H, J, K)
# Pauli-vector basis ih, ij, ik
SIGMA = (CQ(0, 1j), CQ(0, 0, 1j), CQ(0, 0, 0, 1j))


def pure(v: Iterable[Number]) -> ComplexQuaternion:
    """Return ``v1 h + v2 j + v3 k``."""
    a, b, c = v
    return CQ(0, a, b, c)


def mul(a: ComplexQuaternion, b: ComplexQuaternion) -> ComplexQuaternion:
    a0, a1, a2, a3 = a.c0, a.c1, a.c2, a.c3
    b0, b1, b2, b3 = b.c0, b.c1, b.c2, b.c3
    # (a0 + a.w)(b0 + b.w) = a0 b0 - a.b + a0 b + b0 a + a x b
    return ComplexQuaternion(
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 + a2 * b0 + a3 * b1 - a1 * b3,
        a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
    )


def conj_quat(q: ComplexQuaternion) -> ComplexQuaternion:
    return ComplexQuaternion(q.c0, -q.c1, -q.c2, -q.c3)


def conj_complex(q: ComplexQuaternion) -> ComplexQuaternion:
    return ComplexQuaternion(q.c0.conjugate(), q.c1.conjugate(), q.c2.conjugate(), q.c3.conjugate())


def conj_both(q: ComplexQuaternion) -> ComplexQuaternion:
    return ComplexQuaternion(q.c0.conjugate(), -q.c1.conjugate(), -q.c2.conjugate(), -q.c3.conjugate())


def quat_norm(q: ComplexQuaternion) -> ComplexQuaternion:
    """Full product ``q^⋆ q``.

    Over H⊗C this is always ``c0² + c1² + c2² + c3²`` (no conjugation of the
    complex coefficients), so it is a scalar up to rounding.  The whole product
    is returned so callers can confirm that with :meth:`ComplexQuaternion.is_scalar`.
    """
    return mul(conj_quat(q), q)


def _scalar_norm(q: ComplexQuaternion, tol: float) -> complex:
    n = quat_norm(q)
    if not n.is_scalar(tol * (1.0 + q.abs2())):
        raise NonScalarNormError(f"q^⋆q has a quaternion part: {n}")
    return n.c0


def inverse(q: ComplexQuaternion, rtol: float = ZERO_DIVISOR_RTOL) -> ComplexQuaternion:
    """Two-sided inverse ``q^⋆ / (q^⋆ q)``.

    Raises :class:`ZeroDivisorError` when ``|q^⋆q| < rtol (1 + |q|²)``.
    """
    n = _scalar_norm(q, rtol)
    if abs(n) < rtol * (1.0 + q.abs2()):
        raise ZeroDivisorError(f"{q} is a zero divisor (q^⋆q = {n})")
    return conj_quat(q) / n


def _cos_sinc(rho2: complex) -> tuple[complex, complex]:
    """cos(ρ) and sin(ρ)/ρ as functions of ρ², so the branch of ρ never matters."""
    if abs(rho2) < _SERIES_RADIUS ** 2:
        c = 1 - rho2 / 2 + rho2 * rho2 / 24 - rho2 ** 3 / 720
        s = 1 - rho2 / 6 + rho2 * rho2 / 120 - rho2 ** 3 / 5040
        return c, s
    rho = cmath.sqrt(rho2)
    return cmath.cos(rho), cmath.sin(rho) / rho


def exp_pure(beta: Sequence[Number]) -> ComplexQuaternion:
    """``exp(β1 h + β2 j + β3 k)`` for complex β.

    Real β gives a unit quaternion (rotation); purely imaginary β gives a boost.
    """
    b1, b2, b3 = (complex(x) for x in beta)
    c, s = _cos_sinc(b1 * b1 + b2 * b2 + b3 * b3)
    return ComplexQuaternion(c, s * b1, s * b2, s * b3)


def is_idempotent(q: ComplexQuaternion, tol: float = 1e-12) -> bool:
    return (mul(q, q) - q).max_abs() <= tol


def is_unit(q: ComplexQuaternion, tol: float = 1e-12) -> bool:
    return (quat_norm(q) - 1).max_abs() <= tol


def commutator(a: ComplexQuaternion, b: ComplexQuaternion) -> ComplexQuaternion:
    return mul(a, b) - mul(b, a)


def anticommutator(a: ComplexQuaternion, b: ComplexQuaternion) -> ComplexQuaternion:
    return mul(a, b) + mul(b, a)

