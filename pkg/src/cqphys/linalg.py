"""2×2 matrices and 2-vectors with H⊗C entries.

Entries multiply as noncommuting ring elements, row into column, with the
left matrix's entry on the left.  Vectors are columns; ``dagger_vec`` gives
the row form used in inner products.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence, Union

from .quaternion import CQ, ONE, ZERO, ComplexQuaternion, conj_both, conj_complex, mul

Number = Union[int, float, complex]
Entry = Union[ComplexQuaternion, Number]

__all__ = [
    "CQMatrix2", "CQVector2", "RowVector2", "mat_mul", "mat_vec", "dagger", "dagger_vec",
    "complex_dagger", "trace", "commutator", "anticommutator", "hermitian_inner",
    "IDENTITY", "ZERO_MATRIX", "diag",
]


def _cq(x: Entry) -> ComplexQuaternion:
    return x if isinstance(x, ComplexQuaternion) else CQ(x)


@dataclass(frozen=True)
class CQVector2:
    v0: ComplexQuaternion
    v1: ComplexQuaternion

    def __init__(self, v0: Entry = 0, v1: Entry = 0):
        object.__setattr__(self, "v0", _cq(v0))
        object.__setattr__(self, "v1", _cq(v1))

    def __iter__(self):
        yield self.v0
        yield self.v1

    def __getitem__(self, i: int) -> ComplexQuaternion:
        return (self.v0, self.v1)[i]

    def __add__(self, other: "CQVector2") -> "CQVector2":
        return CQVector2(self.v0 + other.v0, self.v1 + other.v1)

    def __sub__(self, other: "CQVector2") -> "CQVector2":
        return CQVector2(self.v0 - other.v0, self.v1 - other.v1)

    def __neg__(self) -> "CQVector2":
        return CQVector2(-self.v0, -self.v1)

    def __mul__(self, s: Number) -> "CQVector2":
        if isinstance(s, (int, float, complex)):
            return CQVector2(self.v0 * s, self.v1 * s)
        return NotImplemented

    __rmul__ = __mul__

    def left(self, q: Entry) -> "CQVector2":
        """Multiply every component by ``q`` from the left."""
        q = _cq(q)
        return CQVector2(mul(q, self.v0), mul(q, self.v1))

    def right(self, q: Entry) -> "CQVector2":
        q = _cq(q)
        return CQVector2(mul(self.v0, q), mul(self.v1, q))

    def map(self, f: Callable[[ComplexQuaternion], ComplexQuaternion]) -> "CQVector2":
        return CQVector2(f(self.v0), f(self.v1))

    def max_abs(self) -> float:
        return max(self.v0.max_abs(), self.v1.max_abs())

    def isclose(self, other: "CQVector2", tol: float = 1e-12) -> bool:
        return (self - other).max_abs() <= tol


@dataclass(frozen=True)
class RowVector2:
    """Row (bra) form of a 2-vector, produced by :func:`dagger_vec`."""

    r0: ComplexQuaternion
    r1: ComplexQuaternion

    def __matmul__(self, other):
        if isinstance(other, CQVector2):
            return mul(self.r0, other.v0) + mul(self.r1, other.v1)
        if isinstance(other, CQMatrix2):
            return RowVector2(
                mul(self.r0, other.m00) + mul(self.r1, other.m10),
                mul(self.r0, other.m01) + mul(self.r1, other.m11),
            )
        return NotImplemented


@dataclass(frozen=True)
class CQMatrix2:
    m00: ComplexQuaternion
    m01: ComplexQuaternion
    m10: ComplexQuaternion
    m11: ComplexQuaternion

    def __init__(self, m00: Entry = 0, m01: Entry = 0, m10: Entry = 0, m11: Entry = 0):
        object.__setattr__(self, "m00", _cq(m00))
        object.__setattr__(self, "m01", _cq(m01))
        object.__setattr__(self, "m10", _cq(m10))
        object.__setattr__(self, "m11", _cq(m11))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Entry]]) -> "CQMatrix2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @property
    def entries(self) -> tuple[ComplexQuaternion, ...]:
        return (self.m00, self.m01, self.m10, self.m11)

    def __getitem__(self, ij: tuple[int, int]) -> ComplexQuaternion:
        i, j = ij
        return self.entries[2 * i + j]

    def __add__(self, other: "CQMatrix2") -> "CQMatrix2":
        if not isinstance(other, CQMatrix2):
            return NotImplemented
        return CQMatrix2(*(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "CQMatrix2") -> "CQMatrix2":
        if not isinstance(other, CQMatrix2):
            return NotImplemented
        return CQMatrix2(*(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "CQMatrix2":
        return CQMatrix2(*(-a for a in self.entries))

    def __mul__(self, s: Number) -> "CQMatrix2":
        if isinstance(s, (int, float, complex)):
            return CQMatrix2(*(a * s for a in self.entries))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, s: Number) -> "CQMatrix2":
        return CQMatrix2(*(a / s for a in self.entries))

    def __matmul__(self, other):
        if isinstance(other, CQMatrix2):
            return mat_mul(self, other)
        if isinstance(other, CQVector2):
            return mat_vec(self, other)
        return NotImplemented

    def left(self, q: Entry) -> "CQMatrix2":
        q = _cq(q)
        return CQMatrix2(*(mul(q, a) for a in self.entries))

    def right(self, q: Entry) -> "CQMatrix2":
        q = _cq(q)
        return CQMatrix2(*(mul(a, q) for a in self.entries))

    def map(self, f: Callable[[ComplexQuaternion], ComplexQuaternion]) -> "CQMatrix2":
        return CQMatrix2(*(f(a) for a in self.entries))

    def max_abs(self) -> float:
        return max(a.max_abs() for a in self.entries)

    def isclose(self, other: "CQMatrix2", tol: float = 1e-12) -> bool:
        return (self - other).max_abs() <= tol

    def is_scalar_multiple_of_identity(self, tol: float = 1e-12) -> bool:
        return (self.m01.max_abs() <= tol and self.m10.max_abs() <= tol
                and (self.m00 - self.m11).max_abs() <= tol and self.m00.is_scalar(tol))

    def __str__(self):
        return f"[[{self.m00}, {self.m01}], [{self.m10}, {self.m11}]]"


def diag(a: Entry, d: Entry) -> CQMatrix2:
    return CQMatrix2(a, 0, 0, d)


IDENTITY = CQMatrix2(ONE, ZERO, ZERO, ONE)
ZERO_MATRIX = CQMatrix2()


def mat_mul(A: CQMatrix2, B: CQMatrix2) -> CQMatrix2:
    return CQMatrix2(
        mul(A.m00, B.m00) + mul(A.m01, B.m10),
        mul(A.m00, B.m01) + mul(A.m01, B.m11),
        mul(A.m10, B.m00) + mul(A.m11, B.m10),
        mul(A.m10, B.m01) + mul(A.m11, B.m11),
    )


def mat_vec(A: CQMatrix2, v: CQVector2) -> CQVector2:
    return CQVector2(
        mul(A.m00, v.v0) + mul(A.m01, v.v1),
        mul(A.m10, v.v0) + mul(A.m11, v.v1),
    )


def dagger(A: CQMatrix2) -> CQMatrix2:
    """Transpose with the double (complex and quaternionic) conjugate on entries."""
    return CQMatrix2(conj_both(A.m00), conj_both(A.m10), conj_both(A.m01), conj_both(A.m11))


def complex_dagger(A: CQMatrix2) -> CQMatrix2:
    """Transpose with complex conjugation only."""
    return CQMatrix2(conj_complex(A.m00), conj_complex(A.m10), conj_complex(A.m01), conj_complex(A.m11))


def dagger_vec(v: CQVector2) -> RowVector2:
    return RowVector2(conj_both(v.v0), conj_both(v.v1))


def trace(A: CQMatrix2) -> ComplexQuaternion:
    return A.m00 + A.m11


def commutator(A: CQMatrix2, B: CQMatrix2) -> CQMatrix2:
    return mat_mul(A, B) - mat_mul(B, A)


def anticommutator(A: CQMatrix2, B: CQMatrix2) -> CQMatrix2:
    return mat_mul(A, B) + mat_mul(B, A)


def hermitian_inner(u: CQVector2, v: CQVector2) -> ComplexQuaternion:
    """``u† v`` with the double conjugate on the components of ``u``."""
    return dagger_vec(u) @ v
