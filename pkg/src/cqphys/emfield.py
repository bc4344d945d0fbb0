"""Electrodynamics in 2×2 H⊗C form, evaluated with central finite differences.

Potentials and currents embed as ``Γ^μ A_μ`` in the Dirac representation::

    A = [[φ, -iω·A], [iω·A, -φ]]      j = [[ρ, -iω·j], [iω·j, -ρ]]

and ``d = Γ^μ ∂_μ``.  With ``E = -∂_t A - ∇φ`` and ``B = ∇×A`` one finds
``dA = (∂_t φ + ∇·A) I + F`` where ``F = [[-ω·B, iω·E], [iω·E, -ω·B]]``,
and ``dF - j`` carries Gauss's laws in its scalar parts and the
Faraday/Ampère laws in its ω parts.

All spatial vectors are contravariant.  Derivatives are O(h²) central
differences; nesting two of them needs ``2h`` of room around a point.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .dirac import GammaSet, PlaneWaveSpinor, Rep, build_gammas, dirac_adjoint
from .errors import DomainEscapeError
from .lorentz import FourVector
from .linalg import ZERO_MATRIX, CQMatrix2, CQVector2, mat_mul, mat_vec
from .quaternion import CQ, SIGMA, ZERO, ComplexQuaternion, inverse, mul

__all__ = [
    "PotentialField", "GridSpec", "FieldStrengthPoint", "PauliReport", "Superposition",
    "GaussianSpinor", "ConstantSpinor", "DEFAULT_H", "embed_potential", "embed_current",
    "electric_magnetic", "field_strength", "assemble_f", "apply_d", "maxwell_residual",
    "maxwell_components", "f_squared", "lorenz_residual", "u1_current", "u1_current_four",
    "current_conservation_residual", "pauli_reduction_check", "zero_field", "uniform_b",
    "plane_wave_field", "bump_field", "field_catalog", "get_field", "convergence_ratio",
]

# dyadic step: linear fields then difference without rounding
DEFAULT_H = 2.0 ** -10
LORENZ_WARN_TOL = 1e-6

Point = Sequence[float]
Scalar4 = Callable[[float, float, float, float], float]


@dataclass(frozen=True)
class PotentialField:
    """Contravariant potential ``(φ, A¹, A², A³)`` as four callables of ``(t, x, y, z)``.

    ``rho``/``current`` are optional analytic sources; ``E``/``B`` optional
    analytic fields used as references.  ``bounds`` is a 4-tuple of
    ``(lo, hi)`` pairs or None for an unbounded domain.
    """

    name: str
    components: tuple[Scalar4, Scalar4, Scalar4, Scalar4]
    rho: Optional[Callable[..., float]] = None
    current: Optional[Callable[..., Sequence[float]]] = None
    E: Optional[Callable[..., Sequence[float]]] = None
    B: Optional[Callable[..., Sequence[float]]] = None
    bounds: Optional[tuple[tuple[float, float], ...]] = None
    params: dict = field(default_factory=dict, compare=False)

    def __call__(self, x: Point) -> np.ndarray:
        vals = np.array([f(*x) for f in self.components], dtype=float)
        if not np.all(np.isfinite(vals)):
            raise DomainEscapeError(f"{self.name}: non-finite potential at {tuple(x)}")
        return vals

    def sources(self, x: Point) -> tuple[float, np.ndarray]:
        rho = self.rho(*x) if self.rho else 0.0
        j = np.asarray(self.current(*x), dtype=float) if self.current else np.zeros(3)
        return float(rho), j

    def check_domain(self, x: Point, reach: float) -> None:
        if self.bounds is None:
            return
        for c, (lo, hi) in zip(x, self.bounds):
            if c - reach < lo or c + reach > hi:
                raise DomainEscapeError(
                    f"{self.name}: stencil of reach {reach} around {tuple(x)} leaves {self.bounds}")


@dataclass(frozen=True)
class GridSpec:
    h: float = DEFAULT_H
    points: tuple[tuple[float, float, float, float], ...] = ()
    order: int = 2

    def __post_init__(self):
        if not self.h > 0:
            raise ValueError(f"grid step must be positive, got {self.h}")
        if self.order != 2:
            raise ValueError("only second-order central differences are supported")

    def halved(self) -> "GridSpec":
        return GridSpec(self.h / 2, self.points, self.order)


@dataclass(frozen=True)
class FieldStrengthPoint:
    E: np.ndarray
    B: np.ndarray
    F: CQMatrix2


def _pauli(v: Sequence[complex], scale: complex = 1.0) -> ComplexQuaternion:
    return CQ(0, scale * v[0], scale * v[1], scale * v[2])


def embed_potential(phi: float, A: Sequence[float]) -> CQMatrix2:
    a = _pauli(A, 1j)
    return CQMatrix2(phi, -a, a, -phi)


def embed_current(rho: float, j: Sequence[float]) -> CQMatrix2:
    return embed_potential(rho, j)


def assemble_f(E: Sequence[float], B: Sequence[float]) -> CQMatrix2:
    b = _pauli(B, -1.0)
    e = _pauli(E, 1j)
    return CQMatrix2(b, e, e, b)


def _unit(mu: int, h: float) -> np.ndarray:
    e = np.zeros(4)
    e[mu] = h
    return e


def _diff(f: Callable[[np.ndarray], object], x: np.ndarray, mu: int, h: float):
    """Central difference of ``f`` along coordinate ``mu``."""
    e = _unit(mu, h)
    return (f(x + e) - f(x - e)) * (1.0 / (2 * h))


def _jacobian(fld: PotentialField, x: np.ndarray, h: float) -> np.ndarray:
    """``J[μ, ν] = ∂A^ν/∂x^μ``."""
    return np.array([_diff(fld, x, mu, h) for mu in range(4)])


def _eb_from_jacobian(J: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    E = -J[0, 1:] - J[1:, 0]
    d = J[1:, 1:]
    B = np.array([d[1, 2] - d[2, 1], d[2, 0] - d[0, 2], d[0, 1] - d[1, 0]])
    return E, B


def electric_magnetic(fld: PotentialField, x: Point, h: float = DEFAULT_H) -> tuple[np.ndarray, np.ndarray]:
    x = np.asarray(x, dtype=float)
    fld.check_domain(x, h)
    return _eb_from_jacobian(_jacobian(fld, x, h))


def _as_h(grid: GridSpec | float | None) -> float:
    if grid is None:
        return DEFAULT_H
    if isinstance(grid, GridSpec):
        return grid.h
    h = float(grid)
    if not h > 0:
        raise ValueError(f"grid step must be positive, got {h}")
    return h


def lorenz_residual(fld: PotentialField, point: Point, grid: GridSpec | float | None = None) -> float:
    """``∂_t φ + ∇·A`` by central differences."""
    h = _as_h(grid)
    x = np.asarray(point, dtype=float)
    fld.check_domain(x, h)
    J = _jacobian(fld, x, h)
    return float(J[0, 0] + J[1, 1] + J[2, 2] + J[3, 3])


def field_strength(fld: PotentialField, point: Point, grid: GridSpec | float | None = None,
                   check_lorenz: bool = True) -> FieldStrengthPoint:
    h = _as_h(grid)
    x = np.asarray(point, dtype=float)
    fld.check_domain(x, h)
    J = _jacobian(fld, x, h)
    if check_lorenz:
        lz = J[0, 0] + J[1, 1] + J[2, 2] + J[3, 3]
        if abs(lz) > LORENZ_WARN_TOL:
            warnings.warn(f"{fld.name}: Lorenz gauge violated at {tuple(x)} (residual {lz:.3g})",
                          stacklevel=2)
    E, B = _eb_from_jacobian(J)
    return FieldStrengthPoint(E, B, assemble_f(E, B))


def apply_d(M: Callable[[np.ndarray], CQMatrix2], x: Point, h: float = DEFAULT_H,
            gs: GammaSet | None = None) -> CQMatrix2:
    """``Γ^μ ∂_μ M`` at ``x`` for a matrix-valued function ``M``."""
    gs = gs or build_gammas(Rep.DIRAC)
    x = np.asarray(x, dtype=float)
    out = ZERO_MATRIX
    for mu in range(4):
        out = out + mat_mul(gs.gamma[mu], _diff(M, x, mu, h))
    return out


def maxwell_residual(fld: PotentialField, sources: Optional[Callable[..., tuple[float, Sequence[float]]]],
                     point: Point, grid: GridSpec | float | None = None) -> CQMatrix2:
    """``dF - j`` with ``F`` itself obtained by differencing the potential.

    ``sources`` maps ``(t, x, y, z)`` to ``(ρ, j)``; None uses the field's own
    analytic sources (zero when it has none).
    """
    h = _as_h(grid)
    x = np.asarray(point, dtype=float)
    fld.check_domain(x, 2 * h)

    def F(y: np.ndarray) -> CQMatrix2:
        E, B = _eb_from_jacobian(_jacobian(fld, y, h))
        return assemble_f(E, B)

    dF = apply_d(F, x, h)
    rho, j = sources(*x) if sources is not None else fld.sources(x)
    return dF - embed_current(rho, j)


def maxwell_components(res: CQMatrix2) -> dict[str, object]:
    """Split ``dF - j`` into the four classical residuals.

    gauss_e = ∇·E - ρ, faraday = ∂_t B + ∇×E, gauss_b = ∇·B,
    ampere = ∇×B - ∂_t E - j.
    """
    d, o = res.m00, res.m01
    return {
        "gauss_e": d.c0.real,
        "faraday": -np.array([d.c1.real, d.c2.real, d.c3.real]),
        "gauss_b": (o.c0 / 1j).real,
        "ampere": -np.array([(o.c1 / 1j).real, (o.c2 / 1j).real, (o.c3 / 1j).real]),
    }


def f_squared(F: FieldStrengthPoint | CQMatrix2) -> CQMatrix2:
    """``F F``; equals ``(E² - B²) I`` plus ``2i E·B`` off the diagonal."""
    M = F.F if isinstance(F, FieldStrengthPoint) else F
    return mat_mul(M, M)


# -- U(1) current ---------------------------------------------------------------


def u1_current(psi: CQVector2, gs: GammaSet | None = None) -> tuple[ComplexQuaternion, ...]:
    """``ψ̄ Γ^μ ψ`` for μ = 0..3.  Each value is Hermitian in H⊗C, not always scalar."""
    gs = gs or build_gammas(Rep.DIRAC)
    bar = dirac_adjoint(psi, gs)
    return tuple(bar @ mat_vec(gs.gamma[mu], psi) for mu in range(4))


def u1_current_four(psi: CQVector2, gs: GammaSet | None = None) -> FourVector:
    """Real scalar parts of :func:`u1_current`."""
    return FourVector(*(c.c0.real for c in u1_current(psi, gs)))


@dataclass(frozen=True)
class Superposition:
    """``Σ c_i ψ_i(x)`` with complex weights."""

    modes: tuple[tuple[complex, PlaneWaveSpinor], ...]

    def __call__(self, x: Point) -> CQVector2:
        out = CQVector2()
        for c, sw in self.modes:
            out = out + sw.value(x) * c
        return out


class _CurrentVec:
    """Current as a 16-component real vector so it can be differenced."""

    def __init__(self, psi_fn: Callable[[Point], CQVector2], gs: GammaSet):
        self.psi_fn = psi_fn
        self.gs = gs

    def __call__(self, x: np.ndarray) -> np.ndarray:
        cur = u1_current(self.psi_fn(x), self.gs)
        return np.array([c for q in cur for c in q.coeffs])


def current_conservation_residual(sup: Superposition | PlaneWaveSpinor | Callable[[Point], CQVector2],
                                  point: Point, grid: GridSpec | float | None = None) -> float:
    """Max-abs coefficient of ``∂_μ j^μ`` by central differences."""
    h = _as_h(grid)
    if isinstance(sup, PlaneWaveSpinor):
        sup = Superposition(((1.0, sup),))
    cur = _CurrentVec(sup, build_gammas(Rep.DIRAC))
    x = np.asarray(point, dtype=float)
    div = np.zeros(4, dtype=complex)
    for mu in range(4):
        d = _diff(cur, x, mu, h)
        div += d[4 * mu: 4 * mu + 4]
    return float(np.max(np.abs(div)))


# -- Pauli reduction ------------------------------------------------------------


@dataclass(frozen=True)
class GaussianSpinor:
    """``q exp(-|r - c|² / (2 s²))`` with ``q`` in H⊗C."""

    amplitude: ComplexQuaternion
    center: tuple[float, float, float] = (0.0, 0.0, 0.0)
    width: float = 1.0

    def _env(self, x: Point) -> tuple[float, np.ndarray]:
        r = np.asarray(x[1:], dtype=float) - np.asarray(self.center)
        return math.exp(-float(r @ r) / (2 * self.width ** 2)), r

    def __call__(self, x: Point) -> ComplexQuaternion:
        g, _ = self._env(x)
        return self.amplitude * g

    def grad(self, x: Point) -> list[ComplexQuaternion]:
        g, r = self._env(x)
        return [self.amplitude * (-g * r[l] / self.width ** 2) for l in range(3)]

    def laplacian(self, x: Point) -> ComplexQuaternion:
        g, r = self._env(x)
        s2 = self.width ** 2
        return self.amplitude * (g * (float(r @ r) / s2 - 3.0) / s2)


@dataclass(frozen=True)
class ConstantSpinor:
    amplitude: ComplexQuaternion

    def __call__(self, x: Point) -> ComplexQuaternion:
        return self.amplitude

    def grad(self, x: Point) -> list[ComplexQuaternion]:
        return [ZERO, ZERO, ZERO]

    def laplacian(self, x: Point) -> ComplexQuaternion:
        return ZERO


@dataclass(frozen=True)
class PauliReport:
    lhs: ComplexQuaternion
    rhs: ComplexQuaternion
    residual: float
    moment: float
    h: float


class _Q8:
    """Wrap an H⊗C-valued function as a real-array one for differencing."""

    def __init__(self, f: Callable[[np.ndarray], ComplexQuaternion]):
        self.f = f

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return np.array(self.f(x).coeffs)


def _to_cq(a: np.ndarray) -> ComplexQuaternion:
    return CQ(*a)


def _sigma_dot(v: Sequence[complex]) -> ComplexQuaternion:
    return _pauli(v, 1j)


def pauli_reduction_check(fld: PotentialField, e: float, m: float, alpha, point: Point,
                          grid: GridSpec | float | None = None) -> PauliReport:
    """Compare ``(Σ·π)² α`` with ``[π² - e Σ·B] α`` at one point.

    ``π^ℓ = p^ℓ - e A^ℓ`` with ``p^ℓ = -i ∂/∂x^ℓ``; Σ acts by left
    multiplication.  The left side is nested central differences; the right
    side uses the spinor's analytic derivatives, the field's analytic B when
    available, and a fourth-order difference for ∇·A.  ``moment`` is the
    scalar part of ``(π²α - (Σ·π)²α) / (2m) · (Σ·B α)⁻¹`` (nan when that is
    not invertible).
    """
    h = _as_h(grid)
    x = np.asarray(point, dtype=float)
    fld.check_domain(x, 2 * h)

    def pi_alpha(y: np.ndarray) -> list[ComplexQuaternion]:
        d = [_to_cq(_diff(_Q8(alpha), y, l + 1, h)) for l in range(3)]
        A = fld(y)[1:]
        a = alpha(y)
        return [d[l] * -1j - a * (e * A[l]) for l in range(3)]

    def sigma_pi_alpha(y: np.ndarray) -> ComplexQuaternion:
        pa = pi_alpha(y)
        return mul(SIGMA[0], pa[0]) + mul(SIGMA[1], pa[1]) + mul(SIGMA[2], pa[2])

    g = _Q8(sigma_pi_alpha)
    A = fld(x)[1:]
    gx = sigma_pi_alpha(x)
    lhs = ZERO
    for l in range(3):
        dg = _to_cq(_diff(g, x, l + 1, h))
        lhs = lhs + mul(SIGMA[l], dg * -1j - gx * (e * A[l]))

    a = alpha(x)
    grad = alpha.grad(x)
    div_a = _divergence4(fld, x, h)
    pi2 = (alpha.laplacian(x) * -1 + a * (1j * e * div_a)
           + sum((grad[l] * (2j * e * A[l]) for l in range(3)), ZERO)
           + a * (e * e * float(A @ A)))
    B = np.asarray(fld.B(*x), dtype=float) if fld.B else electric_magnetic(fld, x, h)[1]
    sb_alpha = mul(_sigma_dot(B), a)
    rhs = pi2 - sb_alpha * e
    try:
        moment = (mul((pi2 - lhs) / (2 * m), inverse(sb_alpha))).c0.real
    except ArithmeticError:
        moment = float("nan")
    return PauliReport(lhs, rhs, (lhs - rhs).max_abs(), moment, h)


def _divergence4(fld: PotentialField, x: np.ndarray, h: float) -> float:
    total = 0.0
    for l in range(1, 4):
        e1, e2 = _unit(l, h), _unit(l, 2 * h)
        total += (-fld(x + e2)[l] + 8 * fld(x + e1)[l] - 8 * fld(x - e1)[l] + fld(x - e2)[l]) / (12 * h)
    return total


def convergence_ratio(residual: Callable[[float], float], h: float) -> float:
    """``residual(h) / residual(h/2)``; ≈4 for an O(h²) scheme."""
    r1, r2 = residual(h), residual(h / 2)
    return r1 / r2 if r2 != 0 else float("inf")


# -- field catalog -------------------------------------------------------------


def _zero4(t, x, y, z):
    return 0.0


def zero_field() -> PotentialField:
    zero3 = lambda *x: (0.0, 0.0, 0.0)  # noqa: E731
    return PotentialField("zero", (_zero4,) * 4, rho=_zero4, current=zero3, E=zero3, B=zero3)


def uniform_b(B: Sequence[float] = (0.0, 0.0, 1.0)) -> PotentialField:
    """Static uniform magnetic field in the symmetric gauge ``A = ½ B×r``."""
    b1, b2, b3 = (float(c) for c in B)
    comps = (
        _zero4,
        lambda t, x, y, z: 0.5 * (b2 * z - b3 * y),
        lambda t, x, y, z: 0.5 * (b3 * x - b1 * z),
        lambda t, x, y, z: 0.5 * (b1 * y - b2 * x),
    )
    zero3 = lambda *x: (0.0, 0.0, 0.0)  # noqa: E731
    return PotentialField("uniform-b", comps, rho=_zero4, current=zero3, E=zero3,
                          B=lambda *x: (b1, b2, b3), params={"B": (b1, b2, b3)})


def plane_wave_field(amplitude: float = 1.0, omega: float = 1.0,
                     direction: Sequence[float] = (0.0, 0.0, 1.0),
                     polarization: Sequence[float] = (1.0, 0.0, 0.0)) -> PotentialField:
    """Vacuum wave ``A = A₀ ε cos(ω(t - n·r))``, φ = 0, with ``ε ⟂ n``."""
    n = np.asarray(direction, dtype=float)
    n = n / np.linalg.norm(n)
    eps = np.asarray(polarization, dtype=float)
    eps = eps - (eps @ n) * n
    if np.linalg.norm(eps) < 1e-12:
        raise ValueError("polarization must not be parallel to the direction")
    eps = eps / np.linalg.norm(eps)
    a0, w = float(amplitude), float(omega)
    nxe = np.cross(n, eps)

    def phase(t, x, y, z):
        return w * (t - n[0] * x - n[1] * y - n[2] * z)

    def comp(l):
        return lambda t, x, y, z: a0 * eps[l] * math.cos(phase(t, x, y, z))

    def E(t, x, y, z):
        return tuple(a0 * w * math.sin(phase(t, x, y, z)) * eps)

    def B(t, x, y, z):
        return tuple(a0 * w * math.sin(phase(t, x, y, z)) * nxe)

    zero3 = lambda *x: (0.0, 0.0, 0.0)  # noqa: E731
    return PotentialField("plane-wave", (_zero4, comp(0), comp(1), comp(2)), rho=_zero4,
                          current=zero3, E=E, B=B,
                          params={"amplitude": a0, "omega": w, "direction": tuple(n),
                                  "polarization": tuple(eps)})


def bump_field(charge: float = 1.0, radius: float = 1.0,
               center: Sequence[float] = (0.0, 0.0, 0.0)) -> PotentialField:
    """Static, compactly supported electrostatic potential ``φ = Q exp(1 - 1/(1 - r²/R²))``.

    The charge density is the analytic ``-∇²φ``.
    """
    q, R = float(charge), float(radius)
    c = np.asarray(center, dtype=float)

    def parts(x, y, z):
        r = np.array([x, y, z]) - c
        s = float(r @ r) / R ** 2
        if s >= 1.0:
            return None
        u = 1.0 / (1.0 - s)
        f = q * math.exp(1.0 - u)
        return r, s, u, f

    def phi(t, x, y, z):
        p = parts(x, y, z)
        return 0.0 if p is None else p[3]

    def E(t, x, y, z):
        p = parts(x, y, z)
        if p is None:
            return (0.0, 0.0, 0.0)
        r, s, u, f = p
        fp = -f * u * u
        return tuple(-fp * 2 * r / R ** 2)

    def rho(t, x, y, z):
        p = parts(x, y, z)
        if p is None:
            return 0.0
        r, s, u, f = p
        fp = -f * u * u
        fpp = f * (u ** 4 - 2 * u ** 3)
        return -(fpp * 4 * s / R ** 2 + fp * 6 / R ** 2)

    zero3 = lambda *x: (0.0, 0.0, 0.0)  # noqa: E731
    return PotentialField("bump", (phi, _zero4, _zero4, _zero4), rho=rho, current=zero3,
                          E=E, B=zero3, params={"charge": q, "radius": R, "center": tuple(c)})


_CATALOG = {
    "zero": zero_field,
    "uniform-b": uniform_b,
    "plane-wave": plane_wave_field,
    "bump": bump_field,
}


def field_catalog() -> list[str]:
    return list(_CATALOG)


def get_field(name: str, **kwargs) -> PotentialField:
    try:
        return _CATALOG[name](**kwargs)
    except KeyError:
        raise KeyError(f"unknown field {name!r}; choose from {field_catalog()}") from None
