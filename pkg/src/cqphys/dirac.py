"""Gamma matrices over H⊗C, plane-wave solutions and discrete symmetries.

Momentum convention: every ``p`` argument is the covariant spatial momentum
``p_ℓ`` (lower index), so the physical three-momentum is ``-p``.  With this
convention the plane-wave amplitudes read ``(1, -iω·p/(E+m))`` and the phase
is ``exp(∓i p_μ x^μ)`` with ``p_μ x^μ = E t + p_ℓ x^ℓ``.

The Dirac representation is obtained from the Weyl one as ``U Γ U†`` with
``U = [[1, 1], [-1, 1]]/√2``.  In the Weyl representation
``Γ⁵ = iΓ⁰Γ¹Γ²Γ³ = diag(-1, 1)``; in the Dirac representation the same
product is ``[[0, 1], [1, 0]]``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import NonPositiveMassError, RestFrameSingularError, ZeroMomentumError
from .linalg import (
    IDENTITY, ZERO_MATRIX, CQMatrix2, CQVector2, RowVector2, dagger, dagger_vec, diag,
    mat_mul, mat_vec,
)
from .quaternion import CQ, SIGMA, ZERO, ComplexQuaternion, conj_both, mul

__all__ = [
    "Rep", "Species", "Spin", "GammaSet", "PlaneWaveSpinor", "build_gammas", "energy",
    "slash", "plane_wave", "raw_solution", "feynman_stuckelberg", "dirac_residual",
    "charge_conjugation_op", "time_reversal_op", "parity_op", "charge_conjugate", "parity",
    "time_reverse", "cpt", "chirality_project", "alpha", "hamiltonian", "spin_op",
    "helicity_op", "spin_commutator_residual", "spin_eigenstate", "spin_coefficient",
    "dirac_adjoint", "bilinear", "real_norm", "chiral_identity_residuals", "chiral_identity_check",
    "METRIC",
    "to_weyl", "to_dirac",
]

METRIC = (1.0, -1.0, -1.0, -1.0)
_LEVI = {(0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1, (0, 2, 1): -1, (2, 1, 0): -1, (1, 0, 2): -1}


class Rep(enum.Enum):
    WEYL = "weyl"
    DIRAC = "dirac"


class Species(enum.Enum):
    MATTER = "matter"
    ANTIMATTER = "antimatter"

    def flipped(self) -> "Species":
        return Species.ANTIMATTER if self is Species.MATTER else Species.MATTER


class Spin(enum.Enum):
    UP = "up"
    DOWN = "down"


@dataclass(frozen=True)
class GammaSet:
    rep: Rep
    gamma: tuple[CQMatrix2, CQMatrix2, CQMatrix2, CQMatrix2]
    gamma5: CQMatrix2
    U: CQMatrix2

    def __getitem__(self, mu: int) -> CQMatrix2:
        return self.gamma[mu]


_R2 = 1 / math.sqrt(2.0)
U_CHANGE = CQMatrix2(_R2, _R2, -_R2, _R2)


def _gamma5(g: Sequence[CQMatrix2]) -> CQMatrix2:
    return mat_mul(mat_mul(mat_mul(g[0], g[1]), g[2]), g[3]) * 1j


@lru_cache(maxsize=None)
def build_gammas(rep: Rep = Rep.DIRAC) -> GammaSet:
    # spatial gammas are [[0, Σ], [-Σ, 0]] in both representations
    spatial = tuple(CQMatrix2(0, s, -s, 0) for s in SIGMA)
    if rep is Rep.WEYL:
        g0 = CQMatrix2(0, 1, 1, 0)
    else:
        g0 = diag(1, -1)
    gamma = (g0,) + spatial
    return GammaSet(rep, gamma, _gamma5(gamma), U_CHANGE)


def to_dirac(psi: CQVector2) -> CQVector2:
    return mat_vec(U_CHANGE, psi)


def to_weyl(psi: CQVector2) -> CQVector2:
    return mat_vec(dagger(U_CHANGE), psi)


def energy(p: Sequence[float], m: float) -> float:
    return math.sqrt(sum(x * x for x in p) + m * m)


def slash(gs: GammaSet, p_cov: Sequence[float]) -> CQMatrix2:
    """``Γ^μ p_μ`` for covariant components ``p_cov = (p_0, p_1, p_2, p_3)``."""
    out = ZERO_MATRIX
    for mu in range(4):
        if p_cov[mu] != 0:
            out = out + gs.gamma[mu] * p_cov[mu]
    return out


def _pauli_dot(p: Sequence[float]) -> ComplexQuaternion:
    """``iω_ℓ p_ℓ``."""
    return CQ(0, 1j * p[0], 1j * p[1], 1j * p[2])


@dataclass(frozen=True)
class PlaneWaveSpinor:
    """``u exp(phase_sign · i p_μ x^μ)`` in the Dirac representation.

    ``phase_sign`` is -1 for matter and +1 for antimatter solutions built by
    :func:`plane_wave`; ``p`` is covariant.
    """

    u: CQVector2
    p: tuple[float, float, float]
    m: float
    species: Species
    phase_sign: int

    @property
    def E(self) -> float:
        return energy(self.p, self.m)

    @property
    def p_cov(self) -> tuple[float, float, float, float]:
        return (self.E,) + tuple(self.p)

    def phase(self, x: Sequence[float]) -> complex:
        t, x1, x2, x3 = x
        px = self.E * t + self.p[0] * x1 + self.p[1] * x2 + self.p[2] * x3
        return complex(math.cos(px), self.phase_sign * math.sin(px))

    def value(self, x: Sequence[float]) -> CQVector2:
        ph = self.phase(x)
        return CQVector2(self.u.v0 * ph, self.u.v1 * ph)

    def scaled(self, c: complex) -> "PlaneWaveSpinor":
        return PlaneWaveSpinor(self.u * c, self.p, self.m, self.species, self.phase_sign)


def _check_mass(m: float) -> None:
    if not m > 0:
        raise NonPositiveMassError(f"mass must be positive, got {m}")


def plane_wave(species: Species, p: Sequence[float], m: float) -> PlaneWaveSpinor:
    """Physical matter (χ) or antimatter (φ) solution with positive energy."""
    _check_mass(m)
    p = tuple(float(x) for x in p)
    E = energy(p, m)
    lower = _pauli_dot(p) * (-1.0 / (E + m))
    if species is Species.MATTER:
        return PlaneWaveSpinor(CQVector2(1, lower), p, m, species, -1)
    return PlaneWaveSpinor(CQVector2(lower, 1), p, m, species, +1)


def _ratio(p: Sequence[float], denom: float) -> ComplexQuaternion:
    num = _pauli_dot(p) * -1.0
    if num.max_abs() == 0:
        return ZERO
    if abs(denom) < 1e-12:
        raise RestFrameSingularError(f"E - m = {denom} with nonzero momentum")
    return num / denom


def raw_solution(index: int, p: Sequence[float], m: float, E: float | None = None) -> tuple[CQVector2, int]:
    """Amplitude and phase sign of the raw solutions ψ₁..ψ₄.

    ``E`` defaults to the positive root; pass ``-E`` with ``-p`` to evaluate
    the Feynman–Stückelberg image.
    """
    _check_mass(m)
    if E is None:
        E = energy(p, m)
    if index == 1:
        return CQVector2(1, _ratio(p, E + m)), -1
    if index == 2:
        return CQVector2(_ratio(p, E - m), 1), -1
    if index == 3:
        return CQVector2(_ratio(p, E + m), 1), +1
    if index == 4:
        return CQVector2(1, _ratio(p, E - m)), +1
    raise ValueError(f"solution index must be 1..4, got {index}")


def feynman_stuckelberg(index: int, p: Sequence[float], m: float, tol: float = 1e-12) -> tuple[int, CQVector2]:
    """Send ``E -> -E``, ``p -> -p`` in ψ_index and identify the result among ψ₁..ψ₄.

    Returns ``(mapped_index, amplitude)``; ``mapped_index`` is 0 when the image
    matches none of the four raw solutions at ``(E, p)``.
    """
    E = energy(p, m)
    amp, sign = raw_solution(index, [-x for x in p], m, E=-E)
    sign = -sign
    for j in (1, 2, 3, 4):
        try:
            cand, csign = raw_solution(j, p, m)
        except RestFrameSingularError:
            continue
        if csign == sign and cand.isclose(amp, tol * (1 + E)):
            return j, amp
    return 0, amp


def dirac_residual(sw: PlaneWaveSpinor, gs: GammaSet | None = None) -> float:
    """Max-abs of ``(Γ^μ p_μ ∓ m) u``; minus for matter, plus for antimatter."""
    gs = gs or build_gammas(Rep.DIRAC)
    s = 1.0 if sw.species is Species.MATTER else -1.0
    M = slash(gs, sw.p_cov) - IDENTITY * (s * sw.m)
    return mat_vec(M, sw.u).max_abs()


def charge_conjugation_op() -> CQMatrix2:
    return CQMatrix2(0, -1, 1, 0)


def time_reversal_op() -> CQMatrix2:
    return CQMatrix2(0, -1j, 1j, 0)


def parity_op() -> CQMatrix2:
    return build_gammas(Rep.DIRAC).gamma[0]


def charge_conjugate(sw: PlaneWaveSpinor) -> PlaneWaveSpinor:
    """``u -> C Γ⁰ u^*``; the phase is conjugated along with the amplitude."""
    M = mat_mul(charge_conjugation_op(), parity_op())
    u = mat_vec(M, sw.u.map(conj_both))
    return PlaneWaveSpinor(u, sw.p, sw.m, sw.species.flipped(), -sw.phase_sign)


def parity(sw: PlaneWaveSpinor) -> PlaneWaveSpinor:
    """``ψ(t, x) -> Γ⁰ ψ(t, -x)``."""
    u = mat_vec(parity_op(), sw.u)
    return PlaneWaveSpinor(u, tuple(-x for x in sw.p), sw.m, sw.species, sw.phase_sign)


def time_reverse(sw: PlaneWaveSpinor) -> PlaneWaveSpinor:
    """``ψ(t, x) -> T ψ(-t, x)`` with T acting linearly.

    Reversing t turns ``exp(∓i(Et + p·x))`` into ``exp(±i(Et - p·x))``, so the
    image is read as the opposite species with momentum ``-p``.
    """
    u = mat_vec(time_reversal_op(), sw.u)
    return PlaneWaveSpinor(u, tuple(-x for x in sw.p), sw.m, sw.species.flipped(), -sw.phase_sign)


def cpt(sw: PlaneWaveSpinor) -> PlaneWaveSpinor:
    return charge_conjugate(parity(time_reverse(sw)))


def chirality_project(psi: CQVector2, side: str, rep: Rep = Rep.WEYL) -> CQVector2:
    """``(1 ∓ Γ⁵)/2 ψ`` for side ``"L"`` / ``"R"`` using the given representation's Γ⁵."""
    g5 = build_gammas(rep).gamma5
    if side == "L":
        P = (IDENTITY - g5) * 0.5
    elif side == "R":
        P = (IDENTITY + g5) * 0.5
    else:
        raise ValueError(f"side must be 'L' or 'R', got {side!r}")
    return mat_vec(P, psi)


def alpha(l: int) -> CQMatrix2:
    gs = build_gammas(Rep.DIRAC)
    return mat_mul(gs.gamma[0], gs.gamma[l + 1])


def hamiltonian(p: Sequence[float], m: float) -> CQMatrix2:
    """``α^ℓ p^ℓ + Γ⁰ m`` with ``p^ℓ = -p_ℓ``.

    Explicitly ``[[m, -iω·p], [-iω·p, -m]]`` for covariant ``p``; the
    off-diagonal entries are ``+iω·P`` in terms of the physical momentum.
    """
    H = parity_op() * m
    for l in range(3):
        if p[l] != 0:
            H = H + alpha(l) * (-p[l])
    return H


def spin_op(l: int) -> CQMatrix2:
    return diag(SIGMA[l], SIGMA[l]) * 0.5


def helicity_op(p: Sequence[float]) -> CQMatrix2:
    """``S_ℓ p^ℓ / |p|`` (physical momentum direction)."""
    n = math.sqrt(sum(x * x for x in p))
    if n == 0:
        raise ZeroMomentumError("helicity is undefined at zero momentum")
    out = ZERO_MATRIX
    for l in range(3):
        out = out + spin_op(l) * (-p[l] / n)
    return out


def spin_commutator_residual(l: int, p: Sequence[float], m: float) -> float:
    """Max-abs of ``[H, S_ℓ] + i ε_{ℓmn} α^m p_n``."""
    H = hamiltonian(p, m)
    S = spin_op(l)
    lhs = mat_mul(H, S) - mat_mul(S, H)
    for (a, b, c), eps in _LEVI.items():
        if a == l and p[c] != 0:
            lhs = lhs + alpha(b) * (1j * eps * p[c])
    return lhs.max_abs()


_SPIN_COEFF = {
    (Species.MATTER, Spin.UP): CQ(0.5, 0, 0, 0.5j),       # (1 + ik)/2
    (Species.MATTER, Spin.DOWN): CQ(0.5j, 0, 0, 0.5),     # (i + k)/2
    (Species.ANTIMATTER, Spin.UP): CQ(0.5, 0, 0, -0.5j),  # (1 - ik)/2
    (Species.ANTIMATTER, Spin.DOWN): CQ(-0.5j, 0, 0, 0.5),  # (-i + k)/2
}


def spin_coefficient(species: Species, spin: Spin) -> ComplexQuaternion:
    return _SPIN_COEFF[(species, spin)]


def spin_eigenstate(species: Species, spin: Spin, p_z: float, m: float) -> CQVector2:
    """Left-multiply the z-moving plane-wave amplitude by the matching coefficient."""
    sw = plane_wave(species, (0.0, 0.0, p_z), m)
    return sw.u.left(spin_coefficient(species, spin))


def dirac_adjoint(psi: CQVector2, gs: GammaSet | None = None) -> RowVector2:
    gs = gs or build_gammas(Rep.DIRAC)
    return dagger_vec(psi) @ gs.gamma[0]


def bilinear(psi: CQVector2, M: CQMatrix2, chi: CQVector2 | None = None,
             gs: GammaSet | None = None) -> ComplexQuaternion:
    """``ψ̄ M χ`` (χ defaults to ψ)."""
    chi = psi if chi is None else chi
    return dirac_adjoint(psi, gs) @ mat_vec(M, chi)


def real_norm(psi: CQVector2, gs: GammaSet | None = None) -> float:
    return (dirac_adjoint(psi, gs) @ psi).c0.real


def chiral_identity_residuals(psi_dirac: CQVector2) -> dict[str, list[float]]:
    """Residuals of the chiral projection identities for μ = 0..3.

    ``f_L`` and ``f_R`` are the upper and lower Weyl components of ψ.  The
    left side ``f^* Σ̃^μ f`` (resp. ``Σ^μ``) is compared with
    ``ψ̄ Γ^μ (1 ∓ Γ⁵)/2 ψ`` evaluated in the Dirac representation.
    """
    gs = build_gammas(Rep.DIRAC)
    w = to_weyl(psi_dirac)
    fL, fR = w.v0, w.v1
    sig = (CQ(1),) + SIGMA
    sig_t = (CQ(1),) + tuple(-s for s in SIGMA)
    PL = (IDENTITY - gs.gamma5) * 0.5
    PR = (IDENTITY + gs.gamma5) * 0.5
    out: dict[str, list[float]] = {"L": [], "R": []}
    for mu in range(4):
        lhs_L = mul(mul(conj_both(fL), sig_t[mu]), fL)
        lhs_R = mul(mul(conj_both(fR), sig[mu]), fR)
        rhs_L = bilinear(psi_dirac, mat_mul(gs.gamma[mu], PL), gs=gs)
        rhs_R = bilinear(psi_dirac, mat_mul(gs.gamma[mu], PR), gs=gs)
        out["L"].append((lhs_L - rhs_L).max_abs())
        out["R"].append((lhs_R - rhs_R).max_abs())
    return out


def chiral_identity_check(p: Sequence[float], m: float, species: Species = Species.MATTER) -> float:
    """Largest chiral-identity residual over μ and both chiralities for a plane wave."""
    r = chiral_identity_residuals(plane_wave(species, p, m).u)
    return max(r["L"] + r["R"])
