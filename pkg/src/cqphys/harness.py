"""Verification runner: suite registry, seeded randomness, JSON reports and the ``verify`` CLI.

Every check returns a measured residual and the tolerance it is gated on.
Checks that compare a computed value with a stated claim, without gating,
have status ``reported``.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import math
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from . import dirac as dr
from . import electroweak as ew
from . import emfield as em
from .errors import IoFailureError, UnknownCheckError, UnknownSuiteError
from .linalg import (
    IDENTITY, CQMatrix2, CQVector2, anticommutator, dagger, diag, hermitian_inner, mat_mul, mat_vec,
)
from .lorentz import (
    boost_matrix, embed_four, interval, lorentz_act, rotation_matrix, vector_transform,
)
from .quaternion import (
    CQ, H, I, J, K, ONE, ComplexQuaternion, conj_both, conj_complex, conj_quat, exp_pure, is_idempotent,
    mul, quat_norm,
)

__all__ = [
    "SuiteConfig", "CheckRecord", "VerificationReport", "run", "list_suites", "explain", "main",
    "suite_rng", "dictionary_table", "ENV_TOL", "ENV_SEED",
]

ENV_TOL = "CQPHYS_TOL"
ENV_SEED = "CQPHYS_SEED"
SUITES = ("cq-core", "cq-linalg", "lorentz", "dirac", "emfield", "electroweak")


@dataclass(frozen=True)
class SuiteConfig:
    tolerance: float = 1e-10
    h: float = em.DEFAULT_H
    seed: int = 0
    suites: tuple[str, ...] = SUITES
    output: Optional[str] = None
    canonical: bool = False

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if not self.h > 0:
            raise ValueError("h must be positive")


@dataclass(frozen=True)
class CheckRecord:
    suite: str
    check: str
    anchor: str
    status: str
    residual: float
    tolerance: float
    value: Optional[str] = None

    def as_dict(self) -> dict:
        d = {"suite": self.suite, "check": self.check, "anchor": self.anchor, "status": self.status,
             "residual": _num(self.residual), "tolerance": _num(self.tolerance)}
        if self.value is not None:
            d["value"] = self.value
        return d


def _num(x: float):
    return x if math.isfinite(x) else repr(x)


@dataclass
class VerificationReport:
    config: SuiteConfig
    records: list[CheckRecord] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)
    started: Optional[str] = None

    @property
    def summary(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "reported": 0}
        for r in self.records:
            out[r.status] += 1
        out["total"] = len(self.records)
        return out

    @property
    def exit_code(self) -> int:
        return 0 if self.summary["fail"] == 0 else 1

    def to_dict(self) -> dict:
        cfg = self.config
        d = {
            "config": {"tolerance": cfg.tolerance, "h": cfg.h, "seed": cfg.seed, "suites": list(cfg.suites)},
            "records": [r.as_dict() for r in self.records],
            "summary": self.summary,
        }
        if not cfg.canonical:
            d["started"] = self.started
            d["timings"] = self.timings
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def suite_rng(seed: int, suite: str) -> np.random.Generator:
    """One generator per suite, independent of which other suites run."""
    tag = int.from_bytes(hashlib.sha256(suite.encode()).digest()[:8], "little")
    return np.random.default_rng(np.random.SeedSequence([seed, tag]))


# -- registry ------------------------------------------------------------------

Outcome = tuple  # (residual, tolerance) or (residual, tolerance, value) or ("reported", value, residual)


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    anchor: str
    description: str
    fn: Callable[[np.random.Generator, SuiteConfig], Outcome]
    reported: bool = False


_REGISTRY: dict[str, Check] = {}


def _check(suite: str, name: str, anchor: str, description: str, reported: bool = False):
    def deco(fn):
        _REGISTRY[name] = Check(suite, name, anchor, description, fn, reported)
        return fn
    return deco


def list_suites() -> list[str]:
    return list(SUITES)


def list_checks(suite: Optional[str] = None) -> list[str]:
    return [c.name for c in _REGISTRY.values() if suite is None or c.suite == suite]


def explain(name: str) -> str:
    try:
        c = _REGISTRY[name]
    except KeyError:
        raise UnknownCheckError(name) from None
    kind = "reported" if c.reported else "gated"
    return f"{c.name} [{c.suite}, {kind}] {c.anchor}: {c.description}"


# -- cq-core -------------------------------------------------------------------

_BASIS = (ONE, H, J, K)


def _m2(q: ComplexQuaternion) -> np.ndarray:
    # 1 -> I, h -> [[0,i],[i,0]], j -> [[0,-1],[1,0]], k -> [[i,0],[0,-i]]
    c0, c1, c2, c3 = q.coeffs
    return np.array([[c0 + 1j * c3, 1j * c1 - c2], [1j * c1 + c2, c0 - 1j * c3]])


def _random_cq(rng: np.random.Generator, scale: float = 1.0) -> ComplexQuaternion:
    v = rng.normal(size=8) * scale
    return CQ.from_real8(v)


@_check("cq-core", "basis-multiplication-table", "algebra: basis products",
        "all 64 products of {1,i}×{1,h,j,k} against a 2×2 complex matrix image")
def _c_table(rng, cfg):
    units = [b * s for s in (1, 1j) for b in _BASIS]
    worst = 0.0
    for a in units:
        for b in units:
            worst = max(worst, float(np.max(np.abs(_m2(mul(a, b)) - _m2(a) @ _m2(b)))))
    return worst, 0.0


@_check("cq-core", "random-product-homomorphism", "algebra: associative product",
        "random products agree with the matrix image")
def _c_random(rng, cfg):
    worst = 0.0
    for _ in range(200):
        a, b = _random_cq(rng), _random_cq(rng)
        worst = max(worst, float(np.max(np.abs(_m2(mul(a, b)) - _m2(a) @ _m2(b)))))
    return worst, cfg.tolerance


@_check("cq-core", "conjugation-reversal", "algebra: conjugations",
        "⋆ and * reverse products, ~ preserves them")
def _c_conj(rng, cfg):
    worst = 0.0
    for _ in range(200):
        a, b = _random_cq(rng), _random_cq(rng)
        ab = mul(a, b)
        worst = max(worst, (conj_quat(ab) - mul(conj_quat(b), conj_quat(a))).max_abs(),
                    (conj_both(ab) - mul(conj_both(b), conj_both(a))).max_abs(),
                    (conj_complex(ab) - mul(conj_complex(a), conj_complex(b))).max_abs())
    return worst, cfg.tolerance


@_check("cq-core", "quaternion-norm-scalar", "algebra: quaternionic norm",
        "q^⋆q has no h, j, k part")
def _c_norm(rng, cfg):
    worst = 0.0
    for _ in range(200):
        q = _random_cq(rng)
        n = quat_norm(q)
        worst = max(worst, max(abs(c) for c in n.vector) / (1 + q.abs2()))
    return worst, cfg.tolerance


@_check("cq-core", "idempotent-zero-divisors", "algebra: zero divisors",
        "(1 ± ik)/2 are idempotent and annihilate each other")
def _c_idem(rng, cfg):
    p, m = (ONE + I * K) * 0.5, (ONE - I * K) * 0.5
    bad = 0.0 if (is_idempotent(p, 0) and is_idempotent(m, 0)) else 1.0
    return max(bad, mul(p, m).max_abs(), quat_norm(p).max_abs()), 0.0


@_check("cq-core", "exponential-unit-norm", "algebra: exponential of pure elements",
        "exp(β·ω) has unit quaternionic norm for complex β")
def _c_exp(rng, cfg):
    worst = 0.0
    for _ in range(200):
        beta = rng.normal(size=3) + 1j * rng.uniform(-2, 2, size=3)
        worst = max(worst, (quat_norm(exp_pure(beta)) - 1).max_abs())
    return worst, cfg.tolerance * 10


# -- cq-linalg -----------------------------------------------------------------


def _random_mat(rng) -> CQMatrix2:
    return CQMatrix2(*(_random_cq(rng) for _ in range(4)))


@_check("cq-linalg", "matrix-associativity", "matrices: noncommutative entries",
        "(AB)C = A(BC) for random 2×2 matrices")
def _l_assoc(rng, cfg):
    worst = 0.0
    for _ in range(100):
        A, B, C = _random_mat(rng), _random_mat(rng), _random_mat(rng)
        worst = max(worst, (mat_mul(mat_mul(A, B), C) - mat_mul(A, mat_mul(B, C))).max_abs())
    return worst, cfg.tolerance


@_check("cq-linalg", "dagger-reversal", "matrices: Hermitian conjugate",
        "(AB)† = B†A†")
def _l_dagger(rng, cfg):
    worst = 0.0
    for _ in range(100):
        A, B = _random_mat(rng), _random_mat(rng)
        worst = max(worst, (dagger(mat_mul(A, B)) - mat_mul(dagger(B), dagger(A))).max_abs())
    return worst, cfg.tolerance


# -- lorentz -------------------------------------------------------------------


@_check("lorentz", "interval-invariance", "spacetime: interval under exp(β·ω)",
        "X^⋆X unchanged by g X g^* for random complex β")
def _lz_interval(rng, cfg):
    worst = 0.0
    for _ in range(300):
        beta = rng.normal(size=3) + 1j * rng.uniform(-2, 2, size=3)
        x = rng.normal(size=4) * 3
        X = embed_four(x)
        drift = abs(interval(lorentz_act(exp_pure(beta), X)) - interval(X))
        worst = max(worst, drift / (1 + float(x @ x)))
    return worst, cfg.tolerance


@_check("lorentz", "rotation-matches-matrix", "spacetime: rotations",
        "real β = θn/2 acts as the rotation matrix R(n, θ)")
def _lz_rot(rng, cfg):
    worst = 0.0
    for _ in range(50):
        n = rng.normal(size=3)
        n /= np.linalg.norm(n)
        th = rng.uniform(-math.pi, math.pi)
        L = vector_transform(n * th / 2)
        worst = max(worst, float(np.max(np.abs(L[1:, 1:] - rotation_matrix(n, th)))))
    return worst, cfg.tolerance


@_check("lorentz", "boost-matches-matrix", "spacetime: boosts",
        "imaginary β = iφn/2 acts as a boost of rapidity -φ along n")
def _lz_boost(rng, cfg):
    worst = 0.0
    for _ in range(50):
        n = rng.normal(size=3)
        n /= np.linalg.norm(n)
        phi = rng.uniform(-2, 2)
        L = vector_transform(1j * n * phi / 2)
        worst = max(worst, float(np.max(np.abs(L - boost_matrix(n, -phi)))) / math.cosh(phi) ** 2)
    return worst, cfg.tolerance


# -- dirac ---------------------------------------------------------------------

_ETA = np.diag([1, -1, -1, -1])


@_check("dirac", "clifford-anticommutator", "Dirac equation: gamma matrices",
        "{Γ^μ, Γ^ν} = 2η^{μν} I in the Weyl and Dirac representations")
def _d_clifford(rng, cfg):
    worst = 0.0
    for rep in dr.Rep:
        g = dr.build_gammas(rep)
        for mu in range(4):
            for nu in range(4):
                d = anticommutator(g[mu], g[nu]) - IDENTITY * (2 * _ETA[mu, nu])
                worst = max(worst, d.max_abs())
    return worst, 0.0


@_check("dirac", "gamma5-weyl", "Dirac equation: chirality",
        "iΓ⁰Γ¹Γ²Γ³ = diag(-1, 1) in the Weyl representation")
def _d_g5w(rng, cfg):
    return (dr.build_gammas(dr.Rep.WEYL).gamma5 - diag(-1, 1)).max_abs(), 0.0


@_check("dirac", "gamma5-dirac", "Dirac equation: chirality",
        "iΓ⁰Γ¹Γ²Γ³ = [[0,1],[1,0]] in the Dirac representation")
def _d_g5d(rng, cfg):
    return (dr.build_gammas(dr.Rep.DIRAC).gamma5 - CQMatrix2(0, 1, 1, 0)).max_abs(), 0.0


@_check("dirac", "gamma5-dirac-diagonal-claim", "Dirac equation: chirality",
        "distance of the Dirac-representation Γ⁵ from diag(-1, 1)", reported=True)
def _d_g5claim(rng, cfg):
    r = (dr.build_gammas(dr.Rep.DIRAC).gamma5 - diag(-1, 1)).max_abs()
    return r, 0.0, "holds" if r == 0 else "does not hold"


def _random_on_shell(rng) -> tuple[np.ndarray, float]:
    return rng.normal(size=3) * 3, float(rng.uniform(0.1, 10))


@_check("dirac", "plane-wave-residual", "Dirac equation: plane-wave solutions",
        "(Γ^μ p_μ ∓ m) u = 0 for matter and antimatter amplitudes, relative to E + m")
def _d_plane(rng, cfg):
    worst = 0.0
    for _ in range(200):
        p, m = _random_on_shell(rng)
        for sp in dr.Species:
            sw = dr.plane_wave(sp, p, m)
            worst = max(worst, dr.dirac_residual(sw) / (sw.E + m))
    return worst, 1e-12


@_check("dirac", "charge-conjugation", "Dirac equation: discrete symmetries",
        "C Γ⁰ χ^* equals the antimatter amplitude φ at the same momentum")
def _d_charge(rng, cfg):
    worst = 0.0
    for _ in range(200):
        p, m = _random_on_shell(rng)
        chi, phi = dr.plane_wave(dr.Species.MATTER, p, m), dr.plane_wave(dr.Species.ANTIMATTER, p, m)
        worst = max(worst, (dr.charge_conjugate(chi).u - phi.u).max_abs())
    return worst, 1e-12


@_check("dirac", "cpt-solutions", "Dirac equation: discrete symmetries",
        "C, P, T and their product map solutions to solutions")
def _d_cpt(rng, cfg):
    worst = 0.0
    for _ in range(100):
        p, m = _random_on_shell(rng)
        for sp in dr.Species:
            sw = dr.plane_wave(sp, p, m)
            for op in (dr.charge_conjugate, dr.parity, dr.time_reverse, dr.cpt):
                t = op(sw)
                worst = max(worst, dr.dirac_residual(t) / (t.E + m))
    return worst, 1e-12


@_check("dirac", "feynman-stueckelberg", "Dirac equation: negative-energy solutions",
        "E → -E, p → -p sends ψ1↔ψ4 and ψ2↔ψ3")
def _d_fs(rng, cfg):
    bad = 0
    for _ in range(50):
        p, m = _random_on_shell(rng)
        for i, j in ((1, 4), (2, 3), (3, 2), (4, 1)):
            bad += dr.feynman_stuckelberg(i, p, m)[0] != j
    return float(bad), 0.0


@_check("dirac", "spin-eigenvalues", "spin: eigenstates",
        "S_z eigenvalues +½, -½, -½, +½ and pairwise orthogonality")
def _d_spin(rng, cfg):
    worst = 0.0
    expect = {(dr.Species.MATTER, dr.Spin.UP): 0.5, (dr.Species.MATTER, dr.Spin.DOWN): -0.5,
              (dr.Species.ANTIMATTER, dr.Spin.UP): -0.5, (dr.Species.ANTIMATTER, dr.Spin.DOWN): 0.5}
    Sz = dr.spin_op(2)
    for _ in range(50):
        pz, m = float(rng.normal() * 3), float(rng.uniform(0.1, 10))
        st = {k: dr.spin_eigenstate(k[0], k[1], pz, m) for k in expect}
        for k, lam in expect.items():
            worst = max(worst, (mat_vec(Sz, st[k]) - st[k] * lam).max_abs())
        for sp in dr.Species:
            worst = max(worst, hermitian_inner(st[(sp, dr.Spin.UP)], st[(sp, dr.Spin.DOWN)]).max_abs())
    return worst, 1e-12


@_check("dirac", "spin-commutator", "spin: non-conservation",
        "[H, S_ℓ] = -i ε_{ℓmn} α^m p_n")
def _d_comm(rng, cfg):
    worst = 0.0
    for _ in range(50):
        p, m = _random_on_shell(rng)
        for l in range(3):
            worst = max(worst, dr.spin_commutator_residual(l, p, m))
    return worst, cfg.tolerance


@_check("dirac", "chiral-identities", "Dirac equation: chiral projections",
        "f^* Σ^μ f equals ψ̄Γ^μ(1 ± Γ⁵)/2 ψ for both chiralities")
def _d_chiral(rng, cfg):
    worst = 0.0
    for _ in range(50):
        psi = CQVector2(_random_cq(rng), _random_cq(rng))
        r = dr.chiral_identity_residuals(psi)
        worst = max(worst, max(r["L"]), max(r["R"]))
    return worst, cfg.tolerance


# -- emfield -------------------------------------------------------------------

_EM_POINT = (0.25, 0.5, -0.75, 0.125)
_OBLIQUE = dict(direction=(0.0, 0.6, 0.8), polarization=(1.0, 0.0, 0.0))


@_check("emfield", "uniform-b-exact", "electrodynamics: field strength",
        "dF - j vanishes exactly for a uniform magnetic field")
def _e_uniform(rng, cfg):
    fld = em.uniform_b((0.0, 0.0, 1.0))
    return em.maxwell_residual(fld, None, _EM_POINT, cfg.h).max_abs(), 0.0


@_check("emfield", "plane-wave-maxwell", "electrodynamics: Maxwell's equations",
        "vacuum plane wave residual below 10·h²")
def _e_plane(rng, cfg):
    fld = em.plane_wave_field(**_OBLIQUE)
    return em.maxwell_residual(fld, None, _EM_POINT, cfg.h).max_abs(), 10 * cfg.h ** 2


def _ratio_outcome(f: Callable[[float], float], h: float):
    r = em.convergence_ratio(f, h)
    return abs(r - 4.0), 0.5, f"{r:.6f}"


@_check("emfield", "maxwell-convergence", "electrodynamics: Maxwell's equations",
        "halving h divides the plane-wave and bump residuals by 4 ± 0.5")
def _e_conv(rng, cfg):
    pw = em.plane_wave_field(**_OBLIQUE)
    bump = em.bump_field()
    x_b = (0.0, 0.2, 0.1, -0.3)
    r1 = em.convergence_ratio(lambda h: em.maxwell_residual(pw, None, _EM_POINT, h).max_abs(), 2 ** -6)
    r2 = em.convergence_ratio(lambda h: em.maxwell_residual(bump, None, x_b, h).max_abs(), 2 ** -5)
    return max(abs(r1 - 4), abs(r2 - 4)), 0.5, f"{r1:.6f},{r2:.6f}"


@_check("emfield", "f-squared-scalar", "electrodynamics: field invariants",
        "F² = (E² - B²) I on catalog fields")
def _e_f2(rng, cfg):
    worst = 0.0
    for fld in (em.zero_field(), em.uniform_b((0.0, 0.0, 1.0)), em.plane_wave_field(**_OBLIQUE), em.bump_field()):
        x = np.array(_EM_POINT) * 0.5
        fs = em.FieldStrengthPoint(np.array(fld.E(*x)), np.array(fld.B(*x)),
                                   em.assemble_f(fld.E(*x), fld.B(*x)))
        inv = float(fs.E @ fs.E - fs.B @ fs.B)
        worst = max(worst, (em.f_squared(fs) - IDENTITY * inv).max_abs())
    return worst, 1e-12


@_check("emfield", "lorenz-gauge", "electrodynamics: gauge condition",
        "catalog potentials satisfy ∂_t φ + ∇·A = 0")
def _e_lorenz(rng, cfg):
    worst = 0.0
    for fld in (em.uniform_b(), em.plane_wave_field(**_OBLIQUE), em.bump_field()):
        worst = max(worst, abs(em.lorenz_residual(fld, _EM_POINT, cfg.h)))
    return worst, 10 * cfg.h ** 2


@_check("emfield", "current-conservation", "electrodynamics: U(1) current",
        "∂_μ(ψ̄Γ^μψ) below h²·(2E)³(Σ|c|)² for random two-mode superpositions")
def _e_current(rng, cfg):
    worst = 0.0
    for _ in range(5):
        m = float(rng.uniform(0.5, 2))
        modes = []
        for _ in range(2):
            sp = dr.Species.MATTER if rng.uniform() < 0.5 else dr.Species.ANTIMATTER
            c = complex(rng.normal(), rng.normal())
            modes.append((c, dr.plane_wave(sp, rng.normal(size=3), m)))
        sup = em.Superposition(tuple(modes))
        # third derivatives of j are bounded by (ΔE)³ (Σ|c|)², ΔE ≤ 2 E_max
        e_max = max(sw.E for _, sw in modes)
        scale = (2 * e_max) ** 3 * sum(abs(c) for c, _ in modes) ** 2
        worst = max(worst, em.current_conservation_residual(sup, rng.normal(size=4), cfg.h) / scale)
    return worst, cfg.h ** 2


_ALPHA = em.GaussianSpinor(CQ(1, 0.3j, -0.2, 0.5 + 0.1j), (0.1, -0.2, 0.05), 0.7)


@_check("emfield", "pauli-convergence", "spin: magnetic moment",
        "Pauli-reduction residual falls by 4 ± 0.5 when h halves (free and uniform B)")
def _e_pauli(rng, cfg):
    rs = []
    for fld in (em.zero_field(), em.uniform_b((0.0, 0.0, 1.0))):
        rs.append(em.convergence_ratio(
            lambda h: em.pauli_reduction_check(fld, 1.0, 2.0, _ALPHA, _EM_POINT, h).residual, 2 ** -6))
    return max(abs(r - 4) for r in rs), 0.5, ",".join(f"{r:.6f}" for r in rs)


@_check("emfield", "magnetic-moment", "spin: magnetic moment",
        "extracted coefficient of Σ·B equals e/(2m)")
def _e_moment(rng, cfg):
    worst = 0.0
    for e, m in ((1.0, 2.0), (0.3, 0.7), (2.0, 5.0)):
        rep = em.pauli_reduction_check(em.uniform_b((0.0, 0.0, 1.5)), e, m, em.ConstantSpinor(ONE),
                                       _EM_POINT, cfg.h)
        worst = max(worst, abs(rep.moment - e / (2 * m)))
    return worst, 1e-12


# -- electroweak ---------------------------------------------------------------


@_check("electroweak", "bracket-closure", "gauge sector: isospin algebra",
        "[t_ℓ, t_m] = i ε t_n and y central for both generator sets")
def _w_closure(rng, cfg):
    worst = 0.0
    for gens in (ew.standard_generators(), ew.alternative_generators()):
        f = ew.structure_constants(gens.t)
        for k, v in f.items():
            worst = max(worst, abs(v - ew.LEVI_CIVITA.get(k, 0)))
        for t in gens.t:
            worst = max(worst, (mat_mul(t, gens.y) - mat_mul(gens.y, t)).max_abs())
    return worst, 1e-12


@_check("electroweak", "charges", "gauge sector: electric charge",
        "q_e = -1 and q_ν = 0 for both generator sets")
def _w_charges(rng, cfg):
    c = ew.Couplings(0.65, 0.35)
    worst = 0.0
    for gens in (ew.standard_generators(), ew.alternative_generators()):
        q = ew.run_pipeline(gens, c, 246.0)["charges"]
        worst = max(worst, abs(q["e"] + 1), abs(q["nu"]))
    return worst, 1e-12


@_check("electroweak", "ssb-masses", "symmetry breaking: gauge boson masses",
        "m_W = gv/2, m_Z = v√(g²+g'²)/2, photon massless, for random couplings")
def _w_masses(rng, cfg):
    worst = 0.0
    for _ in range(30):
        g, gp, v = rng.uniform(0.1, 1.5), rng.uniform(0.1, 1.5), rng.uniform(1, 300)
        c = ew.Couplings(g, gp)
        for gens in (ew.standard_generators(), ew.alternative_generators()):
            s, q = ew.higgs_ssb(gens, c, v)
            worst = max(worst, abs(s.m_W - g * v / 2), abs(s.m_Z - v * math.hypot(g, gp) / 2),
                        abs(q[("A", "A")]), abs(q[("A", "Z")]))
    return worst, 1e-12


@_check("electroweak", "z-sign-standard", "symmetry breaking: neutral current",
        "Z-coupling sign relative to the usual convention, standard set", reported=True)
def _w_zstd(rng, cfg):
    nc = ew.run_pipeline(ew.standard_generators(), ew.Couplings(0.65, 0.35), 246.0)["neutral"]
    return nc.compact_residual, 0.0, nc.z_sign


@_check("electroweak", "z-sign-alternative", "symmetry breaking: neutral current",
        "Z-coupling sign relative to the usual convention, alternative set", reported=True)
def _w_zalt(rng, cfg):
    nc = ew.run_pipeline(ew.alternative_generators(), ew.Couplings(0.65, 0.35), 246.0)["neutral"]
    return nc.compact_residual, 0.0, nc.z_sign


@_check("electroweak", "w-contraction-sign", "symmetry breaking: charged bosons",
        "W⁺W⁻ is negative definite for the alternative set and positive for the standard one")
def _w_ww(rng, cfg):
    alt = ew.w_contraction(ew.alternative_generators())["X1X1"].c0.real
    std = ew.w_contraction(ew.standard_generators())["X1X1"].c0.real
    return abs(alt + 0.5) + abs(std - 0.5), 1e-14, f"{alt:+.3f},{std:+.3f}"


@_check("electroweak", "broken-generator-eigenvalues", "symmetry breaking: broken generators",
        "right eigenvalues of w⁺ and w̃ᵀ under [Q, ·] compared with (+k, -k)", reported=True)
def _w_eig(rng, cfg):
    b = ew.charge_and_broken_generators()
    r = max((b.eigenvalues[k] - b.claimed[k]).max_abs() for k in b.claimed)
    val = ",".join(f"{k}:{b.eigenvalues[k]}" for k in ("w+", "w~T"))
    return r, 0.0, val


@_check("electroweak", "yukawa", "symmetry breaking: Yukawa coupling",
        "m_e = G_e v/√2 and g m_e/(2 m_W) = m_e/v")
def _w_yukawa(rng, cfg):
    worst = 0.0
    for _ in range(50):
        G, g, v = rng.uniform(0, 1e-3), rng.uniform(0.1, 1.5), rng.uniform(1, 300)
        y = ew.yukawa_broken(G, v, g, g * v / 2)
        worst = max(worst, abs(y["m_e"] - G * v / math.sqrt(2)), abs(y["hee"] - y["m_e_over_v"]))
    return worst, 1e-14


# -- running -------------------------------------------------------------------


def _evaluate(c: Check, rng, cfg: SuiteConfig) -> CheckRecord:
    try:
        out = c.fn(rng, cfg)
    except Exception as exc:  # a crashing check is a failing check
        return CheckRecord(c.suite, c.name, c.anchor, "fail", float("nan"), float("nan"),
                           f"{type(exc).__name__}: {exc}")
    residual, tol = float(out[0]), float(out[1])
    value = out[2] if len(out) > 2 else None
    if c.reported:
        status = "reported"
    else:
        status = "pass" if residual <= tol else "fail"
    return CheckRecord(c.suite, c.name, c.anchor, status, residual, tol, value)


def run(config: SuiteConfig) -> VerificationReport:
    unknown = [s for s in config.suites if s not in SUITES]
    if unknown:
        raise UnknownSuiteError(", ".join(unknown))
    report = VerificationReport(config, started=time.strftime("%Y-%m-%dT%H:%M:%S%z"))
    for suite in SUITES:
        if suite not in config.suites:
            continue
        rng = suite_rng(config.seed, suite)
        t0 = time.perf_counter()
        for c in _REGISTRY.values():
            if c.suite == suite:
                report.records.append(_evaluate(c, rng, config))
        report.timings[suite] = time.perf_counter() - t0
    if config.output:
        try:
            with open(config.output, "w", encoding="utf-8") as fh:
                fh.write(report.to_json())
        except OSError as exc:
            raise IoFailureError(f"cannot write report to {config.output}: {exc}") from exc
    return report


_DICTIONARY = (
    ("Dirac spinor", "ψ ∈ C⁴", "ψ ∈ (H⊗C)²", "plane-wave-residual"),
    ("Pauli matrices", "σ_ℓ", "Σ_ℓ = iω_ℓ", "basis-multiplication-table"),
    ("Dirac matrices", "4×4 complex", "2×2 over H⊗C", "clifford-anticommutator"),
    ("Helicity", "σ·p/(2|p|)", "iω·p/(2|p|) on each slot", "spin-commutator"),
    ("Magnetic moment", "(e/2m) σ", "(e/2m) Σ", "magnetic-moment"),
    ("U(1) current", "ψ̄γ^μψ", "ψ̄Γ^μψ", "current-conservation"),
    ("Isospin ⊕ hypercharge", "su(2) ⊕ u(1)", "su(2) ⊕ u(1), two choices", "bracket-closure"),
)


def dictionary_table(report: Optional[VerificationReport] = None) -> str:
    status = {r.check: r.status for r in report.records} if report else {}
    rows = [("", "standard", "complex quaternionic", "check")]
    for name, std, cq, chk in _DICTIONARY:
        rows.append((name, std, cq, f"{chk} ({status.get(chk, 'not run')})"))
    widths = [max(len(r[i]) for r in rows) for i in range(4)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _summary_text(report: VerificationReport) -> str:
    lines = []
    for r in report.records:
        extra = f" [{r.value}]" if r.value is not None else ""
        lines.append(f"{r.status.upper():8s} {r.suite:11s} {r.check:30s} "
                     f"residual={r.residual:.3e} tol={r.tolerance:.1e}{extra}")
    s = report.summary
    lines.append(f"{s['pass']} pass, {s['fail']} fail, {s['reported']} reported")
    return "\n".join(lines)


def _couplings_json() -> dict:
    c = ew.Couplings(0.65, 0.35)
    out = {}
    for gens in (ew.standard_generators(), ew.alternative_generators()):
        res = ew.run_pipeline(gens, c, 246.0)
        out[gens.label] = {
            "couplings": [{"out": k[0], "in": k[1], "boson": k[2], "coefficient": str(v),
                           "real8": v.to_real8()} for k, v in sorted(res["couplings"].items())],
            "charges": res["charges"],
            "z_sign": res["z_sign"],
            "ww_sign": res["ww_sign"],
            "m_W": res["spectrum"].m_W,
            "m_Z": res["spectrum"].m_Z,
        }
    return out


def _couplings_diff(tables: dict) -> str:
    std, alt = tables["standard"], tables["alternative"]
    lines = []
    for key in ("charges", "z_sign", "ww_sign", "m_W", "m_Z"):
        mark = "=" if std[key] == alt[key] else "≠"
        lines.append(f"{mark} {key}: standard={std[key]} alternative={alt[key]}")
    s = {(r["out"], r["in"], r["boson"]): r["coefficient"] for r in std["couplings"]}
    a = {(r["out"], r["in"], r["boson"]): r["coefficient"] for r in alt["couplings"]}
    for k in sorted(set(s) | set(a), key=lambda t: tuple(x or "" for x in t)):
        mark = "=" if s.get(k) == a.get(k) else "≠"
        lines.append(f"{mark} {k[0]}←{k[1]} {k[2]}: {s.get(k, '0')} | {a.get(k, '0')}")
    return "\n".join(lines)


def _stream_field(name: str, h: float, seed: int, n: int) -> None:
    fld = em.get_field(name)
    rng = suite_rng(seed, f"field:{name}")
    for _ in range(n):
        x = [float(v) for v in rng.uniform(-0.5, 0.5, size=4)]
        r = em.maxwell_residual(fld, None, x, h).max_abs()
        print(json.dumps({"field": name, "point": x, "residual_norm": r, "h": h}))


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="verify", description="Run H⊗C physics verification suites.")
    p.add_argument("--suite", action="append", metavar="NAME", help="suite to run (repeatable)")
    p.add_argument("--tol", type=float, help=f"base tolerance (env {ENV_TOL})")
    p.add_argument("--h", type=float, help="finite-difference step")
    p.add_argument("--seed", type=int, help=f"master seed (env {ENV_SEED})")
    p.add_argument("--json", metavar="PATH", help="write the JSON report here")
    p.add_argument("--canonical", action="store_true", help="omit timestamps and timings")
    p.add_argument("--list", action="store_true", help="list suites and checks")
    p.add_argument("--explain", metavar="CHECK", help="describe one check")
    p.add_argument("--field", metavar="NAME", help="stream Maxwell residual rows for a catalog field")
    p.add_argument("--points", type=int, default=5, help="number of points for --field")
    p.add_argument("--couplings", action="store_true",
                   help="print the coupling table of both generator sets and their differences")
    return p


def _env_number(name: str, kind):
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return None
    try:
        return kind(raw)
    except ValueError:
        raise SystemExit(f"verify: invalid {name}={raw!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        tol = args.tol if args.tol is not None else _env_number(ENV_TOL, float)
        seed = args.seed if args.seed is not None else _env_number(ENV_SEED, int)
    except SystemExit as exc:
        print(exc, file=sys.stderr)
        return 2

    if args.list:
        for s in list_suites():
            print(s)
            for c in list_checks(s):
                print(f"  {c}")
        return 0
    if args.explain:
        try:
            print(explain(args.explain))
        except UnknownCheckError:
            print(f"verify: unknown check {args.explain!r}", file=sys.stderr)
            return 2
        return 0
    if args.couplings:
        tables = _couplings_json()
        print(json.dumps(tables, indent=2, sort_keys=True))
        print(_couplings_diff(tables))
        return 0

    try:
        cfg = SuiteConfig(
            tolerance=tol if tol is not None else 1e-10,
            h=args.h if args.h is not None else em.DEFAULT_H,
            seed=seed if seed is not None else 0,
            suites=tuple(args.suite) if args.suite else SUITES,
            output=args.json,
            canonical=args.canonical,
        )
    except ValueError as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return 2

    if args.field:
        try:
            _stream_field(args.field, cfg.h, cfg.seed, args.points)
        except KeyError as exc:
            print(f"verify: {exc.args[0]}", file=sys.stderr)
            return 2
        return 0

    try:
        report = run(cfg)
    except UnknownSuiteError as exc:
        print(f"verify: unknown suite {exc.args[0]}; choose from {', '.join(SUITES)}", file=sys.stderr)
        return 2
    except IoFailureError as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return 2
    print(_summary_text(report))
    print()
    print(dictionary_table(report))
    return report.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
