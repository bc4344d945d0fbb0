"""Electroweak gauge sector for two choices of isospin/hypercharge generators.

The standard set is the usual ``σ_ℓ/2`` and ``Y = I/2``.  The alternative set
uses quaternionic entries::

    x1 = ½[[0, -h], [h, 0]]   x2 = ½[[0, -j], [j, 0]]
    x3 = ½ diag(ik, ik)        y  = ½ diag(ik, -ik)

Gauge couplings are kept as coefficient tables rather than symbolic
Lagrangians.  For a fermion multiplet ψ the kinetic term is read as
``i ψ† Σ (∂ + G) ψ`` with ``G = ε Σ_s M_s V_s``; the current coefficient of
boson ``V_s`` between slots (a, b) is ``i ε (M_s)_ab``.  ε is 1 for the
alternative set (no explicit i on the gauge fields) and ``-i`` for the
standard one.  Conventions used throughout:

* left doublet:   ``M = g t_ℓ X^ℓ - g' y B``
* right singlet:  ``M = -2 g' y₂₂ B`` acting on e_R
* Higgs:          ``D = ∂ + i(g t_ℓ X^ℓ + g' y B)``

``halved_couplings=True`` puts a further ½ in front of the doublet and Higgs
terms (on top of the ½ already inside the generators) and uses ``-g' y₂₂``
for the singlet.  Charges stay consistent between e_L and e_R, but the
photon coupling becomes ``e/2``, which :func:`neutral_current_decomposition`
rejects, and the boson masses halve.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Optional

from .errors import InconsistentChargeError, NoRightEigenvalueError, ZeroDivisorError
from .linalg import ZERO_MATRIX, CQMatrix2, CQVector2, commutator, dagger, diag, mat_vec
from .quaternion import CQ, H, J, K, ZERO, ComplexQuaternion, conj_both, inverse, mul

__all__ = [
    "GeneratorSet", "Couplings", "LinearGaugeForm", "QuadraticGaugeForm", "BrokenSpectrum",
    "NeutralCurrentReport", "BrokenGenerators", "standard_generators", "alternative_generators",
    "structure_constants", "isospin_eigendata", "covariant_form", "weinberg_rotate",
    "w_definitions", "w_basis", "w_contraction", "coupling_table", "neutral_current_decomposition",
    "higgs_ssb", "charge_and_broken_generators", "yukawa_broken", "vev_from_potential",
    "run_pipeline", "LEVI_CIVITA",
]

LEVI_CIVITA = {(0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1, (0, 2, 1): -1, (2, 1, 0): -1, (1, 0, 2): -1}
SLOTS_DOUBLET = ("nu_L", "e_L")
SLOTS_SINGLET = (None, "e_R")


def structure_constants(t: tuple[CQMatrix2, CQMatrix2, CQMatrix2]) -> dict[tuple[int, int, int], complex]:
    """``f_{ℓmn}`` from ``[t_ℓ, t_m] = i f_{ℓmn} t_n``, solved entrywise.

    Raises ValueError when a commutator is not a complex combination of the
    generators.
    """
    out = {}
    for l in range(3):
        for m in range(3):
            c = commutator(t[l], t[m])
            coeffs = _decompose(c, t)
            for n in range(3):
                out[(l, m, n)] = coeffs[n] / 1j
    return out


def _decompose(c: CQMatrix2, basis: tuple[CQMatrix2, ...]) -> list[complex]:
    # least squares over the 32 real-imag coefficients; then confirm exactly
    import numpy as np
    cols = [np.array([z for e in b.entries for z in e.coeffs]) for b in basis]
    Amat = np.stack(cols, axis=1)
    rhs = np.array([z for e in c.entries for z in e.coeffs])
    sol, *_ = np.linalg.lstsq(Amat, rhs, rcond=None)
    recon = Amat @ sol
    if np.max(np.abs(recon - rhs), initial=0.0) > 1e-12:
        raise ValueError("commutator leaves the span of the generators")
    return [complex(s) for s in sol]


@dataclass(frozen=True)
class GeneratorSet:
    label: str
    t1: CQMatrix2
    t2: CQMatrix2
    t3: CQMatrix2
    y: CQMatrix2

    def __post_init__(self):
        f = structure_constants(self.t)
        for (l, m, n), v in f.items():
            if abs(v - LEVI_CIVITA.get((l, m, n), 0)) > 1e-12:
                raise ValueError(f"{self.label}: [t{l+1}, t{m+1}] has structure constant {v} on t{n+1}")
        for g in self.t + (self.y,):
            if not dagger(g).isclose(g, 1e-12):
                raise ValueError(f"{self.label}: generator {g} is not Hermitian")

    @property
    def t(self) -> tuple[CQMatrix2, CQMatrix2, CQMatrix2]:
        return (self.t1, self.t2, self.t3)

    @property
    def gauge_i(self) -> bool:
        """Whether fermion gauge terms carry an explicit complex unit by default."""
        return self.label != "alternative"


def standard_generators() -> GeneratorSet:
    return GeneratorSet(
        "standard",
        CQMatrix2(0, 0.5, 0.5, 0),
        CQMatrix2(0, -0.5j, 0.5j, 0),
        diag(0.5, -0.5),
        diag(0.5, 0.5),
    )


def alternative_generators() -> GeneratorSet:
    return GeneratorSet(
        "alternative",
        CQMatrix2(0, -H * 0.5, H * 0.5, 0),
        CQMatrix2(0, -J * 0.5, J * 0.5, 0),
        diag(K * 0.5j, K * 0.5j),
        diag(K * 0.5j, K * -0.5j),
    )


@dataclass(frozen=True)
class Couplings:
    g: float
    g_prime: float

    def __post_init__(self):
        if not (self.g > 0 and self.g_prime > 0):
            raise ValueError("couplings must be positive")
        if abs(self.g * self.sin - self.g_prime * self.cos) > 1e-14 * max(1.0, self.g, self.g_prime):
            raise ValueError("inconsistent electric charge")

    @property
    def theta(self) -> float:
        return math.atan2(self.g_prime, self.g)

    @property
    def sin(self) -> float:
        return self.g_prime / math.hypot(self.g, self.g_prime)

    @property
    def cos(self) -> float:
        return self.g / math.hypot(self.g, self.g_prime)

    @property
    def e(self) -> float:
        return self.g * self.sin


@dataclass(frozen=True)
class LinearGaugeForm:
    """``∂ + Σ_s coeffs[s] V_s`` acting on a two-slot multiplet."""

    sector: str
    label: str
    coeffs: Mapping[str, CQMatrix2]
    slots: tuple[Optional[str], Optional[str]] = SLOTS_DOUBLET
    derivative: CQMatrix2 = field(default_factory=lambda: diag(1, 1))

    def __getitem__(self, sym: str) -> CQMatrix2:
        return self.coeffs.get(sym, ZERO_MATRIX)

    def isclose(self, other: "LinearGaugeForm", tol: float = 1e-12) -> bool:
        syms = set(self.coeffs) | set(other.coeffs)
        return all(self[s].isclose(other[s], tol) for s in syms)


@dataclass(frozen=True)
class QuadraticGaugeForm:
    """Symmetric table of coefficients of ``V_s V_t`` (unordered pairs)."""

    table: Mapping[tuple[str, str], complex]

    @staticmethod
    def key(a: str, b: str) -> tuple[str, str]:
        return (a, b) if a <= b else (b, a)

    def __getitem__(self, pair: tuple[str, str]) -> complex:
        return self.table.get(self.key(*pair), 0.0)


@dataclass(frozen=True)
class BrokenSpectrum:
    m_W: float
    m_Z: float
    m_A: float
    v: float
    ww_sign: int
    higgs_couplings: Mapping[str, float]


def isospin_eigendata(gens: GeneratorSet) -> dict[str, object]:
    """Diagonal entries of t₃ and y on the doublet slots, plus ``y₂₂``."""
    for M in (gens.t3, gens.y):
        if M.m01.max_abs() > 0 or M.m10.max_abs() > 0:
            raise ValueError("t3 and y must be diagonal in the doublet basis")
    return {
        "nu_L": {"t3": gens.t3.m00, "y": gens.y.m00},
        "e_L": {"t3": gens.t3.m11, "y": gens.y.m11},
        "y22": gens.y.m11,
    }


def covariant_form(gens: GeneratorSet, c: Couplings, sector: str,
                   gauge_i: Optional[bool] = None, halved_couplings: bool = False) -> LinearGaugeForm:
    """Gauge coefficient table for ``leftDoublet``, ``rightSinglet`` or ``higgs``.

    ``gauge_i`` overrides the per-set default for whether fermion gauge terms
    carry ``-i``; the Higgs always carries ``+i``.
    """
    half = 0.5 if halved_couplings else 1.0
    if sector == "higgs":
        coeffs = {f"X{l+1}": gens.t[l] * (1j * half * c.g) for l in range(3)}
        coeffs["B"] = gens.y * (1j * half * c.g_prime)
        return LinearGaugeForm(sector, gens.label, coeffs)
    eps = -1j if (gens.gauge_i if gauge_i is None else gauge_i) else 1.0
    if sector == "leftDoublet":
        coeffs = {f"X{l+1}": gens.t[l] * (eps * half * c.g) for l in range(3)}
        coeffs["B"] = gens.y * (-eps * half * c.g_prime)
        return LinearGaugeForm(sector, gens.label, coeffs)
    if sector == "rightSinglet":
        y22 = gens.y.m11
        factor = 1.0 if halved_couplings else 2.0
        coeffs = {"B": diag(0, y22 * (-eps * factor * c.g_prime))}
        return LinearGaugeForm(sector, gens.label, coeffs, slots=SLOTS_SINGLET)
    raise ValueError(f"unknown sector {sector!r}")


def weinberg_rotate(form: LinearGaugeForm, theta: float) -> LinearGaugeForm:
    """Substitute ``X³ = sA + cZ``, ``B = cA - sZ`` (inverse rotation for A, Z keys)."""
    s, co = math.sin(theta), math.cos(theta)
    new = {k: v for k, v in form.coeffs.items() if k not in ("X3", "B", "A", "Z")}
    if "A" in form.coeffs or "Z" in form.coeffs:
        A, Z = form["A"], form["Z"]
        new["X3"] = A * s + Z * co
        new["B"] = A * co - Z * s
    else:
        X3, B = form["X3"], form["B"]
        new["A"] = X3 * s + B * co
        new["Z"] = X3 * co - B * s
    return LinearGaugeForm(form.sector, form.label, new, form.slots, form.derivative)


_R2 = 1 / math.sqrt(2.0)


def w_definitions(gens: GeneratorSet) -> dict[str, tuple[ComplexQuaternion, ComplexQuaternion]]:
    """``W = a X¹ + b X²`` as ``(a, b)`` for W⁺ and W⁻."""
    if gens.label == "alternative":
        # W^± = ∓i(h X¹ + j X²)/√2
        return {"W+": (H * (-1j * _R2), J * (-1j * _R2)), "W-": (H * (1j * _R2), J * (1j * _R2))}
    return {"W+": (CQ(_R2), CQ(-1j * _R2)), "W-": (CQ(_R2), CQ(1j * _R2))}


def w_contraction(gens: GeneratorSet) -> dict[str, ComplexQuaternion]:
    """Coefficients of ``X¹X¹``, ``X²X²`` and ``X¹X²`` in the product W⁺W⁻."""
    (a1, b1), (a2, b2) = w_definitions(gens)["W+"], w_definitions(gens)["W-"]
    return {"X1X1": mul(a1, a2), "X2X2": mul(b1, b2), "X1X2": mul(a1, b2) + mul(b1, a2)}


def _ww_scalar(gens: GeneratorSet, tol: float = 1e-14) -> float:
    c = w_contraction(gens)
    if not (c["X1X2"].max_abs() <= tol and c["X1X1"].is_scalar(tol)
            and (c["X1X1"] - c["X2X2"]).max_abs() <= tol and abs(c["X1X1"].c0.imag) <= tol):
        raise ValueError("W⁺W⁻ is not a real multiple of X₁² + X₂²")
    return c["X1X1"].c0.real


def w_basis(form: LinearGaugeForm, gens: GeneratorSet, tol: float = 1e-12) -> LinearGaugeForm:
    """Re-key the X¹, X² part: entry (0,1) onto W⁺ and entry (1,0) onto W⁻.

    For each off-diagonal entry ``c₁X¹ + c₂X² = κ W`` is solved as
    ``κ = c₁ a⁻¹`` and confirmed against ``c₂ = κ b``.
    """
    defs = w_definitions(gens)
    X1, X2 = form["X1"], form["X2"]
    for i in (0, 0), (1, 1):
        if X1[i].max_abs() > tol or X2[i].max_abs() > tol:
            raise ValueError("X¹, X² coefficients have diagonal parts")
    out = {k: v for k, v in form.coeffs.items() if k not in ("X1", "X2")}
    for sym, ij in (("W+", (0, 1)), ("W-", (1, 0))):
        a, b = defs[sym]
        c1, c2 = X1[ij], X2[ij]
        kappa = mul(c1, inverse(a))
        if (mul(kappa, b) - c2).max_abs() > tol * (1 + c2.max_abs()):
            raise ValueError(f"entry {ij} is not proportional to {sym}")
        entries = [ZERO] * 4
        entries[2 * ij[0] + ij[1]] = kappa
        out[sym] = CQMatrix2(*entries)
    return LinearGaugeForm(form.sector, form.label, out, form.slots, form.derivative)


def coupling_table(form: LinearGaugeForm) -> dict[tuple[str, str, str], ComplexQuaternion]:
    """Current coefficients keyed by ``(out-field, in-field, boson)``; zeros omitted."""
    out = {}
    for sym, M in form.coeffs.items():
        for a in range(2):
            for b in range(2):
                sa, sb = form.slots[a], form.slots[b]
                if sa is None or sb is None:
                    continue
                v = M[(a, b)] * 1j
                if v.max_abs() > 0:
                    out[(sa, sb, sym)] = v
    return out


@dataclass(frozen=True)
class NeutralCurrentReport:
    label: str
    e: float
    unit: ComplexQuaternion
    charges: dict[str, float]
    isospin: dict[str, float]
    z_sign: str
    neutral_raw: dict[tuple[str, str, str], ComplexQuaternion]
    neutral_decomposed: dict[str, dict[str, float]]
    compact_residual: float
    consistent_residual: float


def _real_ratio(a: ComplexQuaternion, unit: ComplexQuaternion, tol: float = 1e-12) -> float:
    """Real ``r`` with ``a = r·unit``."""
    r = mul(a, inverse(unit))
    if not r.is_scalar(tol) or abs(r.c0.imag) > tol:
        raise InconsistentChargeError(f"{a} is not a real multiple of {unit}")
    return r.c0.real


def neutral_current_decomposition(left: LinearGaugeForm, right: LinearGaugeForm, c: Couplings,
                                  tol: float = 1e-12) -> NeutralCurrentReport:
    """Extract charges, isospin weights and the Z-coupling sign from rotated forms.

    The charge unit ``u`` is fixed by ``c_A(e_R) = -e u``; all photon
    couplings must be real multiples of ``u``.  The Z sign σ compares the
    neutrino's Z coupling with ``+(g/cosθ)·½·u``, and isospin weights are
    read from ``c_Z = (g/cosθ) u (σ I³ - sin²θ q)``.  ``compact_residual``
    measures the Z couplings against ``σ (g/cosθ) u (I³ - sin²θ q)``, i.e. an
    overall flip of the usual neutral current; ``consistent_residual``
    against the extraction form itself.  Both vanish for σ = +1.
    """
    tl, tr = coupling_table(left), coupling_table(right)
    cA = {"nu_L": tl.get(("nu_L", "nu_L", "A"), ZERO), "e_L": tl.get(("e_L", "e_L", "A"), ZERO),
          "e_R": tr.get(("e_R", "e_R", "A"), ZERO)}
    cZ = {"nu_L": tl.get(("nu_L", "nu_L", "Z"), ZERO), "e_L": tl.get(("e_L", "e_L", "Z"), ZERO),
          "e_R": tr.get(("e_R", "e_R", "Z"), ZERO)}
    e_ext = math.sqrt(abs(mul(conj_both(cA["e_R"]), cA["e_R"]).c0))
    if e_ext == 0:
        raise InconsistentChargeError("electron has no photon coupling")
    unit = cA["e_R"] * (-1.0 / e_ext)
    charges = {f: _real_ratio(cA[f], unit) / e_ext for f in cA}
    if abs(charges["e_L"] - charges["e_R"]) > tol:
        raise InconsistentChargeError(f"e_L and e_R photon couplings differ: {charges}")
    if abs(e_ext - c.e) > tol:
        raise InconsistentChargeError(f"photon coupling {e_ext} differs from e = {c.e}")

    gz = c.g / c.cos
    z_nu = _real_ratio(cZ["nu_L"], unit) / (gz * 0.5)
    sigma = 1 if z_nu > 0 else -1
    s2 = c.sin ** 2
    isospin = {f: sigma * (_real_ratio(cZ[f], unit) / gz + s2 * charges[f]) for f in ("nu_L", "e_L")}
    isospin["e_R"] = sigma * (_real_ratio(cZ["e_R"], unit) / gz + s2 * charges["e_R"])

    compact = consistent = 0.0
    for f in ("nu_L", "e_L"):
        z = _real_ratio(cZ[f], unit)
        compact = max(compact, abs(z - sigma * gz * (isospin[f] - s2 * charges[f])))
        consistent = max(consistent, abs(z - gz * (sigma * isospin[f] - s2 * charges[f])))
    raw = {k: v for k, v in {**tl, **tr}.items() if k[2] in ("A", "Z")}
    decomposed = {f: {"q": charges[f], "I3": isospin[f]} for f in charges}
    return NeutralCurrentReport(left.label, e_ext, unit, charges, isospin,
                                "standard" if sigma > 0 else "flipped", raw, decomposed,
                                compact, consistent)


def higgs_ssb(gens: GeneratorSet, c: Couplings, v: float,
              halved_couplings: bool = False) -> tuple[BrokenSpectrum, QuadraticGaugeForm]:
    """Expand ``(Dφ)†(Dφ)`` at ``φ = (0, (H+v)/√2)`` and read off masses.

    The returned quadratic form is the coefficient of ``(H+v)²`` over
    ``{W+W-, A, Z}`` pairs.  Mass terms are ``m_W² W⁺W⁻ + ½ m_Z² Z² + ½ m_A² A²``
    at ``H = 0``; ``ww_sign`` is the sign of the W⁺W⁻ coefficient.
    """
    form = covariant_form(gens, c, "higgs", halved_couplings=halved_couplings)
    phi0 = CQVector2(0, _R2)
    syms = ["X1", "X2", "X3", "B"]
    vecs = {s: mat_vec(form[s], phi0) for s in syms}
    raw: dict[tuple[str, str], ComplexQuaternion] = {}
    for i, a in enumerate(syms):
        for b in syms[i:]:
            va, vb = vecs[a], vecs[b]
            q = mul(conj_both(va.v0), vb.v0) + mul(conj_both(va.v1), vb.v1)
            if a != b:
                q = q + mul(conj_both(vb.v0), va.v0) + mul(conj_both(vb.v1), va.v1)
            if not q.is_scalar(1e-14):
                raise ValueError(f"non-scalar Higgs coefficient for {a}{b}: {q}")
            raw[(a, b)] = q.c0
    if abs(raw[("X1", "X2")]) > 1e-14 or abs(raw[("X1", "X1")] - raw[("X2", "X2")]) > 1e-14:
        raise ValueError("charged sector is not proportional to X₁² + X₂²")

    s, co = c.sin, c.cos
    # X3 = sA + cZ, B = cA - sZ
    q33, q3b, qbb = raw[("X3", "X3")], raw[("B", "X3")] if ("B", "X3") in raw else raw[("X3", "B")], raw[("B", "B")]
    qAA = q33 * s * s + q3b * s * co + qbb * co * co
    qZZ = q33 * co * co - q3b * s * co + qbb * s * s
    qAZ = 2 * q33 * s * co + q3b * (co * co - s * s) - 2 * qbb * s * co
    qWW = raw[("X1", "X1")] / _ww_scalar(gens)
    table = {QuadraticGaugeForm.key("W+", "W-"): qWW, ("A", "A"): qAA, ("Z", "Z"): qZZ,
             QuadraticGaugeForm.key("A", "Z"): qAZ}
    quad = QuadraticGaugeForm(table)

    v2 = v * v
    m_W = math.sqrt(abs(qWW.real) * v2)
    m_Z = math.sqrt(max(2 * qZZ.real * v2, 0.0))
    m_A = math.sqrt(max(2 * qAA.real * v2, 0.0))
    ww_sign = 1 if qWW.real > 0 else -1
    couplings = {
        "HWW": 2 * v * qWW.real, "HHWW": qWW.real,
        "HZZ": 2 * v * qZZ.real, "HHZZ": qZZ.real,
    }
    return BrokenSpectrum(m_W, m_Z, m_A, v, ww_sign, couplings), quad


def vev_from_potential(m: float, lam: float) -> float:
    """Minimum of ``m²φ†φ - λ(φ†φ)²`` written as ``v = m / √(2λ)``."""
    if not (m > 0 and lam > 0):
        raise ValueError("m and λ must be positive")
    return m / math.sqrt(2 * lam)


@dataclass(frozen=True)
class BrokenGenerators:
    Q: CQMatrix2
    w_plus: CQMatrix2
    w_tilde_t: CQMatrix2
    eigenvalues: dict[str, ComplexQuaternion]
    claimed: dict[str, ComplexQuaternion]


def _right_eigenvalue(Q: CQMatrix2, w: CQMatrix2, tol: float = 1e-12) -> ComplexQuaternion:
    comm = commutator(Q, w)
    lam = None
    for a, b in zip(w.entries, comm.entries):
        if a.max_abs() > tol:
            try:
                lam = mul(inverse(a), b)
            except ZeroDivisorError as exc:
                raise NoRightEigenvalueError(f"entry {a} is a zero divisor") from exc
            break
    if lam is None:
        raise NoRightEigenvalueError("w is zero")
    if not w.right(lam).isclose(comm, tol):
        raise NoRightEigenvalueError("[Q, w] is not a right multiple of w")
    return lam


def charge_and_broken_generators(gens: Optional[GeneratorSet] = None) -> BrokenGenerators:
    """Charge ``Q = diag(0, k)`` and the broken generators of the alternative set.

    Right eigenvalues λ solve ``[Q, w] = w λ``; the claimed pair is
    ``(+k, -k)`` for ``(w⁺, w̃ᵀ)``.
    """
    if gens is not None and gens.label != "alternative":
        raise ValueError("broken generators are defined for the alternative set")
    Q = diag(0, K)
    hj = H + J
    w_plus = CQMatrix2(0, hj * -0.5j, 0, 0)
    w_tilde_t = CQMatrix2(0, 0, hj * 0.5j, 0)
    eig = {"w+": _right_eigenvalue(Q, w_plus), "w~T": _right_eigenvalue(Q, w_tilde_t)}
    return BrokenGenerators(Q, w_plus, w_tilde_t, eig, {"w+": K, "w~T": -K})


def yukawa_broken(G_e: float, v: float, g: float, m_W: float) -> dict[str, float]:
    """Electron mass and Higgs-electron coupling after symmetry breaking."""
    if G_e < 0 or not (v > 0 and g > 0 and m_W > 0):
        raise ValueError("inputs must be positive")
    m_e = G_e * v / math.sqrt(2.0)
    return {"m_e": m_e, "hee": g * m_e / (2 * m_W), "m_e_over_v": m_e / v}


def run_pipeline(gens: GeneratorSet, c: Couplings, v: float) -> dict[str, object]:
    """Covariant forms → Weinberg rotation → W basis → charges, Z sign and masses."""
    left = weinberg_rotate(covariant_form(gens, c, "leftDoublet"), c.theta)
    right = weinberg_rotate(covariant_form(gens, c, "rightSinglet"), c.theta)
    left_w = w_basis(left, gens)
    nc = neutral_current_decomposition(left, right, c)
    spectrum, quad = higgs_ssb(gens, c, v)
    return {
        "label": gens.label,
        "left": left_w,
        "right": right,
        "couplings": {**coupling_table(left_w), **coupling_table(right)},
        "neutral": nc,
        "charges": {"nu": nc.charges["nu_L"], "e": nc.charges["e_L"]},
        "z_sign": nc.z_sign,
        "ww_sign": "negative" if _ww_scalar(gens) < 0 else "positive",
        "spectrum": spectrum,
        "quadratic": quad,
    }
