"""The twelve acceptance criteria, one test each, at their stated tolerances.

Each test records a PASS/FAIL line (shown in the terminal summary) before
asserting, so a failing criterion is visible alongside the rest.
"""
from __future__ import annotations

import math
import subprocess
import sys
import time

import numpy as np

from cqphys import dirac as dr
from cqphys import electroweak as ew
from cqphys import emfield as em
from cqphys.linalg import IDENTITY, diag, hermitian_inner, mat_mul, mat_vec
from cqphys.lorentz import embed_four, interval, lorentz_act, spin_element
from cqphys.quaternion import CQ, ONE, mul
from oracles import regular_rep

ETA = np.diag([1.0, -1.0, -1.0, -1.0])
POINT = (0.25, 0.5, -0.75, 0.125)


def rng(n: int) -> np.random.Generator:
    return np.random.default_rng(20240 + n)


def test_criterion_01_algebra_oracle(report_criterion):
    t0 = time.perf_counter()
    mismatches = 0
    for a in range(8):
        for b in range(8):
            ea, eb = np.eye(8)[a], np.eye(8)[b]
            got = np.array(mul(CQ.from_real8(ea), CQ.from_real8(eb)).to_real8())
            if not np.array_equal(got, regular_rep(ea) @ eb):
                mismatches += 1
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and elapsed < 1.0
    report_criterion(1, "64 basis products match the 8x8 regular representation", ok,
                     f"{mismatches} mismatches, {elapsed * 1e3:.1f} ms")
    assert ok


def test_criterion_02_clifford(report_criterion):
    clifford_ok = True
    for rep in dr.Rep:
        gs = dr.build_gammas(rep)
        for mu in range(4):
            for nu in range(4):
                ac = mat_mul(gs[mu], gs[nu]) + mat_mul(gs[nu], gs[mu])
                clifford_ok &= ac == IDENTITY * (2 * ETA[mu, nu])
    g5_dirac = dr.build_gammas(dr.Rep.DIRAC).gamma5
    g5_ok = g5_dirac == diag(-1, 1)
    ok = bool(clifford_ok and g5_ok)
    report_criterion(2, "Clifford relations exact in both reps; Dirac-rep gamma5 = diag(-1,1)", ok,
                     f"anticommutators exact: {clifford_ok}; Dirac-rep gamma5 is {g5_dirac}, "
                     f"diag(-1,1) only in the Weyl rep")
    assert clifford_ok
    assert g5_ok, "iΓ⁰Γ¹Γ²Γ³ in the Dirac representation is off-diagonal"


def test_criterion_03_lorentz_invariance(report_criterion):
    r = rng(3)
    worst = 0.0
    for _ in range(1000):
        beta = r.uniform(-math.pi, math.pi, 3) + 1j * r.uniform(-2, 2, 3)
        x = r.normal(size=4) * r.uniform(0.1, 10)
        X = embed_four(x)
        Y = lorentz_act(spin_element(beta), X)
        worst = max(worst, abs(interval(Y) - interval(X)) / (1 + x @ x))
    ok = worst < 1e-10
    report_criterion(3, "interval invariance under 1000 random complex spin elements", ok,
                     f"max drift/(1+|x|^2) = {worst:.2e}")
    assert ok


def test_criterion_04_dirac_solutions(report_criterion):
    r = rng(4)
    worst_res = worst_c = 0.0
    for _ in range(1000):
        p, m = r.uniform(-10, 10, 3), r.uniform(0.1, 10)
        for sp in dr.Species:
            sw = dr.plane_wave(sp, p, m)
            worst_res = max(worst_res, dr.dirac_residual(sw) / (sw.E + m))
        chi, phi = dr.plane_wave(dr.Species.MATTER, p, m), dr.plane_wave(dr.Species.ANTIMATTER, p, m)
        worst_c = max(worst_c, (dr.charge_conjugate(chi).u - phi.u).max_abs())
    ok = worst_res < 1e-12 and worst_c < 1e-12
    report_criterion(4, "plane waves solve the Dirac equation; C maps chi to phi", ok,
                     f"residual/(E+m) {worst_res:.2e}, C mismatch {worst_c:.2e}")
    assert ok


def test_criterion_05_spin_eigenstates(report_criterion):
    r = rng(5)
    want = {(dr.Species.MATTER, dr.Spin.UP): 0.5, (dr.Species.MATTER, dr.Spin.DOWN): -0.5,
            (dr.Species.ANTIMATTER, dr.Spin.UP): -0.5, (dr.Species.ANTIMATTER, dr.Spin.DOWN): 0.5}
    Sz = dr.spin_op(2)
    worst_eig = worst_orth = 0.0
    for _ in range(200):
        pz, m = r.uniform(-10, 10), r.uniform(0.1, 10)
        states = {}
        for (sp, spin), lam in want.items():
            psi = dr.spin_eigenstate(sp, spin, pz, m)
            states[(sp, spin)] = psi
            worst_eig = max(worst_eig, (mat_vec(Sz, psi) - psi * lam).max_abs())
        for sp in dr.Species:
            ip = hermitian_inner(states[(sp, dr.Spin.UP)], states[(sp, dr.Spin.DOWN)])
            worst_orth = max(worst_orth, ip.max_abs())
    ok = worst_eig < 1e-12 and worst_orth < 1e-12
    report_criterion(5, "S_z eigenvalues +1/2, -1/2, -1/2, +1/2 with orthogonal pairs", ok,
                     f"eigen residual {worst_eig:.2e}, overlap {worst_orth:.2e}")
    assert ok


def test_criterion_06_magnetic_moment(report_criterion):
    alpha = em.GaussianSpinor(CQ(1, 0.3j, -0.2, 0.5 + 0.1j), (0.1, -0.2, 0.05), 0.7)
    ratios = []
    for fld in (em.zero_field(), em.uniform_b((0.0, 0.0, 1.0)), em.uniform_b((0.3, -0.2, 1.0))):
        ratios.append(em.convergence_ratio(
            lambda h: em.pauli_reduction_check(fld, 1.0, 2.0, alpha, POINT, h).residual, 2 ** -6))
    moment_err = 0.0
    for e, m in ((1.0, 2.0), (0.3, 0.7), (2.0, 5.0)):
        rep = em.pauli_reduction_check(em.uniform_b((0.0, 0.0, 1.5)), e, m, em.ConstantSpinor(ONE), POINT)
        moment_err = max(moment_err, abs(rep.moment - e / (2 * m)))
    ok = all(3.5 <= q <= 4.5 for q in ratios) and moment_err < 1e-12
    report_criterion(6, "Pauli reduction converges at O(h^2); moment = e/(2m)", ok,
                     f"ratios {', '.join(f'{q:.4f}' for q in ratios)}; moment error {moment_err:.1e}")
    assert ok


def test_criterion_07_maxwell(report_criterion):
    uniform = em.maxwell_residual(em.uniform_b((0.0, 0.0, 1.0)), None, POINT).max_abs()
    wave = em.plane_wave_field(direction=(0.0, 0.6, 0.8), polarization=(1.0, 0.0, 0.0))
    h = em.DEFAULT_H
    wave_res = em.maxwell_residual(wave, None, POINT, h).max_abs()
    order = em.convergence_ratio(lambda s: em.maxwell_residual(wave, None, POINT, s).max_abs(), 2 ** -6)
    r = rng(7)
    f2 = 0.0
    for name in em.field_catalog():
        fld = em.get_field(name)
        for _ in range(10):
            fs = em.field_strength(fld, r.uniform(-0.5, 0.5, 4))
            inv = float(fs.E @ fs.E - fs.B @ fs.B)
            f2 = max(f2, (em.f_squared(fs) - IDENTITY * inv).max_abs())
    ok = uniform == 0.0 and wave_res < 10 * h ** 2 and 3.5 <= order <= 4.5 and f2 < 1e-12
    report_criterion(7, "dF - j: exact for uniform B, O(h^2) for a plane wave; F^2 scalar", ok,
                     f"uniform {uniform:.1e}, wave {wave_res:.2e} (10h^2 = {10 * h * h:.2e}), "
                     f"ratio {order:.4f}, F^2 {f2:.1e}")
    assert ok


def test_criterion_08_current_conservation(report_criterion):
    r = rng(8)
    h = 2 ** -8
    worst = 0.0
    cases = [((1.0, dr.plane_wave(dr.Species.MATTER, (0, 0, 1), 1.0)),
              (1.0, dr.plane_wave(dr.Species.MATTER, (0, 0, -1), 1.0)))]
    for _ in range(20):
        m = r.uniform(0.5, 2.0)
        cases.append(tuple((complex(*r.normal(size=2)),
                            dr.plane_wave(dr.Species.MATTER if r.uniform() < 0.5 else dr.Species.ANTIMATTER,
                                          r.normal(size=3), m)) for _ in range(2)))
    for modes in cases:
        sup = em.Superposition(modes)
        # C bounds the third derivative of the current: (2 E_max)^3 (Σ|c|)^2
        C = (2 * max(sw.E for _, sw in modes)) ** 3 * sum(abs(c) for c, _ in modes) ** 2
        worst = max(worst, em.current_conservation_residual(sup, r.normal(size=4), h) / (C * h * h))
    ok = worst < 1.0
    report_criterion(8, "U(1) current conserved for two-mode superpositions", ok,
                     f"max residual/(C h^2) = {worst:.3f}")
    assert ok


def test_criterion_09_ssb_masses(report_criterion):
    r = rng(9)
    mass_err = photon = 0.0
    for _ in range(100):
        g, gp, v = r.uniform(0.05, 2), r.uniform(0.05, 2), r.uniform(1, 1000)
        for gens in (ew.standard_generators(), ew.alternative_generators()):
            spectrum, quad = ew.higgs_ssb(gens, ew.Couplings(g, gp), v)
            mass_err = max(mass_err, abs(spectrum.m_W / (g * v / 2) - 1),
                           abs(spectrum.m_Z / (v * math.hypot(g, gp) / 2) - 1))
            photon = max(photon, abs(quad[("A", "A")]))
    spectrum, _ = ew.higgs_ssb(ew.standard_generators(), ew.Couplings(0.65, 0.35), 246.0)
    example = abs(spectrum.m_W - 79.95) <= 1e-3 and abs(spectrum.m_Z - 90.8035) <= 1e-3
    ok = mass_err < 1e-12 and photon < 1e-14 and example
    report_criterion(9, "SSB masses m_W = gv/2, m_Z = v sqrt(g^2+g'^2)/2, massless photon", ok,
                     f"relative error {mass_err:.1e}, photon {photon:.1e}, "
                     f"m_W {spectrum.m_W:.6f}, m_Z {spectrum.m_Z:.6f}")
    assert ok


def test_criterion_10_sign_differential(report_criterion):
    c = ew.Couplings(0.65, 0.35)
    std = ew.run_pipeline(ew.standard_generators(), c, 246.0)
    alt = ew.run_pipeline(ew.alternative_generators(), c, 246.0)
    charges_ok = all(abs(res["charges"]["e"] + 1) < 1e-12 and abs(res["charges"]["nu"]) < 1e-12
                     for res in (std, alt))
    ok = (std["z_sign"] == "standard" and alt["z_sign"] == "flipped"
          and alt["ww_sign"] == "negative" and alt["spectrum"].ww_sign < 0 and charges_ok)
    report_criterion(10, "Z sign standard vs flipped; alternative W+W- negative; q_e=-1, q_nu=0", ok,
                     f"z: {std['z_sign']}/{alt['z_sign']}, ww: {std['ww_sign']}/{alt['ww_sign']}")
    assert ok


def test_criterion_11_yukawa(report_criterion):
    r = rng(11)
    worst = 0.0
    for _ in range(100):
        G, v, g = r.uniform(0, 3), r.uniform(1, 500), r.uniform(0.05, 2)
        y = ew.yukawa_broken(G, v, g, g * v / 2)
        worst = max(worst, abs(y["m_e"] - G * v / math.sqrt(2)) / max(1.0, y["m_e"]),
                    abs(y["hee"] - y["m_e"] / v) / max(1.0, y["hee"]))
    ok = worst < 1e-14
    report_criterion(11, "Yukawa m_e = G v/sqrt2 and Higgs coupling g m_e/(2 m_W) = m_e/v", ok,
                     f"max error {worst:.1e}")
    assert ok


def _verify(*args: str) -> subprocess.CompletedProcess:
    return subprocess.run([sys.executable, "-m", "cqphys.harness", *args], capture_output=True, text=True)


def test_criterion_12_harness_determinism(report_criterion, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    ra = _verify("--canonical", "--seed", "11", "--json", str(a))
    rb = _verify("--canonical", "--seed", "11", "--json", str(b))
    identical = a.read_bytes() == b.read_bytes()
    codes = (ra.returncode, rb.returncode,
             _verify("--suite", "cq-core", "--tol", "1e-300").returncode,
             _verify("--suite", "bogus").returncode)
    ok = identical and codes == (0, 0, 1, 2)
    report_criterion(12, "canonical reports byte-identical; exit codes 0/1/2", ok,
                     f"identical={identical}, codes={codes}")
    assert ok
