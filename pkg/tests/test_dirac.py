from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cqphys.dirac import (
    U_CHANGE, PlaneWaveSpinor, Rep, Species, Spin, alpha, bilinear, build_gammas, charge_conjugate, charge_conjugation_op,
    chiral_identity_check, chiral_identity_residuals, chirality_project, cpt, dirac_residual, energy,
    feynman_stuckelberg, hamiltonian, helicity_op, parity, parity_op, plane_wave, raw_solution, real_norm,
    slash, spin_commutator_residual, spin_eigenstate, spin_op, time_reversal_op, time_reverse, to_dirac,
    to_weyl,
)
from cqphys.errors import NonPositiveMassError, RestFrameSingularError, ZeroMomentumError
from cqphys.linalg import (
    IDENTITY, ZERO_MATRIX, CQMatrix2, CQVector2, complex_dagger, dagger, diag, hermitian_inner, mat_mul,
    mat_vec,
)
from cqphys.quaternion import CQ, K
from oracles import embed4x4, embed_vec, minkowski, operator_residual

ETA = minkowski()
mom = st.floats(min_value=-10, max_value=10, allow_nan=False)
momenta = st.tuples(mom, mom, mom)
masses = st.floats(min_value=0.1, max_value=10)
species = st.sampled_from(list(Species))
R2 = math.sqrt(2)


def eigenvalue(M: CQMatrix2, v: CQVector2) -> complex:
    """Scalar λ with ``M v = λ v``; asserts that v is an eigenvector."""
    Mv = mat_vec(M, v)
    ref = max(((i, c) for i, q in enumerate(v) for c in range(4)), key=lambda ic: abs(v[ic[0]].coeffs[ic[1]]))
    lam = Mv[ref[0]].coeffs[ref[1]] / v[ref[0]].coeffs[ref[1]]
    assert (Mv - v * lam).max_abs() < 1e-12 * (1 + v.max_abs())
    return lam


@pytest.mark.parametrize("rep", list(Rep))
def test_clifford_relations_exact(rep):
    gs = build_gammas(rep)
    for mu in range(4):
        for nu in range(4):
            ac = mat_mul(gs[mu], gs[nu]) + mat_mul(gs[nu], gs[mu])
            assert ac == IDENTITY * (2 * ETA[mu, nu])


def test_gamma_examples():
    w, d = build_gammas(Rep.WEYL), build_gammas(Rep.DIRAC)
    assert w[0] == CQMatrix2(0, 1, 1, 0)
    assert d[0] == diag(1, -1)
    for gs in (w, d):
        assert mat_mul(gs[3], gs[3]) == -IDENTITY
        assert mat_mul(gs[1], gs[1]) == -IDENTITY
        assert mat_mul(gs[1], gs[2]) + mat_mul(gs[2], gs[1]) == ZERO_MATRIX
    assert dagger(d[0]) == d[0]


def test_gamma5():
    assert build_gammas(Rep.WEYL).gamma5 == diag(-1, 1)
    assert build_gammas(Rep.DIRAC).gamma5 == CQMatrix2(0, 1, 1, 0)


def test_representations_related_by_unitary_change():
    w, d = build_gammas(Rep.WEYL), build_gammas(Rep.DIRAC)
    assert mat_mul(U_CHANGE, dagger(U_CHANGE)).isclose(IDENTITY, 1e-15)
    for mu in range(4):
        assert mat_mul(mat_mul(U_CHANGE, w[mu]), dagger(U_CHANGE)).isclose(d[mu], 1e-15)
    psi = CQVector2(CQ(1, 2j), K)
    assert to_weyl(to_dirac(psi)).isclose(psi, 1e-15)


def test_rest_frame_solutions():
    chi = plane_wave(Species.MATTER, (0, 0, 0), 1)
    assert chi.u == CQVector2(1, 0) and dirac_residual(chi) == 0
    assert plane_wave(Species.ANTIMATTER, (0, 0, 0), 1).u == CQVector2(0, 1)


def test_z_moving_matter_amplitude():
    chi = plane_wave(Species.MATTER, (0, 0, 1), 1)
    assert chi.E == pytest.approx(R2)
    assert chi.u.isclose(CQVector2(1, CQ(0, 0, 0, -1j / (R2 + 1))), 1e-15)


def test_mass_must_be_positive():
    for m in (0, -1):
        with pytest.raises(NonPositiveMassError):
            plane_wave(Species.MATTER, (0, 0, 1), m)


@given(species, momenta, masses)
def test_plane_wave_solves_dirac_equation(sp, p, m):
    sw = plane_wave(sp, p, m)
    assert dirac_residual(sw) < 1e-12 * (sw.E + m)
    s = 1 if sp is Species.MATTER else -1
    M4 = embed4x4(slash(build_gammas(), sw.p_cov) - IDENTITY * (s * m))
    assert operator_residual(M4, embed_vec(sw.u)) < 1e-12 * (sw.E + m)


@given(species, momenta, masses, st.tuples(mom, mom, mom, mom))
def test_plane_wave_value_carries_phase(sp, p, m, x):
    sw = plane_wave(sp, p, m)
    assert abs(abs(sw.phase(x)) - 1) < 1e-12
    assert sw.value(x).isclose(sw.u * sw.phase(x), 1e-12)


def test_feynman_stueckelberg_examples():
    p, m = (0.3, -0.2, 0.7), 1.3
    assert feynman_stuckelberg(2, p, m)[0] == 3
    assert feynman_stuckelberg(4, p, m)[0] == 1
    assert feynman_stuckelberg(1, p, m)[0] == 4
    assert feynman_stuckelberg(3, p, m)[0] == 2
    j, amp = feynman_stuckelberg(1, (0, 0, 0), 1)
    assert amp == CQVector2(1, 0)


def test_raw_solutions_singular_at_rest():
    with pytest.raises(RestFrameSingularError):
        raw_solution(2, (0, 0, 1e-14), 1)
    assert raw_solution(2, (0, 0, 0), 1)[0] == CQVector2(0, 1)
    with pytest.raises(ValueError):
        raw_solution(5, (0, 0, 1), 1)


@given(momenta, masses)
def test_charge_conjugation_maps_matter_to_antimatter(p, m):
    chi = plane_wave(Species.MATTER, p, m)
    phi = plane_wave(Species.ANTIMATTER, p, m)
    c = charge_conjugate(chi)
    assert c.species is Species.ANTIMATTER and c.phase_sign == phi.phase_sign
    assert c.u.isclose(phi.u, 1e-12)
    assert charge_conjugate(c).u.isclose(chi.u, 1e-12)


def test_discrete_operators():
    T = time_reversal_op()
    assert mat_mul(T, T) == IDENTITY
    assert complex_dagger(T) == T
    P = parity_op()
    assert mat_mul(P, P) == IDENTITY
    assert mat_mul(charge_conjugation_op(), P) == CQMatrix2(0, 1, 1, 0)


@given(species, momenta, masses)
def test_parity_and_time_reversal_give_solutions(sp, p, m):
    sw = plane_wave(sp, p, m)
    for image in (parity(sw), time_reverse(sw)):
        assert dirac_residual(image) < 1e-12 * (sw.E + m)


@given(momenta, masses)
def test_cpt_is_phase_times_identity(p, m):
    chi = plane_wave(Species.MATTER, p, m)
    out = cpt(chi)
    assert out.species is Species.MATTER and out.p == chi.p and out.phase_sign == chi.phase_sign
    assert out.u.isclose(chi.u * 1j, 1e-12)


def test_chirality_projectors():
    a, b = CQ(1, 2j, 0, -1), CQ(0, 1, 1j, 0)
    assert chirality_project(CQVector2(a, 0), "L") == CQVector2(a, 0)
    assert chirality_project(CQVector2(a, 0), "R") == CQVector2(0, 0)
    assert chirality_project(CQVector2(0, b), "R") == CQVector2(0, b)
    psi = CQVector2(a, b)
    for rep in Rep:
        assert chirality_project(chirality_project(psi, "L", rep), "R", rep).max_abs() < 1e-15
        total = chirality_project(psi, "L", rep) + chirality_project(psi, "R", rep)
        assert total.isclose(psi, 1e-15)
    with pytest.raises(ValueError):
        chirality_project(psi, "X")


def test_hamiltonian_examples():
    H = hamiltonian((0, 0, 0), 2.0)
    assert H == diag(2, -2)
    assert mat_vec(H, CQVector2(1, 0)) == CQVector2(2, 0)
    H = hamiltonian((0.3, -1.0, 0.2), 1.5)
    assert dagger(H).isclose(H, 1e-15)


@given(species, momenta, masses)
def test_hamiltonian_energy_eigenvalue(sp, p, m):
    sw = plane_wave(sp, p, m)
    if sp is Species.MATTER:
        lam = eigenvalue(hamiltonian(p, m), sw.u)
        assert abs(lam - sw.E) < 1e-12 * (sw.E + m)
    else:
        # exp(+i p·x) is a negative-energy wave carrying momentum -p
        lam = eigenvalue(hamiltonian(tuple(-x for x in p), m), sw.u)
        assert abs(lam + sw.E) < 1e-12 * (sw.E + m)


def test_spin_operator_examples():
    Sz = spin_op(2)
    assert mat_mul(Sz, Sz) == IDENTITY * 0.25
    p = (0, 0, 1)
    hel, H = helicity_op(p), hamiltonian(p, 1)
    assert (mat_mul(hel, H) - mat_mul(H, hel)).max_abs() == 0
    assert spin_commutator_residual(0, (0, 1, 0), 1) == 0
    with pytest.raises(ZeroMomentumError):
        helicity_op((0, 0, 0))


@given(st.integers(0, 2), momenta, masses)
def test_spin_commutator_identity(l, p, m):
    assert spin_commutator_residual(l, p, m) < 1e-12 * (1 + max(map(abs, p)))


@given(momenta.filter(lambda p: sum(x * x for x in p) > 1e-6), masses)
def test_helicity_commutes_with_hamiltonian(p, m):
    hel, H = helicity_op(p), hamiltonian(p, m)
    assert (mat_mul(hel, H) - mat_mul(H, hel)).max_abs() < 1e-12 * (1 + max(map(abs, p)))


EXPECTED_SZ = {(Species.MATTER, Spin.UP): 0.5, (Species.MATTER, Spin.DOWN): -0.5,
               (Species.ANTIMATTER, Spin.UP): -0.5, (Species.ANTIMATTER, Spin.DOWN): 0.5}


@given(mom, masses)
def test_spin_eigenstates(pz, m):
    Sz = spin_op(2)
    for (sp, spin), want in EXPECTED_SZ.items():
        psi = spin_eigenstate(sp, spin, pz, m)
        assert abs(eigenvalue(Sz, psi) - want) < 1e-12
        sw = PlaneWaveSpinor(psi, (0.0, 0.0, pz), m, sp, -1 if sp is Species.MATTER else 1)
        assert dirac_residual(sw) < 1e-12 * (energy((0, 0, pz), m) + m)
    for sp in Species:
        up, down = spin_eigenstate(sp, Spin.UP, pz, m), spin_eigenstate(sp, Spin.DOWN, pz, m)
        assert hermitian_inner(up, down).max_abs() < 1e-12


def test_dirac_adjoint_norms():
    assert real_norm(CQVector2(1, 0)) == 1
    assert real_norm(CQVector2(0, 1)) == -1
    chi = plane_wave(Species.MATTER, (0, 0, 1), 1)
    want = 1 - 1 / (R2 + 1) ** 2
    assert real_norm(chi.u) == pytest.approx(want, abs=1e-15)
    assert want == pytest.approx(2 / (R2 + 1))


@given(species, momenta, masses)
def test_real_norm_is_lorentz_scalar(sp, p, m):
    sw = plane_wave(sp, p, m)
    s = 1 if sp is Species.MATTER else -1
    assert real_norm(sw.u) == pytest.approx(s * 2 * m / (sw.E + m), rel=1e-12, abs=1e-14)
    assert bilinear(sw.u, IDENTITY).is_scalar(1e-12)


def test_chiral_identity_examples():
    r = chiral_identity_residuals(CQVector2(1, 0))
    assert max(r["L"] + r["R"]) < 1e-15
    assert chiral_identity_check((0, 0, 1), 1) < 1e-12


@given(species, momenta, masses)
def test_chiral_identities(sp, p, m):
    sw = plane_wave(sp, p, m)
    assert chiral_identity_check(p, m, sp) < 1e-12 * (1 + sw.E / m)


def test_alpha_is_gamma0_gamma_l():
    gs = build_gammas()
    for l in range(3):
        a = alpha(l)
        assert mat_mul(a, a) == IDENTITY
        assert mat_mul(a, gs[0]) + mat_mul(gs[0], a) == ZERO_MATRIX


def test_hamiltonian_on_z_moving_amplitude():
    chi = plane_wave(Species.MATTER, (0, 0, 1), 1)
    assert mat_vec(hamiltonian((0, 0, 1), 1), chi.u).isclose(chi.u * R2, 1e-15)
