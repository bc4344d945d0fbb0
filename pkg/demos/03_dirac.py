"""Dirac spinors over H⊗C: solutions, discrete symmetries, spin and chirality."""
from __future__ import annotations

from cqphys import dirac as dr
from cqphys.linalg import mat_vec

for rep in dr.Rep:
    gs = dr.build_gammas(rep)
    print(f"{rep.value:5s} rep: Γ⁰ = {gs[0]},  Γ⁵ = {gs.gamma5}")

p, m = (0.3, -0.4, 1.2), 1.0
chi = dr.plane_wave(dr.Species.MATTER, p, m)
phi = dr.plane_wave(dr.Species.ANTIMATTER, p, m)
print(f"\nMatter amplitude at p = {p}: ({chi.u.v0}, {chi.u.v1})")
print(f"  Dirac residual {dr.dirac_residual(chi):.1e}, antimatter residual {dr.dirac_residual(phi):.1e}")
print(f"  charge conjugation reproduces φ: {dr.charge_conjugate(chi).u.isclose(phi.u)}")
print(f"  CPT returns i·χ: {dr.cpt(chi).u.isclose(chi.u * 1j)}")
print(f"  ψ̄ψ = {dr.real_norm(chi.u):.6f} = 2m/(E+m) = {2 * m / (chi.E + m):.6f}")

for idx in (1, 2, 3, 4):
    j, _ = dr.feynman_stuckelberg(idx, p, m)
    print(f"  E→-E, p→-p sends ψ{idx} to ψ{j}")

print("\nSpin along z from idempotent coefficients:")
Sz = dr.spin_op(2)
for sp in dr.Species:
    for spin in dr.Spin:
        psi = dr.spin_eigenstate(sp, spin, 0.8, m)
        lam = mat_vec(Sz, psi).v0.coeffs[0] / psi.v0.coeffs[0] if psi.v0.max_abs() else 0
        print(f"  {sp.value:10s} {spin.value:4s}: S_z = {lam.real:+.1f}")

print(f"\nChiral identities hold to {dr.chiral_identity_check(p, m):.1e}")
