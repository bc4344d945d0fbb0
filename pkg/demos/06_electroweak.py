"""Electroweak gauge sector with standard and quaternionic generators side by side."""
from __future__ import annotations

from cqphys import electroweak as ew

c = ew.Couplings(0.65, 0.35)
print(f"g = {c.g}, g' = {c.g_prime}, sin²θ = {c.sin ** 2:.4f}, e = {c.e:.6f}\n")
for gens in (ew.standard_generators(), ew.alternative_generators()):
    res = ew.run_pipeline(gens, c, 246.0)
    nc = res["neutral"]
    print(f"{gens.label}:")
    print(f"  t3 = {gens.t3}")
    print(f"  charges q_e = {res['charges']['e']:+.3f}, q_nu = {res['charges']['nu']:+.3f}")
    print(f"  isospin weights: {', '.join(f'{k} {v:+.2f}' for k, v in nc.isospin.items())}")
    print(f"  Z-coupling sign: {res['z_sign']};  W+W- contraction: {res['ww_sign']}")
    sp = res["spectrum"]
    print(f"  m_W = {sp.m_W:.4f}, m_Z = {sp.m_Z:.4f}, m_A = {sp.m_A}\n")

bg = ew.charge_and_broken_generators()
print("Broken generators of the quaternionic set (right eigenvalues under [Q, ·]):")
for name, lam in bg.eigenvalues.items():
    print(f"  {name}: computed {lam}, claimed {bg.claimed[name]}")

y = ew.yukawa_broken(2 ** 0.5 * 0.511e-3 / 246.0, 246.0, c.g, 0.65 * 246 / 2)
print(f"\nYukawa: m_e = {y['m_e']:.6g}, Higgs-electron coupling = {y['hee']:.6g} = m_e/v")
