"""Nonrelativistic limit: the Pauli equation and the magnetic moment e/(2m)."""
from __future__ import annotations

from cqphys import dirac as dr
from cqphys import emfield as em
from cqphys.quaternion import CQ, ONE

alpha = em.GaussianSpinor(CQ(1, 0.3j, -0.2, 0.5 + 0.1j), (0.1, -0.2, 0.05), 0.7)
x = (0.25, 0.5, -0.75, 0.125)
fld = em.uniform_b((0.0, 0.0, 1.0))
for h in (2 ** -5, 2 ** -6, 2 ** -7):
    rep = em.pauli_reduction_check(fld, 1.0, 2.0, alpha, x, h)
    print(f"h = {h:.5f}: |(Σ·π)²α - (π² - eΣ·B)α| = {rep.residual:.3e}")

rep = em.pauli_reduction_check(fld, 1.0, 2.0, em.ConstantSpinor(ONE), x)
print(f"\nMoment coefficient for e = 1, m = 2: {rep.moment:.12f}")

p = (0.0, 0.0, 1.0)
sup = em.Superposition(((1.0, dr.plane_wave(dr.Species.MATTER, p, 1.0)),
                        (0.5j, dr.plane_wave(dr.Species.MATTER, (0, 0, -1), 1.0))))
print(f"∂_μ(ψ̄Γ^μψ) for a two-mode superposition: {em.current_conservation_residual(sup, x, 2 ** -8):.2e}")
