"""Maxwell's equations as a single H⊗C matrix equation dF = j."""
from __future__ import annotations

from cqphys import emfield as em
from cqphys.linalg import IDENTITY

x = (0.25, 0.5, -0.75, 0.125)
print(f"Uniform B: |dF - j| = {em.maxwell_residual(em.uniform_b((0, 0, 1)), None, x).max_abs()}")

wave = em.plane_wave_field(direction=(0.0, 0.6, 0.8), polarization=(1.0, 0.0, 0.0))
for h in (2 ** -5, 2 ** -6, 2 ** -7):
    print(f"Plane wave, h = {h:.5f}: |dF - j| = {em.maxwell_residual(wave, None, x, h).max_abs():.3e}")

bump = em.bump_field()
res = em.maxwell_residual(bump, lambda *y: (0.0, (0.0, 0.0, 0.0)), (0, 0.2, 0.1, -0.3), 2 ** -7)
comps = em.maxwell_components(res)
print(f"\nCharged bump with the source left out: Gauss residual {comps['gauss_e']:.6f} "
      f"vs analytic ρ {bump.rho(0, 0.2, 0.1, -0.3):.6f}")

fs = em.field_strength(wave, x)
inv = float(fs.E @ fs.E - fs.B @ fs.B)
print(f"\nF² - (E² - B²) I = {(em.f_squared(fs) - IDENTITY * inv).max_abs():.1e} for the plane wave")
print(f"Lorenz gauge residual: {em.lorenz_residual(wave, x):.1e}")
