"""Rotations and boosts as two-sided actions of unit complex quaternions."""
from __future__ import annotations

import math

import numpy as np

from cqphys.lorentz import (
    Chirality, boost_matrix, embed_four, extract_four, interval, left_partner, lorentz_act, spin_element,
    vector_transform,
)

x = (2.0, 0.3, -1.0, 1.5)
X = embed_four(x)
print(f"x = {x} embeds as {X}; interval = {interval(X).real:.6f}")

g = spin_element((0, 0, math.pi / 4))
print(f"\nReal β = (0, 0, π/4) rotates by π/2 about z: {extract_four(lorentz_act(g, X))}")

phi = 0.9
g = spin_element((0, 0, 0.5j * phi))
Y = lorentz_act(g, X)
print(f"Imaginary β = (0, 0, {phi / 2}i) boosts: {tuple(round(c, 6) for c in extract_four(Y))}")
print(f"  interval afterwards = {interval(Y).real:.12f}")
print(f"  matches a 4x4 boost with rapidity -{phi}: "
      f"{np.allclose(vector_transform((0, 0, 0.5j * phi)), boost_matrix((0, 0, 1), -phi))}")

XL = embed_four(x, Chirality.LEFT)
YL = lorentz_act(left_partner(g), XL)
print(f"\nLeft-chiral embedding with the conjugate element gives the same vector: "
      f"{np.allclose(extract_four(YL, Chirality.LEFT), extract_four(Y))}")
