"""Complex quaternions: multiplication, conjugations, zero divisors, exponentials."""
from __future__ import annotations

import math

from cqphys.quaternion import CQ, H, I, J, K, conj_both, exp_pure, inverse, is_idempotent, mul, quat_norm
from cqphys.errors import ZeroDivisorError

print("Quaternion units multiply cyclically:")
print(f"  h j = {mul(H, J)},  j k = {mul(J, K)},  k h = {mul(K, H)},  j h = {mul(J, H)}")

sigma_x = I * H
print(f"\nThe Pauli vector ih squares to one: (ih)^2 = {mul(sigma_x, sigma_x)}")

q = CQ(1 + 2j, 0.5, -1j, 3)
print(f"\nq = {q}")
print(f"  q^⋆ q = {quat_norm(q)}   (always a complex scalar)")
print(f"  q q^-1 = {mul(q, inverse(q))}")
print(f"  double conjugate q^* = {conj_both(q)}")

up, down = CQ(0.5, 0, 0, 0.5j), CQ(0.5, 0, 0, -0.5j)
print(f"\n(1+ik)/2 idempotent: {is_idempotent(up)};  (1+ik)(1-ik)/4 = {mul(up, down)}")
try:
    inverse(up)
except ZeroDivisorError as exc:
    print(f"  so it has no inverse: {exc}")

print(f"\nexp(π/2 k) = {exp_pure((0, 0, math.pi / 2))}")
print(f"exp(0.5 i k) = {exp_pure((0, 0, 0.5j))}  (cosh + ik sinh)")
