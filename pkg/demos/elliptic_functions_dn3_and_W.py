"""
The functions dn3 and W
=======================

``dn3`` lives on the small lattice, ``W`` on the big one. Along the real
axis ``dn3`` oscillates between 1 and ``2 cos(2 alpha/3) - 1``; ``W`` has a
pair of real poles at ``+-(2/3) Omega``.
"""
import math

import numpy as np

from sig3 import Sig3System, big_W, critical_values_W, dn3, pole_locations, y6_squared
from sig3.errors import NearPole

sys_ = Sig3System.from_kappa(0.6)
a = sys_.m.alpha

print("u / omega    dn3(u)")
for t in np.linspace(0, 2, 9):
    print(f"{t:8.3f}   {dn3(sys_, t * sys_.omega).real:+.12f}")
print(f"lower value 2 cos(2 alpha/3) - 1 = {2 * math.cos(2 * a / 3) - 1:+.12f}")

dn3_poles, W_poles = pole_locations(sys_)
print(f"\ndn3 poles: {dn3_poles[0]:.6f}, {dn3_poles[1]:.6f}")
print(f"W poles:   {W_poles[0].real:.6f}, {W_poles[1].real:.6f}")
try:
    big_W(sys_, W_poles[0])
except NearPole as exc:
    print(f"evaluating W at a pole raises {type(exc).__name__}")

evaluated, closed = critical_values_W(sys_)
print("\nW at the corners Omega, Omega + Omega', Omega'")
for got, want in zip(evaluated.as_tuple(), closed.as_tuple()):
    print(f"  {got:+.12f}   closed form {want:+.12f}")

# y6^2 = (W + 1)/2 vanishes at the origin and equals cos^2(alpha/3) at Omega
print(f"\ny6^2(0) = {y6_squared(sys_, 0).real:.3f}, "
      f"y6^2(Omega) = {y6_squared(sys_, sys_.Omega).real:.12f}, cos^2(alpha/3) = {math.cos(a / 3) ** 2:.12f}")
