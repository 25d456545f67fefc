"""
From the small lattice to the big one
=====================================

The big function at modulus ``kappa`` is a rotated, rescaled copy of the
small function at the complementary modulus:
``P_kappa(z) = -18 p_lam(3 sqrt(2) i z)``. The half-periods swap roles.
"""
import numpy as np

from sig3 import TRANSFER_GAMMA, Sig3System, transfer_residual
from sig3.verify import sample_points

sys_ = Sig3System.from_kappa(0.3)
comp = Sig3System.from_modulus(sys_.m.complementary())

rng = np.random.default_rng(1)
points = sample_points(sys_.big, 8, rng)
for z in points:
    print(f"z = {z:.4f}   residual {transfer_residual(sys_.m, z):.2e}"
          f"   (gamma -> -gamma: {transfer_residual(sys_.m, z, -TRANSFER_GAMMA):.2e})")

g = TRANSFER_GAMMA
print(f"\nomega_lam  = {comp.omega:.15f},  -gamma Omega'_kappa = {(-g * sys_.Omega_prime).real:.15f}")
print(f"omega'_lam = {comp.omega_prime:.15f},  gamma Omega_kappa = {g * sys_.Omega:.15f}")
