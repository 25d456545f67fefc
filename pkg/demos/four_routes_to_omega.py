"""
Four routes to the real half-period
===================================

The real half-period ``omega`` of the small lattice has four independent
integral forms. Three of them have inverse-square-root endpoints and are
computed by tanh-sinh quadrature; the integrands receive the distance to
each endpoint so nothing cancels near the ends.
"""
import math

from sig3 import KAPPA_GRID, Modulus, f_one, omega_via_chebyshev, omega_via_delta_integral, omega_via_mehler

print(" kappa   hypergeometric      Mehler-type          Chebyshev            delta-integral     spread")
for kappa in KAPPA_GRID:
    m = Modulus.from_kappa(kappa)
    routes = [0.5 * math.pi * f_one(kappa ** 2), omega_via_mehler(m),
              omega_via_chebyshev(m), omega_via_delta_integral(m)]
    spread = max(routes) - min(routes)
    print(f" {kappa:.4f}  " + "  ".join(f"{r:.15f}" for r in routes) + f"  {spread:.1e}")
