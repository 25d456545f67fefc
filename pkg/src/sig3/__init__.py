"""
Signature-three elliptic functions.

``dn3`` (the derivative of the inverse of an incomplete integral of
2F1(1/3, 2/3; 1/2; .)) and ``W = T2(y6)`` (from the Chebyshev equation
``y'^2 = T6(y) - (1 - 2 kappa^2)``), each expressed through its own
Weierstrass p function, with period lattices computed by several
independent routes.

>>> from sig3 import Sig3System, dn3
>>> sys = Sig3System.from_kappa(0.6)
>>> abs(dn3(sys, 0) - 1) < 1e-15
True
"""
from .errors import (CriticalValueMismatch, Dn3Pole, DomainError, NearPole, NonConvergence, NonFinite,
                     NonRealInvariants, NonRectangular, PoleVerificationFailed, Sig3Error, StepUnderflow, WPole)
from .hyper import Modulus, f_half, f_one, incomplete_integral
from .numerics import (CubicRoots, QuadratureConfig, complex_derivative, integrate_smooth,
                       integrate_sqrt_singular, solve_ode_scalar, solve_weierstrass_cubic)
from .oracle import PhiSolution, build_phi, delta_oracle, phi, psi_check
from .system import (KAPPA_GRID, TRANSFER_GAMMA, CriticalTriple, Sig3System, big_invariants, big_W,
                     big_W_prime, chebyshev_T6, critical_values_closed_form, critical_values_W, dn3,
                     dn3_prime, lattice_ratios, omega_via_chebyshev, omega_via_delta_integral,
                     omega_via_mehler, periods_big, periods_small, pole_locations, small_invariants,
                     transfer_residual, y6_squared)
from .verify import VerificationReport, run_verification
from .wp import (Invariants, WeierstrassContext, discriminant, homogeneity_scale, make_context, wp,
                 wp_and_prime, wp_prime)

__version__ = "0.1.0"
