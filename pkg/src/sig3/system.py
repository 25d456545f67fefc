"""
Signature-three elliptic functions and their period lattices.

For a modulus ``kappa`` there are two Weierstrass functions in play:

* ``p`` with the *small* invariants ``g2 = 4/27 (8 lam^2 + 1)``,
  ``g3 = 8/729 (8 lam^4 + 20 lam^2 - 1)``, coperiodic with ``dn3`` via
  ``(1 - dn3)(1/3 + p) = 4 kappa^2 / 9``;
* ``P`` with the *big* invariants ``G2 = 48 (1 + 8 kappa^2)``,
  ``G3 = 64 (1 - 20 kappa^2 - 8 kappa^4)``, coperiodic with ``W`` via
  ``(1 + W)(6 - P) = 4 lam^2``.

The two are linked across complementary moduli by
``P_kappa(z) = -18 p_lam(3 sqrt(2) i z)``.

Half-periods are available both from the invariants (through
:func:`sig3.wp.make_context`) and from closed hypergeometric formulas; the
real half-period ``omega`` additionally has three integral representations
(:func:`omega_via_mehler`, :func:`omega_via_chebyshev`,
:func:`omega_via_delta_integral`).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CriticalValueMismatch, Dn3Pole, NearPole, PoleVerificationFailed, WPole
from .hyper import Modulus, f_one
from .numerics import DEFAULT_CONFIG, QuadratureConfig, integrate_sqrt_singular
from .wp import Invariants, WeierstrassContext, make_context, wp, wp_and_prime

__all__ = [
    "Sig3System",
    "CriticalTriple",
    "TRANSFER_GAMMA",
    "small_invariants",
    "big_invariants",
    "dn3",
    "dn3_prime",
    "big_W",
    "big_W_prime",
    "y6_squared",
    "periods_small",
    "periods_big",
    "omega_via_mehler",
    "omega_via_chebyshev",
    "omega_via_delta_integral",
    "chebyshev_T6",
    "transfer_residual",
    "pole_locations",
    "critical_values_W",
    "critical_values_closed_form",
    "lattice_ratios",
    "KAPPA_GRID",
]

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)
SQRT6 = math.sqrt(6.0)

#: scaling that carries the small invariants at ``lam`` to the big ones at ``kappa``
TRANSFER_GAMMA = 3.0 * SQRT2 * 1j

#: moduli used by grid sweeps: 0.1, ..., 0.9 and the symmetric point
KAPPA_GRID = tuple(sorted([round(0.1 * k, 10) for k in range(1, 10)] + [1.0 / SQRT2]))

# |p + 1/3| and |6 - P| below this count as a pole
_POLE_DENOMINATOR = 1e-12


def small_invariants(m: Modulus) -> Invariants:
    l2 = m.lam * m.lam
    return Invariants(4.0 / 27.0 * (8.0 * l2 + 1.0), 8.0 / 729.0 * (8.0 * l2 * l2 + 20.0 * l2 - 1.0))


def big_invariants(m: Modulus) -> Invariants:
    k2 = m.kappa * m.kappa
    return Invariants(48.0 * (1.0 + 8.0 * k2), 64.0 * (1.0 - 20.0 * k2 - 8.0 * k2 * k2))


@dataclass(frozen=True, eq=False)
class Sig3System:
    """Both Weierstrass contexts for one modulus.

    The half-periods stored here come from the invariants; the
    hypergeometric values are :func:`periods_small` and :func:`periods_big`.
    """

    m: Modulus
    small: WeierstrassContext
    big: WeierstrassContext

    @classmethod
    def from_modulus(cls, m: Modulus) -> "Sig3System":
        return cls(m, make_context(small_invariants(m)), make_context(big_invariants(m)))

    @classmethod
    def from_kappa(cls, kappa: float) -> "Sig3System":
        return cls.from_modulus(Modulus.from_kappa(kappa))

    @property
    def omega(self) -> float:
        return self.small.half_period_real

    @property
    def omega_prime(self) -> complex:
        return self.small.half_period_imag

    @property
    def Omega(self) -> float:
        return self.big.half_period_real

    @property
    def Omega_prime(self) -> complex:
        return self.big.half_period_imag


@dataclass(frozen=True)
class CriticalTriple:
    """Values of W at the corners ``Omega``, ``Omega + Omega'``, ``Omega'``."""

    at_Omega: float
    at_corner: float
    at_Omega_prime: float

    def as_tuple(self):
        return (self.at_Omega, self.at_corner, self.at_Omega_prime)


# -- the two elliptic functions -----------------------------------------------

def dn3(sys: Sig3System, z: complex) -> complex:
    """``dn3(z) = 1 - (4 kappa^2 / 9) / (p(z) + 1/3)``.

    Returns the limit 1 at lattice points of ``p``; raises
    :class:`~sig3.errors.Dn3Pole` where ``p = -1/3``.
    """
    try:
        p = wp(sys.small, z)
    except NearPole:
        return 1.0 + 0.0j
    den = p + 1.0 / 3.0
    if abs(den) < _POLE_DENOMINATOR:
        raise Dn3Pole(f"dn3 has a pole at {z!r}")
    return 1.0 - 4.0 * sys.m.kappa ** 2 / 9.0 / den


def dn3_prime(sys: Sig3System, z: complex) -> complex:
    p, dp = wp_and_prime(sys.small, z)
    den = p + 1.0 / 3.0
    if abs(den) < _POLE_DENOMINATOR:
        raise Dn3Pole(f"dn3 has a pole at {z!r}")
    return 4.0 * sys.m.kappa ** 2 / 9.0 * dp / (den * den)


def big_W(sys: Sig3System, z: complex) -> complex:
    """``W(z) = 4 lam^2 / (6 - P(z)) - 1``, equal to -1 at lattice points of ``P``."""
    try:
        P = wp(sys.big, z)
    except NearPole:
        return -1.0 + 0.0j
    den = 6.0 - P
    if abs(den) < _POLE_DENOMINATOR:
        raise WPole(f"W has a pole at {z!r}")
    return 4.0 * sys.m.lam ** 2 / den - 1.0


def big_W_prime(sys: Sig3System, z: complex) -> complex:
    P, dP = wp_and_prime(sys.big, z)
    den = 6.0 - P
    if abs(den) < _POLE_DENOMINATOR:
        raise WPole(f"W has a pole at {z!r}")
    return 4.0 * sys.m.lam ** 2 * dP / (den * den)


def y6_squared(sys: Sig3System, z: complex) -> complex:
    """``(W + 1) / 2``, the square of the (non-elliptic) solution ``y6``."""
    return 0.5 * (big_W(sys, z) + 1.0)


# -- periods --------------------------------------------------------------------

def periods_small(m: Modulus, cfg: QuadratureConfig = DEFAULT_CONFIG) -> tuple[float, complex]:
    """``(omega, omega')`` of ``p`` from the hypergeometric formulas."""
    return (0.5 * math.pi * f_one(m.kappa ** 2, cfg, complement=m.lam ** 2),
            1j * 0.5 * SQRT3 * math.pi * f_one(m.lam ** 2, cfg, complement=m.kappa ** 2))


def periods_big(m: Modulus, cfg: QuadratureConfig = DEFAULT_CONFIG) -> tuple[float, complex]:
    """``(Omega, Omega')`` of ``P`` from the hypergeometric formulas."""
    return (math.pi / (2.0 * SQRT6) * f_one(m.kappa ** 2, cfg, complement=m.lam ** 2),
            1j * math.pi / (6.0 * SQRT2) * f_one(m.lam ** 2, cfg, complement=m.kappa ** 2))


def lattice_ratios(m: Modulus, cfg: QuadratureConfig = DEFAULT_CONFIG) -> tuple[complex, complex]:
    """Lattice shapes ``omega'/omega`` and ``Omega'/Omega``.

    The first is exactly three times the second.
    """
    r = f_one(m.lam ** 2, cfg, complement=m.kappa ** 2) / f_one(m.kappa ** 2, cfg, complement=m.lam ** 2)
    big = 1j * r / SQRT3
    return 3.0 * big, big


def omega_via_mehler(m: Modulus, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """``sqrt(2) * integral_0^alpha cos(psi/3) / sqrt(cos 2psi - cos 2alpha) dpsi``."""
    alpha = m.alpha

    # cos 2psi - cos 2alpha = 2 sin(alpha + psi) sin(alpha - psi)
    def integrand(psi, _, to_alpha):
        return np.cos(psi / 3.0) / np.sqrt(2.0 * np.sin(alpha + psi) * np.sin(to_alpha))

    return SQRT2 * integrate_sqrt_singular(integrand, 0.0, alpha, cfg, with_distances=True)


def chebyshev_T6(x):
    """Degree-six Chebyshev polynomial, ``T6(cos t) = cos 6t``."""
    x2 = np.asarray(x, dtype=float) ** 2
    out = ((32.0 * x2 - 48.0) * x2 + 18.0) * x2 - 1.0
    return float(out) if out.ndim == 0 else out


def omega_via_chebyshev(m: Modulus, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """``sqrt(6) * integral dx / sqrt(T6(x) - cos 2alpha)`` between
    ``cos((pi + alpha)/3)`` and ``cos((pi - alpha)/3)``."""
    alpha = m.alpha
    lo = math.cos((math.pi + alpha) / 3.0)
    hi = math.cos((math.pi - alpha) / 3.0)
    # T6(x) - cos 2alpha = 32 prod (x - cos((alpha + k pi)/3)); k = 1, 5 are lo, hi
    others = np.array([math.cos((alpha + k * math.pi) / 3.0) for k in (0, 2, 3, 4)])

    def integrand(x, to_lo, to_hi):
        rest = np.prod(x[..., None] - others, axis=-1)
        return 1.0 / np.sqrt(-32.0 * to_lo * to_hi * rest)

    return SQRT6 * integrate_sqrt_singular(integrand, lo, hi, cfg, with_distances=True)


def omega_via_delta_integral(m: Modulus, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """``(3/2) * integral dd / sqrt((1 - d)(d^3 + 3d^2 - 4 lam^2))`` over
    ``[2 cos(2alpha/3) - 1, 1]``, the range of ``dn3`` on ``[0, omega]``."""
    alpha = m.alpha
    # d^3 + 3d^2 - 4 lam^2 has roots 2 cos((2alpha + 2k pi)/3) - 1
    roots = [2.0 * math.cos((2.0 * alpha + 2.0 * k * math.pi) / 3.0) - 1.0 for k in range(3)]
    lo = roots[0]

    def integrand(d, to_lo, to_one):
        return 1.0 / np.sqrt(to_one * to_lo * (d - roots[1]) * (d - roots[2]))

    return 1.5 * integrate_sqrt_singular(integrand, lo, 1.0, cfg, with_distances=True)


# -- transfer, poles, critical values -------------------------------------------

def transfer_residual(m: Modulus, z: complex, gamma: complex = TRANSFER_GAMMA) -> float:
    """``|P_kappa(z) + 18 p_lam(gamma z)|`` with ``gamma = +-3 sqrt(2) i``."""
    big = make_context(big_invariants(m))
    small_comp = make_context(small_invariants(m.complementary()))
    return abs(wp(big, z) - gamma ** 2 * wp(small_comp, gamma * z))


def pole_locations(sys: Sig3System, tol: float = 1e-8):
    """Poles ``+-(2/3) omega'`` of dn3 and ``+-(2/3) Omega`` of W.

    Before returning, checks that ``p = -1/3`` and ``P = 6`` there.
    """
    dn3_poles = (2.0 / 3.0 * sys.omega_prime, -2.0 / 3.0 * sys.omega_prime)
    W_poles = (2.0 / 3.0 * sys.Omega + 0j, -2.0 / 3.0 * sys.Omega + 0j)
    for z in dn3_poles:
        miss = abs(wp(sys.small, z) + 1.0 / 3.0)
        if miss >= tol:
            raise PoleVerificationFailed(f"|p({z!r}) + 1/3| = {miss:.3e}")
    for z in W_poles:
        miss = abs(wp(sys.big, z) - 6.0)
        if miss >= tol:
            raise PoleVerificationFailed(f"|P({z!r}) - 6| = {miss:.3e}")
    return dn3_poles, W_poles


def critical_values_closed_form(m: Modulus) -> CriticalTriple:
    """The zeros ``cos(2alpha/3)``, ``cos(2(pi - alpha)/3)``, ``cos(2(pi + alpha)/3)``
    of ``4W^3 - 3W - cos 2alpha``."""
    a = m.alpha
    return CriticalTriple(math.cos(2.0 * a / 3.0),
                          math.cos(2.0 * (math.pi - a) / 3.0),
                          math.cos(2.0 * (math.pi + a) / 3.0))


def critical_values_W(sys: Sig3System, tol: float = 1e-8) -> tuple[CriticalTriple, CriticalTriple]:
    """W at the three non-zero corners of the half-period rectangle.

    Returns ``(evaluated, closed_form)``; raises
    :class:`~sig3.errors.CriticalValueMismatch` if they differ by ``tol``.
    """
    corners = (sys.Omega, sys.Omega + sys.Omega_prime, sys.Omega_prime)
    evaluated = CriticalTriple(*(big_W(sys, z).real for z in corners))
    closed = critical_values_closed_form(sys.m)
    for got, want in zip(evaluated.as_tuple(), closed.as_tuple()):
        if abs(got - want) >= tol:
            raise CriticalValueMismatch(f"W corner value {got!r} differs from {want!r}")
    return evaluated, closed
