"""
Weierstrass elliptic function for real invariants with a rectangular lattice.

A :class:`WeierstrassContext` is built once from ``(g2, g3)``. It holds the
roots ``e1 > e2 > e3`` of ``4t^3 - g2 t - g3``, the real and imaginary
fundamental half-periods, and enough Laurent coefficients to evaluate
``p(z) = z^-2 + sum_k c_k z^(2k-2)`` on a disc of radius ``0.4 L``, where
``L`` is the shortest lattice vector. Points farther from the origin are
first reduced modulo the lattice, then halved into that disc and brought
back with the duplication formula.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import NearPole, NonRealInvariants
from .numerics import DEFAULT_CONFIG, CubicRoots, QuadratureConfig, integrate_smooth, solve_weierstrass_cubic

__all__ = [
    "Invariants",
    "WeierstrassContext",
    "make_context",
    "wp",
    "wp_prime",
    "wp_and_prime",
    "discriminant",
    "homogeneity_scale",
]

# Laurent tail target at the working radius
_SERIES_EPS = 1e-17
_MAX_TERMS = 400


@dataclass(frozen=True)
class Invariants:
    g2: float
    g3: float


@dataclass(frozen=True, eq=False)
class WeierstrassContext:
    """Invariants plus everything needed to evaluate p and p'.

    ``half_period_real`` is positive; ``half_period_imag`` is purely
    imaginary with positive imaginary part. ``laurent_coeffs[j]`` is the
    coefficient ``c_(j+2)`` of ``z^(2j+2)``.
    """

    inv: Invariants
    roots: CubicRoots
    half_period_real: float
    half_period_imag: complex
    laurent_coeffs: tuple = field(repr=False)
    series_radius: float = 0.0

    @property
    def min_lattice_distance(self) -> float:
        return 2.0 * min(self.half_period_real, self.half_period_imag.imag)

    @property
    def pole_radius(self) -> float:
        return 1e-6 * self.min_lattice_distance

    def reduce(self, z: complex) -> complex:
        """Representative of ``z`` in the period rectangle centred at 0."""
        z = complex(z)
        w1, w3 = self.half_period_real, self.half_period_imag.imag
        x = z.real - 2.0 * w1 * round(z.real / (2.0 * w1))
        y = z.imag - 2.0 * w3 * round(z.imag / (2.0 * w3))
        return complex(x, y)


def _laurent_coefficients(g2, g3, radius):
    c = [g2 / 20.0, g3 / 28.0]
    r2 = radius * radius
    k = 4
    while True:
        s = sum(c[m - 2] * c[k - m - 2] for m in range(2, k - 1))
        ck = 3.0 * s / ((2 * k + 1) * (k - 3))
        c.append(ck)
        small = abs(ck) * r2 ** (k - 1) < _SERIES_EPS
        if (small and k > 6) or k >= _MAX_TERMS:
            break
        k += 1
    return tuple(c)


def _half_period_integral(a, b, cfg):
    """``integral_0^inf ds / sqrt((s^2 + a)(s^2 + b))`` for a, b > 0.

    Split at ``s = 1``; on ``[1, inf)`` the substitution ``s = 1/v`` turns
    the tail into ``integral_0^1 dv / sqrt((1 + a v^2)(1 + b v^2))``.
    """
    head = integrate_smooth(lambda s: 1.0 / np.sqrt((s * s + a) * (s * s + b)), 0.0, 1.0, cfg)
    tail = integrate_smooth(lambda v: 1.0 / np.sqrt((1.0 + a * v * v) * (1.0 + b * v * v)), 0.0, 1.0, cfg)
    return head + tail


def discriminant(inv: Invariants) -> float:
    """``g2^3 - 27 g3^2``."""
    return inv.g2 ** 3 - 27.0 * inv.g3 ** 2


def make_context(inv: Invariants, cfg: QuadratureConfig = DEFAULT_CONFIG) -> WeierstrassContext:
    """Build the evaluation context for real invariants.

    Raises :class:`~sig3.errors.NonRectangular` unless the discriminant is
    positive.
    """
    if cfg is DEFAULT_CONFIG:
        return _cached_context(inv)
    return _build_context(inv, cfg)


@lru_cache(maxsize=256)
def _cached_context(inv):
    return _build_context(inv, DEFAULT_CONFIG)


def _build_context(inv, cfg):
    roots = solve_weierstrass_cubic(inv.g2, inv.g3)
    e1, e2, e3 = roots
    # t = e1 + s^2 above e1, t = e3 - s^2 below e3
    w_real = _half_period_integral(e1 - e2, e1 - e3, cfg)
    w_imag = _half_period_integral(e1 - e3, e2 - e3, cfg)
    radius = 0.4 * 2.0 * min(w_real, w_imag)
    coeffs = _laurent_coefficients(inv.g2, inv.g3, radius)
    return WeierstrassContext(inv, roots, w_real, complex(0.0, w_imag), coeffs, radius)


def _series(ctx, w):
    """p(w) and p'(w) from the Laurent expansion (|w| <= series_radius)."""
    w2 = w * w
    val = 0.0j
    der = 0.0j
    coeffs = ctx.laurent_coeffs
    # Horner in w^2: p = w^-2 + sum c_k w^(2k-2), p' = -2 w^-3 + sum (2k-2) c_k w^(2k-3)
    for j in range(len(coeffs) - 1, -1, -1):
        k = j + 2
        val = val * w2 + coeffs[j]
        der = der * w2 + (2 * k - 2) * coeffs[j]
    return 1.0 / w2 + val * w2, -2.0 / (w2 * w) + der * w


def _near_origin(ctx, z):
    """p and p' for ``z`` in the reduced rectangle, via halving and duplication."""
    steps = 0
    size = abs(z)
    while size > ctx.series_radius:
        size *= 0.5
        steps += 1
    p, dp = _series(ctx, z / 2 ** steps)
    g2 = ctx.inv.g2
    for _ in range(steps):
        ddp = 6.0 * p * p - 0.5 * g2
        q = ddp / (2.0 * dp)
        dq = (12.0 * p * dp * dp - ddp * ddp) / (2.0 * dp * dp)
        p, dp = -2.0 * p + q * q, -dp + q * dq
    return p, dp


def _evaluate(ctx, z):
    z = ctx.reduce(z)
    w1, w3 = ctx.half_period_real, ctx.half_period_imag
    e1, e2, e3 = ctx.roots
    # shift to the nearest of 0, w1, w1 + w3, w3 (up to sign) and use
    # p(u + w_i) = e_i + (e_i - e_j)(e_i - e_k) / (p(u) - e_i)
    cx = w1 if abs(z.real) > 0.5 * w1 else 0.0
    cy = w3.imag if abs(z.imag) > 0.5 * w3.imag else 0.0
    u = complex(z.real - math.copysign(cx, z.real), z.imag - math.copysign(cy, z.imag))
    if cx == 0.0 and cy == 0.0:
        if abs(z) < ctx.pole_radius:
            raise NearPole(f"{z!r} is within {ctx.pole_radius:.3g} of a lattice point")
        return _near_origin(ctx, z)
    if cx and cy:
        ei, scale = e2, (e2 - e1) * (e2 - e3)
    elif cx:
        ei, scale = e1, (e1 - e2) * (e1 - e3)
    else:
        ei, scale = e3, (e3 - e1) * (e3 - e2)
    if abs(u) < ctx.pole_radius:
        return complex(ei), 0j
    p, dp = _near_origin(ctx, u)
    den = p - ei
    return ei + scale / den, -scale * dp / (den * den)


def wp(ctx: WeierstrassContext, z: complex) -> complex:
    """Weierstrass p at ``z``.

    Raises :class:`~sig3.errors.NearPole` when ``z`` is within
    ``1e-6 * L`` of a lattice point.
    """
    return _evaluate(ctx, z)[0]


def wp_prime(ctx: WeierstrassContext, z: complex) -> complex:
    """Derivative of Weierstrass p at ``z``."""
    return _evaluate(ctx, z)[1]


def wp_and_prime(ctx: WeierstrassContext, z: complex) -> tuple[complex, complex]:
    return _evaluate(ctx, z)


def homogeneity_scale(inv: Invariants, gamma: complex) -> Invariants:
    """Invariants ``(gamma^4 g2, gamma^6 g3)``.

    With these, ``p(z; gamma^4 g2, gamma^6 g3) = gamma^2 p(gamma z; g2, g3)``.
    """
    gamma = complex(gamma)
    if gamma == 0:
        raise ValueError("gamma must be non-zero")
    g4, g6 = gamma ** 4, gamma ** 6
    G2, G3 = g4 * inv.g2, g6 * inv.g3
    for val in (G2, G3):
        if abs(val.imag) > 1e-12 * max(1.0, abs(val)):
            raise NonRealInvariants(f"scaled invariant {val!r} is not real")
    return Invariants(G2.real, G3.real)
