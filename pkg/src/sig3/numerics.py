"""
Low-level numerical routines.

Everything here is generic: adaptive Gauss-Legendre quadrature for smooth
integrands, tanh-sinh quadrature for integrands with inverse-square-root
endpoint singularities, the trigonometric solution of the Weierstrass cubic
``4t^3 - g2 t - g3``, a scalar ODE integrator with dense output and a
fourth-order complex difference quotient.

Integrands are called with numpy arrays of abscissas. A function that only
accepts scalars still works (it is vectorized on the fly), just slower.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.integrate import solve_ivp

from .errors import NearPole, NonConvergence, NonFinite, NonRectangular, StepUnderflow

__all__ = [
    "QuadratureConfig",
    "CubicRoots",
    "DenseSolution",
    "integrate_smooth",
    "integrate_sqrt_singular",
    "solve_weierstrass_cubic",
    "solve_ode_scalar",
    "complex_derivative",
]


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances shared by both quadrature routines.

    ``max_refinement`` caps the bisection depth of the Gauss-Legendre
    panels and the number of step halvings of the tanh-sinh rule.
    """

    abs_tol: float = 1e-11
    rel_tol: float = 1e-11
    max_refinement: int = 16

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ValueError("abs_tol must be positive")
        if not self.rel_tol >= 0:
            raise ValueError("rel_tol must be non-negative")
        if int(self.max_refinement) != self.max_refinement or self.max_refinement < 1:
            raise ValueError("max_refinement must be a positive integer")

    def target(self, estimate: float) -> float:
        return max(self.abs_tol, self.rel_tol * abs(estimate))


DEFAULT_CONFIG = QuadratureConfig()


def _evaluate(f, x):
    try:
        vals = f(x)
    except TypeError:
        vals = np.vectorize(f, otypes=[float])(x)
    vals = np.asarray(vals, dtype=float)
    if vals.shape != np.shape(x):
        vals = np.broadcast_to(vals, np.shape(x))
    return vals


# -- adaptive Gauss-Legendre ------------------------------------------------

_GL_LOW = np.polynomial.legendre.leggauss(15)
_GL_HIGH = np.polynomial.legendre.leggauss(21)


def _gl_panel(f, a, b):
    c, r = 0.5 * (a + b), 0.5 * (b - a)
    lo = _evaluate(f, c + r * _GL_LOW[0])
    hi = _evaluate(f, c + r * _GL_HIGH[0])
    if not (np.all(np.isfinite(lo)) and np.all(np.isfinite(hi))):
        raise NonFinite(f"integrand is not finite on [{a!r}, {b!r}]")
    return r * np.dot(_GL_LOW[1], lo), r * np.dot(_GL_HIGH[1], hi)


def integrate_smooth(f: Callable, a: float, b: float,
                     cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Integrate a smooth function over ``[a, b]``.

    Each panel is integrated with 15- and 21-point Gauss-Legendre rules; a
    panel whose two estimates disagree by more than its share of the
    tolerance is bisected. The 21-point values are summed.
    """
    a, b = float(a), float(b)
    if a > b:
        raise ValueError("integrate_smooth requires a <= b")
    if a == b:
        return 0.0
    width = b - a
    low, high = _gl_panel(f, a, b)
    tol = cfg.target(high)
    if abs(high - low) <= tol:
        return float(high)

    total = 0.0
    stack = [(a, b, 0)]
    while stack:
        lo_end, hi_end, depth = stack.pop()
        low, high = _gl_panel(f, lo_end, hi_end)
        share = (hi_end - lo_end) / width
        if abs(high - low) <= tol * share:
            total += high
            continue
        if depth >= cfg.max_refinement:
            raise NonConvergence(
                f"Gauss-Legendre panel [{lo_end!r}, {hi_end!r}] unresolved at depth {depth}")
        mid = 0.5 * (lo_end + hi_end)
        stack.append((mid, hi_end, depth + 1))
        stack.append((lo_end, mid, depth + 1))
    return float(total)


# -- tanh-sinh ----------------------------------------------------------------

# Past t = 4 the nodes sit closer than 1e-37 to the endpoints, so an inverse
# square-root singularity contributes below 1e-18 from beyond.
_TS_TMAX = 4.0


def _ts_nodes(t, r):
    """Distances to the nearer endpoint and weights for t >= 0."""
    u = 0.5 * math.pi * np.sinh(t)
    ch = np.cosh(u)
    dist = r * np.exp(-u) / ch
    weight = r * 0.5 * math.pi * np.cosh(t) / (ch * ch)
    return dist, weight


def _ts_sum(f, a, b, t, with_distances):
    """Sum of weight*f over the node pairs +t, -t (t > 0)."""
    r = 0.5 * (b - a)
    dist, weight = _ts_nodes(t, r)
    total = 0.0
    for side in (1, -1):
        if side > 0:
            x = b - dist
            da, db = (b - a) - dist, dist
        else:
            x = a + dist
            da, db = dist, (b - a) - dist
        if with_distances:
            vals = _evaluate_distances(f, x, da, db)
        else:
            keep = (x > a) & (x < b)
            vals = np.zeros_like(x)
            if np.any(keep):
                # rounding moved the abscissa to distance ``actual`` from
                # the near end; rescale as for an inverse square root
                actual = (b - x[keep]) if side > 0 else (x[keep] - a)
                vals[keep] = _evaluate(f, x[keep]) * np.sqrt(actual / dist[keep])
            if not np.all(np.isfinite(vals[keep])):
                raise NonFinite(f"integrand is not finite inside ({a!r}, {b!r})")
            lost = ~keep
            if np.any(lost) and np.any(keep):
                # nodes closer than one ulp cannot be sampled; continue the
                # innermost sample with the same (distance)^(-1/2) law
                inner = np.flatnonzero(keep)[-1]
                strength = vals[inner] * math.sqrt(dist[inner])
                vals[lost] = strength / np.sqrt(dist[lost])
            total += float(np.dot(weight, vals))
            continue
        if not np.all(np.isfinite(vals)):
            raise NonFinite(f"integrand is not finite inside ({a!r}, {b!r})")
        total += float(np.dot(weight, vals))
    return total


def _evaluate_distances(f, x, da, db):
    vals = np.asarray(f(x, da, db), dtype=float)
    if vals.shape != np.shape(x):
        vals = np.broadcast_to(vals, np.shape(x))
    return vals


def integrate_sqrt_singular(f: Callable, a: float, b: float,
                            cfg: QuadratureConfig = DEFAULT_CONFIG, *,
                            with_distances: bool = False) -> float:
    """Tanh-sinh quadrature over ``[a, b]``.

    Suitable for integrands behaving like ``(x-a)^(-1/2)`` or ``(b-x)^(-1/2)``
    at the ends. The step is halved until two successive estimates agree
    to within ``cfg``; the level cap is ``cfg.max_refinement``.

    With ``with_distances=True`` the integrand is called as
    ``f(x, x - a, b - x)`` where both distances are computed without
    cancellation. Integrands that factor their singular part through those
    distances keep full relative accuracy arbitrarily close to the ends,
    which a plain ``f(x)`` cannot do once ``x`` rounds onto an endpoint.
    """
    a, b = float(a), float(b)
    if a > b:
        return -integrate_sqrt_singular(f, b, a, cfg, with_distances=with_distances)
    if a == b:
        return 0.0
    r = 0.5 * (b - a)
    c = 0.5 * (a + b)
    mid = np.array([c])
    if with_distances:
        centre = float(_evaluate_distances(f, mid, np.array([r]), np.array([r]))[0])
    else:
        centre = float(_evaluate(f, mid)[0])
    if not math.isfinite(centre):
        raise NonFinite(f"integrand is not finite at the midpoint {c!r}")

    h = 1.0
    t = np.arange(1, int(_TS_TMAX / h) + 1) * h
    acc = centre * _ts_nodes(0.0, r)[1] + _ts_sum(f, a, b, t, with_distances)
    previous = h * acc
    for level in range(1, cfg.max_refinement + 1):
        h *= 0.5
        t = np.arange(1, int(_TS_TMAX / h) + 1, 2) * h
        acc += _ts_sum(f, a, b, t, with_distances)
        estimate = h * acc
        if level >= 3 and abs(estimate - previous) <= cfg.target(estimate):
            return float(estimate)
        previous = estimate
    raise NonConvergence(
        f"tanh-sinh did not converge in {cfg.max_refinement} levels "
        f"(last change {abs(estimate - previous)!r})")


# -- the Weierstrass cubic ----------------------------------------------------

@dataclass(frozen=True)
class CubicRoots:
    """Roots of ``4t^3 - g2 t - g3`` with ``e1 >= e2 >= e3``."""

    e1: float
    e2: float
    e3: float

    def __iter__(self):
        return iter((self.e1, self.e2, self.e3))


def solve_weierstrass_cubic(g2: float, g3: float) -> CubicRoots:
    """Real roots of ``4t^3 - g2 t - g3`` for positive discriminant.

    Uses Viete's trigonometric form followed by one Newton polish per
    root.
    """
    disc = g2 ** 3 - 27.0 * g3 ** 2
    if not disc > 0:
        raise NonRectangular(f"discriminant g2^3 - 27 g3^2 = {disc!r} is not positive")
    scale = math.sqrt(g2 / 3.0)
    arg = 3.0 * math.sqrt(3.0) * g3 / g2 ** 1.5
    theta = math.acos(min(1.0, max(-1.0, arg))) / 3.0
    roots = [scale * math.cos(theta - 2.0 * math.pi * k / 3.0) for k in range(3)]

    polished = []
    for e in roots:
        dp = 12.0 * e * e - g2
        if dp != 0.0:
            e = e - (4.0 * e ** 3 - g2 * e - g3) / dp
        polished.append(e)
    e1, e2, e3 = sorted(polished, reverse=True)

    # arccos is ill-conditioned near a double root; recover the close pair
    # from the isolated root e via (sum, product) = (-e, g3 / (4e))
    if e1 - e2 > e2 - e3 and e1 != 0.0:
        half_gap = 0.5 * math.sqrt(max(0.0, (g2 * e1 - 3.0 * g3) / (4.0 * e1)))
        e2, e3 = -0.5 * e1 + half_gap, -0.5 * e1 - half_gap
    elif e2 - e3 > e1 - e2 and e3 != 0.0:
        half_gap = 0.5 * math.sqrt(max(0.0, (g2 * e3 - 3.0 * g3) / (4.0 * e3)))
        e1, e2 = -0.5 * e3 + half_gap, -0.5 * e3 - half_gap
    return CubicRoots(e1, e2, e3)


# -- scalar ODE ---------------------------------------------------------------

class DenseSolution:
    """Continuous solution of a scalar ODE on ``[u0, u1]``.

    Calling the object evaluates the interpolant; ``nodes`` and ``values``
    hold the accepted step points.
    """

    def __init__(self, sol, nodes, values):
        self._sol = sol
        self.nodes = np.asarray(nodes, dtype=float)
        self.values = np.asarray(values, dtype=float)
        self.u0 = float(self.nodes[0])
        self.u1 = float(self.nodes[-1])

    def __call__(self, u):
        out = self._sol(u)
        return out[0] if np.ndim(u) else float(out[0])


def solve_ode_scalar(rhs: Callable[[float, float], float], u0: float, y0: float,
                     u1: float, tol: float = 1e-12) -> DenseSolution:
    """Integrate ``y' = rhs(u, y)`` from ``u0`` to ``u1``.

    Dormand-Prince 8(5,3) with its seventh-order dense output; ``tol`` is
    used as both the relative and absolute local error target.
    """
    if u1 == u0:
        raise ValueError("empty integration interval")
    result = solve_ivp(lambda u, y: [rhs(u, y[0])], (u0, u1), [y0],
                       method="DOP853", rtol=tol, atol=tol, dense_output=True)
    if result.status != 0:
        raise StepUnderflow(result.message)
    return DenseSolution(result.sol, result.t, result.y[0])


# -- complex differentiation --------------------------------------------------

def complex_derivative(f: Callable[[complex], complex], z: complex, h: float = 1e-3) -> complex:
    """Fourth-order central difference of ``f`` at ``z`` along the real axis."""
    try:
        vals = [f(z + k * h) for k in (-2, -1, 1, 2)]
    except NearPole as exc:
        raise NonFinite(f"difference stencil around {z!r} touches a pole") from exc
    if not all(np.isfinite(complex(v)) for v in vals):
        raise NonFinite(f"difference stencil around {z!r} is not finite")
    fm2, fm1, fp1, fp2 = vals
    return (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h)
