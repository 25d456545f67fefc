"""
The hypergeometric functions of signature three.

``f_half`` is 2F1(1/3, 2/3; 1/2; x), evaluated through the closed form
``F(sin^2 z) = cos(z/3) / cos z``. ``f_one`` is the complete function
2F1(1/3, 2/3; 1; x), obtained by averaging ``f_half`` over a quarter turn,
and ``incomplete_integral`` is the running integral whose inverse defines
the amplitude ``phi``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .numerics import DEFAULT_CONFIG, QuadratureConfig, integrate_smooth, integrate_sqrt_singular

__all__ = ["Modulus", "f_half", "f_one", "incomplete_integral"]


@dataclass(frozen=True)
class Modulus:
    """A modulus ``kappa`` in (0, 1) with its complement and modular angle.

    Build with :meth:`from_kappa`; ``lam = sqrt(1 - kappa^2)`` and
    ``alpha = arcsin(kappa)``.
    """

    kappa: float
    lam: float
    alpha: float

    @classmethod
    def from_kappa(cls, kappa: float) -> "Modulus":
        kappa = float(kappa)
        if not 0.0 < kappa < 1.0:
            raise DomainError(f"modulus must lie in (0, 1), got {kappa!r}")
        lam = math.sqrt((1.0 - kappa) * (1.0 + kappa))
        return cls(kappa, lam, math.atan2(kappa, lam))

    def complementary(self) -> "Modulus":
        """The modulus with ``kappa`` and ``lam`` exchanged."""
        return Modulus(self.lam, self.kappa, math.atan2(self.lam, self.kappa))

    def __post_init__(self):
        if not (0.0 < self.kappa < 1.0 and 0.0 < self.lam < 1.0):
            raise DomainError(f"invalid modulus pair ({self.kappa!r}, {self.lam!r})")


def _check_unit(x):
    x = np.asarray(x, dtype=float)
    if np.any(x < 0) or np.any(x >= 1):
        raise DomainError("argument must lie in [0, 1)")
    return x


def f_half(x):
    """2F1(1/3, 2/3; 1/2; x) for ``0 <= x < 1``.

    Accepts scalars or arrays.

    >>> round(f_half(0.5), 12)
    1.366025403784
    """
    x = _check_unit(x)
    out = np.cos(np.arcsin(np.sqrt(x)) / 3.0) / np.sqrt(1.0 - x)
    return float(out) if out.ndim == 0 else out


def f_one(x: float, cfg: QuadratureConfig = DEFAULT_CONFIG, *,
          complement: float | None = None) -> float:
    """2F1(1/3, 2/3; 1; x) for ``0 <= x < 1``.

    Computed as ``(2/pi) * integral_0^(pi/2) f_half(x sin^2 t) dt``. The
    integrand peaks sharply at ``t = pi/2`` as ``x -> 1``; tanh-sinh
    clusters nodes there. Pass ``complement = 1 - x`` when it is known more
    accurately than the subtraction (``kappa^2`` for ``x = lam^2``).
    """
    x = float(_check_unit(x))
    if x == 0.0:
        return 1.0
    c = 1.0 - x if complement is None else float(complement)
    if not 0.0 < c <= 1.0:
        raise DomainError(f"complement must lie in (0, 1], got {c!r}")

    def integrand(t, _, to_end):
        # 1 - x sin^2 t written without cancellation near t = pi/2
        q = c + x * np.sin(to_end) ** 2
        root = np.sqrt(q)
        return np.cos(np.arccos(np.minimum(root, 1.0)) / 3.0) / root

    value = integrate_sqrt_singular(integrand, 0.0, 0.5 * math.pi, cfg, with_distances=True)
    return 2.0 / math.pi * value


def incomplete_integral(m: Modulus, T: float, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """``integral_0^T f_half(kappa^2 sin^2 t) dt`` (odd in ``T``)."""
    T = float(T)
    if T < 0:
        return -incomplete_integral(m, -T, cfg)
    k2 = m.kappa * m.kappa
    return integrate_smooth(lambda t: f_half(k2 * np.sin(t) ** 2), 0.0, T, cfg)
