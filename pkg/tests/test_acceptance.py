"""Acceptance gate: each criterion at its stated tolerance and time budget.

Every test records one PASS/FAIL line, shown in the pytest summary under
"acceptance criteria" (and on stdout with ``-s``).
"""
import math
import subprocess
import sys
import time

import numpy as np
import pytest

from sig3 import system as s3
from sig3.hyper import Modulus, f_half, f_one
from sig3.oracle import build_phi, delta_oracle, psi_check
from sig3.verify import sample_points
from sig3.wp import discriminant, make_context, wp, wp_and_prime

GRID = s3.KAPPA_GRID
SEED = 20041116


def judge(log, number, title, parts, elapsed=None, budget=None):
    """Record one line for a criterion; ``parts`` are ``(label, value, op, bound)``."""
    ok = all(v < b if op == "<" else v > b for _, v, op, b in parts)
    ok = ok and (budget is None or elapsed < budget)
    detail = "; ".join(f"{label} {v:.3e} {op} {b:.0e}" for label, v, op, b in parts)
    line = f"{'PASS' if ok else 'FAIL'} {number:>2}. {title}: {detail}"
    if budget is not None:
        line += f"; {elapsed:.2f} s < {budget:.0f} s"
    log.append(line)
    print(line)
    assert ok, line


def test_01_standard_evaluation(acceptance_log):
    start = time.perf_counter()
    z = np.linspace(0.0, 1.5, 200)
    worst = float(np.max(np.abs(f_half(np.sin(z) ** 2) * np.cos(z) - np.cos(z / 3))))
    judge(acceptance_log, 1, "standard evaluation", [("max error", worst, "<", 1e-12)],
          time.perf_counter() - start, 1)


def test_02_four_route_omega(acceptance_log):
    start = time.perf_counter()
    worst = 0.0
    for kappa in GRID:
        m = Modulus.from_kappa(kappa)
        routes = [0.5 * math.pi * f_one(kappa ** 2), s3.omega_via_mehler(m),
                  s3.omega_via_chebyshev(m), s3.omega_via_delta_integral(m)]
        worst = max(worst, max(abs(a - b) for a in routes for b in routes))
    judge(acceptance_log, 2, "four-route omega", [("max spread", worst, "<", 1e-8)],
          time.perf_counter() - start, 10)


def test_03_periods_from_invariants(acceptance_log):
    worst = 0.0
    for kappa in GRID:
        m = Modulus.from_kappa(kappa)
        small = make_context(s3.small_invariants(m))
        big = make_context(s3.big_invariants(m))
        omega, omega_p = s3.periods_small(m)
        Omega, Omega_p = s3.periods_big(m)
        worst = max(worst, abs(small.half_period_real - omega), abs(small.half_period_imag - omega_p),
                    abs(big.half_period_real - Omega), abs(big.half_period_imag - Omega_p))
    judge(acceptance_log, 3, "half-periods from invariants", [("max difference", worst, "<", 1e-8)])


def test_04_discriminants(acceptance_log):
    absolute, relative = 0.0, 0.0
    for kappa in GRID:
        m = Modulus.from_kappa(kappa)
        small = discriminant(s3.small_invariants(m))
        absolute = max(absolute, abs(small - (16 / 27) ** 3 * kappa ** 6 * (1 - kappa ** 2)))
        want = (3 * math.sqrt(2)) ** 12 * discriminant(s3.small_invariants(m.complementary()))
        relative = max(relative, abs(discriminant(s3.big_invariants(m)) - want) / abs(want))
    judge(acceptance_log, 4, "discriminants", [("small", absolute, "<", 1e-14),
                                                ("big relative", relative, "<", 1e-10)])


def test_05_ode_residuals(acceptance_log):
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for kappa in (0.3, 1 / math.sqrt(2), 0.8):
        sys_ = s3.Sig3System.from_kappa(kappa)
        l2, c2a = sys_.m.lam ** 2, 1 - 2 * kappa ** 2
        dn3_poles = (2 / 3 * sys_.omega_prime, -2 / 3 * sys_.omega_prime)
        for z in sample_points(sys_.small, 50, rng, dn3_poles):
            d, dd = s3.dn3(sys_, z), s3.dn3_prime(sys_, z)
            res = abs(9 * dd * dd - 4 * (1 - d) * (d ** 3 + 3 * d * d - 4 * l2))
            worst = max(worst, res / (1 + abs(d) ** 4))
        W_poles = (2 / 3 * sys_.Omega, -2 / 3 * sys_.Omega)
        for z in sample_points(sys_.big, 50, rng, W_poles):
            w, dw = s3.big_W(sys_, z), s3.big_W_prime(sys_, z)
            res = abs(dw * dw - 8 * (w + 1) * (4 * w ** 3 - 3 * w - c2a))
            worst = max(worst, res / (1 + abs(w) ** 4))
    judge(acceptance_log, 5, "ODE residuals", [("max residual / (1+|value|^4)", worst, "<", 1e-7)])


def test_06_transfer(acceptance_log):
    rng = np.random.default_rng(SEED)
    transfer, exchange = 0.0, 0.0
    for kappa in (0.2, 0.5, 0.8):
        sys_ = s3.Sig3System.from_kappa(kappa)
        comp = s3.Sig3System.from_modulus(sys_.m.complementary())
        for z in sample_points(sys_.big, 30, rng):
            transfer = max(transfer, s3.transfer_residual(sys_.m, z))
        g = s3.TRANSFER_GAMMA
        exchange = max(exchange, abs(comp.omega + g * sys_.Omega_prime),
                       abs(comp.omega_prime - g * sys_.Omega))
    judge(acceptance_log, 6, "transfer identity", [("transfer", transfer, "<", 1e-7),
                                                    ("exchange", exchange, "<", 1e-8)])


def test_07_poles_and_critical_values(acceptance_log):
    worst, slope = 0.0, math.inf
    for kappa in GRID:
        sys_ = s3.Sig3System.from_kappa(kappa)
        worst = max(worst, abs(wp(sys_.small, 2 / 3 * sys_.omega_prime) + 1 / 3),
                    abs(wp(sys_.big, 2 / 3 * sys_.Omega) - 6))
        slope = min(slope, abs(wp_and_prime(sys_.big, 2 / 3 * sys_.Omega)[1]))
        got, closed = s3.critical_values_W(sys_, tol=math.inf)
        a = sys_.m.alpha
        want = (math.cos(2 * a / 3), math.cos(2 * (math.pi - a) / 3), math.cos(2 * (math.pi + a) / 3))
        worst = max(worst, *(abs(x - y) for x, y in zip(got.as_tuple(), want)))
    judge(acceptance_log, 7, "poles and critical values", [("values", worst, "<", 1e-8),
                                                            ("min |P'|", slope, ">", 1e-3)])


def test_08_oracle(acceptance_log):
    start = time.perf_counter()
    worst, psi = 0.0, 0.0
    for kappa in (0.35, 1 / math.sqrt(2), 0.85):
        sys_ = s3.Sig3System.from_kappa(kappa)
        span = 2 * sys_.omega
        sol = build_phi(sys_.m, span * (1 + 1e-12))
        for u in np.linspace(0, span, 201):
            worst = max(worst, abs(s3.dn3(sys_, u) - delta_oracle(sol, u)))
            psi = max(psi, psi_check(sol, u))
    elapsed = time.perf_counter() - start
    judge(acceptance_log, 8, "oracle equivalence", [("dn3", worst, "<", 1e-8), ("psi", psi, "<", 1e-10)],
          elapsed, 30)


def test_09_periodicity_and_parity(acceptance_log):
    rng = np.random.default_rng(SEED)
    periodic, parity = 0.0, 0.0
    for kappa in GRID:
        sys_ = s3.Sig3System.from_kappa(kappa)
        cases = ((s3.dn3, sys_.small, (2 / 3 * sys_.omega_prime, -2 / 3 * sys_.omega_prime)),
                 (s3.big_W, sys_.big, (2 / 3 * sys_.Omega, -2 / 3 * sys_.Omega)))
        for f, ctx, poles in cases:
            for z in sample_points(ctx, 20, rng, poles):
                v = f(sys_, z)
                for t in (2 * ctx.half_period_real, 2 * ctx.half_period_imag):
                    periodic = max(periodic, abs(f(sys_, z + t) - v))
            for z in sample_points(ctx, 20, rng):
                p, dp = wp_and_prime(ctx, z)
                q, dq = wp_and_prime(ctx, -z)
                parity = max(parity, abs(p - q), abs(dp + dq))
    judge(acceptance_log, 9, "periodicity and parity", [("periods", periodic, "<", 1e-8),
                                                         ("parity", parity, "<", 1e-9)])


def _cli(*args):
    return subprocess.run([sys.executable, "-m", "sig3", *args], capture_output=True, text=True, timeout=120)


def test_10_cli_contract(acceptance_log):
    verify = _cli("verify", "--kappa", "0.7071067811865476")
    periods = _cli("periods", "--grid", "0.1:0.9:0.1")
    malformed = _cli("verify", "--kappa", "1.2")
    rows = [line.split(",") for line in periods.stdout.strip().split("\n")[1:]]
    ratio = max((abs(float(r[1]) / float(r[3]) - math.sqrt(6)) for r in rows), default=math.inf)
    codes_ok = verify.returncode == 0 and periods.returncode == 0 and malformed.returncode == 2
    worst = ratio if codes_ok and len(rows) == 9 else math.inf
    judge(acceptance_log, 10, "CLI contract (exit codes 0, 0, 2; 9 rows)",
          [("omega/Omega - sqrt 6", worst, "<", 1e-9)])


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
