import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sig3 import system as s3
from sig3.errors import DomainError
from sig3.hyper import Modulus, f_half, f_one, incomplete_integral
from sig3.oracle import build_phi, delta_oracle, phi, psi_check

# mpmath at 30 digits, kappa = 0.6: root of the incomplete integral at u = 0.5
PHI_06_HALF = 0.49365534509279683452
DN3_06_HALF = 0.96317646255466816378


@pytest.fixture(scope="module", params=[0.2, 0.6, 0.9])
def sol(request):
    return build_phi(Modulus.from_kappa(request.param))


@pytest.fixture(scope="module")
def sol06():
    return build_phi(Modulus.from_kappa(0.6))


def omega_of(m):
    return 0.5 * math.pi * f_one(m.kappa ** 2)


def omega_of_sol(sol):
    # the default range is exactly four times omega as the solution measured it
    return sol.u_max / 4


class TestPhi:
    def test_zero(self, sol):
        assert phi(sol, 0.0) == 0.0

    def test_quarter_and_half_turn(self, sol):
        w = omega_of(sol.m)
        assert abs(phi(sol, w) - math.pi / 2) < 1e-10
        assert abs(phi(sol, 2 * w) - math.pi) < 1e-10

    def test_reference(self, sol06):
        assert abs(phi(sol06, 0.5) - PHI_06_HALF) < 1e-12

    def test_inverts_incomplete_integral(self, sol):
        for u in np.linspace(0.05, sol.u_max, 17):
            assert abs(incomplete_integral(sol.m, phi(sol, u)) - u) < 1e-11

    def test_quasi_periodic(self, sol):
        w = omega_of_sol(sol)
        for u in np.linspace(0, 2 * w, 9):
            assert abs(phi(sol, u + 2 * w) - phi(sol, u) - math.pi) < 1e-10

    def test_small_modulus_is_identity(self):
        s = build_phi(Modulus.from_kappa(1e-4), 3.0)
        for u in (0.4, 1.7, 3.0):
            assert abs(phi(s, u) - u) < 1e-8

    def test_monotone(self, sol):
        vals = [phi(sol, u) for u in np.linspace(0, sol.u_max, 60)]
        assert np.all(np.diff(vals) > 0)

    @pytest.mark.parametrize("kappa", [0.2, 0.6, 0.9, 0.99])
    def test_dense_output_near_newton(self, kappa):
        # the raw ODE solution and the polished root differ by at most 10 tol
        sol = build_phi(Modulus.from_kappa(kappa))
        for u in np.linspace(0.1, sol.u_max, 60):
            assert abs(float(sol.raw(u)) - phi(sol, u)) <= 10 * sol.tol

    def test_polished_nodes(self, sol):
        for u, p in zip(sol.nodes[1::7], sol.phi_nodes[1::7]):
            assert abs(incomplete_integral(sol.m, p) - u) < 1e-11

    @pytest.mark.parametrize("u", [-0.1, 1e3])
    def test_outside_range(self, sol06, u):
        with pytest.raises(DomainError):
            phi(sol06, u)

    def test_bad_range(self):
        with pytest.raises(ValueError):
            build_phi(Modulus.from_kappa(0.5), -1.0)


class TestDeltaOracle:
    def test_reference(self, sol06):
        assert abs(delta_oracle(sol06, 0.5) - DN3_06_HALF) < 1e-12

    def test_extremes(self, sol):
        w = omega_of(sol.m)
        assert abs(delta_oracle(sol, 0.0) - 1) < 1e-15
        assert abs(delta_oracle(sol, w) - (2 * math.cos(2 * sol.m.alpha / 3) - 1)) < 1e-10

    def test_matches_elliptic_route(self, sol):
        system = s3.Sig3System.from_modulus(sol.m)
        for u in np.linspace(0.05, sol.u_max, 21):
            assert abs(delta_oracle(sol, u) - s3.dn3(system, u).real) < 1e-8

    def test_period(self, sol):
        w = omega_of_sol(sol)
        for u in np.linspace(0, 2 * w, 7):
            assert abs(delta_oracle(sol, u + 2 * w) - delta_oracle(sol, u)) < 1e-10

    def test_band(self, sol):
        lo = 2 * math.cos(2 * sol.m.alpha / 3) - 1
        vals = [delta_oracle(sol, u) for u in np.linspace(0, sol.u_max, 80)]
        assert min(vals) >= lo - 1e-12 and max(vals) <= 1 + 1e-15

    def test_derivative_of_phi(self, sol):
        h = 1e-5
        for u in (0.3, 1.1):
            fd = (phi(sol, u + h) - phi(sol, u - h)) / (2 * h)
            assert abs(fd - delta_oracle(sol, u)) < 1e-8


class TestPsi:
    def test_residual(self, sol):
        for u in np.linspace(0, sol.u_max, 31):
            assert psi_check(sol, u) < 1e-13

    @settings(max_examples=40, deadline=None)
    @given(st.floats(0.01, 0.99), st.floats(0.0, math.pi / 2))
    def test_half_argument_identity(self, kappa, t):
        # 1/f_half(sin^2 psi) = cos psi / cos(psi/3)
        psi = math.asin(kappa * math.sin(t))
        assert abs(1 / f_half(math.sin(psi) ** 2) - math.cos(psi) / math.cos(psi / 3)) < 1e-14
