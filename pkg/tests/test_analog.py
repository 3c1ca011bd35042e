import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import dipole_near
from wavegate.analog import (
    BOSE_CRITICAL_ANGLE,
    DipoleSource,
    PrismGeometry,
    PrismOutcome,
    RCNetwork,
    bose_table,
    dipole_fields,
    goos_hanchen_coherence,
    near_zone_fields,
    prism_tunneling_allowed,
    rc_group_delay,
    rc_phase,
    rc_response,
    rc_transfer,
)
from wavegate.chronometry import phase_time
from wavegate.constants import CONST
from wavegate.errors import DomainError, SingularError

NET = RCNetwork(1e3, 1e-9)
omega_rc = st.floats(1e-3, 1e3)


class TestRC:
    def test_corner(self):
        h = rc_transfer(NET, 1 / NET.tau)
        assert abs(h) == pytest.approx(1 / math.sqrt(2))
        assert h.real == pytest.approx(0.5)
        assert rc_phase(NET, 1 / NET.tau) == pytest.approx(math.pi / 4)
        assert rc_group_delay(NET, 1 / NET.tau) == pytest.approx(NET.tau / 2)

    def test_limits(self):
        assert abs(rc_transfer(NET, 1e15)) == pytest.approx(1.0)
        assert abs(rc_transfer(NET, 1e-3)) < 1e-8
        assert rc_phase(NET, 1e15) < 1e-8
        assert rc_group_delay(NET, 1e-3) == pytest.approx(NET.tau)

    @given(omega_rc)
    def test_forms_agree(self, x):
        w = x / NET.tau
        assert rc_transfer(NET, w, "expanded") == pytest.approx(rc_transfer(NET, w), rel=1e-14, abs=1e-300)

    @given(omega_rc)
    def test_phase_is_arg(self, x):
        w = x / NET.tau
        assert abs(rc_phase(NET, w) - np.angle(rc_transfer(NET, w))) < 1e-12

    @given(omega_rc)
    def test_delay_matches_finite_difference(self, x):
        w = x / NET.tau
        h = 1e-5 * w
        numeric = -(rc_phase(NET, w + h) - rc_phase(NET, w - h)) / (2 * h)
        assert rc_group_delay(NET, w) == pytest.approx(numeric, rel=1e-3)

    @given(omega_rc, omega_rc)
    def test_delay_positive_and_decreasing(self, a, b):
        lo, hi = sorted((a, b))
        dlo, dhi = rc_group_delay(NET, lo / NET.tau), rc_group_delay(NET, hi / NET.tau)
        assert dhi > 0
        assert dhi < dlo or hi == lo

    def test_response_feeds_phase_time(self):
        w = 3 / NET.tau
        resp = rc_response(NET, np.array([0.999 * w, w, 1.001 * w]))
        assert phase_time(resp, w / (2 * np.pi)) == pytest.approx(rc_group_delay(NET, w), rel=1e-6)

    def test_arrays(self):
        w = np.array([1e5, 1e6, 1e7])
        assert rc_transfer(NET, w).shape == (3,)

    def test_validation(self):
        with pytest.raises(DomainError):
            RCNetwork(0.0, 1e-9)
        with pytest.raises(DomainError):
            rc_transfer(NET, 0.0)
        with pytest.raises(DomainError):
            rc_transfer(NET, 1.0, "bracket")


SRC = DipoleSource([0, 0, 1e-12], 1.0)
X = np.array([1.0, 0, 0])
Z = np.array([0, 0, 1.0])


class TestDipole:
    def test_parallel_has_no_h(self):
        _, H = dipole_fields(SRC, 0.5, Z)
        assert np.all(H == 0)

    @pytest.mark.parametrize("kr", [1e-4, 1e-3, 1e-2])
    def test_converges_to_near_zone(self, kr):
        for n in (X, Z, np.array([0.6, 0, 0.8])):
            E, H = dipole_fields(SRC, kr / SRC.k, n)
            En, Hn = dipole_near(SRC.p, SRC.k, kr / SRC.k, n)
            assert np.linalg.norm(E - En) / np.linalg.norm(En) < 5 * kr
            if np.linalg.norm(Hn) > 0:
                assert np.linalg.norm(H - Hn) / np.linalg.norm(Hn) < 5 * kr

    def test_near_zone_matches_oracle(self):
        n = np.array([0.6, 0, 0.8])
        E, H = near_zone_fields(SRC, 0.3, n)
        En, Hn = dipole_near(SRC.p, SRC.k, 0.3, n)
        assert np.allclose(E, En, rtol=1e-14) and np.allclose(H, Hn, rtol=1e-14)

    def test_far_field_impedance(self):
        E, H = dipole_fields(SRC, 1e3, X)
        assert np.linalg.norm(E) / np.linalg.norm(H) == pytest.approx(CONST.z0, rel=5e-3)

    @given(st.floats(1e-4, 1e2))
    def test_near_zone_scaling(self, r):
        E1, H1 = near_zone_fields(SRC, r, X)
        E2, H2 = near_zone_fields(SRC, 2 * r, X)
        assert np.linalg.norm(E1) / np.linalg.norm(E2) == pytest.approx(8.0, rel=1e-12)
        assert np.linalg.norm(H1) / np.linalg.norm(H2) == pytest.approx(4.0, rel=1e-12)

    def test_perpendicular_direction(self):
        r = 0.2
        E, _ = near_zone_fields(SRC, r, X)
        assert np.allclose(E, -SRC.p / (4 * math.pi * CONST.eps0 * r**3))

    def test_errors(self):
        with pytest.raises(SingularError):
            dipole_fields(SRC, 0.0, X)
        with pytest.raises(DomainError):
            dipole_fields(SRC, 1.0, [1.0, 1.0, 0.0])
        with pytest.raises(DomainError):
            DipoleSource([0, 0, 0], 1.0)


class TestPrism:
    def test_bose_table(self):
        expected = [15.011, 16.166, 14.001, 14.566, 14.4, 15.2]
        got = [r.l_mm for r in bose_table()]
        assert got == pytest.approx(expected, abs=5e-3)
        assert all(14.0 <= l <= 16.2 for l in got)

    def test_examples(self):
        assert goos_hanchen_coherence(math.radians(30), 13e-3) * 1e3 == pytest.approx(15.01, abs=5e-3)
        assert goos_hanchen_coherence(math.radians(45), 9.9e-3) * 1e3 == pytest.approx(14.00, abs=5e-3)
        assert goos_hanchen_coherence(0.0, 7e-3) == 7e-3

    def test_outcomes(self):
        l = 15e-3
        assert prism_tunneling_allowed(PrismGeometry(math.radians(30), 12e-3), l) is PrismOutcome.TUNNELING
        assert prism_tunneling_allowed(PrismGeometry(math.radians(60), 8e-3), l) is PrismOutcome.REFLECTED
        assert prism_tunneling_allowed(PrismGeometry(math.radians(20), 8e-3), l) is PrismOutcome.PROPAGATING
        assert BOSE_CRITICAL_ANGLE == pytest.approx(math.radians(29))

    @given(st.floats(0.51, 1.5), st.floats(1e-6, 1))
    def test_vanishing_gap_tunnels(self, theta, l):
        assert prism_tunneling_allowed(PrismGeometry(theta, 1e-12), l) is PrismOutcome.TUNNELING

    def test_validation(self):
        with pytest.raises(DomainError):
            goos_hanchen_coherence(math.pi / 2, 1e-3)
        with pytest.raises(DomainError):
            PrismGeometry(math.radians(45), 0.0)
