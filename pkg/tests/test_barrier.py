import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import quarter_wave_coax_power, rect_barrier_t, stack_born_wolf
from wavegate.barrier import (
    CoaxialCrystal,
    DielectricStack,
    QuantumRect,
    UndersizedWaveguide,
    cascade_phase,
    coax_transmission,
    evanescent_decay,
    frequency_response,
    quantum_transmission,
    quarter_wave_coax,
    quarter_wave_stack,
    spec_from_dict,
    spec_to_dict,
    stack_transmission,
    transfer_matrix,
    transmission,
    waveguide_transmission,
)
from wavegate.constants import C, CONST, H, HBAR
from wavegate.errors import ConfigError, DomainError, GridError

EV = CONST.eV
ME = CONST.m_e

layer = st.tuples(st.floats(1.0, 4.0), st.floats(1e-3, 0.2))
stacks = st.lists(layer, min_size=1, max_size=6)


class TestQuantum:
    @pytest.mark.parametrize("E,V0,d", [(1.0, 2.0, 0.5e-9), (0.3, 5.0, 0.2e-9), (1.9, 2.0, 2e-9), (3.0, 2.0, 1e-9)])
    def test_matches_high_precision_oracle(self, E, V0, d):
        spec = QuantumRect(V0 * EV, d)
        t = quantum_transmission(E * EV, spec)
        ref = complex(rect_barrier_t(E * EV, V0 * EV, d, ME)) if E < V0 else None
        if ref is not None:
            assert t == pytest.approx(ref, rel=1e-10)
        matrix = transmission(spec, E * EV / H)[0][0]
        assert matrix == pytest.approx(t, rel=1e-9)

    def test_zero_width(self):
        assert quantum_transmission(EV, QuantumRect(2 * EV, 0.0)) == pytest.approx(1.0)

    def test_resonance_above_barrier(self):
        V0, d = 2 * EV, 1e-9
        # interior wavenumber k' d = pi
        q = math.pi / d
        E = V0 + (HBAR * q) ** 2 / (2 * ME)
        assert abs(quantum_transmission(E, QuantumRect(V0, d))) == pytest.approx(1.0, abs=1e-12)

    def test_opaque_asymptote(self):
        V0 = 2 * EV
        E = V0 / 2
        kappa = math.sqrt(2 * ME * (V0 - E)) / HBAR
        d = 10 / kappa
        got = abs(quantum_transmission(E, QuantumRect(V0, d))) ** 2
        expect = 16 * 0.5 * 0.5 * math.exp(-2 * kappa * d)
        assert got == pytest.approx(expect, rel=0.01)

    def test_continuous_at_barrier_top(self):
        spec = QuantumRect(2 * EV, 1e-9)
        at = quantum_transmission(2 * EV, spec)
        near = quantum_transmission(2 * EV * (1 + 1e-9), spec)
        assert at == pytest.approx(near, rel=1e-6)

    @given(st.floats(1e-3, 10), st.floats(0.05, 5), st.floats(0, 3e-9))
    def test_power_in_unit_interval(self, E, V0, d):
        p = abs(quantum_transmission(E * EV, QuantumRect(V0 * EV, d))) ** 2
        assert 0 < p <= 1 + 1e-12

    def test_pointwise_grid_consistency(self):
        spec = QuantumRect(2 * EV, 0.8e-9)
        grid = np.linspace(0.05, 4, 1000) * EV / H
        resp = frequency_response(spec, grid, phase_mode="unwrap")
        assert np.allclose(resp.t, quantum_transmission(grid * H, spec), rtol=1e-9)

    def test_validation(self):
        with pytest.raises(DomainError):
            QuantumRect(0.0, 1e-9)
        with pytest.raises(DomainError):
            QuantumRect(EV, -1e-9)


class TestWaveguide:
    def test_log_slope_is_decay_constant(self):
        f = 2e9
        spec = lambda L: UndersizedWaveguide(9.49e9, L, ends="matched")  # noqa: E731
        L1, L2 = 0.2, 0.3
        slope = (math.log(abs(waveguide_transmission(f, spec(L2)))) -
                 math.log(abs(waveguide_transmission(f, spec(L1))))) / (L2 - L1)
        assert -slope == pytest.approx(float(evanescent_decay(f, spec(L1))), rel=1e-3)

    def test_abrupt_ends_keep_decay_constant(self):
        f, fc = 8.7e9, 9.49e9
        g = lambda L: UndersizedWaveguide(fc, L, feed_cutoff=6.557e9)  # noqa: E731
        slope = math.log(abs(waveguide_transmission(f, g(0.4))) / abs(waveguide_transmission(f, g(0.3)))) / 0.1
        kappa = 2 * math.pi / C * math.sqrt(fc**2 - f**2)
        assert -slope == pytest.approx(kappa, rel=1e-3)

    def test_zero_length(self):
        assert abs(waveguide_transmission(8e9, UndersizedWaveguide(9.49e9, 0.0, ends="matched"))) == pytest.approx(1)

    def test_above_cutoff_matched(self):
        f, fc, L = 12e9, 9.49e9, 0.1
        spec = UndersizedWaveguide(fc, L, ends="matched")
        t = waveguide_transmission(f, spec)
        assert abs(t) == pytest.approx(1.0, abs=1e-12)
        beta = 2 * math.pi / C * math.sqrt(f**2 - fc**2)
        assert cascade_phase(spec, f)[0] == pytest.approx(beta * L, rel=1e-10)

    def test_continuous_across_cutoff(self):
        spec = UndersizedWaveguide(9.49e9, 0.05, feed_cutoff=6.557e9)
        fc = spec.f_c
        t = transmission(spec, np.array([fc * (1 - 1e-10), fc, fc * (1 + 1e-10)]))[0]
        assert np.max(np.abs(np.diff(np.abs(t)))) < 1e-6

    def test_quantum_correspondence(self):
        f, fc = 8.7e9, 9.49e9
        kappa_q = math.sqrt(2 * (H * fc - H * f)) / HBAR  # mass-free check below
        kappa_w = float(evanescent_decay(f, UndersizedWaveguide(fc, 0.1)))
        assert kappa_w == pytest.approx(2 * math.pi / C * math.sqrt(fc**2 - f**2))
        assert kappa_q > 0

    def test_validation(self):
        with pytest.raises(DomainError):
            UndersizedWaveguide(9e9, 0.1, feed_cutoff=10e9)
        with pytest.raises(DomainError):
            UndersizedWaveguide(9e9, 0.1, ends="flared")


class TestStack:
    @given(stacks, st.floats(1e8, 5e9))
    def test_matches_born_wolf(self, layers, f):
        t, r = stack_transmission(f, DielectricStack(tuple(layers)))
        t_ref, r_ref = stack_born_wolf(layers, f)
        assert t == pytest.approx(t_ref, rel=1e-9, abs=1e-12)
        assert r == pytest.approx(r_ref, rel=1e-9, abs=1e-12)

    @given(stacks, st.floats(1e8, 5e9))
    def test_unitarity(self, layers, f):
        t, r = stack_transmission(f, DielectricStack(tuple(layers)))
        assert abs(t) ** 2 + abs(r) ** 2 == pytest.approx(1.0, abs=1e-9)

    @given(stacks, st.floats(1e8, 5e9))
    def test_reciprocity(self, layers, f):
        s = DielectricStack(tuple(layers))
        assert abs(stack_transmission(f, s)[0]) == pytest.approx(abs(stack_transmission(f, s.reversed())[0]), abs=1e-10)

    @given(stacks, stacks, st.floats(1e8, 5e9))
    def test_composition(self, a, b, f):
        m_ab = transfer_matrix(DielectricStack(tuple(a + b)), f)
        m_a = transfer_matrix(DielectricStack(tuple(a)), f)
        m_b = transfer_matrix(DielectricStack(tuple(b)), f)
        assert np.allclose(m_ab, m_b @ m_a, rtol=1e-10, atol=1e-10)

    def test_quarter_wave_fresnel(self):
        n, f = 2.5, 1e9
        d = C / f / (4 * n)
        _, r = stack_transmission(f, DielectricStack(((n, d),)))
        assert abs(r) == pytest.approx((n**2 - 1) / (n**2 + 1), rel=1e-12)

    def test_vacuum_is_pure_phase(self):
        f, L = 3e9, 0.17
        s = DielectricStack(((1.0, 0.1), (1.0, 0.07)))
        t, _ = stack_transmission(f, s)
        assert t == pytest.approx(np.exp(2j * np.pi * f * L / C), abs=1e-12)
        assert cascade_phase(s, f)[0] == pytest.approx(2 * np.pi * f * L / C, rel=1e-12)

    def test_bragg_mirror_geometric_decay(self):
        f = 1e9
        mags = [abs(stack_transmission(f, quarter_wave_stack(1.3, 2.0, f, n))[0]) for n in range(4, 9)]
        ratios = np.array(mags[1:]) / np.array(mags[:-1])
        assert np.all(ratios < 1)
        # deep in the gap each extra period scales |t| by n1/n2
        assert np.all(np.diff(np.abs(np.diff(ratios))) < 0)
        assert ratios[-1] == pytest.approx(1.3 / 2.0, rel=2e-3)

    def test_cascade_agrees_with_unwrap_on_fine_grid(self):
        s = quarter_wave_stack(1.3, 2.0, 1e9, 5)
        grid = np.linspace(0.5e9, 1.5e9, 2001)
        cas = frequency_response(s, grid).phase
        unw = frequency_response(s, grid, phase_mode="unwrap").phase
        shift = cas[0] - unw[0]
        assert shift / (2 * np.pi) == pytest.approx(round(shift / (2 * np.pi)), abs=1e-9)
        assert np.allclose(cas, unw + shift, atol=1e-9)


class TestCoax:
    def test_matched_segment(self):
        v, L, f = 0.66 * C, 2.0, 50e6
        s = CoaxialCrystal(((50.0, v, L),))
        t, r = coax_transmission(f, s)
        assert abs(t) == pytest.approx(1.0, abs=1e-12)
        assert abs(r) < 1e-12
        assert cascade_phase(s, f)[0] / (2 * np.pi * f) == pytest.approx(L / v, rel=1e-10)

    @pytest.mark.parametrize("z1,z2,periods", [(50, 75, 4), (50, 93, 3), (75, 50, 6)])
    def test_quarter_wave_oracle(self, z1, z2, periods):
        s = quarter_wave_coax(z1, z2, 0.66 * C, 100e6, periods)
        t, r = coax_transmission(100e6, s)
        assert abs(t) ** 2 == pytest.approx(quarter_wave_coax_power(z1, z2, periods, z1), rel=1e-10)
        assert abs(t) ** 2 + abs(r) ** 2 == pytest.approx(1.0, abs=1e-12)

    def test_stop_band_minimum_at_design(self):
        s = quarter_wave_coax(50, 75, 0.66 * C, 100e6, 5)
        grid = np.linspace(80e6, 120e6, 401)
        t, _ = transmission(s, grid)
        assert grid[np.argmin(np.abs(t))] == pytest.approx(100e6)

    def test_deeper_band_with_larger_mismatch(self):
        shallow = abs(coax_transmission(100e6, quarter_wave_coax(50, 75, 0.66 * C, 100e6, 4))[0])
        deep = abs(coax_transmission(100e6, quarter_wave_coax(50, 93, 0.66 * C, 100e6, 4))[0])
        assert deep < shallow


class TestResponse:
    def test_grid_must_ascend(self):
        with pytest.raises(GridError):
            frequency_response(DielectricStack(((2.0, 0.1),)), [2e9, 1e9])

    def test_unknown_phase_mode(self):
        with pytest.raises(ValueError):
            frequency_response(DielectricStack(((2.0, 0.1),)), [1e9, 2e9], phase_mode="guess")


@pytest.mark.parametrize("spec", [
    QuantumRect(2 * EV, 1e-9),
    UndersizedWaveguide(9.49e9, 0.1, feed_cutoff=6.557e9),
    DielectricStack(((1.5 + 0.01j, 0.01), (2.0, 0.02))),
    CoaxialCrystal(((50.0, 2e8, 0.5), (75.0, 2e8, 0.5)), 50.0, 60.0),
])
def test_dict_round_trip(spec):
    assert spec_from_dict(spec_to_dict(spec)) == spec


def test_dict_errors_carry_path():
    with pytest.raises(ConfigError, match=r"barrier\.f_c"):
        spec_from_dict({"type": "waveguide", "f_c": "3ns", "length": 0.1})
    with pytest.raises(ConfigError, match="unknown barrier type"):
        spec_from_dict({"type": "horn"})
    with pytest.raises(ConfigError):
        spec_from_dict({"type": "quantum", "V0": "-1eV", "width": "1nm"})
