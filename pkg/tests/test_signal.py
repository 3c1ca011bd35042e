import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from wavegate.constants import C
from wavegate.errors import DetectionError, DomainError, GridError
from wavegate.signal import (
    CoherenceSpec,
    Pulse,
    apply_transfer,
    coherence_length_from_band,
    coherence_length_from_linewidth,
    coherence_length_from_time,
    coherence_length_wavelength,
    detect_back,
    detect_front,
    detect_peak,
    forward_transform,
    fringe_visibility,
    inverse_transform,
    make_gaussian_pulse,
    make_hann_pulse,
    make_rect_pulse,
)


def gaussian(center=0.0, fwhm=50e-9, n=1024, dt=1e-9, carrier=1e9):
    return make_gaussian_pulse(center, fwhm, carrier, n, dt)


class TestPulse:
    def test_power_of_two_required(self):
        with pytest.raises(GridError):
            Pulse(0.0, 1.0, 0.0, np.ones(6))

    def test_samples_read_only(self):
        p = gaussian()
        with pytest.raises(ValueError):
            p.samples[0] = 1

    def test_non_finite_rejected(self):
        with pytest.raises(GridError):
            Pulse(0.0, 1.0, 0.0, np.array([1.0, np.nan]))

    def test_gaussian_too_coarse(self):
        with pytest.raises(GridError):
            make_gaussian_pulse(0.0, 3e-9, 1e9, 1024, 1e-9)

    def test_gaussian_clipped(self):
        with pytest.raises(GridError, match="clipped"):
            make_gaussian_pulse(0.0, 200e-9, 1e9, 256, 1e-9)

    def test_gaussian_half_maximum(self):
        p = gaussian(fwhm=64e-9)
        env = np.interp([-32e-9, 32e-9], p.times, p.envelope)
        assert env == pytest.approx([0.5, 0.5], rel=1e-3)

    def test_hann_has_compact_support(self):
        p = make_hann_pulse(0.0, 100e-9, 1e9, 512, 1e-9)
        outside = np.abs(p.times) >= 50e-9
        assert np.all(p.envelope[outside] == 0)

    def test_rect_duration(self):
        p = make_rect_pulse(0.0, 2e-6, 0.0, 4096, 1e-9)
        assert detect_back(p) - detect_front(p) == pytest.approx(2e-6, abs=2e-9)


class TestTransforms:
    @given(st.integers(6, 11), st.floats(-1e-6, 1e-6), st.floats(0, 1e9))
    def test_round_trip(self, log_n, t0, carrier):
        rng = np.random.default_rng(log_n)
        n = 2**log_n
        a = rng.normal(size=n) + 1j * rng.normal(size=n)
        p = Pulse(t0, 1e-9, carrier, a)
        back = inverse_transform(forward_transform(p), t0, carrier)
        assert np.allclose(back.samples, a, atol=1e-12)

    @given(st.integers(6, 11))
    def test_parseval(self, log_n):
        rng = np.random.default_rng(log_n)
        p = Pulse(0.0, 2e-9, 0.0, rng.normal(size=2**log_n))
        assert forward_transform(p).energy() == pytest.approx(p.energy(), rel=1e-12)

    def test_frequencies_are_absolute(self):
        p = gaussian(carrier=5e9)
        f = forward_transform(p).frequencies
        assert f[len(f) // 2] == pytest.approx(5e9)

    def test_gaussian_spectrum_centre(self):
        p = gaussian(center=100e-9, carrier=2e9)
        s = forward_transform(p)
        assert s.frequencies[np.argmax(np.abs(s.bins))] == pytest.approx(2e9)

    @given(st.floats(0, 200e-9))
    def test_delay_transfer_shifts_peak(self, delay):
        # physics convention: a delay tau is exp(+i 2 pi f tau)
        p = gaussian()
        out = apply_transfer(p, lambda f: np.exp(2j * np.pi * f * delay))
        assert detect_peak(out) - detect_peak(p) == pytest.approx(delay, abs=p.dt / 10)


class TestCoherence:
    def test_wavelength_form(self):
        assert coherence_length_wavelength(1e-6, 1e-9) == pytest.approx(1e-3)

    def test_time_form(self):
        assert coherence_length_from_time(20e-15) == pytest.approx(C * 20e-15)

    def test_linewidth_form_is_c_over_dnu(self):
        assert coherence_length_from_linewidth(1.5e-6, 2e9) == pytest.approx(C / 2e9, rel=1e-12)

    def test_degenerate_band(self):
        assert coherence_length_from_band(8e9, 8e9, 8e9) == math.inf

    def test_band_order(self):
        with pytest.raises(DomainError):
            coherence_length_from_band(9e9, 8e9, 8.5e9)

    @given(st.floats(1e9, 1e10), st.floats(1e-3, 0.3))
    def test_band_narrowing_lengthens(self, f0, frac):
        wide = coherence_length_from_band(f0 * (1 - frac), f0 * (1 + frac), f0)
        narrow = coherence_length_from_band(f0 * (1 - frac / 2), f0 * (1 + frac / 2), f0)
        assert narrow > wide

    def test_spec_constructors_agree(self):
        a = CoherenceSpec.from_wavelengths(1.5e-6, 1e-9)
        b = CoherenceSpec.from_time(1.5e-6, a.coherence_time)
        assert b.coherence_length == pytest.approx(a.coherence_length)
        assert b.spectral_width == pytest.approx(a.spectral_width)

    def test_visibility(self):
        assert fringe_visibility(0.0, 1.0) == 1.0
        assert fringe_visibility(1.0, 1.0) == pytest.approx(math.exp(-1))

    @given(st.floats(0, 10), st.floats(0, 10), st.floats(0.1, 10))
    def test_visibility_monotone(self, a, b, l):
        lo, hi = sorted((a, b))
        assert fringe_visibility(hi, l) <= fringe_visibility(lo, l)


class TestFeatures:
    @given(st.floats(-200e-9, 200e-9))
    def test_peak_subsample(self, center):
        p = gaussian(center=center)
        assert detect_peak(p) == pytest.approx(center, abs=p.dt / 50)

    def test_flat_envelope(self):
        p = Pulse(0.0, 1.0, 0.0, np.ones(64))
        with pytest.raises(DetectionError, match="flat"):
            detect_peak(p)

    def test_peak_at_edge(self):
        a = np.zeros(64)
        a[0] = 1.0
        with pytest.raises(DetectionError, match="edge"):
            detect_peak(Pulse(0.0, 1.0, 0.0, a))

    def test_zero_envelope(self):
        with pytest.raises(DetectionError):
            detect_front(Pulse(0.0, 1.0, 0.0, np.zeros(16)))

    def test_front_of_hann(self):
        p = make_hann_pulse(0.0, 1e-6, 0.0, 4096, 1e-9)
        # cos^2(pi u) = 1e-3 at u = -1/2 + arcsin(sqrt(1e-3))/pi
        expected = (-0.5 + math.asin(math.sqrt(1e-3)) / math.pi) * 1e-6
        assert detect_front(p) == pytest.approx(expected, abs=0.2e-9)
        assert detect_back(p) == pytest.approx(-expected, abs=0.2e-9)

    def test_threshold_range(self):
        with pytest.raises(DomainError):
            detect_front(gaussian(), 1.5)
