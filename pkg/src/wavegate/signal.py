"""Pulses, spectra, coherence-length arithmetic and waveform features.

Pulses are analytic signals ``x(t) = A(t) exp(+2j*pi*f0*t)`` stored as the
complex envelope ``A`` on a uniform grid. Spectra use the numpy sign
convention, so a transfer function written in the library's physics
convention (phase grows with delay, ``exp(-i w t)`` time factor) acts on a
spectrum through its complex conjugate; see :func:`apply_transfer`.
"""

from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np

from .constants import C
from .errors import DetectionError, DomainError, GridError

DEFAULT_FRONT_THRESHOLD = 1e-3


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Pulse:
    t0: float
    dt: float
    carrier: float
    samples: np.ndarray

    def __post_init__(self):
        samples = _frozen(self.samples)
        object.__setattr__(self, "samples", samples)
        if not self.dt > 0:
            raise GridError("dt must be positive")
        n = samples.size
        if samples.ndim != 1 or n < 2 or n & (n - 1):
            raise GridError(f"sample count must be a power of two >= 2, got {n}")
        if not np.all(np.isfinite(samples)):
            raise GridError("envelope contains non-finite samples")

    def __len__(self):
        return self.samples.size

    @property
    def times(self) -> np.ndarray:
        return self.t0 + self.dt * np.arange(self.samples.size)

    @property
    def envelope(self) -> np.ndarray:
        return np.abs(self.samples)

    def energy(self) -> float:
        """Integrated ``|A|^2 dt``."""
        return float(np.sum(np.abs(self.samples) ** 2) * self.dt)

    def with_samples(self, samples) -> Pulse:
        return Pulse(self.t0, self.dt, self.carrier, samples)


@dataclass(frozen=True, eq=False)
class Spectrum:
    f_min: float
    df: float
    bins: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "bins", _frozen(self.bins))
        if not self.df > 0:
            raise GridError("df must be positive")

    @property
    def frequencies(self) -> np.ndarray:
        """Absolute frequencies of the bins, ascending."""
        return self.f_min + self.df * np.arange(self.bins.size)

    def energy(self) -> float:
        return float(np.sum(np.abs(self.bins) ** 2) * self.df)


@dataclass(frozen=True)
class CoherenceSpec:
    wavelength: float
    spectral_width: float
    coherence_time: float
    coherence_length: float

    def __post_init__(self):
        for name in ("wavelength", "spectral_width", "coherence_time", "coherence_length"):
            if not getattr(self, name) > 0:
                raise DomainError(f"{name} must be positive")

    @classmethod
    def from_wavelengths(cls, wavelength: float, spectral_width: float) -> CoherenceSpec:
        length = coherence_length_wavelength(wavelength, spectral_width)
        return cls(wavelength, spectral_width, length / C, length)

    @classmethod
    def from_time(cls, wavelength: float, coherence_time: float) -> CoherenceSpec:
        length = coherence_length_from_time(coherence_time)
        return cls(wavelength, wavelength**2 / length, coherence_time, length)


# --------------------------------------------------------------------------
# pulse construction and transforms


def _grid_start(center, n_samples, dt, t0):
    return center - (n_samples // 2) * dt if t0 is None else t0


def make_gaussian_pulse(center, fwhm, carrier, n_samples, dt, t0=None) -> Pulse:
    """Gaussian envelope of unit peak, ``exp(-4 ln2 (t-center)^2 / fwhm^2)``.

    The grid starts at ``t0`` (default: centred on ``center``). Raises
    GridError when ``fwhm <= 4*dt`` or when more than 1e-9 of the pulse
    energy falls outside the grid.
    """
    if not fwhm > 4 * dt:
        raise GridError("grid too coarse: fwhm must exceed 4*dt")
    start = _grid_start(center, n_samples, dt, t0)
    stop = start + (n_samples - 1) * dt
    # |A|^2 is a normal density with this sigma
    sigma = fwhm / (4.0 * math.sqrt(math.log(2.0)))
    outside = 0.5 * math.erfc((center - start) / (sigma * math.sqrt(2))) + 0.5 * math.erfc(
        (stop - center) / (sigma * math.sqrt(2))
    )
    if outside >= 1e-9:
        raise GridError(f"pulse clipped by grid: {outside:.3g} of energy outside")
    t = start + dt * np.arange(n_samples)
    env = np.exp(-4.0 * math.log(2.0) * ((t - center) / fwhm) ** 2)
    return Pulse(start, dt, carrier, env.astype(complex))


def make_hann_pulse(center, duration, carrier, n_samples, dt, t0=None) -> Pulse:
    """Compactly supported cos^2 envelope lasting ``duration`` in total.

    Unlike a Gaussian this pulse has a genuine front, so causality checks
    on the leading edge are meaningful.
    """
    if not duration > 8 * dt:
        raise GridError("grid too coarse: duration must exceed 8*dt")
    start = _grid_start(center, n_samples, dt, t0)
    t = start + dt * np.arange(n_samples)
    if center - duration / 2 <= start or center + duration / 2 >= t[-1]:
        raise GridError("pulse clipped by grid")
    u = (t - center) / duration
    env = np.where(np.abs(u) < 0.5, np.cos(np.pi * u) ** 2, 0.0)
    return Pulse(start, dt, carrier, env.astype(complex))


def make_rect_pulse(center, duration, carrier, n_samples, dt, t0=None) -> Pulse:
    start = _grid_start(center, n_samples, dt, t0)
    t = start + dt * np.arange(n_samples)
    if center - duration / 2 <= start or center + duration / 2 >= t[-1]:
        raise GridError("pulse clipped by grid")
    env = np.where(np.abs(t - center) <= duration / 2, 1.0, 0.0)
    if env.sum() < 2:
        raise GridError("grid too coarse for rectangular pulse")
    return Pulse(start, dt, carrier, env.astype(complex))


def baseband_frequencies(n_samples: int, dt: float) -> np.ndarray:
    return np.fft.fftshift(np.fft.fftfreq(n_samples, dt))


def forward_transform(p: Pulse) -> Spectrum:
    """Continuous-normalised Fourier transform of the envelope, absolute time reference.

    ``bins[k] = dt * sum_n A_n exp(-2j pi nu_k t_n)``, with ``nu_k`` ascending.
    """
    n = len(p)
    nu = baseband_frequencies(n, p.dt)
    bins = np.fft.fftshift(np.fft.fft(p.samples)) * p.dt * np.exp(-2j * np.pi * nu * p.t0)
    return Spectrum(p.carrier + nu[0], 1.0 / (n * p.dt), bins)


def inverse_transform(s: Spectrum, t0: float, carrier: float) -> Pulse:
    n = s.bins.size
    dt = 1.0 / (n * s.df)
    nu = s.frequencies - carrier
    shifted = s.bins * np.exp(2j * np.pi * nu * t0)
    samples = np.fft.ifft(np.fft.ifftshift(shifted)) / dt
    return Pulse(t0, dt, carrier, samples)


def apply_transfer(p: Pulse, transfer) -> Pulse:
    """Filter ``p`` by a physics-convention transfer function.

    ``transfer`` is either an array over the spectrum's absolute frequencies
    or a callable of frequency.
    """
    spec = forward_transform(p)
    h = transfer(spec.frequencies) if callable(transfer) else np.asarray(transfer)
    out = Spectrum(spec.f_min, spec.df, spec.bins * np.conj(h))
    return inverse_transform(out, p.t0, p.carrier)


# --------------------------------------------------------------------------
# coherence length


def coherence_length_wavelength(wavelength: float, dlambda: float) -> float:
    """l = wavelength^2 / spectral width."""
    if not (wavelength > 0 and dlambda > 0):
        raise DomainError("wavelength and spectral width must be positive")
    return wavelength**2 / dlambda


def coherence_length_from_band(f_lo: float, f_hi: float, f_center: float) -> float:
    """Coherence length of a band given by its edges and centre frequency.

    A degenerate band (``f_lo == f_hi``) returns ``inf``.
    """
    if not (0 < f_lo <= f_center <= f_hi):
        raise DomainError("need 0 < f_lo <= f_center <= f_hi")
    if f_lo == f_hi:
        return math.inf
    if not f_lo < f_center < f_hi:
        raise DomainError("centre frequency must lie strictly inside the band")
    return (C / f_center) ** 2 / (C / f_lo - C / f_hi)


def coherence_length_from_linewidth(wavelength: float, dnu: float) -> float:
    """Coherence length for a spectral width given in frequency units.

    Uses ``dlambda = wavelength^2 * dnu / c``.
    """
    if not (wavelength > 0 and dnu > 0):
        raise DomainError("wavelength and linewidth must be positive")
    return coherence_length_wavelength(wavelength, wavelength**2 * dnu / C)


def coherence_length_from_time(tau_c: float) -> float:
    if not tau_c > 0:
        raise DomainError("coherence time must be positive")
    return C * tau_c


def fringe_visibility(path_difference: float, l: float) -> float:
    """Gaussian coherence model ``exp(-(path_difference / l)^2)``."""
    if not l > 0:
        raise DomainError("coherence length must be positive")
    if path_difference < 0:
        raise DomainError("path difference must be non-negative")
    return math.exp(-((path_difference / l) ** 2))


# --------------------------------------------------------------------------
# waveform features


def detect_peak(p: Pulse) -> float:
    """Time of the envelope maximum, refined by a parabola through |A|^2.

    Two separated samples within 1e-12 of the maximum, or a plateau wider
    than two samples, make the maximum ambiguous and raise DetectionError.
    """
    y = np.abs(p.samples) ** 2
    i = int(np.argmax(y))
    ymax = y[i]
    if not ymax > 0:
        raise DetectionError("flat envelope: no maximum", operation="detect_peak")
    near = np.flatnonzero(y >= ymax * (1 - 1e-12))
    if near[-1] - near[0] > 1:
        raise DetectionError("flat envelope: maximum is not unique", operation="detect_peak")
    if i == 0 or i == y.size - 1:
        raise DetectionError("peak at grid edge", operation="detect_peak")
    y0, y1, y2 = y[i - 1], y[i], y[i + 1]
    denom = y0 - 2 * y1 + y2
    shift = 0.0 if denom == 0 else 0.5 * (y0 - y2) / denom
    return p.t0 + (i + shift) * p.dt


def _first_crossing(env: np.ndarray, level: float) -> float:
    """Fractional index where ``env`` first reaches ``level``."""
    above = np.flatnonzero(env >= level)
    if above.size == 0:
        raise DetectionError("envelope never crosses threshold", operation="detect_front")
    i = int(above[0])
    if i == 0:
        raise DetectionError("envelope already above threshold at grid start", operation="detect_front")
    a, b = env[i - 1], env[i]
    return i - 1 + (level - a) / (b - a)


def detect_front(p: Pulse, threshold_fraction: float = DEFAULT_FRONT_THRESHOLD) -> float:
    """Earliest time |A| reaches ``threshold_fraction`` of its maximum."""
    if not 0 < threshold_fraction < 1:
        raise DomainError("threshold fraction must lie in (0, 1)")
    env = np.abs(p.samples)
    peak = env.max()
    if not peak > 0:
        raise DetectionError("envelope never crosses threshold", operation="detect_front")
    return p.t0 + _first_crossing(env, threshold_fraction * peak) * p.dt


def detect_back(p: Pulse, threshold_fraction: float = DEFAULT_FRONT_THRESHOLD) -> float:
    """Latest time |A| is still at ``threshold_fraction`` of its maximum."""
    if not 0 < threshold_fraction < 1:
        raise DomainError("threshold fraction must lie in (0, 1)")
    env = np.abs(p.samples)[::-1]
    peak = env.max()
    if not peak > 0:
        raise DetectionError("envelope never crosses threshold", operation="detect_back")
    k = _first_crossing(env, threshold_fraction * peak)
    return p.t0 + (env.size - 1 - k) * p.dt
