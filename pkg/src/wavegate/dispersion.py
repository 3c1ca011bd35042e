"""Refractive-index models, group velocity, and pulse propagation.

Index models return the complex index in the physics convention: a
positive imaginary part attenuates. Lorentz lines are written as a
narrow-band susceptibility

    chi(f) = sign * strength * (w/2) / (f_res - f - i w/2)

with ``sign = +1`` for an absorber and ``-1`` for a gain line, so
``|Im chi| = strength`` at line centre. A :class:`LorentzSum` combines lines
on top of a background index: ``n = sqrt(background^2 + sum(chi))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
import math
from typing import Union

import numpy as np
from scipy.optimize import brentq

from .barrier import FrequencyResponse
from .constants import C
from .errors import (
    AbsorbedError,
    DetectionError,
    DomainError,
    NumericalError,
    SingularError,
    SupportError,
)
from .signal import (
    DEFAULT_FRONT_THRESHOLD,
    Pulse,
    apply_transfer,
    detect_back,
    detect_front,
    detect_peak,
    forward_transform,
)
from .units import encode_complex, parse_complex, parse_quantity

# --------------------------------------------------------------------------
# index models


@dataclass(frozen=True)
class Constant:
    n: complex = 1.0

    support = (0.0, math.inf)

    def index(self, f):
        return np.full(np.shape(f), complex(self.n))

    def dindex(self, f):
        return np.zeros(np.shape(f), dtype=complex)

    def real_split(self, f):
        return complex(self.n).real, np.zeros(np.shape(f))

    def scale(self, f):
        return 1e-3 * np.asarray(f)


@dataclass(frozen=True)
class LinearInF:
    """``n = n0 + slope (f - f_ref) + i absorption f``."""

    n0: float
    slope: float
    f_ref: float
    absorption: float = 0.0

    support = (0.0, math.inf)

    def index(self, f):
        f = np.asarray(f, dtype=float)
        return self.n0 + self.slope * (f - self.f_ref) + 1j * self.absorption * f

    def dindex(self, f):
        return np.full(np.shape(f), self.slope + 1j * self.absorption)

    def real_split(self, f):
        return self.n0, self.slope * (np.asarray(f, dtype=float) - self.f_ref)

    def scale(self, f):
        return 1e-3 * np.asarray(f)


@dataclass(frozen=True)
class LorentzLine:
    f_res: float
    strength: float
    linewidth: float
    sign: str = "absorber"

    support = (0.0, math.inf)

    def __post_init__(self):
        if not self.linewidth > 0:
            raise DomainError("linewidth must be positive")
        if not self.f_res > 0:
            raise DomainError("resonance frequency must be positive")
        if self.strength < 0:
            raise DomainError("strength must be non-negative")
        if self.sign not in ("absorber", "gain"):
            raise DomainError("sign must be 'absorber' or 'gain'")

    @property
    def _s(self):
        return self.strength if self.sign == "absorber" else -self.strength

    def chi(self, f):
        half = 0.5 * self.linewidth
        return self._s * half / (self.f_res - np.asarray(f, dtype=float) - 1j * half)

    def dchi(self, f):
        half = 0.5 * self.linewidth
        return self._s * half / (self.f_res - np.asarray(f, dtype=float) - 1j * half) ** 2

    def index(self, f):
        return np.sqrt(1 + self.chi(f))

    def dindex(self, f):
        return self.dchi(f) / (2 * self.index(f))

    def real_split(self, f):
        return 1.0, np.real(self.chi(f) / (self.index(f) + 1))

    def scale(self, f):
        return np.full(np.shape(f), self.linewidth)


@dataclass(frozen=True)
class LorentzSum:
    lines: tuple
    background: complex = 1.0

    support = (0.0, math.inf)

    def __post_init__(self):
        object.__setattr__(self, "lines", tuple(self.lines))
        if not self.lines:
            raise DomainError("LorentzSum needs at least one line")

    def _eps(self, f):
        return complex(self.background) ** 2 + sum(line.chi(f) for line in self.lines)

    def index(self, f):
        return np.sqrt(self._eps(f))

    def dindex(self, f):
        return sum(line.dchi(f) for line in self.lines) / (2 * self.index(f))

    def real_split(self, f):
        bg = complex(self.background)
        chi = sum(line.chi(f) for line in self.lines)
        return bg.real, np.real(chi / (self.index(f) + bg))

    def scale(self, f):
        return np.full(np.shape(f), min(line.linewidth for line in self.lines))


@dataclass(frozen=True, eq=False)
class Tabulated:
    """Index sampled on an ascending grid, linearly interpolated."""

    frequencies: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        f = np.asarray(self.frequencies, dtype=float)
        v = np.asarray(self.values, dtype=complex)
        if f.ndim != 1 or f.size < 2 or np.any(np.diff(f) <= 0):
            raise DomainError("tabulated grid must be strictly ascending")
        if v.shape != f.shape:
            raise DomainError("tabulated values must match the grid")
        object.__setattr__(self, "frequencies", f)
        object.__setattr__(self, "values", v)

    @property
    def support(self):
        return float(self.frequencies[0]), float(self.frequencies[-1])

    def _check(self, f):
        f = np.asarray(f, dtype=float)
        lo, hi = self.support
        if np.any((f < lo) | (f > hi)):
            raise SupportError("frequency outside tabulated support")
        return f

    def index(self, f):
        f = self._check(f)
        return np.interp(f, self.frequencies, self.values.real) + 1j * np.interp(
            f, self.frequencies, self.values.imag
        )

    def dindex(self, f):
        f = self._check(f)
        slopes = np.diff(self.values) / np.diff(self.frequencies)
        i = np.clip(np.searchsorted(self.frequencies, f, side="right") - 1, 0, slopes.size - 1)
        return slopes[i]

    def real_split(self, f):
        return 0.0, np.real(self.index(f))

    def scale(self, f):
        return np.full(np.shape(f), np.min(np.diff(self.frequencies)))


IndexModel = Union[Constant, LinearInF, LorentzLine, LorentzSum, Tabulated]

VACUUM = Constant(1.0)


def refractive_index(m, f):
    _check_support(m, f)
    return m.index(f)


def _check_support(m, f):
    lo, hi = m.support
    f = np.asarray(f, dtype=float)
    if np.any((f <= lo) & (lo == 0.0)) or np.any((f < lo) | (f > hi)):
        raise SupportError("frequency outside model support")


def is_lossless(m, f) -> bool:
    return bool(np.all(np.asarray(m.index(f)).imag == 0))


# --------------------------------------------------------------------------
# group velocity


def group_index(m, f: float) -> float:
    """``Re n + f d(Re n)/df`` (signed)."""
    _check_support(m, f)
    return float(np.real(m.index(f)) + f * np.real(m.dindex(f)))


def group_velocity_index(m, f: float) -> float:
    """``c / (n + f dn/df)``, which turns negative when the group index does."""
    ng = group_index(m, f)
    if abs(ng) < 1e-12:
        raise SingularError("group index vanishes", operation="group_velocity_index")
    return C / ng


def group_velocity_rayleigh(m, wavelength: float) -> float:
    """``v_p - lambda dv_p/dlambda`` with ``lambda`` the wavelength inside the medium.

    ``wavelength`` is the vacuum wavelength selecting the operating
    frequency. Both ``v_p`` and the in-medium wavelength are differentiated
    by central differences in frequency (Richardson-extrapolated), and
    their ratio gives the Rayleigh derivative.
    """
    if not wavelength > 0:
        raise DomainError("wavelength must be positive")
    f = C / wavelength
    _check_support(m, f)

    # Every model splits Re n into a constant base plus a small excess known
    # to full relative precision; differencing the excess avoids the
    # cancellation that otherwise costs a factor |n_g| in accuracy.
    base, _ = m.real_split(f)

    def ratio(h):
        fp, fm = f + h, f - h
        ep, em = m.real_split(np.array([fp, fm]))[1]
        de, span = ep - em, fp - fm
        dv = -C * de / ((base + ep) * (base + em))
        num = -base * span - span * ep - fm * de
        dl = C * num / (fp * (base + ep) * fm * (base + em))
        if dl == 0:
            raise SingularError("in-medium wavelength is stationary", operation="group_velocity_rayleigh")
        return dv / dl

    def vp(ff):
        return C / (base + m.real_split(np.array([ff]))[1][0])

    h = float(min(3e-4 * m.scale(f), 1e-3 * f))
    lo, hi = m.support
    h = min(h, 0.5 * (f - lo), 0.5 * (hi - f)) if math.isfinite(hi) else min(h, 0.5 * (f - lo))
    deriv = (4 * ratio(h / 2) - ratio(h)) / 3
    v0 = float(vp(f))
    return v0 - v0 / f * deriv


# --------------------------------------------------------------------------
# propagation


def transfer_function(m, L: float, f):
    """Physics-convention transfer ``exp(i 2 pi f n(f) L / c)``."""
    n = m.index(f)
    exponent = 2j * np.pi * np.asarray(f) * n * L / C
    if np.any(exponent.real > 700):
        raise NumericalError("transfer function overflows (gain too large)", operation="propagate")
    return np.exp(exponent)


def propagate(p: Pulse, m, L: float) -> Pulse:
    """Propagate ``p`` through a length ``L`` of medium ``m``.

    The time grid is unchanged, so a vacuum path of length ``L`` delays the
    envelope by ``L/c`` on the same axis. The transform is periodic: delays
    longer than the window wrap around, so size the grid for the longest path.
    """
    if L < 0:
        raise DomainError("length must be non-negative")
    spec = forward_transform(p)
    f = spec.frequencies
    power = np.abs(spec.bins) ** 2
    occupied = f[power > 1e-24 * power.max()] if power.max() > 0 else f[:0]
    try:
        if occupied.size:
            _check_support(m, occupied)
    except SupportError as exc:
        raise SupportError("pulse spectrum extends outside model support", operation="propagate") from exc
    # evaluate the model only on bins it supports; others carry no energy
    lo, hi = m.support
    inside = (f > lo) & (f <= hi) if lo == 0 else (f >= lo) & (f <= hi)
    h = np.zeros(f.size, dtype=complex)
    h[inside] = transfer_function(m, L, f[inside])
    out = apply_transfer(p, h)
    e_in = p.energy()
    if e_in > 0 and out.energy() < 1e-12 * e_in:
        raise AbsorbedError("pulse fully absorbed", operation="propagate")
    return out


@dataclass(frozen=True)
class ShiftReport:
    length: float
    peak_advance: float
    front_delay: float
    apparent_group_velocity: float
    apparent_group_index: float

    @property
    def regime(self) -> str:
        return classify_regime(self.apparent_group_velocity)


SUPERLUMINAL_TOLERANCE = 1e-6
_REGIME_RANK = {"negative": 0, "superluminal": 1, "subluminal-boundary": 2, "subluminal": 2}


def classify_regime(v_g: float) -> str:
    """``negative`` / ``superluminal`` / ``subluminal`` (with a boundary band around c)."""
    if v_g < 0:
        return "negative"
    if math.isinf(v_g):
        return "superluminal"
    if abs(v_g / C - 1) <= SUPERLUMINAL_TOLERANCE:
        return "subluminal-boundary"
    return "superluminal" if v_g > C else "subluminal"


def _apparent(L, advance):
    den = L / C - advance
    if L == 0:
        return C, 1.0
    if den == 0:
        return math.inf, 0.0
    v = L / den
    return v, C / v


def measure_shift(reference: Pulse, sample: Pulse, L: float,
                  threshold: float = DEFAULT_FRONT_THRESHOLD) -> ShiftReport:
    """Compare a medium-propagated pulse against its vacuum-propagated twin."""
    if (reference.t0, reference.dt, len(reference)) != (sample.t0, sample.dt, len(sample)):
        raise DomainError("reference and sample must share a time grid")
    advance = detect_peak(reference) - detect_peak(sample)
    front_delay = detect_front(sample, threshold) - detect_front(reference, threshold)
    v, ng = _apparent(L, advance)
    return ShiftReport(L, advance, front_delay, v, ng)


def wang_group_index(L: float, advance: float):
    """Apparent ``(v_g, n_g)`` from a cell length and measured peak advance."""
    if not L > 0:
        raise DomainError("length must be positive")
    den = L / C - advance
    if abs(den) < 1e-15:
        raise SingularError("peak leaves the cell as it enters: group velocity diverges",
                            operation="wang_group_index")
    v = L / den
    return v, C / v


def advancement_limit(p: Pulse, threshold: float = DEFAULT_FRONT_THRESHOLD) -> float:
    """Half the threshold-to-threshold duration of ``p``."""
    duration = detect_back(p, threshold) - detect_front(p, threshold)
    if not duration > 0:
        raise DetectionError("pulse has no measurable duration", operation="advancement_limit")
    return 0.5 * duration


def crossover_length(v_p: float, pulse_duration: float) -> float:
    """Smallest length at which the phase-velocity lag reaches half the pulse.

    Solves ``L/v_p - L/c = T/2``; returns ``inf`` when ``v_p >= c``.
    """
    if not (v_p > 0 and pulse_duration > 0):
        raise DomainError("phase velocity and pulse duration must be positive")
    if v_p >= C:
        return math.inf
    return 0.5 * pulse_duration / (1 / v_p - 1 / C)


@dataclass
class ReshapingScan:
    reports: list
    limit: float
    truncated: bool = False
    truncation_reason: str = ""
    transition_supported: bool = True
    transition_note: str = ""
    limit_violations: list = field(default_factory=list)

    @property
    def lengths(self):
        return [r.length for r in self.reports]

    @property
    def regimes(self) -> list[str]:
        return [r.regime for r in self.reports]

    @property
    def regime_sequence(self) -> list[str]:
        """Regimes with consecutive repeats collapsed; the boundary counts as subluminal."""
        seq = []
        for reg in self.regimes:
            reg = "subluminal" if reg == "subluminal-boundary" else reg
            if not seq or seq[-1] != reg:
                seq.append(reg)
        return seq

    @property
    def monotone(self) -> bool:
        ranks = [_REGIME_RANK[r] for r in self.regimes]
        return all(a <= b for a, b in zip(ranks, ranks[1:]))


def reshaping_scan(p: Pulse, m, lengths, threshold: float = DEFAULT_FRONT_THRESHOLD) -> ReshapingScan:
    """Peak/front shifts of ``p`` through ``m`` for each length in ``lengths``.

    Models with no loss or gain anywhere on the pulse spectrum (constant or
    linear real index) still get a scan, but ``transition_supported`` is
    False: a lossless linear group index moves the peak linearly forever.
    """
    lengths = [float(x) for x in lengths]
    if any(b <= a for a, b in zip(lengths, lengths[1:])):
        raise DomainError("lengths must be strictly ascending")
    limit = advancement_limit(p, threshold)
    scan = ReshapingScan([], limit)
    f = forward_transform(p).frequencies
    if isinstance(m, (Constant, LinearInF)) and is_lossless(m, f):
        scan.transition_supported = False
        scan.transition_note = ("lossless constant/linear index: the peak shift grows linearly "
                                "with length, no regime transition can be claimed")
    elif is_lossless(m, f):
        scan.transition_supported = False
        scan.transition_note = "model has no absorption or gain on the pulse spectrum"
    for L in lengths:
        try:
            ref = propagate(p, VACUUM, L)
            sample = propagate(p, m, L)
        except AbsorbedError as exc:
            scan.truncated = True
            scan.truncation_reason = f"fully absorbed at L={L:g} m: {exc}"
            break
        report = measure_shift(ref, sample, L, threshold)
        if report.peak_advance > limit:
            scan.limit_violations.append(L)
        scan.reports.append(report)
    return scan


# --------------------------------------------------------------------------
# effective index of a cascade


def effective_index_from_phase(resp: FrequencyResponse, f: float, D: float) -> float:
    """``n_r = c phi / (omega D)`` from the continuous transmission phase."""
    if not D > 0:
        raise DomainError("crystal length must be positive")
    idx = np.flatnonzero(np.isclose(resp.frequencies, f, rtol=1e-12, atol=0.0))
    if idx.size == 0:
        raise SupportError("frequency not on the response grid", operation="effective_index_from_phase")
    phi = float(resp.phase[idx[0]])
    return C * phi / (2 * np.pi * f * D)


# --------------------------------------------------------------------------
# gain doublets and presets


def gain_doublet(carrier, separation, linewidth, strength, background=1.0) -> LorentzSum:
    """Two identical gain lines at ``carrier +/- separation/2``."""
    lines = (
        LorentzLine(carrier - separation / 2, strength, linewidth, "gain"),
        LorentzLine(carrier + separation / 2, strength, linewidth, "gain"),
    )
    return LorentzSum(lines, background)


def tune_gain_doublet(carrier, separation, linewidth, target_group_index, background=1.0) -> LorentzSum:
    """Search the line strength giving ``target_group_index`` at the carrier."""
    def miss(s):
        return group_index(gain_doublet(carrier, separation, linewidth, s, background), carrier) - target_group_index

    base = miss(0.0)
    if base == 0:
        return gain_doublet(carrier, separation, linewidth, 0.0, background)
    if base < 0:
        raise DomainError("a gain doublet can only lower the group index")
    hi = 1e-12
    while miss(hi) > 0:
        hi *= 2
        if hi > 1.0:
            raise DomainError("target group index unreachable")
    s = brentq(miss, 0.0, hi, xtol=1e-18, rtol=1e-14, maxiter=200)
    return gain_doublet(carrier, separation, linewidth, s, background)


# --------------------------------------------------------------------------
# JSON (de)serialisation


def model_to_dict(m) -> dict:
    if isinstance(m, Constant):
        return {"type": "constant", "n": encode_complex(m.n)}
    if isinstance(m, LinearInF):
        return {"type": "linear", "n0": m.n0, "slope": m.slope, "f_ref": m.f_ref, "absorption": m.absorption}
    if isinstance(m, LorentzLine):
        return {"type": "lorentz", "f_res": m.f_res, "strength": m.strength,
                "linewidth": m.linewidth, "sign": m.sign}
    if isinstance(m, LorentzSum):
        return {"type": "sum", "background": encode_complex(m.background),
                "lines": [model_to_dict(x) for x in m.lines]}
    if isinstance(m, Tabulated):
        return {"type": "tabulated", "frequencies": m.frequencies.tolist(),
                "n_real": m.values.real.tolist(), "n_imag": m.values.imag.tolist()}
    raise TypeError(f"unsupported index model {type(m).__name__}")


def model_from_dict(d: dict, path: str = "model"):
    from .errors import ConfigError

    if not isinstance(d, dict) or "type" not in d:
        raise ConfigError("index model must be an object with a 'type'", path)
    kind = d["type"]
    try:
        if kind == "constant":
            return Constant(parse_complex(d.get("n", 1.0), path + ".n"))
        if kind == "linear":
            return LinearInF(float(d["n0"]), float(d["slope"]),
                             parse_quantity(d["f_ref"], "frequency", path + ".f_ref"),
                             float(d.get("absorption", 0.0)))
        if kind == "lorentz":
            return LorentzLine(parse_quantity(d["f_res"], "frequency", path + ".f_res"), float(d["strength"]),
                               parse_quantity(d["linewidth"], "frequency", path + ".linewidth"),
                               d.get("sign", "absorber"))
        if kind == "sum":
            lines = [model_from_dict(x, f"{path}.lines[{i}]") for i, x in enumerate(d["lines"])]
            return LorentzSum(tuple(lines), parse_complex(d.get("background", 1.0), path + ".background"))
        if kind == "tabulated":
            f = [parse_quantity(x, "frequency", f"{path}.frequencies[{i}]") for i, x in enumerate(d["frequencies"])]
            im = d.get("n_imag", [0.0] * len(f))
            return Tabulated(np.array(f), np.array(d["n_real"], dtype=float) + 1j * np.array(im, dtype=float))
        if kind == "gain-doublet":
            p = path
            if "host_velocity" in d:
                v = parse_quantity(d["host_velocity"], "velocity", p + ".host_velocity")
                if not 0 < v <= C:
                    raise ConfigError("host velocity must lie in (0, c]", p + ".host_velocity")
                background = C / v
            else:
                background = parse_complex(d.get("background", 1.0), p + ".background")
            return tune_gain_doublet(parse_quantity(d["carrier"], "frequency", p + ".carrier"),
                                     parse_quantity(d["separation"], "frequency", p + ".separation"),
                                     parse_quantity(d["linewidth"], "frequency", p + ".linewidth"),
                                     float(d["group_index"]), background)
    except KeyError as exc:
        raise ConfigError(f"missing required key {exc}", path) from None
    except DomainError as exc:
        raise ConfigError(str(exc), path) from None
    raise ConfigError(f"unknown index model type {kind!r}", path + ".type")
