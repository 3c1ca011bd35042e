"""Tunneling-time estimators and the competing closed-form predictions.

Sign convention: transmission phases grow with delay (see
:mod:`wavegate.barrier`), so the phase time is ``+d(phase)/d(omega)``.
Circuit-style responses written with ``exp(+j w t)`` are conjugated before
they reach these estimators (see :func:`wavegate.analog.rc_response`).
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
import math

import numpy as np

from .barrier import (
    CoaxialCrystal,
    DielectricStack,
    FrequencyResponse,
    QuantumRect,
    UndersizedWaveguide,
    frequency_response,
)
from .constants import C, CONST, H, HBAR
from .errors import DomainError, GridError, NoTunnelingError, SingularError, UnwrapError

HEIGHT_UNKNOWN = "height-unknown"
ABOVE_BARRIER = "above-barrier"

DEFAULT_REL_STEP = 1e-6


# --------------------------------------------------------------------------
# phase time


def phase_time(resp: FrequencyResponse, f: float, rel_step: float = DEFAULT_REL_STEP) -> float:
    """Group (phase) delay ``d(phase)/d(omega)`` of the transmission at ``f``.

    With an evaluator attached, the derivative is a central difference with
    relative step ``rel_step`` and ``rel_step/2`` combined by Richardson
    extrapolation; the phase difference is taken as ``arg(t+/t-)``, which
    needs no unwrapping. Without one, the stored phase is differentiated on
    the grid.
    """
    grid = resp.frequencies
    if grid.size < 3 or not grid[0] < f < grid[-1]:
        raise GridError("f must be interior to the response grid", operation="phase_time")
    if resp.evaluator is not None:

        def diff(h):
            tp, tm = resp.evaluator(np.array([f * (1 + h), f * (1 - h)]))
            return np.angle(tp / tm) / (2 * np.pi * 2 * f * h)

        coarse, fine = diff(rel_step), diff(rel_step / 2)
        return float((4 * fine - coarse) / 3)
    jumps = np.abs(np.diff(resp.phase))
    if np.any(jumps > np.pi / 2):
        raise UnwrapError("adjacent phase jump exceeds pi/2", operation="phase_time")
    slope = np.gradient(resp.phase, 2 * np.pi * grid)
    return float(np.interp(f, grid, slope))


def phase_time_at(spec, f: float, rel_step: float = DEFAULT_REL_STEP) -> float:
    """Phase time of ``spec`` at a single frequency (``E/h`` for quantum barriers)."""
    grid = np.array([f * (1 - 2 * rel_step), f, f * (1 + 2 * rel_step)])
    return phase_time(frequency_response(spec, grid), f, rel_step)


# --------------------------------------------------------------------------
# closed forms


def _check_tunneling(E, V0):
    if not E > 0:
        raise DomainError("energy must be positive")
    if not V0 > E:
        raise NoTunnelingError("energy at or above barrier height: no tunneling regime")


def uncertainty_bound(E: float, V0: float) -> float:
    """Upper bound ``hbar / (2 (V0 - E))`` from borrowing ``V0 - E`` from the vacuum."""
    _check_tunneling(E, V0)
    return HBAR / (2 * (V0 - E))


def hartman_time(E: float, V0: float) -> float:
    """Opaque-barrier phase time ``hbar / sqrt(E (V0 - E))``."""
    _check_tunneling(E, V0)
    return HBAR / math.sqrt(E * (V0 - E))


def universal_time(f: float) -> float:
    """Universal tunneling time: one period of the carrier."""
    if not f > 0:
        raise DomainError("frequency must be positive")
    return 1.0 / f


def coherence_gate(l: float, d: float) -> bool:
    """True when the coherence length covers the round trip, ``l >= 2 d``."""
    if not (l > 0 and d > 0):
        raise DomainError("coherence length and thickness must be positive")
    return l >= 2 * d


def traversal_velocity(length: float, time: float) -> float:
    if not (length > 0 and time > 0):
        raise DomainError("length and time must be positive")
    return length / time


# --------------------------------------------------------------------------
# relativistic energy borrowing


@dataclass(frozen=True)
class ParticleState:
    rest_mass: float
    v0: float
    v: float

    def __post_init__(self):
        if not self.rest_mass > 0:
            raise DomainError("rest mass must be positive")
        if not 0 <= self.v0 < C:
            raise DomainError("initial speed must lie in [0, c)")
        if self.v < 0:
            raise DomainError("traversal speed must be non-negative")


def _gamma(u):
    return 1.0 / math.sqrt(1.0 - (u / C) ** 2)


def borrowed_energy_relativistic(p: ParticleState) -> float:
    """``m0 c^2 (gamma(v) - gamma(v0))``; diverges as ``v -> c``."""
    if p.v >= C:
        raise SingularError("borrowed energy diverges for v >= c", operation="borrowed_energy_relativistic")
    return p.rest_mass * C**2 * (_gamma(p.v) - _gamma(p.v0))


HELIUM_IONIZATION_EV = 24.59


@dataclass(frozen=True)
class HeliumBound:
    time_hbar: float
    time_h: float
    # the quoted 85 as follows from h, not hbar
    quoted_form: str = "h"


def helium_tunneling_bound() -> HeliumBound:
    """Tunneling-time bound for helium ionisation, with both Planck constants."""
    de = HELIUM_IONIZATION_EV * CONST.eV
    return HeliumBound(HBAR / (2 * de), H / (2 * de))


@dataclass(frozen=True)
class ElectronEstimate:
    case: str
    distance: float
    time: float
    velocity: float
    note: str = ""


def electron_estimates() -> list[ElectronEstimate]:
    """Traversal-velocity estimates for the electron tunneling experiments.

    Helium: distance between the n=2 and n=1 orbits (``r = n^2 r0 / 2``),
    traversed in 0.4 as. Josephson: 10 nm in 100 ps. Water: 1 nm in 0.1 to 1 fs.
    """
    orbit = lambda n: n**2 * CONST.r0 / 2  # noqa: E731
    cases = [
        ("helium", orbit(2) - orbit(1), 0.4e-18, "minimum measured delay"),
        ("josephson", 10e-9, 100e-12, "order of magnitude"),
        ("water-fast", 1e-9, 0.1e-15, "Buttiker-Landauer lower end"),
        ("water-slow", 1e-9, 1e-15, "Buttiker-Landauer upper end"),
    ]
    return [ElectronEstimate(name, d, t, traversal_velocity(d, t), note) for name, d, t, note in cases]


# --------------------------------------------------------------------------
# delay report


@dataclass(frozen=True)
class DelayReport:
    frequency: float
    barrier_length: float
    phase_time: float
    uncertainty_bound: float | str
    hartman_time: float | str
    universal_time: float
    traversal_velocity: float
    coherence_length: float | None = None
    coherence_gate: bool | None = None
    reference_time: float | None = None

    def as_dict(self) -> dict:
        return asdict(self)


def barrier_height(spec, f: float):
    """``(E, V0)`` for specs with a known height, else ``None``."""
    if isinstance(spec, QuantumRect):
        return H * f, spec.V0
    if isinstance(spec, UndersizedWaveguide):
        return H * f, spec.V0
    if isinstance(spec, (DielectricStack, CoaxialCrystal)):
        return None
    raise TypeError(f"unsupported barrier spec {type(spec).__name__}")


def delay_report(spec, f: float, coherence_length: float | None = None,
                 reference_time: float | None = None) -> DelayReport:
    """Collect every competing delay prediction for ``spec`` at ``f``."""
    tau = phase_time_at(spec, f)
    length = spec.length
    heights = barrier_height(spec, f)
    if heights is None:
        bound = hart = HEIGHT_UNKNOWN
    else:
        E, V0 = heights
        if E < V0:
            bound, hart = uncertainty_bound(E, V0), hartman_time(E, V0)
        else:
            bound = hart = ABOVE_BARRIER
    velocity = length / tau if tau > 0 and length > 0 else math.nan
    gate = None
    if coherence_length is not None and length > 0:
        gate = coherence_gate(coherence_length, length)
    return DelayReport(f, length, tau, bound, hart, universal_time(f), velocity,
                       coherence_length, gate, reference_time)


# --------------------------------------------------------------------------
# Hartman saturation


@dataclass(frozen=True)
class HartmanScan:
    widths: np.ndarray
    phase_times: np.ndarray
    kappa: float
    asymptote: float
    knee_width: float | None
    hartman_limit: float


def hartman_scan(E: float, V0: float, mass: float, widths) -> HartmanScan:
    """Phase time of a rectangular barrier versus width.

    The asymptote is the phase time at the widest barrier; ``knee_width`` is
    the smallest width beyond which every phase time stays within 1% of it.
    """
    _check_tunneling(E, V0)
    widths = np.asarray(widths, dtype=float)
    if widths.ndim != 1 or widths.size == 0 or np.any(np.diff(widths) <= 0):
        raise GridError("widths must be strictly ascending")
    f = E / H
    times = np.array([phase_time_at(QuantumRect(V0, w, mass), f) for w in widths])
    asymptote = float(times[-1])
    close = np.abs(times - asymptote) <= 0.01 * abs(asymptote)
    knee = None
    # last index that is *not* within 1%, then the knee is the next width
    outside = np.flatnonzero(~close)
    if outside.size == 0:
        knee = float(widths[0])
    elif outside[-1] + 1 < widths.size:
        knee = float(widths[outside[-1] + 1])
    kappa = math.sqrt(2 * mass * (V0 - E)) / HBAR
    return HartmanScan(widths, times, kappa, asymptote, knee, hartman_time(E, V0))
