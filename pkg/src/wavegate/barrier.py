"""Transmission and reflection of tunneling structures by transfer matrices.

All amplitudes use the physics time convention ``exp(-i w t)``: a wave
travelling a distance ``L`` in vacuum picks up ``exp(+i w L / c)``, so the
transmission phase grows with delay.

Layered structures (quantum barrier, waveguide section, dielectric stack)
share one kernel: a piecewise-constant wavenumber ``q`` with continuity of
the field and its derivative. Coaxial cascades use ABCD matrices with
explicit source and load impedances.
"""

from __future__ import annotations

from dataclasses import dataclass, field
import math
from typing import Callable, Union

import numpy as np

from .constants import C, CONST, H, HBAR
from .errors import DomainError, GridError, UnwrapError
from .units import encode_complex, parse_complex, parse_quantity


@dataclass(frozen=True)
class QuantumRect:
    V0: float
    width: float
    mass: float = CONST.m_e

    def __post_init__(self):
        if not self.V0 > 0:
            raise DomainError("barrier height must be positive")
        if not self.width >= 0:
            raise DomainError("barrier width must be non-negative")
        if not self.mass > 0:
            raise DomainError("mass must be positive")

    @property
    def length(self) -> float:
        return self.width


@dataclass(frozen=True)
class UndersizedWaveguide:
    """Waveguide section of cutoff ``f_c`` and length ``length``.

    ``ends="abrupt"`` joins it to feed guides of cutoff ``feed_cutoff``
    (0 means a TEM-like feed) with wave-impedance mismatch at both
    junctions; ``ends="matched"`` ignores the junctions.
    """

    f_c: float
    length: float
    feed_cutoff: float = 0.0
    ends: str = "abrupt"

    def __post_init__(self):
        if not self.f_c > 0:
            raise DomainError("cutoff frequency must be positive")
        if not self.length >= 0:
            raise DomainError("length must be non-negative")
        if not 0 <= self.feed_cutoff < self.f_c:
            raise DomainError("feed cutoff must lie in [0, f_c)")
        if self.ends not in ("abrupt", "matched"):
            raise DomainError("ends must be 'abrupt' or 'matched'")

    @property
    def V0(self) -> float:
        """Equivalent barrier height: the photon energy at cutoff."""
        return H * self.f_c


@dataclass(frozen=True)
class DielectricStack:
    """Layers ``(n, thickness)`` at normal incidence, vacuum on both sides."""

    layers: tuple

    def __post_init__(self):
        layers = tuple((complex(n), float(d)) for n, d in self.layers)
        if not layers:
            raise DomainError("stack needs at least one layer")
        for n, d in layers:
            if not d >= 0:
                raise DomainError("layer thickness must be non-negative")
            if n == 0:
                raise DomainError("refractive index must be nonzero")
        object.__setattr__(self, "layers", layers)

    @property
    def length(self) -> float:
        return sum(d for _, d in self.layers)

    @property
    def lossless(self) -> bool:
        return all(n.imag == 0 for n, _ in self.layers)

    def reversed(self) -> DielectricStack:
        return DielectricStack(self.layers[::-1])


@dataclass(frozen=True)
class CoaxialCrystal:
    """Cascade of line segments ``(Z, v_p, length)`` between source and load."""

    segments: tuple
    z_source: float = 50.0
    z_load: float = 50.0

    def __post_init__(self):
        segs = tuple((float(z), float(v), float(l)) for z, v, l in self.segments)
        if not segs:
            raise DomainError("crystal needs at least one segment")
        for z, v, l in segs:
            if not (z > 0 and v > 0 and l >= 0):
                raise DomainError("segment impedance, velocity and length must be positive")
        if not (self.z_source > 0 and self.z_load > 0):
            raise DomainError("source and load impedances must be positive")
        object.__setattr__(self, "segments", segs)

    @property
    def length(self) -> float:
        return sum(l for _, _, l in self.segments)


BarrierSpec = Union[QuantumRect, UndersizedWaveguide, DielectricStack, CoaxialCrystal]


@dataclass(frozen=True, eq=False)
class FrequencyResponse:
    """Complex transmission/reflection on an ascending frequency grid.

    ``phase`` is the continuous transmission phase. ``evaluator`` (when
    present) recomputes ``t`` at arbitrary frequencies so that delay
    estimators can differentiate off-grid.
    """

    frequencies: np.ndarray
    t: np.ndarray
    r: np.ndarray | None
    phase: np.ndarray
    spec: object = None
    evaluator: Callable | None = field(default=None, repr=False)

    def __post_init__(self):
        f = np.asarray(self.frequencies, dtype=float)
        if f.ndim != 1 or f.size < 1 or np.any(np.diff(f) <= 0):
            raise GridError("frequency grid must be strictly ascending")
        object.__setattr__(self, "frequencies", f)

    @property
    def power_transmission(self) -> np.ndarray:
        return np.abs(self.t) ** 2


# --------------------------------------------------------------------------
# kernels


def _sin_over(q, d):
    """sin(q d)/q, finite at q = 0, for complex q."""
    x = np.asarray(q * d, dtype=complex)
    small = np.abs(x) < 1e-8
    safe = np.where(small, 1.0, x)
    return np.where(small, d * (1 - x * x / 6), d * np.sin(safe) / safe)


def layer_matrix(q, d) -> np.ndarray:
    """Matrix carrying (psi, psi') across a layer of wavenumber ``q``, thickness ``d``.

    Shape ``(..., 2, 2)`` broadcasting over ``q``; the determinant is 1.
    """
    q = np.asarray(q, dtype=complex)
    cos = np.cos(q * d)
    s = _sin_over(q, d)
    m = np.empty(q.shape + (2, 2), dtype=complex)
    m[..., 0, 0] = cos
    m[..., 0, 1] = s
    m[..., 1, 0] = -q * q * s
    m[..., 1, 1] = cos
    return m


def solve_slab(m, k_in, k_out):
    """Transmission and reflection for a layer matrix between two media.

    Incident ``exp(i k_in x)`` from the left, transmitted ``t exp(i k_out (x - L))``.
    ``m`` must be unimodular, as every product of layer matrices is; the
    determinant is not recomputed because for opaque layers it is a
    difference of two huge, nearly equal numbers.
    """
    m11, m12, m21, m22 = m[..., 0, 0], m[..., 0, 1], m[..., 1, 0], m[..., 1, 1]
    denom = 1j * k_out * m11 + k_in * k_out * m12 - m21 + 1j * k_in * m22
    t = 2j * k_in / denom
    r = (m21 + 1j * k_in * m22 - 1j * k_out * (m11 + 1j * k_in * m12)) / denom
    return t, r


def line_matrix(beta, z, length) -> np.ndarray:
    """ABCD matrix of a lossless line, physics convention (j -> -i)."""
    theta = np.asarray(beta * length, dtype=complex)
    m = np.empty(theta.shape + (2, 2), dtype=complex)
    m[..., 0, 0] = np.cos(theta)
    m[..., 0, 1] = -1j * z * np.sin(theta)
    m[..., 1, 0] = -1j * np.sin(theta) / z
    m[..., 1, 1] = np.cos(theta)
    return m


def solve_abcd(m, z_source, z_load):
    """Power-wave S21 and S11 of an ABCD cascade between real impedances."""
    a, b, c, d = m[..., 0, 0], m[..., 0, 1], m[..., 1, 0], m[..., 1, 1]
    denom = a * z_load + b + c * z_source * z_load + d * z_source
    t = 2 * math.sqrt(z_source * z_load) / denom
    r = (a * z_load + b - c * z_source * z_load - d * z_source) / denom
    return t, r


def _identity(nf):
    m = np.zeros((nf, 2, 2), dtype=complex)
    m[:, 0, 0] = m[:, 1, 1] = 1
    return m


# --------------------------------------------------------------------------
# per-spec decomposition into elements


@dataclass
class _Layout:
    # each element: (function thickness -> matrices, thickness, max phase rate)
    elements: list
    solve: Callable


def _as_freq(f) -> np.ndarray:
    f = np.atleast_1d(np.asarray(f, dtype=float))
    if np.any(f <= 0):
        raise DomainError("frequencies must be positive")
    return f


def _quantum_wavenumbers(E, spec: QuantumRect):
    E = np.asarray(E, dtype=float)
    if np.any(E <= 0):
        raise DomainError("energy must be positive")
    k = np.sqrt(2 * spec.mass * E) / HBAR
    q = np.sqrt((2 * spec.mass * (E - spec.V0)).astype(complex)) / HBAR
    return k, q


def _waveguide_wavenumbers(f, spec: UndersizedWaveguide):
    if np.any(f <= spec.feed_cutoff):
        raise DomainError("frequency below the feed-guide cutoff")
    k = 2 * np.pi / C * np.sqrt(f**2 - spec.feed_cutoff**2)
    q = 2 * np.pi / C * np.sqrt((f**2 - spec.f_c**2).astype(complex))
    return k, q


def _layout(spec, f: np.ndarray) -> _Layout:
    if isinstance(spec, QuantumRect):
        k, q = _quantum_wavenumbers(H * f, spec)
        return _Layout(
            [(lambda d, q=q: layer_matrix(q, d), spec.width, np.abs(q.real))],
            lambda m: solve_slab(m, k, k),
        )
    if isinstance(spec, UndersizedWaveguide):
        k, q = _waveguide_wavenumbers(f, spec)
        if spec.ends == "matched":
            # identity "junctions": transmission is exp(i q L) exactly
            return _Layout(
                [(lambda d, q=q: layer_matrix(q, d), spec.length, np.abs(q.real))],
                lambda m: _matched_solve(m, q),
            )
        return _Layout(
            [(lambda d, q=q: layer_matrix(q, d), spec.length, np.abs(q.real))],
            lambda m: solve_slab(m, k, k),
        )
    if isinstance(spec, DielectricStack):
        k = 2 * np.pi * f / C
        elements = []
        for n, d in spec.layers:
            q = k * n
            elements.append((lambda dd, q=q: layer_matrix(q, dd), d, np.abs(q.real)))
        return _Layout(elements, lambda m: solve_slab(m, k, k))
    if isinstance(spec, CoaxialCrystal):
        elements = []
        for z, v, l in spec.segments:
            beta = 2 * np.pi * f / v
            elements.append((lambda ll, beta=beta, z=z: line_matrix(beta, z, ll), l, beta))
        return _Layout(elements, lambda m: solve_abcd(m, spec.z_source, spec.z_load))
    raise TypeError(f"unsupported barrier spec {type(spec).__name__}")


def _matched_solve(m, q):
    # For a single layer between "matched" ends the forward wave is the
    # eigen-solution exp(i q x). With m = layer_matrix(q, d),
    # m[0,0] - i q m[0,1] = exp(-i q d); its reciprocal avoids the cosh - sinh
    # cancellation that m[0,0] + i q m[0,1] suffers below cutoff.
    t = 1.0 / (m[..., 0, 0] - 1j * q * m[..., 0, 1])
    return t, np.zeros_like(t)


def transfer_matrix(spec, f) -> np.ndarray:
    """Total cascade matrix of ``spec`` at frequencies ``f``, shape ``(nf, 2, 2)``."""
    f = _as_freq(f)
    lay = _layout(spec, f)
    m = _identity(f.size)
    for fn, thickness, _ in lay.elements:
        m = fn(thickness) @ m
    return m


def transmission(spec, f):
    """``(t, r)`` arrays for any barrier spec at frequencies ``f``."""
    f = _as_freq(f)
    lay = _layout(spec, f)
    m = _identity(f.size)
    for fn, thickness, _ in lay.elements:
        m = fn(thickness) @ m
    return lay.solve(m)


_MAX_REFINE = 24


def cascade_phase(spec, f) -> np.ndarray:
    """Continuous transmission phase, tracked while the structure is grown.

    Starting from zero thickness (phase of the bare junction, real and
    positive here), each element is added in slices thin enough that the
    phase of ``t`` moves by less than pi/2 per slice. This fixes the
    integer branch of the phase without unwrapping across frequency.
    """
    f = _as_freq(f)
    lay = _layout(spec, f)
    m = _identity(f.size)
    t_prev = lay.solve(m)[0]
    phase = np.angle(t_prev)
    for fn, thickness, rate in lay.elements:
        if thickness == 0:
            continue
        slices = max(1, int(np.ceil(np.max(rate) * thickness / (np.pi / 8))))
        for _ in range(_MAX_REFINE):
            step = fn(thickness / slices)
            mm, tp, acc = m, t_prev, np.zeros_like(phase)
            ok = True
            for _ in range(slices):
                mm = step @ mm
                tn = lay.solve(mm)[0]
                inc = np.angle(tn / tp)
                if np.max(np.abs(inc)) > np.pi / 2:
                    ok = False
                    break
                acc += inc
                tp = tn
            if ok:
                m, t_prev, phase = mm, tp, phase + acc
                break
            slices *= 2
        else:
            raise UnwrapError("phase could not be tracked through the cascade", operation="cascade_phase")
    return phase


# --------------------------------------------------------------------------
# public per-variant operations


def quantum_transmission(E, spec: QuantumRect):
    """Closed-form transmission amplitude of a rectangular barrier.

    ``t = 1 / (cos(q d) - i (k^2 + q^2) sin(q d) / (2 k q))`` with
    ``q = sqrt(2m(E - V0))/hbar``; the E = V0 point uses the limit
    ``sin(qd)/q -> d``.
    """
    k, q = _quantum_wavenumbers(E, spec)
    d = spec.width
    s = _sin_over(q, d)
    t = 1.0 / (np.cos(q * d) - 0.5j * (k * k + q * q) * s / k)
    return t if np.ndim(E) else complex(t)


def waveguide_transmission(f, spec: UndersizedWaveguide):
    t, _ = transmission(spec, f)
    return t if np.ndim(f) else complex(t[0])


def stack_transmission(f, spec: DielectricStack):
    t, r = transmission(spec, f)
    return (t, r) if np.ndim(f) else (complex(t[0]), complex(r[0]))


def coax_transmission(f, spec: CoaxialCrystal):
    t, r = transmission(spec, f)
    return (t, r) if np.ndim(f) else (complex(t[0]), complex(r[0]))


def evanescent_decay(f, spec: UndersizedWaveguide):
    """Decay constant ``(2 pi / c) sqrt(f_c^2 - f^2)`` (zero above cutoff)."""
    f = np.asarray(f, dtype=float)
    return 2 * np.pi / C * np.sqrt(np.clip(spec.f_c**2 - f**2, 0, None))


def frequency_response(spec, grid, phase_mode: str = "cascade") -> FrequencyResponse:
    """Evaluate ``spec`` on ``grid``.

    For a QuantumRect the grid holds ``E / h``. ``phase_mode="unwrap"``
    replaces the cascade-tracked phase with ``numpy.unwrap`` of ``arg t``
    along the grid (the branch of the first point is then arbitrary).
    """
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0 or np.any(np.diff(grid) <= 0):
        raise GridError("frequency grid must be strictly ascending")
    t, r = transmission(spec, grid)
    if phase_mode == "cascade":
        phase = cascade_phase(spec, grid)
    elif phase_mode == "unwrap":
        phase = np.unwrap(np.angle(t))
    else:
        raise ValueError(f"unknown phase mode {phase_mode!r}")
    return FrequencyResponse(grid, t, r, phase, spec, lambda ff: transmission(spec, ff)[0])


# --------------------------------------------------------------------------
# builders


def quarter_wave_stack(n1, n2, f_design, periods, *, cap: bool = False) -> DielectricStack:
    """``periods`` repetitions of (n1, n2) quarter-wave layers at ``f_design``."""
    lam = C / f_design
    pair = [(n1, lam / (4 * complex(n1).real)), (n2, lam / (4 * complex(n2).real))]
    layers = pair * periods
    if cap:
        layers.append(pair[0])
    return DielectricStack(tuple(layers))


def quarter_wave_coax(z1, z2, v_p, f_design, periods, z_source=None, z_load=None) -> CoaxialCrystal:
    """Alternating quarter-wave segments of impedance ``z1`` and ``z2``."""
    quarter = v_p / (4 * f_design)
    segs = [(z1, v_p, quarter), (z2, v_p, quarter)] * periods
    return CoaxialCrystal(tuple(segs), z_source or z1, z_load or z1)


# --------------------------------------------------------------------------
# JSON (de)serialisation; field names follow the scenario schema


def spec_to_dict(spec) -> dict:
    if isinstance(spec, QuantumRect):
        return {"type": "quantum", "V0": spec.V0, "width": spec.width, "mass": spec.mass}
    if isinstance(spec, UndersizedWaveguide):
        return {"type": "waveguide", "f_c": spec.f_c, "length": spec.length,
                "feed_cutoff": spec.feed_cutoff, "ends": spec.ends}
    if isinstance(spec, DielectricStack):
        return {"type": "stack",
                "layers": [{"n": encode_complex(n), "thickness": d} for n, d in spec.layers]}
    if isinstance(spec, CoaxialCrystal):
        return {"type": "coax",
                "segments": [{"Z": z, "v_p": v, "length": l} for z, v, l in spec.segments],
                "z_source": spec.z_source, "z_load": spec.z_load}
    raise TypeError(f"unsupported barrier spec {type(spec).__name__}")


def spec_from_dict(d: dict, path: str = "barrier"):
    from .errors import ConfigError

    if not isinstance(d, dict) or "type" not in d:
        raise ConfigError("barrier must be an object with a 'type'", path)
    kind = d["type"]

    def q(key, dim, default=None):
        if key not in d:
            if default is None:
                raise ConfigError(f"missing required key '{key}'", path)
            return default
        return parse_quantity(d[key], dim, f"{path}.{key}")

    try:
        if kind == "quantum":
            return QuantumRect(q("V0", "energy"), q("width", "length"), q("mass", "mass", CONST.m_e))
        if kind == "waveguide":
            return UndersizedWaveguide(q("f_c", "frequency"), q("length", "length"),
                                       q("feed_cutoff", "frequency", 0.0), d.get("ends", "abrupt"))
        if kind == "stack":
            if "quarter_wave" in d:
                qw = d["quarter_wave"]
                p = f"{path}.quarter_wave"
                return quarter_wave_stack(parse_complex(qw["n1"], p + ".n1"), parse_complex(qw["n2"], p + ".n2"),
                                          parse_quantity(qw["f_design"], "frequency", p + ".f_design"),
                                          int(qw["periods"]), cap=bool(qw.get("cap", False)))
            layers = []
            for i, layer in enumerate(d.get("layers", [])):
                p = f"{path}.layers[{i}]"
                layers.append((parse_complex(layer["n"], p + ".n"),
                               parse_quantity(layer["thickness"], "length", p + ".thickness")))
            return DielectricStack(tuple(layers))
        if kind == "coax":
            if "quarter_wave" in d:
                qw = d["quarter_wave"]
                p = f"{path}.quarter_wave"
                return quarter_wave_coax(parse_quantity(qw["z1"], "impedance", p + ".z1"),
                                         parse_quantity(qw["z2"], "impedance", p + ".z2"),
                                         parse_quantity(qw["v_p"], "velocity", p + ".v_p"),
                                         parse_quantity(qw["f_design"], "frequency", p + ".f_design"),
                                         int(qw["periods"]))
            segs = []
            for i, s in enumerate(d.get("segments", [])):
                p = f"{path}.segments[{i}]"
                segs.append((parse_quantity(s["Z"], "impedance", p + ".Z"),
                             parse_quantity(s["v_p"], "velocity", p + ".v_p"),
                             parse_quantity(s["length"], "length", p + ".length")))
            return CoaxialCrystal(tuple(segs), q("z_source", "impedance", 50.0), q("z_load", "impedance", 50.0))
    except KeyError as exc:
        raise ConfigError(f"missing required key {exc}", path) from None
    except DomainError as exc:
        raise ConfigError(str(exc), path) from None
    raise ConfigError(f"unknown barrier type {kind!r}", path + ".type")
