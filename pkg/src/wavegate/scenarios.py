"""Scenario configs, the bundled preset library, and the dispatcher behind the CLI."""

from __future__ import annotations

import copy
from dataclasses import dataclass, field, replace
import math

import jsonschema
import numpy as np

from . import analog, chronometry, dispersion, signal
from .barrier import QuantumRect, UndersizedWaveguide, evanescent_decay, spec_from_dict, transmission
from .constants import CONST, H
from .errors import ConfigError, DomainError
from .units import parse_quantity

KINDS = ("tunnel", "disperse", "scan", "rc", "prism", "dipole", "tables", "electron", "gate", "hartman")

COLUMNS = {
    "tunnel": ("case", "frequency_hz", "barrier_length_m", "phase_time_s", "uncertainty_bound_s",
               "hartman_time_s", "universal_time_s", "traversal_velocity_m_s", "coherence_length_m",
               "coherence_gate", "reference_time_s"),
    "disperse": ("time_s", "re", "im", "envelope"),
    "scan": ("length_m", "peak_advance_s", "front_delay_s", "group_velocity_m_s", "group_index",
             "regime", "advancement_limit_s"),
    "rc": ("omega_rad_s", "omega_rc", "transfer_re", "transfer_im", "magnitude", "phase_rad",
           "group_delay_s", "group_delay_numeric_s"),
    "prism": ("theta_deg", "gap_m", "coherence_length_m", "reach_m", "outcome"),
    "dipole": ("r_m", "kr", "e_abs", "h_abs", "e_near_abs", "h_near_abs", "e_rel_error", "h_rel_error"),
    "tables": ("theta_deg", "d_mm", "l_mm"),
    "electron": ("case", "distance_m", "time_s", "velocity_m_s", "note"),
    "gate": ("thickness_m", "kappa_d", "power_transmission", "log_power_transmission", "gate_allowed"),
    "hartman": ("width_m", "kappa_d", "phase_time_s", "hartman_time_s", "ratio"),
}

_REQUIRED = {
    "disperse": ["model", "pulse", "length"],
    "scan": ["model", "pulse", "lengths"],
    "rc": ["R", "C", "omega"],
    "prism": ["theta_deg", "gap", "coherence_length"],
    "dipole": ["p", "k", "n", "r"],
    "tables": ["table"],
    "gate": ["barrier", "frequency", "thicknesses"],
    "hartman": ["E", "V0", "kappa_d"],
}

SCHEMA = {
    "type": "object",
    "required": ["name", "kind", "parameters"],
    "additionalProperties": False,
    "properties": {
        "name": {"type": "string", "minLength": 1},
        "kind": {"enum": list(KINDS)},
        "parameters": {"type": "object"},
        "output": {
            "type": "object",
            "additionalProperties": False,
            "properties": {"format": {"enum": ["csv", "json"]}, "path": {"type": "string"}},
        },
    },
    "allOf": [
        {"if": {"properties": {"kind": {"const": k}}, "required": ["kind"]},
         "then": {"properties": {"parameters": {"required": req}}}}
        for k, req in _REQUIRED.items()
    ] + [
        {"if": {"properties": {"kind": {"const": "tunnel"}}, "required": ["kind"]},
         "then": {"properties": {"parameters": {"anyOf": [{"required": ["cases"]},
                                                          {"required": ["barrier", "frequencies"]}]}}}},
    ],
}


@dataclass
class ScenarioConfig:
    name: str
    kind: str
    parameters: dict
    output_format: str = "csv"
    output_path: str | None = None

    @classmethod
    def from_dict(cls, d) -> ScenarioConfig:
        validator = jsonschema.Draft202012Validator(SCHEMA)
        error = jsonschema.exceptions.best_match(validator.iter_errors(d))
        if error is not None:
            path = ".".join(str(x) for x in error.absolute_path) or "<root>"
            raise ConfigError(error.message, path)
        out = d.get("output", {})
        return cls(d["name"], d["kind"], d["parameters"], out.get("format", "csv"), out.get("path"))

    def to_dict(self) -> dict:
        d = {"name": self.name, "kind": self.kind, "parameters": self.parameters,
             "output": {"format": self.output_format}}
        if self.output_path:
            d["output"]["path"] = self.output_path
        return d


@dataclass
class RunResult:
    name: str
    kind: str
    columns: tuple
    rows: list
    summary: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)
    status: int = 0


# --------------------------------------------------------------------------
# parameter parsing


def _param(params, key, dim=None, default=None, path="parameters"):
    if key not in params:
        if default is None:
            raise ConfigError(f"missing required key '{key}'", path)
        return default
    return parse_quantity(params[key], dim, f"{path}.{key}")


def parse_sweep(value, dim=None, path="") -> np.ndarray:
    """An explicit list or ``{"start", "stop", "num", "spacing"}``; must be nonempty and ascending."""
    if isinstance(value, list):
        out = np.array([parse_quantity(v, dim, f"{path}[{i}]") for i, v in enumerate(value)])
    elif isinstance(value, dict):
        try:
            start = parse_quantity(value["start"], dim, path + ".start")
            stop = parse_quantity(value["stop"], dim, path + ".stop")
            num = value["num"]
        except KeyError as exc:
            raise ConfigError(f"sweep is missing {exc}", path) from None
        if not isinstance(num, int) or isinstance(num, bool) or num < 1:
            raise ConfigError("num must be a positive integer", path + ".num")
        spacing = value.get("spacing", "linear")
        if spacing == "linear":
            out = np.linspace(start, stop, num)
        elif spacing == "log":
            if not (start > 0 and stop > 0):
                raise ConfigError("log sweep needs positive bounds", path)
            out = np.geomspace(start, stop, num)
        else:
            raise ConfigError("spacing must be 'linear' or 'log'", path + ".spacing")
    else:
        raise ConfigError("expected a list or a sweep object", path)
    if out.size == 0:
        raise ConfigError("sweep is empty", path)
    if np.any(np.diff(out) <= 0):
        raise ConfigError("sweep must be strictly ascending", path)
    return out


def parse_pulse(d, path="parameters.pulse") -> signal.Pulse:
    if not isinstance(d, dict):
        raise ConfigError("pulse must be an object", path)
    shape = d.get("shape", "gaussian")
    builders = {"gaussian": signal.make_gaussian_pulse, "hann": signal.make_hann_pulse,
                "rect": signal.make_rect_pulse}
    if shape not in builders:
        raise ConfigError(f"unknown pulse shape {shape!r}", path + ".shape")
    n = d.get("n_samples", 4096)
    if not isinstance(n, int) or isinstance(n, bool):
        raise ConfigError("n_samples must be an integer", path + ".n_samples")
    t0 = _param(d, "t0", "time", math.nan, path)
    try:
        return builders[shape](_param(d, "center", "time", 0.0, path), _param(d, "width", "time", path=path),
                               _param(d, "carrier", "frequency", path=path), n,
                               _param(d, "dt", "time", path=path), None if math.isnan(t0) else t0)
    except DomainError as exc:
        raise ConfigError(str(exc), path) from None


def _vector(value, path):
    if not (isinstance(value, list) and len(value) == 3):
        raise ConfigError("expected a 3-vector", path)
    return np.array([parse_quantity(v, path=f"{path}[{i}]") for i, v in enumerate(value)], dtype=float)


def _build(fn, path):
    try:
        return fn()
    except DomainError as exc:
        raise ConfigError(str(exc), path) from None


# --------------------------------------------------------------------------
# runners


def _coherence(params, path):
    """``coherence_length`` directly, or from a ``coherence_band`` of low/high/center frequencies."""
    if "coherence_length" in params:
        return _param(params, "coherence_length", "length", path=path)
    if "coherence_band" in params:
        b, bp = params["coherence_band"], path + ".coherence_band"
        if not isinstance(b, dict):
            raise ConfigError("expected an object with low, high, center", bp)
        return _build(lambda: signal.coherence_length_from_band(
            _param(b, "low", "frequency", path=bp), _param(b, "high", "frequency", path=bp),
            _param(b, "center", "frequency", path=bp)), bp)
    return None


def _run_tunnel(params):
    cases = params.get("cases")
    if cases is None:
        cases = [{"label": params.get("label", ""), **{k: v for k, v in params.items() if k != "cases"}}]
    if not isinstance(cases, list) or not cases:
        raise ConfigError("cases must be a nonempty list", "parameters.cases")
    rows, summary = [], {}
    for i, case in enumerate(cases):
        path = f"parameters.cases[{i}]" if "cases" in params else "parameters"
        for key in ("barrier", "frequencies"):
            if key not in case:
                raise ConfigError(f"missing required key '{key}'", path)
        spec = spec_from_dict(case["barrier"], path + ".barrier")
        freqs = parse_sweep(case["frequencies"], "frequency", path + ".frequencies")
        l = _coherence(case, path)
        ref = _param(case, "reference_time", "time", math.nan, path)
        label = str(case.get("label", f"case{i}"))
        for f in freqs:
            rep = chronometry.delay_report(spec, float(f), l, None if math.isnan(ref) else ref)
            rows.append({"case": label, "frequency_hz": rep.frequency, "barrier_length_m": rep.barrier_length,
                         "phase_time_s": rep.phase_time, "uncertainty_bound_s": rep.uncertainty_bound,
                         "hartman_time_s": rep.hartman_time, "universal_time_s": rep.universal_time,
                         "traversal_velocity_m_s": rep.traversal_velocity, "coherence_length_m": l,
                         "coherence_gate": rep.coherence_gate, "reference_time_s": rep.reference_time})
        if l is not None:
            summary[f"{label}.coherence_length_m"] = l
    prov = {"reference_time_s": "measured delay carried for comparison only; never computed",
            "uncertainty_bound_s": "hbar / (2 (V0 - E)) with E = h f, V0 = h f_c",
            "hartman_time_s": "opaque-barrier limit hbar / sqrt(E (V0 - E))",
            "universal_time_s": "one carrier period, 1/f",
            "phase_time_s": "d(arg t)/d(omega) of the transfer-matrix transmission"}
    return rows, summary, prov


def _scan_inputs(params):
    model = dispersion.model_from_dict(params["model"], "parameters.model")
    pulse = parse_pulse(params["pulse"])
    return model, pulse


def _run_disperse(params):
    model, pulse = _scan_inputs(params)
    L = _param(params, "length", "length")
    if L < 0:
        raise ConfigError("length must be non-negative", "parameters.length")
    out = dispersion.propagate(pulse, model, L)
    ref = dispersion.propagate(pulse, dispersion.VACUUM, L)
    rep = dispersion.measure_shift(ref, out, L)
    rows = [{"time_s": t, "re": a.real, "im": a.imag, "envelope": abs(a)} for t, a in zip(out.times, out.samples)]
    summary = {"length_m": L, "peak_advance_s": rep.peak_advance, "front_delay_s": rep.front_delay,
               "group_velocity_m_s": rep.apparent_group_velocity, "group_index": rep.apparent_group_index,
               "regime": rep.regime, "energy_ratio": out.energy() / pulse.energy()}
    return rows, summary, {}


def _run_scan(params):
    model, pulse = _scan_inputs(params)
    lengths = parse_sweep(params["lengths"], "length", "parameters.lengths")
    if lengths[0] < 0:
        raise ConfigError("lengths must be non-negative", "parameters.lengths")
    scan = dispersion.reshaping_scan(pulse, model, lengths)
    rows = [{"length_m": r.length, "peak_advance_s": r.peak_advance, "front_delay_s": r.front_delay,
             "group_velocity_m_s": r.apparent_group_velocity, "group_index": r.apparent_group_index,
             "regime": r.regime, "advancement_limit_s": scan.limit} for r in scan.reports]
    summary = {"regime_sequence": scan.regime_sequence, "monotone": scan.monotone,
               "advancement_limit_s": float(scan.limit), "limit_violations": scan.limit_violations,
               "truncated": scan.truncated, "truncation_reason": scan.truncation_reason,
               "transition_supported": scan.transition_supported, "transition_note": scan.transition_note,
               "carrier_group_index": dispersion.group_index(model, pulse.carrier)}
    if "crossover" in params:
        cp = params["crossover"]
        v = _param(cp, "phase_velocity", "velocity", path="parameters.crossover")
        T = _param(cp, "pulse_duration", "time", path="parameters.crossover")
        summary["crossover_length_m"] = _build(lambda: dispersion.crossover_length(v, T), "parameters.crossover")
    if "reference" in params:
        rp = params["reference"]
        L = _param(rp, "length", "length", path="parameters.reference")
        adv = _param(rp, "advance", "time", path="parameters.reference")
        v, ng = dispersion.wang_group_index(L, adv)
        summary.update({"reference_length_m": L, "reference_advance_s": adv,
                        "reference_group_velocity_m_s": v, "reference_group_index": ng})
    prov = {"regime": "negative if v_g < 0; superluminal if v_g > c (1 + 1e-6); subluminal otherwise",
            "advancement_limit_s": "half the threshold-to-threshold input duration"}
    return rows, summary, prov


def _run_rc(params):
    net = _build(lambda: analog.RCNetwork(_param(params, "R", "impedance"), _param(params, "C", "capacitance")),
                 "parameters")
    w = parse_sweep(params["omega"], "angular_frequency", "parameters.omega")
    if w[0] <= 0:
        raise ConfigError("angular frequencies must be positive", "parameters.omega")
    rows = []
    for wi in w:
        h = analog.rc_transfer(net, wi)
        # a local three-point grid; the evaluator does the differencing
        pad = analog.rc_response(net, np.array([wi * (1 - 1e-3), wi, wi * (1 + 1e-3)]))
        rows.append({"omega_rad_s": wi, "omega_rc": wi * net.tau, "transfer_re": h.real, "transfer_im": h.imag,
                     "magnitude": abs(h), "phase_rad": analog.rc_phase(net, wi),
                     "group_delay_s": analog.rc_group_delay(net, wi),
                     "group_delay_numeric_s": chronometry.phase_time(pad, wi / (2 * np.pi))})
    return rows, {"rc_s": net.tau}, {"group_delay_s": "RC / (1 + (omega R C)^2)",
                                      "group_delay_numeric_s": "-d(phase)/d(omega) by central difference"}


def _run_prism(params):
    thetas = parse_sweep(params["theta_deg"] if isinstance(params["theta_deg"], (list, dict))
                         else [params["theta_deg"]], None, "parameters.theta_deg")
    gap = _param(params, "gap", "length")
    l = _param(params, "coherence_length", "length")
    crit = math.radians(_param(params, "critical_angle_deg", None, 29.0))
    rows = []
    for t in thetas:
        g = _build(lambda: analog.PrismGeometry(math.radians(t), gap, critical_angle=crit), "parameters")
        outcome = _build(lambda: analog.prism_tunneling_allowed(g, l), "parameters")
        rows.append({"theta_deg": t, "gap_m": gap, "coherence_length_m": l,
                     "reach_m": l * math.cos(g.theta), "outcome": outcome.value})
    return rows, {}, {"reach_m": "coherence length projected across the gap, l cos(theta)"}


def _run_dipole(params):
    src = _build(lambda: analog.DipoleSource(_vector(params["p"], "parameters.p"),
                                             _param(params, "k", "wavenumber")), "parameters")
    n = _vector(params["n"], "parameters.n")
    rs = parse_sweep(params["r"], "length", "parameters.r")
    rows = []
    for r in rs:
        E, Hf = _build(lambda: analog.dipole_fields(src, r, n), "parameters")
        En, Hn = analog.near_zone_fields(src, r, n)
        e_abs, h_abs = np.linalg.norm(E), np.linalg.norm(Hf)
        en_abs, hn_abs = np.linalg.norm(En), np.linalg.norm(Hn)
        rows.append({"r_m": r, "kr": src.k * r, "e_abs": e_abs, "h_abs": h_abs, "e_near_abs": en_abs,
                     "h_near_abs": hn_abs,
                     "e_rel_error": np.linalg.norm(E - En) / en_abs if en_abs > 0 else math.nan,
                     "h_rel_error": np.linalg.norm(Hf - Hn) / hn_abs if hn_abs > 0 else math.nan})
    return rows, {"wave_impedance_ohm": CONST.z0}, {}


def _run_tables(params):
    if params["table"] != "bose":
        raise ConfigError(f"unknown table {params['table']!r}", "parameters.table")
    table = analog.bose_table()
    rows = [{"theta_deg": r.theta_deg, "d_mm": r.d_mm, "l_mm": r.l_mm} for r in table]
    ls = [r.l_mm for r in table]
    return rows, {"l_min_mm": min(ls), "l_max_mm": max(ls)}, {"l_mm": "d / cos(theta)"}


def _run_electron(params):
    rows = [{"case": e.case, "distance_m": e.distance, "time_s": e.time, "velocity_m_s": e.velocity,
             "note": e.note} for e in chronometry.electron_estimates()]
    hb = chronometry.helium_tunneling_bound()
    summary = {"helium_bound_hbar_s": hb.time_hbar, "helium_bound_h_s": hb.time_h,
               "helium_bound_ratio": hb.time_h / hb.time_hbar, "quoted_form": hb.quoted_form}
    return rows, summary, {"time_s": "reported delays, used as inputs"}


def coherence_gate_curves(spec, l: float, thicknesses, f: float):
    """Standard transmitted power next to the binary coherence-gate verdict.

    ``spec`` is a waveguide or rectangular barrier whose length is swept
    over ``thicknesses``; the gate allows tunneling only when ``l >= 2 d``.
    Returns ``(rows, summary)``; the summary carries the fitted log-power
    slope, ``-2 kappa`` and the first thickness where the two models disagree.
    """
    d = np.asarray(thicknesses, dtype=float)
    if d.ndim != 1 or d.size == 0 or np.any(np.diff(d) <= 0) or d[0] <= 0:
        raise DomainError("thicknesses must be positive and strictly ascending")
    if isinstance(spec, UndersizedWaveguide):
        specs = [replace(spec, length=x) for x in d]
        kappa = float(evanescent_decay(f, spec))
    elif isinstance(spec, QuantumRect):
        specs = [replace(spec, width=x) for x in d]
        E = H * f
        if not E < spec.V0:
            raise DomainError("energy must lie below the barrier")
        kappa = math.sqrt(2 * spec.mass * (spec.V0 - E)) / CONST.hbar
    else:
        raise DomainError("gate curves need a waveguide or rectangular barrier")
    if not kappa > 0:
        raise DomainError("frequency is not in the evanescent regime")
    power = np.array([abs(transmission(s, np.array([f]))[0][0]) ** 2 for s in specs])
    rows, divergence = [], None
    for x, pw in zip(d, power):
        allowed = chronometry.coherence_gate(l, x)
        if divergence is None and not allowed and pw > 0:
            divergence = float(x)
        rows.append({"thickness_m": x, "kappa_d": kappa * x, "power_transmission": pw,
                     "log_power_transmission": math.log(pw) if pw > 0 else -math.inf, "gate_allowed": allowed})
    opaque = kappa * d >= 2
    slope = math.nan
    if np.count_nonzero(opaque) >= 2:
        slope = float(np.polyfit(d[opaque], np.log(power[opaque]), 1)[0])
    summary = {"kappa_per_m": kappa, "expected_slope_per_m": -2 * kappa, "fitted_slope_per_m": slope,
               "slope_relative_error": abs(slope / (-2 * kappa) - 1) if math.isfinite(slope) else math.nan,
               "gate_limit_m": l / 2, "divergence_thickness_m": divergence}
    return rows, summary


def _run_gate(params):
    spec = spec_from_dict(params["barrier"], "parameters.barrier")
    f = _param(params, "frequency", "frequency")
    l = _coherence(params, "parameters")
    if l is None:
        raise ConfigError("need coherence_length or coherence_band", "parameters")
    d = parse_sweep(params["thicknesses"], "length", "parameters.thicknesses")
    rows, summary = _build(lambda: coherence_gate_curves(spec, l, d, f), "parameters")
    return rows, summary, {"gate_allowed": "coherence length at least twice the thickness",
                           "power_transmission": "|t|^2 from the transfer-matrix model"}


def _run_hartman(params):
    E = _param(params, "E", "energy")
    V0 = _param(params, "V0", "energy")
    mass = _param(params, "mass", "mass", CONST.m_e)
    kd = parse_sweep(params["kappa_d"], None, "parameters.kappa_d")
    if not 0 < E < V0:
        raise ConfigError("need 0 < E < V0", "parameters")
    if kd[0] <= 0:
        raise ConfigError("kappa_d must be positive", "parameters.kappa_d")
    kappa = math.sqrt(2 * mass * (V0 - E)) / CONST.hbar
    scan = chronometry.hartman_scan(E, V0, mass, kd / kappa)
    rows = [{"width_m": w, "kappa_d": w * kappa, "phase_time_s": t, "hartman_time_s": scan.hartman_limit,
             "ratio": t / scan.hartman_limit} for w, t in zip(scan.widths, scan.phase_times)]
    summary = {"asymptote_s": scan.asymptote, "knee_width_m": scan.knee_width,
               "knee_kappa_d": None if scan.knee_width is None else scan.knee_width * kappa,
               "hartman_time_s": scan.hartman_limit}
    return rows, summary, {"hartman_time_s": "hbar / sqrt(E (V0 - E))"}


_RUNNERS = {"tunnel": _run_tunnel, "disperse": _run_disperse, "scan": _run_scan, "rc": _run_rc,
            "prism": _run_prism, "dipole": _run_dipole, "tables": _run_tables, "electron": _run_electron,
            "gate": _run_gate, "hartman": _run_hartman}


def run_scenario(cfg: ScenarioConfig | dict) -> RunResult:
    """Validate and run one scenario.

    Configuration problems raise ConfigError; failures inside the numerics
    propagate as the module's own WavegateError subclass.
    """
    if isinstance(cfg, dict):
        cfg = ScenarioConfig.from_dict(cfg)
    if cfg.kind not in _RUNNERS:
        raise ConfigError(f"unknown kind {cfg.kind!r}", "kind")
    rows, summary, prov = _RUNNERS[cfg.kind](cfg.parameters)
    cols = COLUMNS[cfg.kind]
    prov = {k: v for k, v in prov.items() if k in cols}
    return RunResult(cfg.name, cfg.kind, cols, rows, summary, prov)


# --------------------------------------------------------------------------
# preset library

_NIMTZ_GUIDE = {"type": "waveguide", "f_c": "9.49GHz", "feed_cutoff": "6.557GHz"}
_NIMTZ_BAND = {"low": "8.2GHz", "high": "9.2GHz", "center": "8.7GHz"}

PRESETS = {
    "bose-tables": {"name": "bose-tables", "kind": "tables", "parameters": {"table": "bose"}},
    "nimtz-waveguide": {
        "name": "nimtz-waveguide",
        "kind": "tunnel",
        "parameters": {"cases": [
            {"label": "100mm", "barrier": {**_NIMTZ_GUIDE, "length": "100mm"},
             "frequencies": ["8.2GHz", "8.7GHz", "9.2GHz"], "coherence_band": _NIMTZ_BAND,
             "reference_time": "130ps"},
            {"label": "114.2mm", "barrier": {**_NIMTZ_GUIDE, "length": "114.2mm"},
             "frequencies": ["8.2GHz", "8.7GHz", "9.2GHz"], "coherence_band": _NIMTZ_BAND,
             "reference_time": "81ps"},
        ]},
    },
    "wang-cell": {
        "name": "wang-cell",
        "kind": "scan",
        "parameters": {
            "model": {"type": "gain-doublet", "carrier": "352THz", "separation": "2.7MHz",
                      "linewidth": "0.46MHz", "group_index": -310.0},
            "pulse": {"shape": "gaussian", "center": 0.0, "width": "3.7us", "carrier": "352THz",
                      "n_samples": 4096, "dt": "8ns"},
            "lengths": {"start": "1cm", "stop": "6cm", "num": 6},
            "reference": {"length": "6cm", "advance": "62ns"},
        },
    },
    "hache-crossover": {
        "name": "hache-crossover",
        "kind": "scan",
        "parameters": {
            "model": {"type": "gain-doublet", "carrier": "1GHz", "separation": "3MHz",
                      "linewidth": "2MHz", "group_index": -0.3, "host_velocity": "0.66c"},
            "pulse": {"shape": "hann", "center": 0.0, "width": "2us", "carrier": "1GHz",
                      "n_samples": 8192, "dt": "2ns", "t0": "-2us"},
            "lengths": {"start": "5m", "stop": "120m", "num": 24},
            "crossover": {"phase_velocity": "0.66c", "pulse_duration": "2us"},
        },
    },
    "hartman-saturation": {
        "name": "hartman-saturation",
        "kind": "hartman",
        "parameters": {"E": "1eV", "V0": "2eV", "kappa_d": {"start": 0.25, "stop": 12.0, "num": 48}},
    },
    "rc-delay": {
        "name": "rc-delay",
        "kind": "rc",
        "parameters": {"R": "1kohm", "C": "1nF",
                       "omega": {"start": "1e4rad/s", "stop": "1e8rad/s", "num": 41, "spacing": "log"}},
    },
    "helium-electron": {"name": "helium-electron", "kind": "electron", "parameters": {}},
    "coherence-gate-curves": {
        "name": "coherence-gate-curves",
        "kind": "gate",
        "parameters": {"barrier": {**_NIMTZ_GUIDE, "length": "100mm"}, "frequency": "8.7GHz",
                       "coherence_band": _NIMTZ_BAND,
                       "thicknesses": {"start": "5mm", "stop": "300mm", "num": 60}},
    },
    "dipole-near-zone": {
        "name": "dipole-near-zone",
        "kind": "dipole",
        "parameters": {"p": [0.0, 0.0, 1e-12], "k": "1 1/m", "n": [1.0, 0.0, 0.0],
                       "r": {"start": "1mm", "stop": "1000m", "num": 13, "spacing": "log"}},
    },
    "bose-prism": {
        "name": "bose-prism",
        "kind": "prism",
        "parameters": {"theta_deg": [20.0, 30.0, 45.0, 60.0], "gap": "10mm", "coherence_length": "15mm"},
    },
}


def list_presets() -> list[str]:
    return list(PRESETS)


def preset_config(name: str) -> ScenarioConfig:
    if name not in PRESETS:
        raise ConfigError(f"unknown preset {name!r}; try one of {', '.join(PRESETS)}", "preset")
    return ScenarioConfig.from_dict(copy.deepcopy(PRESETS[name]))


def run_preset(name: str) -> RunResult:
    return run_scenario(preset_config(name))
