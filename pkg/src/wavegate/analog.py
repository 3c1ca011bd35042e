"""Non-optical analogues: an RC high-pass, dipole near fields, prism tunneling geometry.

Circuit quantities use the engineering ``exp(+j w t)`` convention, as circuit
texts do. :func:`rc_response` conjugates into the library's physics
convention before handing the result to the delay estimators.

Dipole fields are SI and drop the ``exp(-i w t)`` time factor.
"""

from __future__ import annotations

from dataclasses import dataclass
import enum
import math

import numpy as np

from .barrier import FrequencyResponse
from .constants import C, CONST
from .errors import DomainError, SingularError

# --------------------------------------------------------------------------
# RC network


@dataclass(frozen=True)
class RCNetwork:
    R: float
    C: float

    def __post_init__(self):
        if not (self.R > 0 and self.C > 0):
            raise DomainError("R and C must be positive")

    @property
    def tau(self) -> float:
        return self.R * self.C


def _scalar(a):
    a = np.asarray(a)
    return a.item() if a.ndim == 0 else a


def _omega(omega):
    w = np.asarray(omega, dtype=float)
    if np.any(~(w > 0)):
        raise DomainError("angular frequency must be positive")
    return w


def rc_transfer(net: RCNetwork, omega, form: str = "compact"):
    """Voltage ratio across the load ``R``, series capacitor ``C``.

    ``form="compact"`` evaluates ``jwRC / (1 + jwRC)``; ``form="expanded"``
    evaluates the same quantity written as separate real and imaginary
    fractions. Both are kept so that one guards the other.
    """
    x = _omega(omega) * net.tau
    if form == "compact":
        out = 1j * x / (1 + 1j * x)
    elif form == "expanded":
        den = 1 + x**2
        out = x**2 / den + 1j * x / den
    else:
        raise DomainError(f"unknown form {form!r}")
    return _scalar(out)


def rc_phase(net: RCNetwork, omega):
    """Phase lead of the output, ``arctan(1 / (w R C))``, in (0, pi/2)."""
    x = _omega(omega) * net.tau
    out = np.arctan2(1.0, x)
    return _scalar(out)


def rc_group_delay(net: RCNetwork, omega):
    """``-d(phase)/dw = RC / (1 + (w R C)^2)``."""
    x = _omega(omega) * net.tau
    out = net.tau / (1 + x**2)
    return _scalar(out)


def rc_response(net: RCNetwork, omegas) -> FrequencyResponse:
    """Physics-convention response of the network on an angular-frequency grid."""
    w = _omega(omegas)

    def evaluator(f):
        return np.conj(rc_transfer(net, 2 * np.pi * np.asarray(f, dtype=float)))

    t = np.atleast_1d(evaluator(w / (2 * np.pi)))
    return FrequencyResponse(w / (2 * np.pi), t, None, -np.atleast_1d(rc_phase(net, w)), net, evaluator)


# --------------------------------------------------------------------------
# dipole fields


@dataclass(frozen=True, eq=False)
class DipoleSource:
    p: np.ndarray
    k: float

    def __post_init__(self):
        p = np.asarray(self.p, dtype=complex)
        if p.shape != (3,):
            raise DomainError("dipole moment must have three components")
        if not np.linalg.norm(p) > 0:
            raise DomainError("dipole moment must be nonzero")
        if not self.k > 0:
            raise DomainError("wavenumber must be positive")
        object.__setattr__(self, "p", p)

    @property
    def omega(self) -> float:
        return C * self.k


def _direction(r, n):
    if not r > 0:
        raise SingularError("fields are singular at the dipole (r = 0)", operation="dipole_fields")
    n = np.asarray(n, dtype=float)
    if n.shape != (3,) or abs(np.linalg.norm(n) - 1) > 1e-12:
        raise DomainError("n must be a unit 3-vector")
    return n


def dipole_fields(src: DipoleSource, r: float, n) -> tuple[np.ndarray, np.ndarray]:
    """Full ``(E, H)`` of an oscillating electric dipole at distance ``r`` along ``n``."""
    n = _direction(r, n)
    k, p = src.k, src.p
    phase = np.exp(1j * k * r)
    nxp = np.cross(n, p)
    H = C * k**2 / (4 * np.pi) * nxp * phase / r * (1 - 1 / (1j * k * r))
    static = 3 * n * np.dot(n, p) - p
    E = (k**2 * np.cross(nxp, n) * phase / r + static * (1 / r**3 - 1j * k / r**2) * phase) / (
        4 * np.pi * CONST.eps0
    )
    return E, H


def near_zone_fields(src: DipoleSource, r: float, n) -> tuple[np.ndarray, np.ndarray]:
    """Quasi-static limit ``kr -> 0``: ``|E| ~ 1/r^3`` and ``|H| ~ 1/r^2``."""
    n = _direction(r, n)
    p = src.p
    H = 1j * src.omega / (4 * np.pi) * np.cross(n, p) / r**2
    E = (3 * n * np.dot(n, p) - p) / (4 * np.pi * CONST.eps0 * r**3)
    return E, H


# --------------------------------------------------------------------------
# double-prism geometry


BOSE_CRITICAL_ANGLE = math.radians(29.0)

# incidence angle (deg) and the bracketing minimum air gaps (mm) for total reflection
BOSE_GAPS = ((30.0, 13.0), (30.0, 14.0), (45.0, 9.9), (45.0, 10.3), (60.0, 7.2), (60.0, 7.6))


def goos_hanchen_coherence(theta: float, d: float) -> float:
    """Coherence length ``d / cos(theta)`` implied by an entrance thickness ``d``."""
    if not 0 <= theta < math.pi / 2:
        raise DomainError("incidence angle must lie in [0, pi/2)")
    if not d > 0:
        raise DomainError("thickness must be positive")
    return d / math.cos(theta)


@dataclass(frozen=True)
class BoseRow:
    theta_deg: float
    d_mm: float
    l_mm: float


def bose_table() -> list[BoseRow]:
    return [BoseRow(t, d, goos_hanchen_coherence(math.radians(t), d * 1e-3) * 1e3) for t, d in BOSE_GAPS]


class PrismOutcome(enum.Enum):
    TUNNELING = "tunneling"
    REFLECTED = "reflected"
    # below the critical angle the wave simply refracts across the gap
    PROPAGATING = "propagating"


@dataclass(frozen=True)
class PrismGeometry:
    theta: float
    D: float
    d: float | None = None
    critical_angle: float = BOSE_CRITICAL_ANGLE

    def __post_init__(self):
        if not 0 < self.theta < math.pi / 2:
            raise DomainError("incidence angle must lie in (0, pi/2)")
        if not self.D > 0:
            raise DomainError("air gap must be positive")
        if self.d is not None and not self.d > 0:
            raise DomainError("entrance thickness must be positive")
        if not 0 < self.critical_angle < math.pi / 2:
            raise DomainError("critical angle must lie in (0, pi/2)")


def prism_tunneling_allowed(g: PrismGeometry, l: float) -> PrismOutcome:
    """Whether a packet of coherence length ``l`` reaches across the gap.

    Tunneling needs ``l cos(theta) >= D``; at or below the critical angle
    there is no total reflection to tunnel through.
    """
    if not l > 0:
        raise DomainError("coherence length must be positive")
    if g.theta <= g.critical_angle:
        return PrismOutcome.PROPAGATING
    return PrismOutcome.TUNNELING if l * math.cos(g.theta) >= g.D else PrismOutcome.REFLECTED
