"""SI physical constants used across the package."""

from dataclasses import dataclass
import math

import scipy.constants as sc


@dataclass(frozen=True)
class PhysicalConstants:
    c: float
    hbar: float
    h: float
    eps0: float
    m_e: float
    r0: float
    eV: float

    def __post_init__(self):
        for name in ("c", "hbar", "h", "eps0", "m_e", "r0", "eV"):
            if not getattr(self, name) > 0:
                raise ValueError(f"constant {name} must be positive")

    @property
    def mu0(self) -> float:
        return 1.0 / (self.eps0 * self.c**2)

    @property
    def z0(self) -> float:
        """Vacuum wave impedance (ohm)."""
        return 1.0 / (self.eps0 * self.c)


# h is derived from hbar (not taken from CODATA directly) so that h == 2*pi*hbar
# holds bit-for-bit.
CONST = PhysicalConstants(
    c=sc.c,
    hbar=sc.hbar,
    h=2.0 * math.pi * sc.hbar,
    eps0=sc.epsilon_0,
    m_e=sc.m_e,
    r0=sc.physical_constants["Bohr radius"][0],
    eV=sc.eV,
)

C = CONST.c
HBAR = CONST.hbar
H = CONST.h
