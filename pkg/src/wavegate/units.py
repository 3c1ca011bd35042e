"""Parsing of unit-suffixed literals such as ``"9.49GHz"``, ``"62ns"`` or ``"0.66c"``."""

from __future__ import annotations

from decimal import Decimal
import math
import re

from .constants import CONST
from .errors import ConfigError

# base symbol -> (dimension, SI factor)
_BASE = {
    "s": ("time", 1.0),
    "m": ("length", 1.0),
    "Hz": ("frequency", 1.0),
    "J": ("energy", 1.0),
    "eV": ("energy", CONST.eV),
    "ohm": ("impedance", 1.0),
    "Ohm": ("impedance", 1.0),
    "Ω": ("impedance", 1.0),
    "F": ("capacitance", 1.0),
    "rad": ("angle", 1.0),
    "deg": ("angle", math.pi / 180.0),
    "c": ("velocity", CONST.c),
    "m/s": ("velocity", 1.0),
    "kg": ("mass", 1.0),
    "me": ("mass", CONST.m_e),
    "rad/s": ("angular_frequency", 1.0),
    "1/m": ("wavenumber", 1.0),
}

_PREFIX = {
    "a": 1e-18,
    "f": 1e-15,
    "p": 1e-12,
    "n": 1e-9,
    "u": 1e-6,
    "μ": 1e-6,
    "µ": 1e-6,
    "m": 1e-3,
    "c": 1e-2,
    "k": 1e3,
    "M": 1e6,
    "G": 1e9,
    "T": 1e12,
}

_LITERAL = re.compile(r"^\s*([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)\s*(\S*)\s*$")


def _lookup(symbol: str):
    if symbol in _BASE:
        return _BASE[symbol]
    if len(symbol) > 1 and symbol[0] in _PREFIX and symbol[1:] in _BASE:
        dim, factor = _BASE[symbol[1:]]
        if dim in ("angle", "velocity", "mass") and symbol[1:] != "m/s":
            return None
        return dim, _PREFIX[symbol[0]] * factor
    return None


def parse_quantity(value, dimension: str | None = None, path: str = "") -> float:
    """Convert a number or unit-suffixed string to an SI float.

    Bare numbers (or numeric strings) are taken to be SI already. When
    ``dimension`` is given, a unit of a different dimension is rejected.
    """
    if isinstance(value, bool):
        raise ConfigError("expected a quantity, got a boolean", path)
    if isinstance(value, (int, float)):
        return float(value)
    if not isinstance(value, str):
        raise ConfigError(f"expected a quantity, got {type(value).__name__}", path)
    m = _LITERAL.match(value)
    if not m:
        raise ConfigError(f"cannot parse quantity {value!r}", path)
    number, symbol = m.group(1), m.group(2)
    if not symbol:
        return float(number)
    found = _lookup(symbol)
    if found is None:
        raise ConfigError(f"unknown unit {symbol!r}", path)
    dim, factor = found
    if dimension is not None and dim != dimension:
        raise ConfigError(f"unit {symbol!r} is a {dim}, expected {dimension}", path)
    # scale in decimal so that "8.2GHz" is exactly 8.2e9 after one rounding
    return float(Decimal(number) * Decimal(repr(factor)))


def parse_complex(value, path: str = "") -> complex:
    """Number, ``[re, im]`` pair, or ``{"re": .., "im": ..}``."""
    if isinstance(value, bool):
        raise ConfigError("expected a number", path)
    if isinstance(value, (int, float)):
        return complex(value)
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return complex(parse_quantity(value[0], path=path), parse_quantity(value[1], path=path))
    if isinstance(value, dict) and set(value) <= {"re", "im"}:
        return complex(value.get("re", 0.0), value.get("im", 0.0))
    if isinstance(value, str):
        return complex(parse_quantity(value, path=path))
    raise ConfigError("expected a real number or [re, im] pair", path)


def encode_complex(z: complex):
    z = complex(z)
    return z.real if z.imag == 0 else [z.real, z.imag]
