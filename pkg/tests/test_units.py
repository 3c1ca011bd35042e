import math

import pytest
from hypothesis import given, strategies as st

from wavegate.constants import CONST
from wavegate.errors import ConfigError
from wavegate.units import encode_complex, parse_complex, parse_quantity


@pytest.mark.parametrize("text,dim,value", [
    ("9.49GHz", "frequency", 9.49e9),
    ("62ns", "time", 62e-9),
    ("6cm", "length", 0.06),
    ("114.2mm", "length", 0.1142),
    ("3.7us", "time", 3.7e-6),
    ("3.7μs", "time", 3.7e-6),
    ("0.66c", "velocity", 0.66 * CONST.c),
    ("24.59eV", "energy", 24.59 * CONST.eV),
    ("1kohm", "impedance", 1e3),
    ("30deg", "angle", math.pi / 6),
    ("1e4rad/s", "angular_frequency", 1e4),
    ("20fs", "time", 20e-15),
])
def test_literals(text, dim, value):
    assert parse_quantity(text, dim) == pytest.approx(value, rel=1e-15)


def test_decimal_scaling_is_exact():
    assert parse_quantity("8.2GHz") == 8.2e9


def test_bare_numbers_are_si():
    assert parse_quantity(1.5) == 1.5
    assert parse_quantity("2.5e-3") == 2.5e-3


@pytest.mark.parametrize("bad", ["12 parsecs", "GHz", "", "1.2.3Hz", True, None, [1]])
def test_rejects_garbage(bad):
    with pytest.raises(ConfigError):
        parse_quantity(bad)


def test_dimension_mismatch_names_path():
    with pytest.raises(ConfigError, match=r"^a\.b: .*frequency"):
        parse_quantity("3ns", "frequency", "a.b")


def test_no_prefix_on_speed_of_light():
    with pytest.raises(ConfigError):
        parse_quantity("1kc", "velocity")


@given(st.floats(-1e6, 1e6, allow_nan=False), st.sampled_from(["p", "n", "u", "m", "k", "M", "G"]))
def test_prefix_scaling(x, prefix):
    factor = {"p": 1e-12, "n": 1e-9, "u": 1e-6, "m": 1e-3, "k": 1e3, "M": 1e6, "G": 1e9}[prefix]
    assert parse_quantity(f"{x!r}{prefix}s", "time") == pytest.approx(x * factor, rel=1e-15, abs=1e-300)


@given(st.complex_numbers(max_magnitude=1e6, allow_nan=False, allow_infinity=False))
def test_complex_round_trip(z):
    assert parse_complex(encode_complex(z)) == z


def test_complex_forms():
    assert parse_complex([1.5, 0.1]) == 1.5 + 0.1j
    assert parse_complex({"re": 2, "im": -1}) == 2 - 1j
    with pytest.raises(ConfigError):
        parse_complex("x")
