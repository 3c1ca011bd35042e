"""wavegate: tunneling-time, coherence-length and dispersive pulse simulations."""

from .constants import CONST, PhysicalConstants
from .errors import WavegateError

__version__ = "0.1.0"
__all__ = ["CONST", "PhysicalConstants", "WavegateError", "__version__"]
