"""Exception hierarchy shared by all wavegate modules."""


class WavegateError(Exception):
    """Base class. ``operation`` names the function that failed, when known."""

    operation: str | None = None

    def __init__(self, message: str, *, operation: str | None = None):
        super().__init__(message)
        if operation is not None:
            self.operation = operation


class DomainError(WavegateError, ValueError):
    """An argument lies outside the domain of the formula."""


class GridError(DomainError):
    """Sampling grid too coarse, too short, or otherwise unusable."""


class NoTunnelingError(DomainError):
    """Particle energy at or above the barrier height where a tunneling formula was requested."""


class SupportError(DomainError):
    """Frequency outside the support of an index model or response grid."""


class DetectionError(WavegateError):
    """Waveform feature (peak, front) could not be located."""


class UnwrapError(WavegateError):
    """Transmission phase could not be followed continuously."""


class SingularError(WavegateError):
    """A quotient diverges at the requested point."""


class AbsorbedError(WavegateError):
    """Propagated pulse lost (almost) all of its energy."""


class NumericalError(WavegateError):
    """Non-finite intermediate result (overflow, NaN)."""


class ConfigError(WavegateError, ValueError):
    """Scenario configuration failed validation."""

    def __init__(self, message: str, path: str = ""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)
