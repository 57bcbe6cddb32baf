"""Exception hierarchy shared by all photondrag modules."""


class PhotondragError(Exception):
    """Base class for every error raised by this package."""


class DomainError(PhotondragError, ValueError):
    """An input lies outside the mathematical domain of an operation."""


class DivergenceError(DomainError):
    """The requested quantity diverges for these inputs (no finite value exists)."""


class ResonanceError(DomainError):
    """Evaluation too close to a resonance pole.

    Carries the complex detuning ``Omega**2 - omega_H**2`` in ``detuning``.
    """

    def __init__(self, message: str, detuning: complex):
        super().__init__(message)
        self.detuning = detuning


class NumericError(PhotondragError, RuntimeError):
    """A numerical scheme failed to reach the requested tolerance.

    ``achieved`` holds the error estimate actually reached, when known.
    """

    def __init__(self, message: str, achieved: float | None = None):
        super().__init__(message)
        self.achieved = achieved


class InternalError(PhotondragError, RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class ConfigError(PhotondragError, ValueError):
    """A run configuration failed schema or consistency validation."""
