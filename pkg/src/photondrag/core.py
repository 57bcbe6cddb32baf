"""Domain types, unit conventions, and Planck-type occupancy functions.

Unit conventions used throughout the package:

* natural units, hbar = c = 1;
* drift and Hall speeds are stored as fractions of c;
* frequencies, temperatures and photon momenta share one energy unit;
* times and collision rates are inverse energies.

``UnitScales`` converts between these internal units and any external
(time, energy) unit pair for I/O; nothing inside the package ever carries
dimensional constants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DivergenceError, DomainError

__all__ = [
    "PhotonMode",
    "BathConfig",
    "DriftSpec",
    "UnitScales",
    "planck_occupancy",
    "drifted_planck_occupancy",
    "mixture_temperature",
    "drift_parameter",
]

# exp(x) overflows a double near x = 709; above this the occupancy tail is
# evaluated asymptotically instead.
_EXP_TAIL = 700.0


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DomainError(message)


@dataclass(frozen=True)
class PhotonMode:
    """One electromagnetic mode.

    q_mag      -- photon momentum magnitude (energy units, hbar = c = 1)
    cos_alpha  -- cosine of the angle between the drift axis and the momentum
    omega      -- mode frequency; defaults to the light-cone value c * q_mag
    occupancy  -- mode occupation number, >= 0
    """

    q_mag: float
    cos_alpha: float
    omega: float | None = None
    occupancy: float = 0.0

    def __post_init__(self):
        _require(self.q_mag > 0, "q_mag must be > 0")
        _require(abs(self.cos_alpha) <= 1.0, "|cos_alpha| must be <= 1")
        if self.omega is None:
            object.__setattr__(self, "omega", float(self.q_mag))
        _require(self.omega > 0, "omega must be > 0")
        _require(self.occupancy >= 0, "occupancy must be >= 0")


@dataclass(frozen=True)
class BathConfig:
    """Collision frequencies and temperatures of the photon baths.

    beta_e, beta_p  -- photon collision rates with electrons and positrons
    beta_ph         -- photon-photon collision rate
    beta_b          -- photon-boundary collision rate
    T_c, T_ph, T_b  -- carrier, photon and boundary bath temperatures
    T               -- initial equilibrium temperature (before fields turn on)
    """

    beta_e: float
    beta_p: float
    beta_ph: float
    beta_b: float
    T_c: float
    T_ph: float
    T_b: float
    T: float

    def __post_init__(self):
        for name in ("beta_e", "beta_p", "beta_ph", "beta_b"):
            _require(getattr(self, name) >= 0, f"{name} must be >= 0")
        for name in ("T_c", "T_ph", "T_b", "T"):
            _require(getattr(self, name) > 0, f"{name} must be > 0")
        _require(self.beta > 0, "total collision frequency must be > 0")

    @property
    def beta(self) -> float:
        """Total photon collision frequency."""
        return self.beta_e + self.beta_p + self.beta_ph + self.beta_b

    @property
    def beta_c(self) -> float:
        """Combined carrier (electron + positron) collision frequency."""
        return self.beta_e + self.beta_p

    @property
    def beta_phb(self) -> float:
        """Combined photon-photon and boundary collision frequency."""
        return self.beta_ph + self.beta_b


@dataclass(frozen=True)
class DriftSpec:
    """Drift-velocity law u(t) of the coupled carrier-photon system.

    mode 'constant' holds u fixed; mode 'cosine' drives u * cos(omega_drive * t),
    the response to a strong monochromatic field.  E and H record the field
    magnitudes that produced the drift (Gaussian convention, E/H dimensionless);
    they are bookkeeping only and never enter the kinetics directly.
    """

    u: float
    mode: str = "constant"
    omega_drive: float = 0.0
    E: float = 0.0
    H: float = 0.0

    def __post_init__(self):
        _require(self.u >= 0, "drift speed u must be >= 0")
        _require(self.mode in ("constant", "cosine"), "mode must be 'constant' or 'cosine'")
        if self.mode == "cosine":
            _require(self.omega_drive > 0, "omega_drive must be > 0 for cosine driving")


@dataclass(frozen=True)
class UnitScales:
    """Conversion between internal natural units and external units.

    ``time_unit`` is the external duration of one internal time unit and
    ``energy_unit`` the external magnitude of one internal energy unit
    (speeds are always fractions of c and need no conversion).
    """

    time_unit: float = 1.0
    energy_unit: float = 1.0

    def __post_init__(self):
        _require(self.time_unit > 0, "time_unit must be > 0")
        _require(self.energy_unit > 0, "energy_unit must be > 0")

    def time_to_external(self, t: float) -> float:
        return t * self.time_unit

    def time_to_internal(self, t: float) -> float:
        return t / self.time_unit

    def energy_to_external(self, e: float) -> float:
        return e * self.energy_unit

    def energy_to_internal(self, e: float) -> float:
        return e / self.energy_unit


def planck_occupancy(omega: float, T: float) -> float:
    """Equilibrium Bose occupancy 1 / (exp(omega / T) - 1)."""
    _require(omega > 0, "omega must be > 0")
    _require(T > 0, "T must be > 0")
    ratio = omega / T
    if ratio > _EXP_TAIL:
        return math.exp(-ratio)
    return 1.0 / math.expm1(ratio)


def drifted_planck_occupancy(mode: PhotonMode, u0: float, T: float) -> float:
    """Planck occupancy at the drift-shifted energy omega - u0 * q * cos(alpha).

    Diverges when the shifted energy reaches zero; such modes are outside the
    drifted-Planck domain and raise ``DivergenceError``.
    """
    _require(T > 0, "T must be > 0")
    omega_star = mode.omega - u0 * mode.q_mag * mode.cos_alpha
    if omega_star <= 0:
        raise DivergenceError(
            f"drift-shifted energy {omega_star} <= 0: mode is outside the drifted-Planck domain"
        )
    return planck_occupancy(omega_star, T)


def mixture_temperature(bath: BathConfig) -> float:
    """Collision-weighted temperature of the coupled carrier-photon system.

    Weights are the fractional collision rates: carriers (electrons plus
    positrons combined), photons, and boundaries.  The result is a convex
    combination of T_c, T_ph and T_b.
    """
    beta = bath.beta
    _require(beta > 0, "total collision frequency must be > 0")
    return (bath.beta_c * bath.T_c + bath.beta_ph * bath.T_ph + bath.beta_b * bath.T_b) / beta


def drift_parameter(mode: PhotonMode, u: float) -> float:
    """Dimensionless drift parameter x = u * q * cos(alpha) / omega.

    Under light-cone dispersion x = (u/c) cos(alpha).  Modes with x < 1 are
    damped, x = 1 sit at threshold, and x > 1 are amplified.
    """
    return u * mode.q_mag * mode.cos_alpha / mode.omega
