"""Carrier-side quantities of the coupled carrier-photon system.

Heated carrier temperatures under quantizing and classical magnetic fields,
AC/DC drift velocities of the dressed carriers, Hall drift, effective mass,
cyclotron frequency and resonance linewidth.  All speeds are fractions of c
and the elementary charge is 1 (natural units, see ``photondrag.core``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import BathConfig
from .errors import DomainError, ResonanceError

__all__ = [
    "CarrierSpecies",
    "FieldConfig",
    "ValidityReport",
    "DriftVelocityAC",
    "validity_check",
    "carrier_occupancy",
    "lorentz_factor",
    "drift_log_factor",
    "temperature_quantizing",
    "temperature_classical",
    "hall_drift",
    "drag_corrected_collision",
    "drift_velocity_ac",
    "drift_velocity_dc",
    "coupled_drift",
    "effective_mass",
    "cyclotron_frequency",
    "resonance_linewidth",
]

# u/c below which the log in drift_log_factor loses accuracy; a series is
# used instead.
_SERIES_CUTOFF = 1e-6


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DomainError(message)


@dataclass(frozen=True)
class CarrierSpecies:
    """One carrier species (electron or positron).

    charge_sign -- +1 for positrons, -1 for electrons
    m_c         -- bare carrier mass (energy units, c = 1)
    nu_ph       -- carrier-photon collision frequency
    nu_energy   -- energy-relaxation collision frequency
    n           -- carrier concentration
    """

    charge_sign: int
    m_c: float
    nu_ph: float = 0.0
    nu_energy: float = 0.0
    n: float = 0.0

    def __post_init__(self):
        _require(self.charge_sign in (-1, 1), "charge_sign must be -1 or +1")
        _require(self.m_c > 0, "m_c must be > 0")
        _require(self.nu_ph >= 0, "nu_ph must be >= 0")
        _require(self.nu_energy >= 0, "nu_energy must be >= 0")
        _require(self.n >= 0, "n must be >= 0")


@dataclass(frozen=True)
class FieldConfig:
    """External field configuration.

    geometry 'parallel' means E along H; 'transverse' means E perpendicular
    to H.  omega is the wave frequency of an AC field (0 for DC).
    """

    E: float
    H: float = 0.0
    omega: float = 0.0
    geometry: str = "parallel"

    def __post_init__(self):
        _require(self.E >= 0, "E must be >= 0")
        _require(self.H >= 0, "H must be >= 0")
        _require(self.omega >= 0, "omega must be >= 0")
        _require(self.geometry in ("parallel", "transverse"),
                 "geometry must be 'parallel' or 'transverse'")


@dataclass(frozen=True)
class ValidityReport:
    """Outcome of the high-frequency validity check.

    ratio is omega / nu_energy; it is +inf when the energy relaxation rate
    vanishes (flagged by ``unbounded``).
    """

    valid: bool
    ratio: float

    @property
    def unbounded(self) -> bool:
        return math.isinf(self.ratio)


@dataclass(frozen=True)
class DriftVelocityAC:
    """Complex drift-velocity amplitudes of one species under AC driving.

    parallel      -- component along h(h . E)
    perpendicular -- component along the transverse part of E
    hall          -- component along h x E
    Physical velocities are Re[v * exp(-i omega t)].
    """

    parallel: complex
    perpendicular: complex
    hall: complex


def validity_check(field: FieldConfig, species: CarrierSpecies, margin: float = 10.0) -> ValidityReport:
    """Check that the wave frequency dominates the energy-relaxation rate.

    Valid when omega > margin * nu_energy; a vanishing nu_energy always
    passes, with ratio reported as +inf.
    """
    _require(margin > 0, "margin must be > 0")
    if species.nu_energy == 0.0:
        return ValidityReport(valid=field.omega > 0, ratio=math.inf)
    ratio = field.omega / species.nu_energy
    return ValidityReport(valid=ratio > margin, ratio=ratio)


def carrier_occupancy(epsilon: float, zeta: float, T_c: float) -> float:
    """Fermi occupancy 1 / (1 + exp((epsilon - zeta) / T_c))."""
    _require(T_c > 0, "T_c must be > 0")
    x = (epsilon - zeta) / T_c
    if x >= 0:
        e = math.exp(-x)
        return e / (1.0 + e)
    return 1.0 / (1.0 + math.exp(x))


def lorentz_factor(u: float) -> float:
    """1 / sqrt(1 - u^2) for drift speed u < 1 (u in units of c)."""
    _require(0 <= u < 1, "requires 0 <= u < c")
    return 1.0 / math.sqrt(1.0 - u * u)


def drift_log_factor(u: float) -> float:
    """Angle-averaged enhancement (1 / 2u) * ln((1 + u) / (1 - u)).

    Equals the average of 1 / (1 - u cos(alpha)) over solid angle; tends to 1
    as u -> 0 (handled by series below u = 1e-6) and diverges at u -> c.
    """
    _require(0 <= u < 1, "requires 0 <= u < c")
    if u < _SERIES_CUTOFF:
        u2 = u * u
        return 1.0 + u2 / 3.0 + u2 * u2 / 5.0
    return math.log((1.0 + u) / (1.0 - u)) / (2.0 * u)


def temperature_quantizing(T_i: float, V: float, u: float) -> float:
    """Heated carrier temperature under a quantizing magnetic field.

    T_c = T_i * {1 + (V/u - 1)^2 * (gamma - 1)} with gamma the Lorentz factor
    of the common drift u.  Valid for u < c; the stationary heating formula
    has no meaning past threshold.
    """
    _require(T_i > 0, "T_i must be > 0")
    _require(u < 1, "u must be < c (stationary heating formula)")
    _require(u >= 0, "u must be >= 0")
    if u == 0.0:
        if V != 0.0:
            raise DomainError("u = 0 with V != 0: V/u ratio is unbounded")
        return T_i
    ratio = V / u - 1.0
    return T_i * (1.0 + ratio * ratio * (lorentz_factor(u) - 1.0))


def temperature_classical(T_i: float, V: float, u: float) -> float:
    """Heated carrier temperature in the classical strong-field region.

    T_c = T_i * {1 + (V^2)/3 + (1 - V/u) * (phi - 1)} with
    phi = (1/2u) ln((1+u)/(1-u)).  The third term tends to zero with u while
    V stays fixed, so u = 0 is allowed.
    """
    _require(T_i > 0, "T_i must be > 0")
    _require(0 <= u < 1, "u must satisfy 0 <= u < c")
    heating = 1.0 + V * V / 3.0
    if u == 0.0:
        return T_i * heating
    return T_i * (heating + (1.0 - V / u) * (drift_log_factor(u) - 1.0))


def hall_drift(field: FieldConfig) -> float:
    """Hall drift speed c * E / H in crossed fields."""
    _require(field.H > 0, "H must be > 0 for Hall drift (use drift_velocity_dc otherwise)")
    return field.E / field.H


def drag_corrected_collision(nu_ph: float, u: float, V: float) -> float:
    """Carrier-photon collision frequency reduced by mutual drag: nu_ph * (1 - u/V).

    Full drag (u >= V) would make the rate non-positive; that regime has no
    prescription here and raises ``DomainError``.
    """
    _require(nu_ph > 0, "nu_ph must be > 0")
    _require(V != 0, "carrier drift V must be nonzero")
    corrected = nu_ph * (1.0 - u / V)
    if corrected <= 0:
        raise DomainError(f"full-drag breakdown: corrected collision frequency {corrected} <= 0")
    return corrected


def drift_velocity_ac(
    species: CarrierSpecies,
    field: FieldConfig,
    omega_H: float,
    nu: float,
    resonance_rtol: float = 1e-9,
) -> DriftVelocityAC:
    """Complex drift-velocity amplitudes of one species in an AC field.

    Solves the damped equation of motion with magnetic field H along h and
    driving Re[E exp(-i omega t)], using the complex frequency
    Omega = omega + i nu:

        parallel      = i s E_par / (m Omega)
        perpendicular = i s Omega E_perp / (m (Omega^2 - omega_H^2))
        hall          =   omega_H E_perp / (m (Omega^2 - omega_H^2))

    where s is the species charge sign.  E_par/E_perp follow from the field
    geometry.  Evaluation within resonance_rtol of the pole Omega^2 = omega_H^2
    raises ``ResonanceError``; the physical linewidth lives in
    ``resonance_linewidth``, not here.
    """
    _require(omega_H >= 0, "omega_H must be >= 0")
    _require(nu >= 0, "nu must be >= 0")
    omega = field.omega
    Omega = complex(omega, nu)
    detuning = Omega * Omega - omega_H * omega_H
    scale = max(abs(Omega) ** 2, omega_H * omega_H)
    if scale == 0.0 or abs(detuning) <= resonance_rtol * scale:
        raise ResonanceError(
            f"evaluation within {resonance_rtol:g} of the cyclotron pole "
            f"(|Omega^2 - omega_H^2| = {abs(detuning):g})",
            detuning=detuning,
        )
    if field.geometry == "parallel":
        e_par, e_perp = field.E, 0.0
    else:
        e_par, e_perp = 0.0, field.E
    s = species.charge_sign
    m = species.m_c
    if e_par != 0.0 and Omega == 0:
        raise DomainError("undamped DC parallel field: drift velocity is unbounded")
    parallel = 1j * s * e_par / (m * Omega) if e_par != 0.0 else 0j
    perpendicular = 1j * s * Omega * e_perp / (m * detuning)
    hall = omega_H * e_perp / (m * detuning)
    return DriftVelocityAC(parallel=parallel, perpendicular=perpendicular, hall=hall)


def drift_velocity_dc(
    species: CarrierSpecies,
    field: FieldConfig,
    bath: BathConfig,
    u: float,
    V: float,
) -> float:
    """Stationary drift speed of one species for E along H (or H = 0).

    V = e E beta_c / (m_c nu_ph_corrected beta_phb), the drift of the dressed
    carrier of mass m_c * nu_ph_corrected / beta_c relaxed by photon-photon
    and boundary collisions.  The drag correction uses the (u, V) pair passed
    by the caller; any self-consistent iteration happens outside.
    """
    _require(field.geometry == "parallel" or field.H == 0.0,
             "DC drift formula requires E parallel to H, or H = 0")
    _require(bath.beta_phb > 0, "beta_ph + beta_b must be > 0")
    if field.E == 0.0:
        return 0.0
    nu_corrected = drag_corrected_collision(species.nu_ph, u, V)
    return field.E * bath.beta_c / (species.m_c * nu_corrected * bath.beta_phb)


def coupled_drift(bath: BathConfig, V_plus: float, V_minus: float) -> float:
    """Common drift speed of the dragged system from the species drifts.

    u = (beta_e V_plus + beta_p V_minus) / beta; scalar projections on the
    drift axis, signs carried by the inputs.
    """
    beta = bath.beta
    _require(beta > 0, "total collision frequency must be > 0")
    return (bath.beta_e * V_plus + bath.beta_p * V_minus) / beta


def effective_mass(T_i: float) -> float:
    """Dressed quasi-particle mass T_i / c^2 (equals T_i in natural units)."""
    _require(T_i > 0, "T_i must be > 0")
    return T_i


def cyclotron_frequency(H: float, T_i: float) -> float:
    """Cyclotron frequency e H / (m(T_i) c) of the dressed quasi-particle."""
    _require(H >= 0, "H must be >= 0")
    return H / effective_mass(T_i)


def resonance_linewidth(omega: float, bath: BathConfig) -> float:
    """Width (3/2) * (omega^2 / beta_c + beta_ph + beta_b) of the cyclotron line."""
    _require(bath.beta_c > 0, "beta_e + beta_p must be > 0")
    return 1.5 * (omega * omega / bath.beta_c + bath.beta_phb)
