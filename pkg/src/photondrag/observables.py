"""Derived per-mode observables of the dragged carrier-photon system.

Isotropic/anisotropic splitting of the stationary occupancy, renormalized
mode mass and energy below and above the drift threshold, relaxation-time
dilation, and the drift Doppler relations.  Natural units throughout
(hbar = c = 1, speeds as fractions of c).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .core import PhotonMode
from .errors import DivergenceError, DomainError

__all__ = [
    "ModeMassReport",
    "TimeDilation",
    "decompose",
    "renormalized_mass_energy",
    "supercritical_mass",
    "time_dilation",
    "doppler_shift",
    "doppler_wavelength",
]


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DomainError(message)


@dataclass(frozen=True)
class ModeMassReport:
    """Mass and energy bookkeeping for one mode below threshold.

    avg_energy      -- mean mode energy (energy units)
    mode_mass       -- total mass of the mode's photons (equals avg_energy, c = 1)
    per_photon_mass -- mass of one photon of the mode
    rest_mass       -- per-photon mass with no drift and no heating, T / c^2
    avg_occupancy   -- occupancy consistent with the masses above
                       (mode_mass = per_photon_mass * avg_occupancy)
    heated          -- True when the system temperature differs from T
    """

    avg_energy: float
    mode_mass: float
    per_photon_mass: float
    rest_mass: float
    avg_occupancy: float
    heated: bool


class TimeDilation(NamedTuple):
    tau_i: float
    length_i: float


def decompose(mode: PhotonMode, u: float, N_source: float) -> tuple[float, float]:
    """Split the stationary occupancy into isotropic and anisotropic parts.

    N_iso = N_source / (1 - (u cos a)^2) and N_aniso = (u cos a) * N_iso, so
    the two sum exactly to the stationary value N_source / (1 - u cos a).
    The split diverges as |u cos a| -> 1.
    """
    _require(N_source >= 0, "N_source must be >= 0")
    _require(u >= 0, "u must be >= 0")
    uc = u * mode.cos_alpha
    if abs(uc) >= 1.0:
        raise DivergenceError(f"|u cos(alpha)| = {abs(uc)} >= 1: decomposition diverges")
    n_iso = N_source / (1.0 - uc * uc)
    return n_iso, uc * n_iso


def renormalized_mass_energy(T: float, T_i: float, u: float, N_mode: float) -> ModeMassReport:
    """Drag-renormalized energy and mass of one mode below threshold.

    N_mode is the reference occupancy of the unheated mode at temperature T;
    heating rescales the occupancy linearly to N_mode * T_i / T (occupancies
    here are in the classical, temperature-proportional regime).  With
    M0 = T * N_mode:

        avg_energy = mode_mass = M0 (T_i / T)^2 / (1 - u^2)
        per_photon_mass        = (T / c^2) (T_i / T) / (1 - u^2)

    At T_i = T this reduces to the unheated report, and at u = 0, T_i = T the
    per-photon mass is the rest value T / c^2.
    """
    _require(T > 0, "T must be > 0")
    _require(T_i > 0, "T_i must be > 0")
    _require(N_mode > 0, "N_mode must be > 0")
    if not 0 <= u < 1:
        raise DomainError("requires 0 <= u < c (use supercritical_mass past threshold)")
    heating = T_i / T
    enhancement = 1.0 / (1.0 - u * u)
    rest_mass = T
    mode_mass = T * N_mode * heating * heating * enhancement
    per_photon_mass = rest_mass * heating * enhancement
    return ModeMassReport(
        avg_energy=mode_mass,
        mode_mass=mode_mass,
        per_photon_mass=per_photon_mass,
        rest_mass=rest_mass,
        avg_occupancy=N_mode * heating,
        heated=T_i != T,
    )


def supercritical_mass(M0: float, u: float, gamma_q: float, t: float, T: float, T_i: float) -> float:
    """Exponentially growing mode mass past threshold (u > c).

    M = M0 / (u/c - 1) * {[exp(gamma t) - 1] + (T / T_i) exp(gamma t)};
    the unheated case T_i = T gives M0 (2 exp(gamma t) - 1) / (u/c - 1).
    """
    _require(M0 >= 0, "M0 must be >= 0")
    _require(T > 0, "T must be > 0")
    _require(T_i > 0, "T_i must be > 0")
    _require(t >= 0, "t must be >= 0")
    if u <= 1.0:
        raise DomainError("supercritical_mass requires u > c (use renormalized_mass_energy below)")
    _require(gamma_q > 0, "gamma_q must be > 0 for u > c")
    gt = gamma_q * t
    return M0 / (u - 1.0) * (math.expm1(gt) + (T / T_i) * math.exp(gt))


def time_dilation(tau0: float, u: float, T: float, T_i: float) -> TimeDilation:
    """Dilated relaxation time tau0 (1 - u^2) (T / T_i) and drift length u * tau.

    Both drift and heating shorten the lifetime; at T_i = T only the
    (1 - u^2) factor remains.
    """
    _require(tau0 > 0, "tau0 must be > 0")
    _require(T > 0, "T must be > 0")
    _require(T_i > 0, "T_i must be > 0")
    if not 0 <= u < 1:
        raise DomainError("time_dilation requires 0 <= u < c")
    tau_i = tau0 * (1.0 - u * u) * (T / T_i)
    return TimeDilation(tau_i=tau_i, length_i=u * tau_i)


def _doppler_factor(u: float, cos_alpha: float) -> float:
    _require(u >= 0, "u must be >= 0")
    _require(abs(cos_alpha) <= 1.0, "|cos_alpha| must be <= 1")
    factor = 1.0 - u * cos_alpha
    if factor == 0.0:
        raise DivergenceError("u cos(alpha) = 1: observed frequency diverges")
    return factor


def doppler_shift(omega_em: float, u: float, cos_alpha: float, direction: str = "emit_to_obs") -> float:
    """Drift Doppler shift between emitted and observed frequencies.

    emit_to_obs returns omega_em / (1 - u cos a); obs_to_emit applies the
    exact inverse.  Positive u cos a means the emitter recedes and the
    observed frequency rises.
    """
    _require(omega_em > 0, "frequency must be > 0")
    factor = _doppler_factor(u, cos_alpha)
    if direction == "emit_to_obs":
        return omega_em / factor
    if direction == "obs_to_emit":
        return omega_em * factor
    raise DomainError("direction must be 'emit_to_obs' or 'obs_to_emit'")


def doppler_wavelength(lambda_em: float, u: float, cos_alpha: float, direction: str = "emit_to_obs") -> float:
    """Wavelength counterpart of ``doppler_shift``: lambda_obs = lambda_em (1 - u cos a)."""
    _require(lambda_em > 0, "wavelength must be > 0")
    factor = _doppler_factor(u, cos_alpha)
    if direction == "emit_to_obs":
        return lambda_em * factor
    if direction == "obs_to_emit":
        return lambda_em / factor
    raise DomainError("direction must be 'emit_to_obs' or 'obs_to_emit'")
