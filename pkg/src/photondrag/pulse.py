"""Spectral pulse propagation through absorbing barriers and amplifying media.

A pulse is a set of complex spectral amplitudes on a frequency grid.  The
medium multiplies each mode by a gain factor exp(g(omega) L) built from the
per-mode gain law

    g(omega) = (beta / c) * (omega / omega_ref - 1),

the frequency-domain analogue of the drift-parameter gain: modes below the
reference frequency are damped, modes above it amplified.  This gain law is
a modeling bridge, not a first-principles transfer function; see README.
Propagation adds the uniform vacuum phase omega L / c to every mode, so a
gain-free medium is a pure delay of L / c.  Temporal profiles come from
direct discrete synthesis of the analytic signal; peak times are read off
the squared envelope with sub-sample quadratic interpolation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NumericError

__all__ = [
    "PulseSpec",
    "BarrierSpec",
    "build_pulse_spectrum",
    "total_power",
    "barrier_transfer",
    "synthesize_envelope",
    "time_grid_for",
    "propagate",
    "apparent_velocity",
    "envelope_correlation",
    "amplifier_regime",
]

# exponent cap before the per-mode gain overflows a double
_GAIN_EXP_LIMIT = 700.0

_trapz = getattr(np, "trapezoid", None) or np.trapz


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DomainError(message)


@dataclass(frozen=True)
class PulseSpec:
    """Spectral description of a pulse.

    omega_grid -- strictly increasing frequency samples (>= 16 of them)
    amplitudes -- complex spectral amplitudes, one per sample
    omega_bar  -- nominal mean/peak frequency, inside the grid range
    duration   -- nominal temporal width of the envelope
    """

    omega_grid: np.ndarray
    amplitudes: np.ndarray
    omega_bar: float
    duration: float

    def __post_init__(self):
        grid = np.asarray(self.omega_grid, dtype=float)
        amps = np.asarray(self.amplitudes, dtype=complex)
        _require(grid.ndim == 1 and grid.size >= 16, "omega_grid needs at least 16 samples")
        _require(amps.shape == grid.shape, "amplitudes must match omega_grid in length")
        _require(bool(np.all(np.diff(grid) > 0)), "omega_grid must be strictly increasing")
        _require(grid[0] <= self.omega_bar <= grid[-1], "omega_bar must lie inside the grid")
        _require(self.duration > 0, "duration must be > 0")
        grid.setflags(write=False)
        amps.setflags(write=False)
        object.__setattr__(self, "omega_grid", grid)
        object.__setattr__(self, "amplitudes", amps)
        _require(total_power(self) > 0, "total spectral power must be > 0")


@dataclass(frozen=True)
class BarrierSpec:
    """A medium of length L with the tilted per-mode gain law.

    kind 'amplifier' applies exp(g(omega) L) to every mode; kind 'absorber'
    damps modes below omega_ref by the same factor and passes modes at or
    above omega_ref without loss.
    """

    length: float
    beta: float
    omega_ref: float
    kind: str = "absorber"

    def __post_init__(self):
        _require(self.length >= 0, "length must be >= 0")
        _require(self.beta >= 0, "beta must be >= 0")
        _require(self.omega_ref > 0, "omega_ref must be > 0")
        _require(self.kind in ("absorber", "amplifier"), "kind must be 'absorber' or 'amplifier'")

    def gain_exponent(self, omega: np.ndarray) -> np.ndarray:
        """g(omega) = beta * (omega / omega_ref - 1) in units of 1/length (c = 1)."""
        return self.beta * (np.asarray(omega, dtype=float) / self.omega_ref - 1.0)


def total_power(pulse: PulseSpec) -> float:
    """Spectral power integral of |amplitude|^2 over the frequency grid."""
    return float(_trapz(np.abs(pulse.amplitudes) ** 2, pulse.omega_grid))


def build_pulse_spectrum(omega_bar: float, width: float, n: int, chirp: float = 0.0) -> PulseSpec:
    """Gaussian spectral envelope centered at omega_bar, normalized to unit power.

    The grid spans omega_bar +/- 5 widths with n samples; every frequency
    must stay positive.  A nonzero chirp adds the quadratic spectral phase
    chirp * (omega - omega_bar)^2 / 2, stretching the temporal envelope to
    duration = sqrt(1 + (chirp * width^2)^2) / width.
    """
    _require(width > 0, "width must be > 0")
    _require(n >= 16, "n must be >= 16")
    _require(omega_bar > 3.0 * width, "omega_bar must exceed 3 * width")
    lo = omega_bar - 5.0 * width
    if lo <= 0:
        raise DomainError(f"grid would reach omega = {lo} <= 0; increase omega_bar or shrink width")
    grid = np.linspace(lo, omega_bar + 5.0 * width, n)
    detune = grid - omega_bar
    amps = np.exp(-(detune**2) / (2.0 * width**2)).astype(complex)
    if chirp != 0.0:
        amps *= np.exp(0.5j * chirp * detune**2)
    duration = math.sqrt(1.0 + (chirp * width * width) ** 2) / width
    pulse = PulseSpec(omega_grid=grid, amplitudes=amps, omega_bar=omega_bar, duration=duration)
    norm = math.sqrt(total_power(pulse))
    return PulseSpec(
        omega_grid=grid, amplitudes=amps / norm, omega_bar=omega_bar, duration=duration
    )


def barrier_transfer(pulse: PulseSpec, barrier: BarrierSpec) -> PulseSpec:
    """Apply the medium's per-mode gain and vacuum phase to the spectrum.

    A zero-length barrier is the identity.  Amplifiers apply exp(g L) to all
    modes; absorbers only damp the sub-reference modes and pass the rest at
    unit magnitude.  All modes pick up the phase advance omega L / c.
    """
    omega = pulse.omega_grid
    exponent = barrier.gain_exponent(omega) * barrier.length
    if float(np.max(exponent)) > _GAIN_EXP_LIMIT:
        raise NumericError(
            f"gain exponent {float(np.max(exponent)):g} overflows; reduce beta or length"
        )
    gain = np.exp(exponent)
    if barrier.kind == "absorber":
        gain = np.where(omega < barrier.omega_ref, gain, 1.0)
    amps = pulse.amplitudes * gain * np.exp(1j * omega * barrier.length)
    return PulseSpec(
        omega_grid=omega, amplitudes=amps, omega_bar=pulse.omega_bar, duration=pulse.duration
    )


def synthesize_envelope(pulse: PulseSpec, t_grid: np.ndarray) -> np.ndarray:
    """Complex analytic signal sum_k a_k exp(-i omega_k t) * d_omega on t_grid.

    Its modulus is the pulse envelope (the carrier drops out of |E|).
    """
    t = np.asarray(t_grid, dtype=float)
    domega = float(np.mean(np.diff(pulse.omega_grid)))
    phases = np.exp(-1j * np.outer(t, pulse.omega_grid))
    return phases @ pulse.amplitudes * domega


def time_grid_for(
    pulse: PulseSpec,
    barrier: BarrierSpec,
    samples_per_duration: int = 32,
    padding_durations: float = 8.0,
) -> np.ndarray:
    """Deterministic time grid covering the input pulse and its delayed output."""
    _require(samples_per_duration >= 16, "need at least 16 samples per duration")
    _require(padding_durations > 0, "padding_durations must be > 0")
    dt = pulse.duration / samples_per_duration
    start = -padding_durations * pulse.duration
    stop = barrier.length + padding_durations * pulse.duration
    count = int(math.ceil((stop - start) / dt)) + 1
    return start + dt * np.arange(count)


def _interpolated_peak(t_grid: np.ndarray, power: np.ndarray) -> float:
    top = float(np.max(power))
    if top <= 0.0:
        raise NumericError("envelope is identically zero; no peak to locate")
    if float(np.max(power) - np.min(power)) <= 1e-12 * top:
        raise NumericError("envelope is flat; peak not resolvable")
    i = int(np.argmax(power))
    if i == 0 or i == power.size - 1:
        raise NumericError("envelope peak sits at the time-grid edge; widen the grid")
    denom = power[i - 1] - 2.0 * power[i] + power[i + 1]
    if denom == 0.0:
        return float(t_grid[i])
    offset = 0.5 * (power[i - 1] - power[i + 1]) / denom
    return float(t_grid[i] + offset * (t_grid[1] - t_grid[0]))


def propagate(
    pulse: PulseSpec,
    barrier: BarrierSpec,
    samples_per_duration: int = 32,
    padding_durations: float = 8.0,
) -> tuple[PulseSpec, float, float]:
    """Send the pulse through the barrier and locate the envelope peaks.

    Returns the transferred spectrum together with the peak times of the
    input and output squared envelopes, both measured on the same
    deterministic time grid (spacing duration / samples_per_duration).
    """
    out = barrier_transfer(pulse, barrier)
    t_grid = time_grid_for(pulse, barrier, samples_per_duration, padding_durations)
    power_in = np.abs(synthesize_envelope(pulse, t_grid)) ** 2
    power_out = np.abs(synthesize_envelope(out, t_grid)) ** 2
    t_peak_in = _interpolated_peak(t_grid, power_in)
    t_peak_out = _interpolated_peak(t_grid, power_out)
    return out, t_peak_in, t_peak_out


def apparent_velocity(t_peak_in: float, t_peak_out: float, length: float) -> float:
    """Peak-to-peak transit speed L / (t_out - t_in), in units of c.

    May exceed c or come out negative when gain reshaping advances the peak;
    a zero transit time across a finite barrier returns +inf rather than
    raising.  For a zero-length barrier the value is nan (no transit exists).
    """
    transit = t_peak_out - t_peak_in
    if transit == 0.0:
        return math.inf if length > 0 else math.nan
    return length / transit


def envelope_correlation(env_a: np.ndarray, env_b: np.ndarray) -> float:
    """Normalized cross-correlation of two envelopes, maximized over lag.

    1.0 means identical shape up to scale and delay.
    """
    a = np.asarray(env_a, dtype=float)
    b = np.asarray(env_b, dtype=float)
    _require(a.size == b.size and a.size > 0, "envelopes must have equal nonzero length")
    norm = math.sqrt(float(np.sum(a * a)) * float(np.sum(b * b)))
    if norm == 0.0:
        raise NumericError("cannot correlate an identically zero envelope")
    return float(np.max(np.correlate(a, b, mode="full"))) / norm


def amplifier_regime(delta_t: float, tau_phph: float) -> str:
    """Classify amplifier reshaping behaviour.

    'shape_preserving' when the interval delta_t between energy-gain events
    exceeds the photon-photon relaxation time tau_phph; otherwise (including
    equality) the band is re-thermalized unevenly and the pulse reshapes.
    """
    _require(delta_t > 0, "delta_t must be > 0")
    _require(tau_phph > 0, "tau_phph must be > 0")
    return "shape_preserving" if delta_t > tau_phph else "reshaping"
