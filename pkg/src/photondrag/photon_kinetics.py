"""Non-stationary photon occupancy kinetics under DC and AC driving.

One mode obeys the rate equation

    dN/dt = gamma(t) * N + beta * N_source,

with gamma(t) = beta * (x(t) - 1) and x(t) the drift parameter of the
instantaneous drift speed.  For constant drift the solution is closed form;
for cosine driving the damping exponent integrates analytically and the
remaining source integral is done by adaptive quadrature.  ``ode_oracle``
integrates the same rate equation by brute force and exists only to check
the closed forms.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .core import BathConfig, DriftSpec, PhotonMode, drift_parameter
from .errors import DivergenceError, DomainError, InternalError, NumericError

__all__ = [
    "THRESHOLD_BAND",
    "Regime",
    "EvolutionProblem",
    "EvolutionResult",
    "classify_regime",
    "growth_increment",
    "amplification_coefficient",
    "ac_damping_exponent",
    "evolve_constant_field",
    "evolve_ac_field",
    "evolve_stream",
    "stationary_limit",
    "ode_oracle",
]

# Half-width in x of the band around threshold where the closed form is
# replaced by its series expansion.  At the seam the two branches agree to
# better than 1e-9 (catastrophic cancellation in N_source / (1 - x) stays
# below that).
THRESHOLD_BAND = 1e-6


class Regime(str, enum.Enum):
    DAMPED = "damped"
    THRESHOLD = "threshold"
    AMPLIFIED = "amplified"


def classify_regime(x: float, band: float = THRESHOLD_BAND) -> Regime:
    """Classify the drift parameter against the amplification threshold."""
    if abs(x - 1.0) <= band:
        return Regime.THRESHOLD
    return Regime.DAMPED if x < 1.0 else Regime.AMPLIFIED


@dataclass(frozen=True)
class EvolutionProblem:
    """Inputs for one single-mode occupancy evolution.

    N0        -- occupancy at t = 0
    N_source  -- bath source occupancy (Planck value at the mixture temperature)
    t_grid    -- strictly increasing sample times, first entry >= 0
    """

    mode: PhotonMode
    bath: BathConfig
    drift: DriftSpec
    N0: float
    N_source: float
    t_grid: np.ndarray

    def __post_init__(self):
        if not (math.isfinite(self.N0) and self.N0 >= 0):
            raise DomainError("N0 must be finite and >= 0")
        if not (math.isfinite(self.N_source) and self.N_source >= 0):
            raise DomainError("N_source must be finite and >= 0")
        t = np.asarray(self.t_grid, dtype=float)
        if t.ndim != 1 or t.size == 0:
            raise DomainError("t_grid must be a non-empty 1-d array")
        if t[0] < 0:
            raise DomainError("t_grid must start at t >= 0")
        if t.size > 1 and not np.all(np.diff(t) > 0):
            raise DomainError("t_grid must be strictly increasing")
        t.setflags(write=False)
        object.__setattr__(self, "t_grid", t)


@dataclass(frozen=True)
class EvolutionResult:
    """Occupancy time series with its regime tag and growth increment."""

    times: np.ndarray
    occupancies: np.ndarray
    regime: Regime
    gamma_q: float


def growth_increment(mode: PhotonMode, bath: BathConfig, u: float) -> float:
    """Per-mode growth rate gamma = beta * (x - 1); negative means damping."""
    return bath.beta * (drift_parameter(mode, u) - 1.0)


def amplification_coefficient(gamma_q: float) -> float:
    """Spatial gain gamma / c applied to a photon stream (1/length, c = 1)."""
    return gamma_q


def _check_non_negative(values: np.ndarray) -> None:
    if np.any(values < 0):
        raise InternalError("occupancy went negative; this should be impossible for valid inputs")


def _evolve_constant(problem: EvolutionProblem, N0: float) -> EvolutionResult:
    beta = problem.bath.beta
    x = drift_parameter(problem.mode, problem.drift.u)
    gamma = beta * (x - 1.0)
    regime = classify_regime(x)
    t = problem.t_grid
    if regime is Regime.THRESHOLD:
        # second-order expansion around gamma = 0; exactly linear at x = 1
        gt = gamma * t
        n = N0 * (1.0 + gt + 0.5 * gt * gt) + problem.N_source * beta * t * (1.0 + 0.5 * gt)
    else:
        # same closed form as (N0 - N_s) e^{gamma t} + N_s, written without
        # the 1/(1-x) cancellation: N0 e^{gamma t} + beta N_src t exprel(gamma t)
        gt = gamma * t
        exprel = np.ones_like(gt)
        nz = gt != 0.0
        exprel[nz] = np.expm1(gt[nz]) / gt[nz]
        with np.errstate(over="ignore"):
            grow = N0 * np.exp(gt) if N0 != 0.0 else np.zeros_like(gt)
        n = grow + beta * problem.N_source * t * exprel
    _check_non_negative(n)
    return EvolutionResult(times=t.copy(), occupancies=n, regime=regime, gamma_q=gamma)


def evolve_constant_field(problem: EvolutionProblem) -> EvolutionResult:
    """Occupancy under constant drift: (N0 - N_s) exp(gamma t) + N_s.

    N_s = N_source / (1 - x) is the stationary value.  Inside the threshold
    band |x - 1| <= THRESHOLD_BAND the expansion
    N0 (1 + gt + (gt)^2/2) + N_source beta t (1 + gt/2) replaces the closed
    form; at x = 1 exactly, occupancy grows linearly as N0 + N_source beta t.
    """
    if problem.drift.mode != "constant":
        raise DomainError("evolve_constant_field requires drift.mode == 'constant'")
    return _evolve_constant(problem, problem.N0)


def evolve_stream(problem: EvolutionProblem, N_init_drifted: float) -> EvolutionResult:
    """Constant-drift evolution of an initially drifting photon stream.

    Identical to ``evolve_constant_field`` with the initial occupancy replaced
    by the drifted-Planck value at the observation point (compute it with
    ``core.drifted_planck_occupancy``).  With zero initial stream drift the
    two solutions coincide.
    """
    if problem.drift.mode != "constant":
        raise DomainError("evolve_stream requires drift.mode == 'constant'")
    if not (math.isfinite(N_init_drifted) and N_init_drifted >= 0):
        raise DomainError("N_init_drifted must be finite and >= 0")
    return _evolve_constant(problem, N_init_drifted)


def ac_damping_exponent(beta: float, x: float, omega: float, t: float) -> float:
    """Integrated decay exponent beta * (t - x sin(omega t) / omega).

    This is the integral of -gamma(tau) = beta (1 - x cos(omega tau)) from 0
    to t; it returns exactly beta * t whenever omega * t is a multiple of pi.
    """
    return beta * (t - x * math.sin(omega * t) / omega)


def evolve_ac_field(
    problem: EvolutionProblem,
    rtol: float = 1e-10,
    atol: float = 1e-12,
) -> EvolutionResult:
    """Occupancy under cosine drift u(t) = u cos(omega_drive t).

    N(t) = N0 exp(-Phi(t)) + beta N_source * integral_0^t exp(Phi(tau) - Phi(t)) dtau
    with Phi the ``ac_damping_exponent`` at the peak drift parameter x.  The
    integral is evaluated per sample by adaptive quadrature at the given
    tolerances; failure to converge raises ``NumericError`` with the achieved
    estimate attached.  As omega_drive -> 0 the result approaches the
    constant-field solution.
    """
    if problem.drift.mode != "cosine":
        raise DomainError("evolve_ac_field requires drift.mode == 'cosine'")
    beta = problem.bath.beta
    omega = problem.drift.omega_drive
    x = drift_parameter(problem.mode, problem.drift.u)
    gamma = beta * (x - 1.0)
    t_grid = problem.t_grid

    def phi(t: float) -> float:
        return ac_damping_exponent(beta, x, omega, t)

    n = np.empty_like(t_grid)
    for k, t in enumerate(t_grid):
        phi_t = phi(t)
        if t == 0.0:
            n[k] = problem.N0
            continue
        val, abserr, info, *tail = integrate.quad(
            lambda tau: math.exp(phi(tau) - phi_t),
            0.0,
            t,
            epsabs=atol,
            epsrel=rtol,
            limit=200,
            full_output=1,
        )
        if tail:
            raise NumericError(f"AC source quadrature failed at t = {t}: {tail[0]}", achieved=abserr)
        if abserr > 10.0 * max(atol, rtol * abs(val)):
            raise NumericError(
                f"AC source quadrature reached only {abserr:g} at t = {t}", achieved=abserr
            )
        n[k] = problem.N0 * math.exp(-phi_t) + beta * problem.N_source * val
    _check_non_negative(n)
    return EvolutionResult(times=t_grid.copy(), occupancies=n, regime=classify_regime(x), gamma_q=gamma)


def stationary_limit(mode: PhotonMode, u: float, N_source: float) -> float:
    """Long-time occupancy N_source / (1 - x), defined only below threshold.

    At or above x = 1 the occupancy grows without bound and
    ``DivergenceError`` is raised.
    """
    if N_source < 0:
        raise DomainError("N_source must be >= 0")
    x = drift_parameter(mode, u)
    if x >= 1.0:
        raise DivergenceError(f"no stationary limit for drift parameter x = {x} >= 1")
    return N_source / (1.0 - x)


def _rk4(problem: EvolutionProblem, step: float) -> np.ndarray:
    beta = problem.bath.beta
    x = drift_parameter(problem.mode, problem.drift.u)
    source = beta * problem.N_source
    if problem.drift.mode == "cosine":
        omega = problem.drift.omega_drive

        def rate(t: float, n: float) -> float:
            return beta * (x * math.cos(omega * t) - 1.0) * n + source

    else:

        def rate(t: float, n: float) -> float:
            return beta * (x - 1.0) * n + source

    t_grid = problem.t_grid
    out = np.empty_like(t_grid)
    n = problem.N0
    t = 0.0
    for k, t_target in enumerate(t_grid):
        span = t_target - t
        if span > 0:
            substeps = max(1, math.ceil(span / step))
            h = span / substeps
            for _ in range(substeps):
                k1 = rate(t, n)
                k2 = rate(t + 0.5 * h, n + 0.5 * h * k1)
                k3 = rate(t + 0.5 * h, n + 0.5 * h * k2)
                k4 = rate(t + h, n + h * k3)
                n += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
                t += h
            t = t_target
        out[k] = n
    return out


def ode_oracle(problem: EvolutionProblem, step: float, check_rtol: float = 1e-8) -> EvolutionResult:
    """Brute-force RK4 integration of the single-mode rate equation.

    Ground truth for the closed-form solvers, used in tests only.  The
    integration is repeated at half the step; if the two runs disagree by
    more than check_rtol (relative, floored at machine scale) the step was
    too coarse and ``NumericError`` reports the achieved difference.
    """
    if step <= 0:
        raise DomainError("step must be > 0")
    coarse = _rk4(problem, step)
    fine = _rk4(problem, step / 2.0)
    scale = np.maximum(np.abs(fine), 1e-300)
    achieved = float(np.max(np.abs(coarse - fine) / scale))
    if achieved > check_rtol:
        raise NumericError(
            f"RK4 step {step} not converged: halving changes results by {achieved:g}",
            achieved=achieved,
        )
    x = drift_parameter(problem.mode, problem.drift.u)
    _check_non_negative(fine)
    return EvolutionResult(
        times=problem.t_grid.copy(),
        occupancies=fine,
        regime=classify_regime(x),
        gamma_q=problem.bath.beta * (x - 1.0),
    )
