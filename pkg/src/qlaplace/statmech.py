"""Deformed canonical partition functions and density-of-states recovery.

Two models, both with pure power-law partition functions under the
second-constraint (linear-average) formulation:

* classical ideal gas in D dimensions, N particles:

      Z_q(beta) = V**N (2 pi m)**(DN/2) / (h**DN N!)
                  * Gamma(z+1) / ((1-q)**(DN/2) Gamma(z + DN/2 + 1))
                  * beta**-(DN/2),            z = 1/(1-q);

* N noninteracting D-dimensional harmonic oscillators:

      Z_q(beta) = (hbar omega)**-DN
                  * Gamma(z+1) / ((1-q)**DN Gamma(z + DN + 1))
                  * beta**-DN.

Because the Gamma ratio equals 1/q_poly(2-q, m) for transform power m,
Z_q is exactly the deformed transform of a q-independent power law: the
density of states g(E) = prefactor * E**(m-1) / Gamma(m) recovered by the
Post-Widder inversion carries no q dependence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import DomainError
from .inverse import WidderConfig, WidderEstimate, extrapolate_schedule, q_post_widder
from .qmath import QParam, _q_poly_real, _xi_factor_real
from .quadrature import QuadratureConfig, dyadic_breakpoints, integrate
from .transform import PowerSeriesTransform

__all__ = [
    "IdealGasModel",
    "OscillatorModel",
    "DensityOfStates",
    "ideal_gas_partition",
    "oscillator_partition",
    "ideal_gas_partition_quadrature",
    "density_of_states",
]

_MAX_DOF = 200


@dataclass(frozen=True)
class IdealGasModel:
    """D-dimensional classical ideal gas of N particles (arbitrary units)."""

    D: int
    N: int
    V: float = 1.0
    mass: float = 1.0
    h: float = 1.0

    def __post_init__(self) -> None:
        if self.D < 1 or self.N < 1:
            raise DomainError("D and N must be positive integers")
        if self.V <= 0.0 or self.mass <= 0.0 or self.h <= 0.0:
            raise DomainError("V, mass and h must be positive")
        if self.D * self.N < 2:
            raise DomainError("need D*N/2 >= 1 for a valid transform power")
        if self.D * self.N > _MAX_DOF:
            raise DomainError(f"D*N > {_MAX_DOF} rejected (overflow guard)")

    @property
    def transform_power(self) -> float:
        return self.D * self.N / 2.0

    @property
    def log_prefactor(self) -> float:
        dn = self.D * self.N
        return (
            self.N * math.log(self.V)
            + dn / 2.0 * math.log(2.0 * math.pi * self.mass)
            - dn * math.log(self.h)
            - math.lgamma(self.N + 1)
        )


@dataclass(frozen=True)
class OscillatorModel:
    """N noninteracting D-dimensional harmonic oscillators."""

    D: int
    N: int
    omega: float = 1.0
    hbar: float = 1.0

    def __post_init__(self) -> None:
        if self.D < 1 or self.N < 1:
            raise DomainError("D and N must be positive integers")
        if self.omega <= 0.0 or self.hbar <= 0.0:
            raise DomainError("omega and hbar must be positive")
        if self.D * self.N > _MAX_DOF:
            raise DomainError(f"D*N > {_MAX_DOF} rejected (overflow guard)")

    @property
    def transform_power(self) -> float:
        return float(self.D * self.N)

    @property
    def log_prefactor(self) -> float:
        return -self.D * self.N * math.log(self.hbar * self.omega)


ThermoModel = Union[IdealGasModel, OscillatorModel]


def _log_power_coefficient(q: QParam, model: ThermoModel) -> float:
    """log C where Z_q(beta) = C * beta**-m; the Gamma-ratio part equals
    1/q_poly(2-q, m) via its real-order continuation."""
    m = model.transform_power
    return model.log_prefactor - math.log(_q_poly_real(2.0 - q.q, m))


def _check_deformed(q: QParam) -> None:
    if q.classical:
        raise DomainError("partition functions are defined for q < 1 here")


def ideal_gas_partition(q: QParam, model: IdealGasModel, beta: float) -> float:
    """Closed-form Z_q(beta) for the ideal gas, evaluated in log domain."""
    _check_deformed(q)
    if beta <= 0.0:
        raise DomainError("beta must be positive")
    return math.exp(_log_power_coefficient(q, model) - model.transform_power * math.log(beta))


def oscillator_partition(q: QParam, model: OscillatorModel, beta: float) -> float:
    """Closed-form Z_q(beta) for the oscillator bath, log domain."""
    _check_deformed(q)
    if beta <= 0.0:
        raise DomainError("beta must be positive")
    return math.exp(_log_power_coefficient(q, model) - model.transform_power * math.log(beta))


def ideal_gas_partition_quadrature(
    q: QParam,
    model: IdealGasModel,
    beta: float,
    ctl: QuadratureConfig = QuadratureConfig(rel_tol=1e-8, abs_tol=1e-12),
) -> float:
    """Brute-force phase-space integral for two momentum degrees of freedom.

    Integrates the deformed Boltzmann weight over the full momentum plane
    (which is what the closed form counts; a first-quadrant-only domain
    would come out 4x smaller) and multiplies by the configurational
    volume V**N / (h**DN N!).  Restricted to D*N = 2 where the 2D nested
    quadrature is cheap.
    """
    _check_deformed(q)
    if beta <= 0.0:
        raise DomainError("beta must be positive")
    if model.D * model.N != 2:
        raise DomainError("brute-force cross-check is implemented for D*N = 2 only")
    half = beta / (2.0 * model.mass)
    r2 = 1.0 / (q.eps * half)
    radius = math.sqrt(r2)
    expo = 1.0 / q.eps

    def inner(p1: float) -> float:
        p2_max = math.sqrt(max(r2 - p1 * p1, 0.0))
        if p2_max == 0.0:
            return 0.0

        def integrand(p2: np.ndarray) -> np.ndarray:
            base = np.maximum(1.0 - q.eps * half * (p1 * p1 + p2 * p2), 0.0)
            return base**expo

        pts = dyadic_breakpoints(0.0, p2_max, toward_a=False, toward_b=True, levels=20)
        return integrate(integrand, 0.0, p2_max, ctl, breakpoints=pts)

    def outer(p1: np.ndarray) -> np.ndarray:
        return np.fromiter((inner(float(p)) for p in p1), dtype=float, count=len(p1))

    pts = dyadic_breakpoints(0.0, radius, toward_a=False, toward_b=True, levels=20)
    momentum_plane = 4.0 * integrate(outer, 0.0, radius, ctl, breakpoints=pts)
    log_config = (
        model.N * math.log(model.V)
        - model.D * model.N * math.log(model.h)
        - math.lgamma(model.N + 1)
    )
    return momentum_plane * math.exp(log_config)


@dataclass(frozen=True)
class DensityOfStates:
    """g(E) = prefactor * E**exponent plus finite-k numeric samples."""

    prefactor: float
    exponent: float
    samples: tuple[tuple[float, float], ...]
    k_estimates: tuple[tuple[float, tuple[WidderEstimate, ...]], ...]

    def analytic(self, E):
        return self.prefactor * np.asarray(E, dtype=float) ** self.exponent


def _real_power_estimates(
    q: QParam, log_c: float, m: float, E: float, cfg: WidderConfig
) -> list[WidderEstimate]:
    """Finite-k estimates for F = C * s**-m with real (non-integer) m >= 2."""
    xi = _xi_factor_real(q, m)
    values = []
    for k in cfg.k_schedule:
        s = k * xi / E
        log_est = (
            log_c
            + math.lgamma(m + k)
            - math.lgamma(m)
            - math.lgamma(k + 1)
            - (m - 1.0) * math.log(s)
        )
        values.append((2.0 - q.q) * math.exp(log_est))
    return extrapolate_schedule(cfg.k_schedule, values, cfg.extrapolate)


def density_of_states(
    q: QParam,
    model: ThermoModel,
    E_grid,
    cfg: WidderConfig = WidderConfig(),
) -> DensityOfStates:
    """Recover g(E) from Z_q by treating beta as the transform variable.

    Z_q(beta) = C * beta**-m is inverted per energy-grid point with the
    finite-k estimator; the analytic limit
    g(E) = exp(log_prefactor) * E**(m-1) / Gamma(m) is carried alongside
    and is independent of q.  Requires transform power m >= 2 (the
    fixed-power scale factor is undefined below that).
    """
    _check_deformed(q)
    m = model.transform_power
    if m < 2:
        raise DomainError(
            "transform power m must be >= 2: the inversion scale factor is undefined for m < 2"
        )
    energies = [float(e) for e in E_grid]
    if not energies or any(e <= 0.0 for e in energies):
        raise DomainError("energy grid must be positive and nonempty")
    log_c = _log_power_coefficient(q, model)
    per_e: list[tuple[float, tuple[WidderEstimate, ...]]] = []
    if m == int(m):
        mi = int(m)
        coeffs = [0.0] * mi
        coeffs[mi - 1] = math.exp(log_c)
        series = PowerSeriesTransform(tuple(coeffs), 0.0, q)
        run_cfg = cfg if cfg.fixed_m is not None else WidderConfig(
            cfg.k_schedule, mi, cfg.extrapolate
        )
        for e in energies:
            per_e.append((e, tuple(q_post_widder(q, series, e, run_cfg))))
    else:
        for e in energies:
            per_e.append((e, tuple(_real_power_estimates(q, log_c, m, e, cfg))))
    samples = []
    for e, ests in per_e:
        last = ests[-1]
        value = last.extrapolated if (cfg.extrapolate and last.extrapolated is not None) else last.value
        samples.append((e, float(value)))
    prefactor = math.exp(model.log_prefactor - math.lgamma(m))
    return DensityOfStates(prefactor, m - 1.0, tuple(samples), tuple(per_e))
