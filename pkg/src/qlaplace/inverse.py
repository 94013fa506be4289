"""Real-variable inversion of the deformed Laplace transform.

Post-Widder route: f(t) is recovered from high-order derivatives of F at
real points, no contour integration.  The deformed finite-k estimator is

    est_k = (-1)**k / k! * F^(k)(s) * (2-q) * s**(k+1)  at  s = k*xi/t,

where xi is the argument-scaling factor of qmath.xi_factor.  Two scaling
modes are provided:

* fixed power m: the literal estimator above with xi = xi_factor(q, m),
  exact up to a computable finite-k factor when F is a single power
  s**-m;
* per-term (default): each series term uses its index-matched scaling,
  which in the k -> inf limit reduces to the coefficient rule

      a_n = c_n * q_poly(2-q, n+1) / n!

  implemented directly by `series_invert` (the exact inverse of the
  power-function forward map).

All k-dependent factorial factors are combined in log magnitude so the
schedule can run to large k without overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .catalog import CatalogFunction
from .errors import DomainError, QLaplaceError
from .qmath import QParam, xi_factor
from .transform import PowerSeriesTransform, catalog_transform

__all__ = [
    "TaylorSeries",
    "WidderConfig",
    "WidderEstimate",
    "RoundtripReport",
    "classical_post_widder",
    "q_post_widder",
    "series_invert",
    "roundtrip",
    "widder_weight",
]


@dataclass(frozen=True)
class TaylorSeries:
    """f(t) = sum_n coeffs[n] * t**n with a rough validity radius t_max."""

    coeffs: tuple[float, ...]
    t_max: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(float(a) for a in self.coeffs))
        if not all(math.isfinite(a) for a in self.coeffs):
            raise DomainError("non-finite Taylor coefficient")

    def __call__(self, t):
        arr = np.asarray(t, dtype=float)
        acc = np.zeros_like(arr)
        for a in reversed(self.coeffs):
            acc = acc * arr + a
        return acc if np.ndim(t) else float(acc)


@dataclass(frozen=True)
class WidderConfig:
    """Schedule and scaling mode for the finite-k estimator sequence.

    ``fixed_m = None`` selects per-term scaling; an integer m >= 2 selects
    the literal fixed-power estimator (meaningful when F is concentrated
    on s**-m).  ``extrapolate`` adds Richardson extrapolation in 1/k.
    """

    k_schedule: tuple[int, ...] = (4, 8, 16, 32, 64)
    fixed_m: int | None = None
    extrapolate: bool = True

    def __post_init__(self) -> None:
        ks = tuple(int(k) for k in self.k_schedule)
        object.__setattr__(self, "k_schedule", ks)
        if not ks or any(k < 1 for k in ks):
            raise DomainError("k_schedule must contain positive integers")
        if any(b <= a for a, b in zip(ks[:-1], ks[1:])):
            raise DomainError("k_schedule must be strictly increasing")
        if self.fixed_m is not None and self.fixed_m < 2:
            raise DomainError("fixed-power mode requires m >= 2 (scale factor undefined below)")


@dataclass(frozen=True)
class WidderEstimate:
    k: int
    value: float
    extrapolated: float | None = None


def _neville_at_zero(xs: list[float], ys: list[float]) -> float:
    p = list(ys)
    n = len(xs)
    for level in range(1, n):
        for i in range(n - level):
            p[i] = (-xs[i + level] * p[i] + xs[i] * p[i + 1]) / (xs[i] - xs[i + level])
    return p[0]


def extrapolate_schedule(ks, values, enabled: bool = True) -> list[WidderEstimate]:
    """Wrap raw finite-k values, attaching running 1/k Richardson values.

    Each estimate's ``extrapolated`` field uses the last (up to) three raw
    values available at that point in the schedule (two extrapolation
    levels over the clean O(1/k) leading error).
    """
    out: list[WidderEstimate] = []
    for i, (k, v) in enumerate(zip(ks, values)):
        extr = None
        if enabled and i >= 1:
            lo = max(0, i - 2)
            xs = [1.0 / kk for kk in ks[lo : i + 1]]
            ys = list(values[lo : i + 1])
            extr = _neville_at_zero(xs, ys)
        out.append(WidderEstimate(int(k), float(v), extr))
    return out


def classical_post_widder(F_deriv, t: float, k: int) -> float:
    """Finite-k classical estimate (-1)**k/k! * s**(k+1) * F^(k)(s) at s = k/t.

    ``F_deriv`` is a derivative oracle: a callable (k, s) -> F^(k)(s)
    backed by an exact series or a closed form (finite differences are
    hopeless at this order and are deliberately not offered).  Error
    decays like O(1/k) for smooth f.
    """
    if t <= 0.0:
        raise DomainError("t must be positive")
    if k < 1:
        raise DomainError("k must be >= 1")
    s = k / t
    d = float(F_deriv(k, s))
    if not math.isfinite(d):
        raise QLaplaceError(f"derivative oracle returned non-finite value at k={k}, s={s}")
    if d == 0.0:
        return 0.0
    log_mag = math.log(abs(d)) + (k + 1) * math.log(s) - math.lgamma(k + 1)
    sign = math.copysign(1.0, d) * (-1.0 if k % 2 else 1.0)
    try:
        return sign * math.exp(log_mag)
    except OverflowError:
        raise QLaplaceError("estimate overflows double precision despite log-domain handling")


def _fixed_estimate(q: QParam, F: PowerSeriesTransform, t: float, k: int, m: int) -> float:
    """Literal fixed-power estimator at s = k*xi_m/t.

    Per series term the alternating sign and the s**(k+1) growth cancel
    analytically, leaving (2-q) * c_n * C(n+k, n) * s**-n; the binomial
    factor is accumulated as a running log.
    """
    xi = xi_factor(q, m)
    s = k * xi / t
    log_s = math.log(s)
    total = 0.0
    log_binom = 0.0
    for n, c in enumerate(F.coeffs):
        if n:
            log_binom += math.log((k + n) / n)
        if c == 0.0:
            continue
        try:
            term = math.copysign(math.exp(math.log(abs(c)) + log_binom - n * log_s), c)
        except OverflowError:
            raise QLaplaceError("estimate overflows double precision despite log-domain handling")
        total += term
    return (2.0 - q.q) * total


def _per_term_estimate(taylor: list[float], t: float, k: int) -> float:
    """Per-term-scaled estimator: sum_n a_n t**n * prod_{j<=n} (k+j)/k."""
    total = 0.0
    damp = 1.0
    tn = 1.0
    for n, a in enumerate(taylor):
        if n:
            damp *= (k + n) / k
            tn *= t
        total += a * tn * damp
    return total


def q_post_widder(
    q: QParam,
    F: PowerSeriesTransform,
    t: float,
    cfg: WidderConfig = WidderConfig(),
) -> list[WidderEstimate]:
    """Finite-k inversion estimates of a power-series transform at t > 0.

    Returns one estimate per k in the schedule, with optional running
    Richardson extrapolation in 1/k.  At q = 1 the formula degenerates to
    the classical Post-Widder estimator (scale factor 1, prefactor 1).
    """
    if t <= 0.0:
        raise DomainError("t must be positive")
    if not any(c != 0.0 for c in F.coeffs):
        raise DomainError("empty transform series")
    if cfg.fixed_m is not None:
        values = [_fixed_estimate(q, F, t, k, cfg.fixed_m) for k in cfg.k_schedule]
    else:
        taylor = list(series_invert(q, F).coeffs)
        values = [_per_term_estimate(taylor, t, k) for k in cfg.k_schedule]
    return extrapolate_schedule(cfg.k_schedule, values, cfg.extrapolate)


def _radius_guess(coeffs: tuple[float, ...]) -> float:
    nz = [(n, abs(a)) for n, a in enumerate(coeffs) if a != 0.0]
    if not nz:
        return 1.0
    n_last, a_last = nz[-1]
    if n_last == 0:
        return 10.0
    t_trunc = (1e-9 / a_last) ** (1.0 / n_last) if a_last > 0.0 else 10.0
    return float(min(max(t_trunc, 1e-3), 1e3))


def series_invert(q: QParam, F: PowerSeriesTransform) -> TaylorSeries:
    """Exact term-wise inverse: coefficient rule a_n = c_n * q_poly(2-q, n+1)/n!.

    This is the k -> inf limit of the per-term-scaled estimator and the
    exact inverse of the forward power map
    t**n -> n!/q_poly(2-q, n+1) * s**-(n+1).  Also valid at q = 1, where
    it reduces to the classical rule a_n = c_n/n!.
    """
    coeffs = []
    qpoly = 1.0
    fact = 1.0
    for n, c in enumerate(F.coeffs):
        qpoly *= 1.0 + q.eps * (n + 1)
        if n:
            fact *= n
        coeffs.append(c * qpoly / fact)
    return TaylorSeries(tuple(coeffs), _radius_guess(tuple(coeffs)))


@dataclass(frozen=True)
class RoundtripReport:
    max_coeff_rel_err: float
    coeff_errors: tuple[float, ...]
    recovered: tuple[float, ...]
    reference: tuple[float, ...]
    t_grid: tuple[float, ...]
    pointwise_errors: tuple[float, ...]


def roundtrip(
    q: QParam,
    f: CatalogFunction,
    n_terms: int = 20,
    t_points: int = 33,
) -> RoundtripReport:
    """Forward closed form then term-wise inversion, against f itself.

    The recovered Taylor coefficients are compared with the independent
    expansion from f's defining series, and the reconstructed series is
    compared with f pointwise on [0, t_max].
    """
    if n_terms < 4:
        raise DomainError("n_terms must be >= 4")
    F = catalog_transform(q, f, n_terms)
    rec = series_invert(q, F)
    ref = f.taylor_coefficients(len(rec.coeffs) - 1)
    errors = []
    for a_rec, a_ref in zip(rec.coeffs, ref):
        scale = max(abs(a_rec), abs(a_ref))
        errors.append(abs(a_rec - a_ref) / scale if scale > 0.0 else 0.0)
    t_grid = np.linspace(0.0, rec.t_max, t_points)
    series_vals = rec(t_grid)
    true_vals = np.asarray(f(t_grid), dtype=float)
    pw = np.abs(series_vals - true_vals) / np.maximum(np.abs(true_vals), 1.0)
    return RoundtripReport(
        max(errors),
        tuple(errors),
        rec.coeffs,
        tuple(ref),
        tuple(float(t) for t in t_grid),
        tuple(float(e) for e in pw),
    )


def widder_weight(q: QParam, k: int, y):
    """Kernel weight y**k * (1 - (1-q)*k*y)**(1/(1-q) - k) (cutoff to 0).

    At q = 1 this is (y*exp(-y))**k.  Whenever y = 1 lies inside the
    support, i.e. (1-q)*k < 1, the only interior stationary point is
    exactly y = 1: the log-derivative condition
    k/y = k*(1 - (1-q)*k)/(1 - (1-q)*k*y) collapses to y = 1.  For larger
    k the support ends before y = 1 and the weight grows without bound
    toward the cutoff.
    """
    if k < 1:
        raise DomainError("k must be >= 1")
    arr = np.atleast_1d(np.asarray(y, dtype=float))
    if np.any(arr < 0.0):
        raise DomainError("y must be nonnegative")
    out = np.zeros_like(arr)
    if q.classical:
        pos = arr > 0.0
        out[pos] = np.exp(k * (np.log(arr[pos]) - arr[pos]))
    else:
        expo = 1.0 / q.eps - k
        live = (arr > 0.0) & (1.0 - q.eps * k * arr > 0.0)
        with np.errstate(over="ignore"):
            out[live] = np.exp(
                k * np.log(arr[live]) + expo * np.log(1.0 - q.eps * k * arr[live])
            )
    out = out.reshape(np.shape(y))
    return out if np.ndim(y) else float(out)
