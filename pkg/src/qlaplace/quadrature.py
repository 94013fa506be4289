"""Adaptive numerical integration used by the transform layer.

Scheme: a fixed 15-point Gauss-Legendre rule per panel, with global
adaptive bisection.  A panel's error is estimated by comparing the
whole-panel rule against the sum over its two halves; the worst panel is
split until the total estimated error meets the requested tolerance.
Initial panels can be laid out dyadically toward an endpoint, which both
resolves integrand features living on much smaller scales than the
interval and implements geometric subdivision toward an endpoint where
the integrand is continuous but not smooth (the kernel cutoff).

Integrands must be vectorized over numpy arrays; a fallback wrapper maps
scalar-only callables elementwise.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, QuadratureError

__all__ = ["QuadratureConfig", "integrate", "integrate_half_line"]

_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(15)

_MAX_PANELS = 40000


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_depth: int = 60

    def __post_init__(self) -> None:
        if self.rel_tol <= 0.0 or self.abs_tol <= 0.0 or self.max_depth <= 0:
            raise DomainError("quadrature tolerances and depth must be positive")


def _vectorized(f):
    def call(x: np.ndarray) -> np.ndarray:
        try:
            y = np.asarray(f(x), dtype=float)
            if y.shape == x.shape:
                return y
        except (TypeError, ValueError):
            pass
        return np.fromiter((float(f(xi)) for xi in x), dtype=float, count=len(x))

    return call


def _panel_rule(f, a: float, b: float) -> float:
    h = 0.5 * (b - a)
    x = a + h * (_NODES + 1.0)
    y = f(x)
    if not np.all(np.isfinite(y)):
        bad = x[~np.isfinite(y)][0]
        raise QuadratureError(f"non-finite integrand sample at t = {bad}")
    return h * float(_WEIGHTS @ y)


def _measure(f, a: float, b: float) -> tuple[float, float]:
    """Refined panel value (two halves) and an error estimate against the
    single-panel rule."""
    whole = _panel_rule(f, a, b)
    mid = 0.5 * (a + b)
    halves = _panel_rule(f, a, mid) + _panel_rule(f, mid, b)
    return halves, abs(whole - halves)


def dyadic_breakpoints(
    a: float, b: float, *, toward_a: bool = True, toward_b: bool = False, levels: int = 32
) -> list[float]:
    """Interior breakpoints accumulating geometrically toward an endpoint."""
    width = b - a
    pts: set[float] = set()
    for j in range(1, levels + 1):
        frac = 2.0 ** (-j)
        if toward_a:
            pts.add(a + width * frac)
        if toward_b:
            pts.add(b - width * frac)
    return sorted(p for p in pts if a < p < b)


def integrate(
    f,
    a: float,
    b: float,
    cfg: QuadratureConfig = QuadratureConfig(),
    *,
    breakpoints: list[float] | None = None,
) -> float:
    """Integrate f over [a, b] to within max(abs_tol, rel_tol*|result|).

    Raises QuadratureError when a panel would need more than ``max_depth``
    bisections, when the panel budget is exhausted, or on a non-finite
    integrand sample.
    """
    if not (b > a):
        if b == a:
            return 0.0
        raise DomainError("integration interval is reversed")
    fv = _vectorized(f)

    edges = [a]
    if breakpoints:
        edges.extend(p for p in sorted(breakpoints) if a < p < b)
    edges.append(b)

    # heap entries: (-err, seq, lo, hi, value, depth)
    heap = []
    total = 0.0
    err_total = 0.0
    seq = 0
    for lo, hi in zip(edges[:-1], edges[1:]):
        value, err = _measure(fv, lo, hi)
        total += value
        err_total += err
        heapq.heappush(heap, (-err, seq, lo, hi, value, 0))
        seq += 1

    noise_floor = 64.0 * np.finfo(float).eps
    while heap:
        tol = max(cfg.abs_tol, cfg.rel_tol * abs(total))
        if err_total <= tol:
            break
        neg_err, _, lo, hi, value, depth = heapq.heappop(heap)
        err = -neg_err
        if err <= noise_floor * max(abs(total), abs(value)):
            # at double-precision noise floor; refining cannot help
            err_total -= err
            continue
        if depth >= cfg.max_depth:
            raise QuadratureError(
                f"tolerance not met: panel [{lo}, {hi}] exhausted max_depth={cfg.max_depth}"
            )
        if seq >= _MAX_PANELS:
            raise QuadratureError("tolerance not met: panel budget exhausted")
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            raise QuadratureError("tolerance not met: panel narrower than float spacing")
        total -= value
        err_total -= err
        for lo2, hi2 in ((lo, mid), (mid, hi)):
            value2, err2 = _measure(fv, lo2, hi2)
            total += value2
            err_total += err2
            heapq.heappush(heap, (-err2, seq, lo2, hi2, value2, depth + 1))
            seq += 1
    return total


def integrate_half_line(
    f,
    cfg: QuadratureConfig = QuadratureConfig(),
    *,
    scale: float = 1.0,
) -> float:
    """Integrate f over [0, inf) for integrands that decay at infinity.

    Substitutes ``t = scale * u / (1 - u)`` to map to [0, 1); ``scale``
    should match the decay scale of the integrand so that the transformed
    integrand varies on O(1) scales in u.
    """
    if scale <= 0.0:
        raise DomainError("scale must be positive")
    fv = _vectorized(f)

    def g(u: np.ndarray) -> np.ndarray:
        om = 1.0 - u
        t = scale * u / om
        return fv(t) * (scale / om**2)

    pts = dyadic_breakpoints(0.0, 1.0, toward_a=True, toward_b=True, levels=32)
    return integrate(g, 0.0, 1.0, cfg, breakpoints=pts)
