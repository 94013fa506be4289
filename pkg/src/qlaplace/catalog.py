"""Catalog of input functions with closed-form deformed transforms.

Thirteen families: powers, plain/deformed exponentials and Gaussians, and
plain/deformed circular and hyperbolic functions.  Each entry knows how to

* evaluate itself on numpy arrays,
* hand out an exact derivative of any order as a callable,
* expand itself in a Taylor series straight from its defining product
  formulas (used as the independent reference when checking the
  transform/inversion round trip).

Deformed entries carry their own deformation parameter ``qprime``,
independent of the transform's ``q``.  Deformed functions of a negative
argument use the cutoff convention (value 0 once the base hits zero);
closed-form transforms are quoted for ``s`` large enough that the kernel
support stays inside the positivity domain, where the cutoff is invisible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np
from numpy.polynomial import polynomial as npp

from .errors import DomainError
from .qmath import QParam

__all__ = [
    "Monomial",
    "Exponential",
    "QExponential",
    "Gaussian",
    "QGaussian",
    "Cosine",
    "Sine",
    "QCosine",
    "QSine",
    "Cosh",
    "Sinh",
    "QCosh",
    "QSinh",
    "CatalogFunction",
    "CATALOG",
    "make_catalog_function",
]


def _check_alpha(alpha: float) -> None:
    if alpha <= 0.0:
        raise DomainError("alpha must be positive")


def _check_qprime(qprime: QParam) -> None:
    if qprime.q >= 1.0:
        raise DomainError("deformed catalog entries require qprime < 1")


def _check_sign(sign: int) -> None:
    if sign not in (-1, 1):
        raise DomainError("sign must be +1 or -1")


def _masked_power(base, expo: float) -> np.ndarray:
    """base**expo where base > 0, exactly 0 elsewhere (cutoff convention)."""
    b = np.atleast_1d(np.asarray(base, dtype=float))
    out = np.zeros_like(b)
    pos = b > 0.0
    out[pos] = b[pos] ** expo
    return out.reshape(np.shape(base))


_SNAP = 32.0 * np.finfo(float).eps


def _dfactor(j: float, eps_prime: float) -> float:
    """The series step factor 1 - j*(1-q'), snapped to exact 0 within a few
    ulps so that terminating deformed series (integer 1/(1-q')) terminate
    exactly instead of trailing rounding noise."""
    v = 1.0 - j * eps_prime
    if abs(v) <= _SNAP * max(1.0, j * eps_prime):
        return 0.0
    return v


def _scalar_ok(t, out):
    return out if np.ndim(t) else float(out)


@dataclass(frozen=True)
class Monomial:
    """f(t) = t**(power-1), power >= 1."""

    power: int
    kind = "monomial"

    def __post_init__(self) -> None:
        if self.power < 1:
            raise DomainError("monomial power index must be >= 1")

    def __call__(self, t):
        return _scalar_ok(t, np.asarray(t, dtype=float) ** (self.power - 1))

    def derivative(self, order: int) -> Callable:
        deg = self.power - 1
        if order > deg:
            return lambda t: _scalar_ok(t, np.zeros_like(np.asarray(t, dtype=float)))
        coef = math.factorial(deg) / math.factorial(deg - order)

        def d(t):
            return _scalar_ok(t, coef * np.asarray(t, dtype=float) ** (deg - order))

        return d

    def taylor_coefficients(self, n_max: int) -> list[float]:
        coeffs = [0.0] * (n_max + 1)
        if self.power - 1 <= n_max:
            coeffs[self.power - 1] = 1.0
        return coeffs

    @property
    def value_at_zero(self) -> float:
        return 1.0 if self.power == 1 else 0.0

    @property
    def limit_at_infinity(self) -> float | None:
        return 1.0 if self.power == 1 else None

    @property
    def label(self) -> str:
        return f"monomial(m={self.power})"


@dataclass(frozen=True)
class Exponential:
    """f(t) = exp(sign * alpha * t)."""

    alpha: float
    sign: int = 1
    kind = "exponential"

    def __post_init__(self) -> None:
        _check_alpha(self.alpha)
        _check_sign(self.sign)

    def __call__(self, t):
        return _scalar_ok(t, np.exp(self.sign * self.alpha * np.asarray(t, dtype=float)))

    def derivative(self, order: int) -> Callable:
        coef = (self.sign * self.alpha) ** order

        def d(t):
            return _scalar_ok(t, coef * np.exp(self.sign * self.alpha * np.asarray(t, dtype=float)))

        return d

    def taylor_coefficients(self, n_max: int) -> list[float]:
        coeffs = [1.0]
        for n in range(1, n_max + 1):
            coeffs.append(coeffs[-1] * self.sign * self.alpha / n)
        return coeffs

    @property
    def value_at_zero(self) -> float:
        return 1.0

    @property
    def limit_at_infinity(self) -> float | None:
        return 0.0 if self.sign < 0 else None

    @property
    def label(self) -> str:
        return f"exponential(sign={self.sign:+d}, alpha={self.alpha})"


@dataclass(frozen=True)
class QExponential:
    """f(t) = q_exp(qprime, sign * alpha * t), cut to 0 past its zero."""

    qprime: QParam
    alpha: float
    sign: int = 1
    kind = "qexponential"

    def __post_init__(self) -> None:
        _check_alpha(self.alpha)
        _check_sign(self.sign)
        _check_qprime(self.qprime)

    def _base(self, t: np.ndarray) -> np.ndarray:
        return 1.0 + self.qprime.eps * self.sign * self.alpha * t

    def __call__(self, t):
        arr = np.asarray(t, dtype=float)
        return _scalar_ok(t, _masked_power(self._base(arr), 1.0 / self.qprime.eps))

    def derivative(self, order: int) -> Callable:
        a = 1.0 / self.qprime.eps
        coef = (self.sign * self.alpha) ** order
        for i in range(order):
            coef *= 1.0 - i * self.qprime.eps

        def d(t):
            arr = np.asarray(t, dtype=float)
            return _scalar_ok(t, coef * _masked_power(self._base(arr), a - order))

        return d

    def taylor_coefficients(self, n_max: int) -> list[float]:
        coeffs = [1.0]
        for n in range(1, n_max + 1):
            step = _dfactor(n - 1, self.qprime.eps) * self.sign * self.alpha / n
            coeffs.append(coeffs[-1] * step)
        return coeffs

    @property
    def value_at_zero(self) -> float:
        return 1.0

    @property
    def limit_at_infinity(self) -> float | None:
        return 0.0 if self.sign < 0 else None

    @property
    def label(self) -> str:
        return f"qexponential(q'={self.qprime.q}, sign={self.sign:+d}, alpha={self.alpha})"


def _poly_eval(coeffs: list[float], t: np.ndarray) -> np.ndarray:
    return npp.polyval(t, np.asarray(coeffs, dtype=float))


@dataclass(frozen=True)
class Gaussian:
    """f(t) = exp(-alpha * t**2)."""

    alpha: float
    kind = "gaussian"

    def __post_init__(self) -> None:
        _check_alpha(self.alpha)

    def __call__(self, t):
        arr = np.asarray(t, dtype=float)
        return _scalar_ok(t, np.exp(-self.alpha * arr**2))

    def derivative(self, order: int) -> Callable:
        # d/dt [P * exp(-a t^2)] = (P' - 2 a t P) * exp(-a t^2)
        p = np.array([1.0])
        for _ in range(order):
            p = npp.polyadd(npp.polyder(p), -2.0 * self.alpha * npp.polymulx(p))
        poly = list(p)

        def d(t):
            arr = np.asarray(t, dtype=float)
            return _scalar_ok(t, _poly_eval(poly, arr) * np.exp(-self.alpha * arr**2))

        return d

    def taylor_coefficients(self, n_max: int) -> list[float]:
        coeffs = [0.0] * (n_max + 1)
        g = 1.0
        for k in range(n_max // 2 + 1):
            if k:
                g *= -self.alpha / k
            coeffs[2 * k] = g
        return coeffs

    @property
    def value_at_zero(self) -> float:
        return 1.0

    @property
    def limit_at_infinity(self) -> float | None:
        return 0.0

    @property
    def label(self) -> str:
        return f"gaussian(alpha={self.alpha})"


@dataclass(frozen=True)
class QGaussian:
    """f(t) = q_exp(qprime, -alpha * t**2), cut to 0 past its zero."""

    qprime: QParam
    alpha: float
    kind = "qgaussian"

    def __post_init__(self) -> None:
        _check_alpha(self.alpha)
        _check_qprime(self.qprime)

    def _base_poly(self) -> np.ndarray:
        return np.array([1.0, 0.0, -self.qprime.eps * self.alpha])

    def __call__(self, t):
        arr = np.asarray(t, dtype=float)
        base = 1.0 - self.qprime.eps * self.alpha * arr**2
        return _scalar_ok(t, _masked_power(base, 1.0 / self.qprime.eps))

    def derivative(self, order: int) -> Callable:
        # f^(n) = R_n * base**(p - n) with R_{n+1} = R_n' * base + (p - n) R_n base'
        p = 1.0 / self.qprime.eps
        base = self._base_poly()
        dbase = npp.polyder(base)
        r = np.array([1.0])
        for n in range(order):
            r = npp.polyadd(npp.polymul(npp.polyder(r), base), (p - n) * npp.polymul(r, dbase))
        poly = list(r)

        def d(t):
            arr = np.asarray(t, dtype=float)
            b = 1.0 - self.qprime.eps * self.alpha * arr**2
            return _scalar_ok(t, _poly_eval(poly, arr) * _masked_power(b, p - order))

        return d

    def taylor_coefficients(self, n_max: int) -> list[float]:
        coeffs = [0.0] * (n_max + 1)
        g = 1.0
        for k in range(n_max // 2 + 1):
            if k:
                g *= -_dfactor(k - 1, self.qprime.eps) * self.alpha / k
            coeffs[2 * k] = g
        return coeffs

    @property
    def value_at_zero(self) -> float:
        return 1.0

    @property
    def limit_at_infinity(self) -> float | None:
        return 0.0

    @property
    def label(self) -> str:
        return f"qgaussian(q'={self.qprime.q}, alpha={self.alpha})"


class _Trig:
    """Shared machinery for cos/sin (delta = 0/1) with derivative cycling."""

    alpha: float
    delta: int

    def __call__(self, t):
        arr = self.alpha * np.asarray(t, dtype=float)
        out = np.sin(arr) if self.delta else np.cos(arr)
        return _scalar_ok(t, out)

    def derivative(self, order: int) -> Callable:
        coef = self.alpha**order
        phase = order * math.pi / 2.0
        use_sin = bool(self.delta)

        def d(t):
            arr = self.alpha * np.asarray(t, dtype=float) + phase
            return _scalar_ok(t, coef * (np.sin(arr) if use_sin else np.cos(arr)))

        return d

    def taylor_coefficients(self, n_max: int) -> list[float]:
        coeffs = [0.0] * (n_max + 1)
        g = self.alpha if self.delta else 1.0
        for k in range((n_max - self.delta) // 2 + 1):
            n = 2 * k + self.delta
            if k:
                g *= -self.alpha**2 / ((n - 1) * n)
            coeffs[n] = g
        return coeffs

    @property
    def value_at_zero(self) -> float:
        return 0.0 if self.delta else 1.0

    @property
    def limit_at_infinity(self) -> float | None:
        return None


@dataclass(frozen=True)
class Cosine(_Trig):
    alpha: float
    delta = 0
    kind = "cosine"

    def __post_init__(self) -> None:
        _check_alpha(self.alpha)

    @property
    def label(self) -> str:
        return f"cosine(alpha={self.alpha})"


@dataclass(frozen=True)
class Sine(_Trig):
    alpha: float
    delta = 1
    kind = "sine"

    def __post_init__(self) -> None:
        _check_alpha(self.alpha)

    @property
    def label(self) -> str:
        return f"sine(alpha={self.alpha})"


class _Hyper:
    """Shared machinery for cosh/sinh (delta = 0/1)."""

    alpha: float
    delta: int

    def __call__(self, t):
        arr = self.alpha * np.asarray(t, dtype=float)
        out = np.sinh(arr) if self.delta else np.cosh(arr)
        return _scalar_ok(t, out)

    def derivative(self, order: int) -> Callable:
        coef = self.alpha**order
        use_sinh = (order + self.delta) % 2 == 1

        def d(t):
            arr = self.alpha * np.asarray(t, dtype=float)
            return _scalar_ok(t, coef * (np.sinh(arr) if use_sinh else np.cosh(arr)))

        return d

    def taylor_coefficients(self, n_max: int) -> list[float]:
        coeffs = [0.0] * (n_max + 1)
        g = self.alpha if self.delta else 1.0
        for k in range((n_max - self.delta) // 2 + 1):
            n = 2 * k + self.delta
            if k:
                g *= self.alpha**2 / ((n - 1) * n)
            coeffs[n] = g
        return coeffs

    @property
    def value_at_zero(self) -> float:
        return 0.0 if self.delta else 1.0

    @property
    def limit_at_infinity(self) -> float | None:
        return None


@dataclass(frozen=True)
class Cosh(_Hyper):
    alpha: float
    delta = 0
    kind = "cosh"

    def __post_init__(self) -> None:
        _check_alpha(self.alpha)

    @property
    def label(self) -> str:
        return f"cosh(alpha={self.alpha})"


@dataclass(frozen=True)
class Sinh(_Hyper):
    alpha: float
    delta = 1
    kind = "sinh"

    def __post_init__(self) -> None:
        _check_alpha(self.alpha)

    @property
    def label(self) -> str:
        return f"sinh(alpha={self.alpha})"


class _QTrig:
    """Deformed circular functions in polar form.

    With w = (1-q')*alpha*t, a = 1/(1-q'), rho = sqrt(1 + w**2) and
    theta = arctan(w), the deformed exponential of an imaginary argument is
    rho**a * exp(i*a*theta); its real/imaginary parts give the deformed
    cosine (delta = 0) and sine (delta = 1).  Derivatives follow the same
    polar pattern with the modulus exponent lowered by the order.
    """

    qprime: QParam
    alpha: float
    delta: int

    def _polar(self, t: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        w = self.qprime.eps * self.alpha * t
        return np.sqrt(1.0 + w**2), np.arctan(w)

    def _eval(self, t, order: int):
        arr = np.asarray(t, dtype=float)
        a = 1.0 / self.qprime.eps
        coef = self.alpha**order
        for i in range(order):
            coef *= 1.0 - i * self.qprime.eps
        rho, theta = self._polar(arr)
        angle = (a - order) * theta + order * math.pi / 2.0
        circ = np.sin(angle) if self.delta else np.cos(angle)
        return _scalar_ok(t, coef * rho ** (a - order) * circ)

    def __call__(self, t):
        return self._eval(t, 0)

    def derivative(self, order: int) -> Callable:
        return lambda t: self._eval(t, order)

    def taylor_coefficients(self, n_max: int) -> list[float]:
        coeffs = [0.0] * (n_max + 1)
        e = self.qprime.eps
        g = self.alpha if self.delta else 1.0
        for k in range((n_max - self.delta) // 2 + 1):
            n = 2 * k + self.delta
            if k:
                g *= -_dfactor(n - 2, e) * _dfactor(n - 1, e) * self.alpha**2 / ((n - 1) * n)
            coeffs[n] = g
        return coeffs

    @property
    def value_at_zero(self) -> float:
        return 0.0 if self.delta else 1.0

    @property
    def limit_at_infinity(self) -> float | None:
        return None


@dataclass(frozen=True)
class QCosine(_QTrig):
    qprime: QParam
    alpha: float
    delta = 0
    kind = "qcosine"

    def __post_init__(self) -> None:
        _check_alpha(self.alpha)
        _check_qprime(self.qprime)

    @property
    def label(self) -> str:
        return f"qcosine(q'={self.qprime.q}, alpha={self.alpha})"


@dataclass(frozen=True)
class QSine(_QTrig):
    qprime: QParam
    alpha: float
    delta = 1
    kind = "qsine"

    def __post_init__(self) -> None:
        _check_alpha(self.alpha)
        _check_qprime(self.qprime)

    @property
    def label(self) -> str:
        return f"qsine(q'={self.qprime.q}, alpha={self.alpha})"


class _QHyper:
    """Deformed hyperbolic functions as even/odd parts of q_exp(+-alpha t).

    Within the series' radius 1/((1-q')*alpha) this matches the
    hypergeometric definition; past the radius the negative branch is cut,
    which closed-form transforms never see (the kernel support stays inside
    the radius for s >= s_min).
    """

    qprime: QParam
    alpha: float
    delta: int

    def _branches(self) -> tuple[QExponential, QExponential]:
        return (
            QExponential(self.qprime, self.alpha, 1),
            QExponential(self.qprime, self.alpha, -1),
        )

    def __call__(self, t):
        plus, minus = self._branches()
        sgn = -1.0 if self.delta else 1.0
        return _scalar_ok(t, 0.5 * (plus(t) + sgn * minus(t)))

    def derivative(self, order: int) -> Callable:
        plus, minus = self._branches()
        dp, dm = plus.derivative(order), minus.derivative(order)
        sgn = -1.0 if self.delta else 1.0

        def d(t):
            return _scalar_ok(t, 0.5 * (dp(t) + sgn * dm(t)))

        return d

    def taylor_coefficients(self, n_max: int) -> list[float]:
        coeffs = [0.0] * (n_max + 1)
        e = self.qprime.eps
        g = self.alpha if self.delta else 1.0
        for k in range((n_max - self.delta) // 2 + 1):
            n = 2 * k + self.delta
            if k:
                g *= _dfactor(n - 2, e) * _dfactor(n - 1, e) * self.alpha**2 / ((n - 1) * n)
            coeffs[n] = g
        return coeffs

    @property
    def value_at_zero(self) -> float:
        return 0.0 if self.delta else 1.0

    @property
    def limit_at_infinity(self) -> float | None:
        return None


@dataclass(frozen=True)
class QCosh(_QHyper):
    qprime: QParam
    alpha: float
    delta = 0
    kind = "qcosh"

    def __post_init__(self) -> None:
        _check_alpha(self.alpha)
        _check_qprime(self.qprime)

    @property
    def label(self) -> str:
        return f"qcosh(q'={self.qprime.q}, alpha={self.alpha})"


@dataclass(frozen=True)
class QSinh(_QHyper):
    qprime: QParam
    alpha: float
    delta = 1
    kind = "qsinh"

    def __post_init__(self) -> None:
        _check_alpha(self.alpha)
        _check_qprime(self.qprime)

    @property
    def label(self) -> str:
        return f"qsinh(q'={self.qprime.q}, alpha={self.alpha})"


CatalogFunction = Union[
    Monomial,
    Exponential,
    QExponential,
    Gaussian,
    QGaussian,
    Cosine,
    Sine,
    QCosine,
    QSine,
    Cosh,
    Sinh,
    QCosh,
    QSinh,
]

CATALOG: dict[str, type] = {
    cls.kind: cls
    for cls in (
        Monomial,
        Exponential,
        QExponential,
        Gaussian,
        QGaussian,
        Cosine,
        Sine,
        QCosine,
        QSine,
        Cosh,
        Sinh,
        QCosh,
        QSinh,
    )
}


def make_catalog_function(
    name: str,
    *,
    m: int | None = None,
    alpha: float | None = None,
    qprime: float | None = None,
    sign: int = 1,
) -> CatalogFunction:
    """Build a catalog entry from CLI-style fields, validating the combination."""
    key = name.strip().lower().replace("-", "").replace("_", "")
    if key not in CATALOG:
        raise DomainError(f"unknown catalog function {name!r}; choose from {sorted(CATALOG)}")
    cls = CATALOG[key]
    if cls is Monomial:
        if m is None:
            raise DomainError("monomial requires m")
        return Monomial(m)
    if alpha is None:
        raise DomainError(f"{key} requires alpha")
    needs_qprime = key.startswith("q")
    if needs_qprime:
        if qprime is None:
            raise DomainError(f"{key} requires qprime")
        qp = QParam(qprime)
        if cls is QExponential:
            return QExponential(qp, alpha, sign)
        return cls(qp, alpha)
    if cls is Exponential:
        return Exponential(alpha, sign)
    return cls(alpha)
