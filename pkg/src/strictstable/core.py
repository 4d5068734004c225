"""Parameter model and closed-form special cases for strictly stable laws.

A law is described by the characteristic exponent ``alpha`` in (0, 2], the
asymmetry angle ``theta`` with |theta| <= min(1, 2/alpha - 1), and the scale
``lam > 0`` (the "C" parameterization of the characteristic function,
exp{-lam |t|^alpha exp(-i pi alpha theta sign t / 2)}).  The pair
(alpha=1, theta=+-1) is degenerate and rejected everywhere.

Every evaluation reduces to the standard (lam=1) law first: since
lam |t|^alpha = |lam^(1/alpha) t|^alpha, the density and distribution
function obey

    pdf(x; lam) = lam^(-1/alpha) * pdf(x * lam^(-1/alpha); 1)
    cdf(x; lam) = cdf(x * lam^(-1/alpha); 1)
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class StableError(Exception):
    """Base class for all errors raised by this package."""


class OutOfRangeError(StableError, ValueError):
    """A parameter violates its admissibility inequality."""


class DegenerateError(StableError, ValueError):
    """alpha=1 with |theta|=1: the law degenerates to a point mass."""


class DomainError(StableError, ValueError):
    """An operation was called outside its mathematical domain."""


class AtZeroError(DomainError):
    """The angular integral representation is undefined at x=0."""


class AlphaOneError(DomainError):
    """The angular integral representation is undefined at alpha=1."""


class NotConvergedError(StableError, RuntimeError):
    """A quadrature failed to reach the requested tolerance."""


def theta_max(alpha: float) -> float:
    """Largest admissible |theta| for a given alpha."""
    return min(1.0, 2.0 / alpha - 1.0)


@dataclass(frozen=True)
class StableParams:
    """(alpha, theta, lam) triple; call validate() before numeric use."""

    alpha: float
    theta: float
    lam: float = 1.0

    def validate(self) -> None:
        a, t, l = self.alpha, self.theta, self.lam
        if not (isinstance(a, (int, float)) and math.isfinite(a) and 0.0 < a <= 2.0):
            raise OutOfRangeError(f"alpha must satisfy 0 < alpha <= 2, got {a!r}")
        if not (isinstance(t, (int, float)) and math.isfinite(t)):
            raise OutOfRangeError(f"theta must be finite, got {t!r}")
        tmax = theta_max(a)
        if abs(t) > tmax:
            raise OutOfRangeError(
                f"theta must satisfy |theta| <= min(1, 2/alpha - 1) = {tmax:.17g}, "
                f"got {t!r}"
            )
        if not (isinstance(l, (int, float)) and math.isfinite(l) and l > 0.0):
            raise OutOfRangeError(f"lambda must satisfy lambda > 0, got {l!r}")
        if a == 1.0 and abs(t) == 1.0:
            raise DegenerateError(
                "alpha=1 with |theta|=1 is a degenerate (point-mass) law"
            )


@dataclass(frozen=True)
class EvalOptions:
    """Accuracy and method controls for the public evaluators.

    epsilon=None means "auto": 1e-10 for alpha >= 1, 1e-8 for alpha < 1 (the
    asymptotic-series regime cannot always certify tighter).
    """

    epsilon: float | None = None
    n_max: int = 500
    quad_tol: float = 1e-12
    method: str = "auto"  # auto | series | integral | closed_form

    def validate(self) -> None:
        if self.epsilon is not None and not self.epsilon > 0.0:
            raise OutOfRangeError(f"epsilon must be > 0, got {self.epsilon!r}")
        if self.n_max < 1:
            raise OutOfRangeError(f"n_max must be >= 1, got {self.n_max!r}")
        if not self.quad_tol > 0.0:
            raise OutOfRangeError(f"quad_tol must be > 0, got {self.quad_tol!r}")
        if self.method not in ("auto", "series", "integral", "closed_form"):
            raise OutOfRangeError(f"unknown method {self.method!r}")

    def resolved_epsilon(self, alpha: float) -> float:
        if self.epsilon is not None:
            return self.epsilon
        return 1e-10 if alpha >= 1.0 else 1e-8


def validate(params: StableParams) -> None:
    """Raise OutOfRangeError/DegenerateError unless params are admissible."""
    params.validate()


def standardize(x: float, params: StableParams) -> tuple[float, float]:
    """Map (x, lam) to the standard law: returns (x_std, density_scale).

    x_std = x * lam^(-1/alpha);  pdf(x; lam) = density_scale * pdf(x_std; 1).
    """
    params.validate()
    scale = params.lam ** (-1.0 / params.alpha)
    return x * scale, scale


def density_at_zero(alpha: float, theta: float) -> float:
    """pdf(0) = cos(pi theta / 2) Gamma(1/alpha + 1) / pi."""
    StableParams(alpha, theta).validate()
    return math.cos(0.5 * math.pi * theta) * math.exp(math.lgamma(1.0 / alpha + 1.0)) / math.pi


def cdf_at_zero(alpha: float, theta: float) -> float:
    """cdf(0) = (1 - theta) / 2 for every admissible (alpha, theta)."""
    StableParams(alpha, theta).validate()
    return 0.5 * (1.0 - theta)


def density_alpha1(x: float, theta: float) -> float:
    """Closed form for alpha=1 (asymmetric Cauchy family), |theta| < 1."""
    if abs(theta) >= 1.0:
        raise DegenerateError("alpha=1 requires |theta| < 1")
    s = math.sin(0.5 * math.pi * theta)
    return math.cos(0.5 * math.pi * theta) / (math.pi * (x * x - 2.0 * x * s + 1.0))


def cdf_alpha1(x: float, theta: float) -> float:
    """Closed form for alpha=1: 1/2 + arctan((x - sin(pi theta/2)) / cos(pi theta/2)) / pi."""
    if abs(theta) >= 1.0:
        raise DegenerateError("alpha=1 requires |theta| < 1")
    s = math.sin(0.5 * math.pi * theta)
    c = math.cos(0.5 * math.pi * theta)
    return 0.5 + math.atan((x - s) / c) / math.pi


_TWO_SQRT_PI = 2.0 * math.sqrt(math.pi)


def closed_form_fast_path(x: float, params: StableParams) -> float | None:
    """Exact elementary pdf where one exists, else None.

    Covers alpha=2 (Gaussian with variance 2), alpha=1/2 with theta=+-1
    (one-sided Levy supported on sign(theta)*x > 0) and alpha=1 (Cauchy
    family).  Values are for the standard (lam=1) law.
    """
    params.validate()
    a, t = params.alpha, params.theta
    if a == 2.0:
        return math.exp(-0.25 * x * x) / _TWO_SQRT_PI
    if a == 1.0:
        return density_alpha1(x, t)
    if a == 0.5 and abs(t) == 1.0:
        # support on x > 0 for theta = +1, mirrored for theta = -1
        xs = x if t > 0 else -x
        if xs <= 0.0:
            return 0.0
        return math.exp(-0.25 / xs) / (xs ** 1.5 * _TWO_SQRT_PI)
    return None
