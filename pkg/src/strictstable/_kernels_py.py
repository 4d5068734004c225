"""NumPy implementations of the numerical hot loops.

This module is the pure-Python fallback for the compiled extension
``strictstable._kernels``; both expose the same four functions with the same
semantics (see _backend.py for selection).  Everything here is pure and
reentrant.

Numerical conventions shared by both backends:

* Term magnitudes and the U kernel are assembled in log space and
  exponentiated once, so Gamma((n+1)/alpha) never overflows an intermediate.
* sin(pi/2 * u) is evaluated after reducing u modulo 4, which keeps the exact
  zeros of the alternating structure for rational theta (e.g. theta=0 kills
  every odd term exactly).
* Wherever a factor of the U kernel is non-positive (at or beyond the open
  endpoints of the angular interval) the integrand is replaced by its limit
  value; the endpoints themselves are never sampled by the quadrature.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import gammaln


def _sin_half_pi_scalar(u: float) -> float:
    """sin(pi*u/2) with exact zeros at even u and exact +-1 at odd u."""
    r = math.fmod(u, 4.0)
    if r < 0.0:
        r += 4.0
    sign = 1.0
    if r >= 2.0:
        sign = -1.0
        r -= 2.0
    if r > 1.0:
        r = 2.0 - r
    if r == 0.0:
        return 0.0
    if r == 1.0:
        return sign
    return sign * math.sin(0.5 * math.pi * r)


def _sin_half_pi(u: np.ndarray) -> np.ndarray:
    r = np.mod(u, 4.0)
    sign = np.where(r >= 2.0, -1.0, 1.0)
    r = np.where(r >= 2.0, r - 2.0, r)
    r = np.where(r > 1.0, 2.0 - r, r)
    out = sign * np.sin(0.5 * math.pi * r)
    out[r == 0.0] = 0.0
    np.copyto(out, sign, where=(r == 1.0))
    return out


def series_partial_sum(x: float, alpha: float, theta: float, n: int, cdf: bool) -> float:
    """Partial sum of the small-x power series for pdf (cdf=False) or cdf.

    pdf:  (1/(alpha*pi)) * sum_{k=0}^{n-1} x^k     / k!     * Gamma((k+1)/alpha) * sin(pi/2 (k+1)(1-theta))
    cdf:  (1/(alpha*pi)) * sum_{k=0}^{n-1} x^(k+1) / (k+1)! * Gamma((k+1)/alpha) * sin(pi/2 (k+1)(1-theta))

    The cdf sum excludes the constant (1-theta)/2 offset.
    """
    if n < 1:
        raise ValueError("need at least one series term")
    if x == 0.0:
        if cdf:
            return 0.0
        return (
            math.exp(math.lgamma(1.0 / alpha))
            * _sin_half_pi_scalar(1.0 - theta)
            / (alpha * math.pi)
        )
    k = np.arange(n, dtype=np.float64)
    s = _sin_half_pi((k + 1.0) * (1.0 - theta))
    lax = math.log(abs(x))
    if cdf:
        logmag = (k + 1.0) * lax - gammaln(k + 2.0) + gammaln((k + 1.0) / alpha)
        parity = k + 1.0
    else:
        logmag = k * lax - gammaln(k + 1.0) + gammaln((k + 1.0) / alpha)
        parity = k
    with np.errstate(over="ignore"):
        terms = np.exp(logmag) * s
    if x < 0.0:
        terms = np.where(np.mod(parity, 2.0) == 1.0, -terms, terms)
    total = math.fsum(terms[s != 0.0])
    return total / (alpha * math.pi)


def u_values(phi: np.ndarray, alpha: float, theta: float) -> np.ndarray:
    """U kernel on the open interval (-pi*theta/2, pi/2); NaN outside."""
    c = 0.5 * math.pi * theta
    p = alpha / (1.0 - alpha)
    s = np.sin(alpha * (phi + c))
    cphi = np.cos(phi)
    c2 = np.cos(phi * (1.0 - alpha) - alpha * c)
    out = np.full_like(phi, np.nan, dtype=np.float64)
    ok = (s > 0.0) & (cphi > 0.0) & (c2 > 0.0)
    if np.any(ok):
        lcp = np.log(cphi[ok])
        logu = p * (np.log(s[ok]) - lcp) + np.log(c2[ok]) - lcp
        with np.errstate(over="ignore"):
            out[ok] = np.exp(logu)
    return out


def angular_pdf_integrand(
    phi: np.ndarray, x_pow: float, log_prefac: float, alpha: float, theta: float
) -> np.ndarray:
    """exp(log_prefac + log U - x_pow * U) on the angular interval.

    x_pow = |x|^(alpha/(alpha-1)) > 0 and log_prefac absorbs the constant
    alpha/(pi |alpha-1|) * |x|^(1/(alpha-1)); the integral of this function
    over the open interval is the density itself.
    """
    c = 0.5 * math.pi * theta
    p = alpha / (1.0 - alpha)
    s = np.sin(alpha * (phi + c))
    cphi = np.cos(phi)
    c2 = np.cos(phi * (1.0 - alpha) - alpha * c)
    out = np.zeros_like(phi, dtype=np.float64)
    ok = (s > 0.0) & (cphi > 0.0) & (c2 > 0.0)
    if np.any(ok):
        lcp = np.log(cphi[ok])
        logu = p * (np.log(s[ok]) - lcp) + np.log(c2[ok]) - lcp
        with np.errstate(over="ignore", invalid="ignore"):
            u = np.exp(logu)
            vals = np.exp(log_prefac + logu - x_pow * u)
        # whenever U overflows, the exponential damping wins: limit is 0
        vals[~np.isfinite(u)] = 0.0
        out[ok] = vals
    return out


def angular_cdf_integrand(
    phi: np.ndarray, x_pow: float, alpha: float, theta: float
) -> np.ndarray:
    """exp(-x_pow * U) with endpoint limits substituted off-domain.

    For alpha < 1 the function decreases from 1 (lower endpoint) to 0; for
    alpha > 1 it increases from 0 to 1.
    """
    c = 0.5 * math.pi * theta
    p = alpha / (1.0 - alpha)
    s = np.sin(alpha * (phi + c))
    cphi = np.cos(phi)
    c2 = np.cos(phi * (1.0 - alpha) - alpha * c)
    lower = 1.0 if alpha < 1.0 else 0.0
    ok = (s > 0.0) & (cphi > 0.0) & (c2 > 0.0)
    # off-domain points get the limit of the nearest endpoint
    near_lower = np.abs(phi + c) <= np.abs(0.5 * math.pi - phi)
    out = np.where(near_lower, lower, 1.0 - lower)
    if np.any(ok):
        lcp = np.log(cphi[ok])
        logu = p * (np.log(s[ok]) - lcp) + np.log(c2[ok]) - lcp
        with np.errstate(over="ignore"):
            u = np.exp(logu)
            out[ok] = np.exp(-x_pow * u)
    return out
