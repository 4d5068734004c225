# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled implementations of the numerical hot loops.

Mirror of _kernels_py.py; see that module for the shared numerical
conventions (log-space assembly, mod-4 sine reduction, endpoint limits).
"""

import numpy as np

from libc.math cimport M_PI, NAN, cos, exp, fabs, fmod, isinf, lgamma, log, sin


cdef double _sin_half_pi(double u) noexcept nogil:
    """sin(pi*u/2) with exact zeros at even u and exact +-1 at odd u."""
    cdef double r = fmod(u, 4.0)
    cdef double sign = 1.0
    if r < 0.0:
        r += 4.0
    if r >= 2.0:
        sign = -1.0
        r -= 2.0
    if r > 1.0:
        r = 2.0 - r
    if r == 0.0:
        return 0.0
    if r == 1.0:
        return sign
    return sign * sin(0.5 * M_PI * r)


def series_partial_sum(double x, double alpha, double theta, int n, bint cdf):
    """Partial sum of the small-x power series; see _kernels_py version."""
    if n < 1:
        raise ValueError("need at least one series term")
    cdef double one_m_theta = 1.0 - theta
    cdef double inv_api = 1.0 / (alpha * M_PI)
    if x == 0.0:
        if cdf:
            return 0.0
        return exp(lgamma(1.0 / alpha)) * _sin_half_pi(one_m_theta) * inv_api
    cdef double lax = log(fabs(x))
    cdef bint neg = x < 0.0
    cdef double total = 0.0, comp = 0.0  # Neumaier compensated accumulation
    cdef double s, logmag, term, tmp
    cdef long k, parity
    for k in range(n):
        s = _sin_half_pi((k + 1.0) * one_m_theta)
        if s == 0.0:
            continue
        if cdf:
            logmag = (k + 1.0) * lax - lgamma(k + 2.0) + lgamma((k + 1.0) / alpha)
            parity = k + 1
        else:
            logmag = k * lax - lgamma(k + 1.0) + lgamma((k + 1.0) / alpha)
            parity = k
        term = exp(logmag) * s
        if neg and parity % 2 == 1:
            term = -term
        tmp = total + term
        if fabs(total) >= fabs(term):
            comp += (total - tmp) + term
        else:
            comp += (term - tmp) + total
        total = tmp
    return (total + comp) * inv_api


def u_values(double[::1] phi, double alpha, double theta):
    """U kernel on the open interval (-pi*theta/2, pi/2); NaN outside."""
    cdef Py_ssize_t m = phi.shape[0], i
    out_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double c = 0.5 * M_PI * theta
    cdef double p = alpha / (1.0 - alpha)
    cdef double s, cphi, c2, lcp
    with nogil:
        for i in range(m):
            s = sin(alpha * (phi[i] + c))
            cphi = cos(phi[i])
            c2 = cos(phi[i] * (1.0 - alpha) - alpha * c)
            if s > 0.0 and cphi > 0.0 and c2 > 0.0:
                lcp = log(cphi)
                out[i] = exp(p * (log(s) - lcp) + log(c2) - lcp)
            else:
                out[i] = float("nan") if False else <double>0.0 / 0.0
    return out_arr


def angular_pdf_integrand(
    double[::1] phi, double x_pow, double log_prefac, double alpha, double theta
):
    """exp(log_prefac + log U - x_pow * U); see _kernels_py version."""
    cdef Py_ssize_t m = phi.shape[0], i
    out_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double c = 0.5 * M_PI * theta
    cdef double p = alpha / (1.0 - alpha)
    cdef double s, cphi, c2, lcp, logu, u
    with nogil:
        for i in range(m):
            s = sin(alpha * (phi[i] + c))
            cphi = cos(phi[i])
            c2 = cos(phi[i] * (1.0 - alpha) - alpha * c)
            if s > 0.0 and cphi > 0.0 and c2 > 0.0:
                lcp = log(cphi)
                logu = p * (log(s) - lcp) + log(c2) - lcp
                u = exp(logu)
                if u == u and u != u + 1.0:  # u is +inf: damping wins
                    out[i] = 0.0
                else:
                    out[i] = exp(log_prefac + logu - x_pow * u)
            else:
                out[i] = 0.0
    return out_arr


def angular_cdf_integrand(double[::1] phi, double x_pow, double alpha, double theta):
    """exp(-x_pow * U) with endpoint limits substituted off-domain."""
    cdef Py_ssize_t m = phi.shape[0], i
    out_arr = np.empty(m, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double c = 0.5 * M_PI * theta
    cdef double p = alpha / (1.0 - alpha)
    cdef double lower = 1.0 if alpha < 1.0 else 0.0
    cdef double s, cphi, c2, lcp, u
    with nogil:
        for i in range(m):
            s = sin(alpha * (phi[i] + c))
            cphi = cos(phi[i])
            c2 = cos(phi[i] * (1.0 - alpha) - alpha * c)
            if s > 0.0 and cphi > 0.0 and c2 > 0.0:
                lcp = log(cphi)
                u = exp(p * (log(s) - lcp) + log(c2) - lcp)
                out[i] = exp(-x_pow * u)
            elif fabs(phi[i] + c) <= fabs(0.5 * M_PI - phi[i]):
                out[i] = lower
            else:
                out[i] = 1.0 - lower
    return out_arr
