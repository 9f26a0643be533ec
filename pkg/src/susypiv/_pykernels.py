"""Pure-Python/numpy implementations of the hot kernels.

These mirror ``_kernels.pyx`` one-for-one and are used whenever the compiled
extension is unavailable (or explicitly selected for comparison).
"""

import numpy as np

KUMMER_RTOL = 1e-17
KUMMER_PATIENCE = 3


def kummer_series(a, b, z, max_terms):
    """Ascending 1F1 series.

    Returns ``(value, n)`` where ``n`` is the number of terms consumed;
    ``n > max_terms`` signals non-convergence.
    """
    term = 1.0
    total = 1.0
    quiet = 0
    n = 0
    while n < max_terms:
        term *= (a + n) * z / ((b + n) * (n + 1.0))
        total += term
        n += 1
        if abs(term) <= KUMMER_RTOL * abs(total):
            quiet += 1
            if quiet >= KUMMER_PATIENCE:
                return total, n
        else:
            quiet = 0
    return total, max_terms + 1


def jet_mul(a, b):
    n = min(len(a), len(b))
    return np.convolve(a[:n], b[:n])[:n]


def jet_div(a, b):
    n = min(len(a), len(b))
    q = np.empty(n)
    b0 = b[0]
    for i in range(n):
        acc = a[i]
        for j in range(1, i + 1):
            acc -= b[j] * q[i - j]
        q[i] = acc / b0
    return q


def jet_exp(a):
    n = len(a)
    out = np.empty(n)
    out[0] = np.exp(a[0])
    for i in range(1, n):
        acc = 0.0
        for j in range(1, i + 1):
            acc += j * a[j] * out[i - j]
        out[i] = acc / i
    return out


def jet_log(a):
    """Taylor coefficients of ln|a| (a[0] must be non-zero)."""
    n = len(a)
    out = np.empty(n)
    a0 = a[0]
    out[0] = np.log(abs(a0))
    for i in range(1, n):
        acc = i * a[i]
        for j in range(1, i):
            acc -= j * out[j] * a[i - j]
        out[i] = acc / (i * a0)
    return out


def seed_taylor(u, du, x0, eps, order):
    """Taylor coefficients at x0 of the solution of u'' = (x^2 - 2 eps) u."""
    c = np.zeros(order + 1)
    c[0] = u
    if order >= 1:
        c[1] = du
    q0 = x0 * x0 - 2.0 * eps
    for n in range(order - 1):
        rhs = q0 * c[n]
        if n >= 1:
            rhs += 2.0 * x0 * c[n - 1]
        if n >= 2:
            rhs += c[n - 2]
        c[n + 2] = rhs / ((n + 2.0) * (n + 1.0))
    return c


def gauged_taylor(w, dw, x0, eps, order):
    """Taylor coefficients at x0 of the solution of w'' + 2x w' + (1 + 2 eps) w = 0.

    This is the seed equation after factoring out exp(x^2/2).
    """
    c = np.zeros(order + 1)
    c[0] = w
    if order >= 1:
        c[1] = dw
    for n in range(order - 1):
        rhs = -2.0 * x0 * (n + 1.0) * c[n + 1] - (2.0 * n + 1.0 + 2.0 * eps) * c[n]
        c[n + 2] = rhs / ((n + 2.0) * (n + 1.0))
    return c
