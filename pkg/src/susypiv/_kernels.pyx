# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.math cimport fabs, exp, log

cnp.import_array()

cdef double KUMMER_RTOL = 1e-17
cdef int KUMMER_PATIENCE = 3


def kummer_series(double a, double b, double z, long max_terms):
    cdef double term = 1.0
    cdef double total = 1.0
    cdef int quiet = 0
    cdef long n = 0
    while n < max_terms:
        term *= (a + n) * z / ((b + n) * (n + 1.0))
        total += term
        n += 1
        if fabs(term) <= KUMMER_RTOL * fabs(total):
            quiet += 1
            if quiet >= KUMMER_PATIENCE:
                return total, n
        else:
            quiet = 0
    return total, max_terms + 1


def jet_mul(const double[::1] a, const double[::1] b):
    cdef Py_ssize_t n = min(a.shape[0], b.shape[0])
    out = np.zeros(n)
    cdef double[::1] c = out
    cdef Py_ssize_t i, j
    cdef double acc
    for i in range(n):
        acc = 0.0
        for j in range(i + 1):
            acc += a[j] * b[i - j]
        c[i] = acc
    return out


def jet_div(const double[::1] a, const double[::1] b):
    cdef Py_ssize_t n = min(a.shape[0], b.shape[0])
    out = np.empty(n)
    cdef double[::1] q = out
    cdef Py_ssize_t i, j
    cdef double acc, b0 = b[0]
    for i in range(n):
        acc = a[i]
        for j in range(1, i + 1):
            acc -= b[j] * q[i - j]
        q[i] = acc / b0
    return out


def jet_exp(const double[::1] a):
    cdef Py_ssize_t n = a.shape[0]
    out = np.empty(n)
    cdef double[::1] e = out
    cdef Py_ssize_t i, j
    cdef double acc
    e[0] = exp(a[0])
    for i in range(1, n):
        acc = 0.0
        for j in range(1, i + 1):
            acc += j * a[j] * e[i - j]
        e[i] = acc / i
    return out


def jet_log(const double[::1] a):
    cdef Py_ssize_t n = a.shape[0]
    out = np.empty(n)
    cdef double[::1] h = out
    cdef Py_ssize_t i, j
    cdef double acc, a0 = a[0]
    h[0] = log(fabs(a0))
    for i in range(1, n):
        acc = i * a[i]
        for j in range(1, i):
            acc -= j * h[j] * a[i - j]
        h[i] = acc / (i * a0)
    return out


def seed_taylor(double u, double du, double x0, double eps, Py_ssize_t order):
    out = np.zeros(order + 1)
    cdef double[::1] c = out
    cdef double q0 = x0 * x0 - 2.0 * eps
    cdef double rhs
    cdef Py_ssize_t n
    c[0] = u
    if order >= 1:
        c[1] = du
    for n in range(order - 1):
        rhs = q0 * c[n]
        if n >= 1:
            rhs += 2.0 * x0 * c[n - 1]
        if n >= 2:
            rhs += c[n - 2]
        c[n + 2] = rhs / ((n + 2.0) * (n + 1.0))
    return out


def gauged_taylor(double w, double dw, double x0, double eps, Py_ssize_t order):
    out = np.zeros(order + 1)
    cdef double[::1] c = out
    cdef double rhs
    cdef Py_ssize_t n
    c[0] = w
    if order >= 1:
        c[1] = dw
    for n in range(order - 1):
        rhs = -2.0 * x0 * (n + 1.0) * c[n + 1] - (2.0 * n + 1.0 + 2.0 * eps) * c[n]
        c[n + 2] = rhs / ((n + 2.0) * (n + 1.0))
    return out
