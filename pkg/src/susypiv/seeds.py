"""Schrodinger seed solutions of the harmonic oscillator.

The seed at factorization energy ``eps`` is

    u(x) = exp(-x^2/2) [ 1F1((1-2eps)/4, 1/2; x^2)
                         + 2 nu x R(eps) 1F1((3-2eps)/4, 3/2; x^2) ]

with ``R(eps) = Gamma((3-2eps)/4) / Gamma((1-2eps)/4)``. For eps < 1/2 every
series term is positive. Higher seeds are obtained by repeated application of
the annihilation operator a- = (x + d/dx)/sqrt(2), each lowering the energy
by one.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DomainError
from .numerics import Jet, gamma_ratio, jet_exp, kummer_1f1, kummer_ascending

K_MAX = 6
SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class SeedParams:
    """Transformation knobs: top factorization energy, asymmetry, order."""

    eps1: float
    nu1: float
    k: int = 1

    def __post_init__(self):
        if not math.isfinite(self.eps1) or self.eps1 >= 0.5:
            raise DomainError(f"eps1 must satisfy eps1 < 1/2, got {self.eps1}")
        if not math.isfinite(self.nu1) or abs(self.nu1) >= 1.0:
            raise DomainError(f"nu1 must satisfy |nu1| < 1, got {self.nu1}")
        if isinstance(self.k, bool) or int(self.k) != self.k or not 1 <= self.k <= K_MAX:
            raise DomainError(f"k must be an integer in [1, {K_MAX}], got {self.k}")

    @classmethod
    def unchecked(cls, eps1, nu1, k=1):
        """Bypass validation, e.g. to probe a seed with |nu1| > 1 for nodes."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "eps1", float(eps1))
        object.__setattr__(obj, "nu1", float(nu1))
        object.__setattr__(obj, "k", int(k))
        return obj

    def energy(self, j):
        """Factorization energy of the j-th seed (1-based)."""
        return self.eps1 - (j - 1)

    @property
    def energies(self):
        return [self.energy(j) for j in range(1, self.k + 1)]

    def with_k(self, k):
        return SeedParams(self.eps1, self.nu1, k)


def default_jet_order(k):
    return 2 * k + 6


def seed_eval(params, x):
    """Value and first derivative of u1 at x (positive-argument representation)."""
    eps, nu = params.eps1, params.nu1
    z = x * x
    alpha = (1.0 - 2.0 * eps) / 4.0
    beta = (3.0 - 2.0 * eps) / 4.0
    gauss = math.exp(-0.5 * z)

    even = kummer_1f1(alpha, 0.5, z)
    d_even = 4.0 * alpha * x * kummer_1f1(alpha + 1.0, 1.5, z)
    odd = 0.0
    d_odd = 0.0
    if nu != 0.0:
        c = 2.0 * nu * gamma_ratio(eps)
        f_odd = kummer_1f1(beta, 1.5, z)
        odd = c * x * f_odd
        d_odd = c * (f_odd + (4.0 / 3.0) * beta * z * kummer_1f1(beta + 1.0, 2.5, z))

    bracket = even + odd
    u = gauss * bracket
    du = gauss * (d_even + d_odd) - x * u
    return u, du


def gauged_seed_eval(params, x):
    """Value and slope of w1 = exp(-x^2/2) u1.

    w1 only grows like a power of |x|. Its slope uses dM/dz - M =
    ((a - b)/b) M(a, b+1, z) so the exp(x^2) growth of the 1F1 factors
    cancels analytically rather than numerically.
    """
    eps, nu = params.eps1, params.nu1
    z = x * x
    alpha = (1.0 - 2.0 * eps) / 4.0
    beta = (3.0 - 2.0 * eps) / 4.0
    damp = math.exp(-z)

    w = kummer_1f1(alpha, 0.5, z)
    dw = 4.0 * x * (alpha - 0.5) * kummer_1f1(alpha, 1.5, z)
    if nu != 0.0:
        c = 2.0 * nu * gamma_ratio(eps)
        f_odd = kummer_1f1(beta, 1.5, z)
        w += c * x * f_odd
        dw += c * (f_odd + (4.0 / 3.0) * z * (beta - 1.5) * kummer_1f1(beta, 2.5, z))
    return damp * w, damp * dw


def seed_eval_negative(params, x):
    """u1 from the negative-argument representation; used only as a cross-check.

    The alternating series is summed as is, so agreement with seed_eval is a
    genuine test rather than the Kummer transformation undone.
    """
    eps, nu = params.eps1, params.nu1
    z = -x * x
    even = kummer_ascending((1.0 + 2.0 * eps) / 4.0, 0.5, z)
    odd = 2.0 * x * nu * gamma_ratio(eps) * kummer_ascending((3.0 + 2.0 * eps) / 4.0, 1.5, z)
    return math.exp(0.5 * x * x) * (even + odd)


def seed_jet(params, x, order, scale=1.0):
    """Jet of u1 at x: value and slope from the series, the rest from the ODE."""
    if order < 1:
        raise ValueError("seed_jet needs order >= 1")
    u, du = seed_eval(params, x)
    coeffs = kernels.seed_taylor(scale * u, scale * du, float(x), params.eps1, int(order))
    return Jet(x, coeffs)


def gauged_seed_jet(params, x, order, scale=1.0):
    """Jet of w1 = exp(-x^2/2) u1 at x."""
    if order < 1:
        raise ValueError("gauged_seed_jet needs order >= 1")
    w, dw = gauged_seed_eval(params, x)
    coeffs = kernels.gauged_taylor(scale * w, scale * dw, float(x), params.eps1, int(order))
    return Jet(x, coeffs)


def gauged_annihilate(j):
    """a- in the gauged frame: w -> (w' + 2x w)/sqrt(2)."""
    dw = j.diff()
    return (dw + 2.0 * Jet.variable(j.x0, dw.order) * j) / SQRT2


def gauge(x, order, power=1.0):
    """Jet of exp(power * x^2 / 2)."""
    xj = Jet.variable(x, order)
    return jet_exp((0.5 * power) * xj * xj)


def annihilate(j):
    """a- applied to a jet: (x f + f')/sqrt(2); order drops by one."""
    df = j.diff()
    return (Jet.variable(j.x0, df.order) * j + df) / SQRT2


def create(j):
    """a+ applied to a jet: (x f - f')/sqrt(2); order drops by one."""
    df = j.diff()
    return (Jet.variable(j.x0, df.order) * j - df) / SQRT2


@dataclass(frozen=True)
class SeedFamily:
    """The k seeds u_j = (a-)^(j-1) u1 generated from one SeedParams.

    ``scale`` multiplies u1 (and therefore every u_j); log-derivative
    quantities must not depend on it.
    """

    params: SeedParams
    scale: float = 1.0

    @property
    def k(self):
        return self.params.k

    def jets(self, x, order, count=None):
        """Jets of u_1..u_count at x, each truncated to ``order``."""
        count = self.k if count is None else count
        if count == 0:
            return []
        u = seed_jet(self.params, x, max(order + count - 1, 1), self.scale)
        out = [u]
        for _ in range(count - 1):
            u = annihilate(u)
            out.append(u)
        return [j.truncate(order) for j in out]

    def gauged_jets(self, x, order, count=None):
        """Jets of w_j = exp(-x^2/2) u_j, j = 1..count.

        Wronskians of the w_j differ from those of the u_j by the exact factor
        exp(count x^2/2), which keeps log-derivatives free of cancellation.
        """
        count = self.k if count is None else count
        if count == 0:
            return []
        w = gauged_seed_jet(self.params, x, max(order + count - 1, 1), self.scale)
        out = [w]
        for _ in range(count - 1):
            w = gauged_annihilate(w)
            out.append(w)
        return [j.truncate(order) for j in out]


def as_family(obj):
    return obj if isinstance(obj, SeedFamily) else SeedFamily(obj)


def seed_descend(family, x, order=None):
    """Jets [u_1, ..., u_k] at x; default order is the working jet order."""
    family = as_family(family)
    if order is None:
        order = default_jet_order(family.k)
    return family.jets(x, order)


def check_nodeless(params, xs):
    """Return ``None`` if u1 keeps one sign on ``xs``, else the bracket of the first node."""
    xs = np.asarray(xs, dtype=float)
    if len(xs) > 1 and not np.all(np.diff(xs) > 0):
        raise ValueError("grid must be strictly increasing")
    prev_x = prev_u = None
    for x in xs:
        u, _ = seed_eval(params, x)
        if u == 0.0:
            return (float(x), float(x))
        if prev_u is not None and (u > 0) != (prev_u > 0):
            return (float(prev_x), float(x))
        prev_x, prev_u = x, u
    return None


def seed_residual(j, eps):
    """Scale-free residual of u'' = (x^2 - 2 eps) u for a jet of order >= 2."""
    x = j.x0
    d2 = j.derivative(2)
    return abs(d2 - (x * x - 2.0 * eps) * j.value) / (1.0 + abs(d2))
