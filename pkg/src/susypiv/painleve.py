"""Painleve IV residuals and the second-order polynomial Heisenberg algebra.

A solution g of

    g'' = g'^2/(2g) + 3/2 g^3 + 4x g^2 + 2(x^2 - a) g + b/g

fixes the potential V, the coefficients f, h of the third-order ladder
operator L+ = L_a+ L_b+, and the three extremal states. This module rebuilds
those objects from any jet-valued g and checks the algebra they must obey.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .errors import DomainError
from .numerics import Jet, jet_exp, jet_sqrt_abs
from .seeds import SQRT2, as_family

MIN_ABS_G = 0.1


@dataclass(frozen=True)
class Pain4Params:
    """P_IV parameters (a, b) together with the extremal energies behind them."""

    a: float
    b: float
    E1: float
    E2: float
    E3: float

    @classmethod
    def from_energies(cls, e1, e2, e3):
        return cls(e2 + e3 - 2.0 * e1 - 1.0, -2.0 * (e2 - e3) ** 2, e1, e2, e3)

    @property
    def delta(self):
        return self.E2 - self.E3

    @property
    def energies(self):
        return (self.E1, self.E2, self.E3)

    def as_dict(self):
        return {"a": self.a, "b": self.b, "E1": self.E1, "E2": self.E2, "E3": self.E3}


def pain4_params(params):
    """Extremal energies (eps_k, 1/2, eps_1 + 1) and the resulting (a, b).

    Equivalent closed forms: a = 2k - eps_1 - 3/2, b = -2 (eps_1 + 1/2)^2.
    """
    return Pain4Params.from_energies(params.eps1 - (params.k - 1), 0.5, params.eps1 + 1.0)


def pain4_residual(g, p):
    """Normalized residual of the pole-free form

        g g'' - g'^2/2 - 3/2 g^4 - 4x g^3 - 2(x^2 - a) g^2 - b = 0

    evaluated at the expansion point of the jet ``g`` (order >= 2).
    """
    if g.order < 2:
        raise ValueError("pain4_residual needs a jet of order >= 2")
    x = g.x0
    g0 = g.value
    g1 = g.derivative(1)
    g2 = g.derivative(2)
    q = x * x - p.a
    terms = (g0 * g2, -0.5 * g1 * g1, -1.5 * g0 ** 4, -4.0 * x * g0 ** 3,
             -2.0 * q * g0 * g0, -p.b)
    return abs(math.fsum(terms)) / (1.0 + sum(abs(t) for t in terms))


# ---------------------------------------------------------------------------
# PHA data from g
# ---------------------------------------------------------------------------

def pha_jets(g, p):
    """Jets of (f, h, V) built from a jet of g; each has order g.order - 1."""
    dg = g.diff()
    g = g.truncate(dg.order)
    xj = Jet.variable(g.x0, dg.order)
    f = xj + g
    h = -(xj * xj) + 0.5 * dg - 0.5 * g * g - 2.0 * xj * g + p.a
    v = 0.5 * xj * xj - 0.5 * dg + 0.5 * g * g + xj * g + (p.E1 - 0.5)
    return f, h, v


def pha_from_g(g, p):
    """Values of f, h and V at the expansion point of ``g``."""
    f, h, v = pha_jets(g, p)
    return f.value, h.value, v.value


def g_from_family(family):
    """Jet evaluator ``(x, order) -> Jet`` for the SUSY-generated g_k."""
    from .susy import pain4_solution_jet

    family = as_family(family)
    return lambda x, order: pain4_solution_jet(family, x, order)


@dataclass(frozen=True)
class LadderCoefficients:
    """f, g, h of L+ = L_a+ L_b+ as jet evaluators over one P_IV solution.

    ``g_eval(x, order)`` must return a jet of g at x of the requested order.
    """

    g_eval: object
    params: Pain4Params

    def g(self, x, order):
        return self.g_eval(x, order)

    def fhv(self, x, order):
        """Jets of (f, g, h, g', V) at x, each of the requested order."""
        gj = self.g_eval(x, order + 1)
        f, h, v = pha_jets(gj, self.params)
        return f, gj.truncate(order), h, gj.diff(), v

    def f(self, x, order):
        return self.fhv(x, order)[0]

    def h(self, x, order):
        return self.fhv(x, order)[2]

    def potential(self, x):
        return self.fhv(x, 0)[4].value

    def potential_jet(self, x, order):
        return self.fhv(x, order)[4]


def _lb_plus(psi, g, h):
    return 0.5 * (psi.diff(2) + g * psi.diff() + h * psi)


def _la_plus(phi, f):
    return (f * phi - phi.diff()) / SQRT2


def _la_minus(psi, f):
    return (psi.diff() + f * psi) / SQRT2


def _lb_minus(phi, g, h, dg):
    return 0.5 * (phi.diff(2) - g * phi.diff() + (h - dg) * phi)


def ladder_apply(lc, psi):
    """L+ psi = L_a+ (L_b+ psi); the result has order psi.order - 3."""
    if psi.order < 3:
        raise ValueError(f"ladder_apply needs a jet of order >= 3, got {psi.order}")
    f, g, h, _, _ = lc.fhv(psi.x0, psi.order)
    return _la_plus(_lb_plus(psi, g, h), f)


def ladder_lower(lc, psi):
    """L- psi = L_b- (L_a- psi), the formal adjoint of L+; order drops by 3."""
    if psi.order < 3:
        raise ValueError(f"ladder_lower needs a jet of order >= 3, got {psi.order}")
    f, g, h, dg, _ = lc.fhv(psi.x0, psi.order)
    return _lb_minus(_la_minus(psi, f), g, h, dg)


def hamiltonian_apply(v, psi):
    """H psi = -psi''/2 + V psi for a jet V of the potential."""
    return -0.5 * psi.diff(2) + v * psi


def _poly_in_h(v, psi, roots):
    """prod_i (H - roots_i) applied to psi (rightmost factor first)."""
    out = psi
    for r in reversed(roots):
        out = hamiltonian_apply(v, out) - r * out
    return out


def _relative(lhs, rhs, psi):
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), abs(psi), 1e-300)


def algebra_check(lc, p, test, direction="LpLm"):
    """Relative mismatch at test.x0 between a ladder product and its Q3 polynomial.

    ``LpLm`` compares L+L- with Q3(H); ``LmLp`` compares L-L+ with
    Q3(H + 1) = Q3(H) + P2(H). ``test`` needs order >= 10.
    """
    if test.order < 10:
        raise ValueError(f"algebra_check needs a test jet of order >= 10, got {test.order}")
    v = lc.potential_jet(test.x0, test.order)
    if direction == "LpLm":
        lhs = ladder_apply(lc, ladder_lower(lc, test))
        rhs = _poly_in_h(v, test, p.energies)
    elif direction == "LmLp":
        lhs = ladder_lower(lc, ladder_apply(lc, test))
        rhs = _poly_in_h(v, test, [e - 1.0 for e in p.energies])
    else:
        raise ValueError(f"direction must be 'LpLm' or 'LmLp', got {direction!r}")
    return _relative(lhs.value, rhs.value, test.value)


def p2_coefficients(p):
    """Coefficients (c2, c1, c0) of P2(H) = Q3(H + 1) - Q3(H)."""
    s1 = p.E1 + p.E2 + p.E3
    s2 = p.E1 * p.E2 + p.E1 * p.E3 + p.E2 * p.E3
    return 3.0, 3.0 - 2.0 * s1, 1.0 - s1 + s2


def commutator_check(lc, p, test):
    """Relative mismatch of [L-, L+] test against P2(H) test at test.x0."""
    if test.order < 10:
        raise ValueError(f"commutator_check needs a test jet of order >= 10, got {test.order}")
    v = lc.potential_jet(test.x0, test.order)
    lhs = ladder_lower(lc, ladder_apply(lc, test)) - ladder_apply(lc, ladder_lower(lc, test))
    c2, c1, c0 = p2_coefficients(p)
    h1 = hamiltonian_apply(v, test)
    h2 = hamiltonian_apply(v, h1)
    rhs = c2 * h2 + c1 * h1 + c0 * test
    return _relative(lhs.value, rhs.value, test.value)


def gaussian_test_jet(x0, order, coeffs=(1.0, 0.5, -0.3, 0.2)):
    """Jet of poly(x) exp(-x^2/2), a smooth probe for operator identities."""
    xj = Jet.variable(x0, order)
    poly = Jet.constant(0.0, x0, order)
    for c in reversed(coeffs):
        poly = poly * xj + c
    return poly * jet_exp(-0.5 * xj * xj)


# ---------------------------------------------------------------------------
# extremal states straight from g
# ---------------------------------------------------------------------------

def _check_path(g_eval, x_ref, x, samples=65):
    for t in np.linspace(x_ref, x, samples):
        if abs(g_eval(float(t), 0).value) < MIN_ABS_G:
            raise DomainError(
                f"|g| < {MIN_ABS_G} near x={t:.6g} on the path from {x_ref} to {x}; "
                "the Delta/g terms are not usable there")


def _quad(fn, x_ref, x):
    if x == x_ref:
        return 0.0
    val, _ = integrate.quad(fn, x_ref, x, epsabs=1e-10, epsrel=1e-12, limit=200)
    return val


def extremal_jet_from_g(g_eval, p, which, x, x_ref, order=2):
    """Jet at x of the extremal state psi_{E_which} rebuilt from g alone.

    The integrals run from ``x_ref`` and the state is normalized so that
    psi(x_ref) = 1. For which in {2, 3} the path [x_ref, x] must keep
    |g| >= 0.1.
    """
    if which == 1:
        integral = _quad(lambda t: g_eval(t, 0).value, x_ref, x)
        gj = g_eval(x, order)
        xj = Jet.variable(x, order + 1)
        expo = -0.5 * (xj * xj - x_ref * x_ref) - gj.integrate(integral)
        return jet_exp(expo).truncate(order)
    if which not in (2, 3):
        raise ValueError(f"extremal state index must be 1, 2 or 3, got {which}")

    _check_path(g_eval, x_ref, x)
    d = p.delta if which == 2 else -p.delta

    def prefactor(gj):
        dg = gj.diff()
        gj = gj.truncate(dg.order)
        xj = Jet.variable(gj.x0, dg.order)
        return dg / (2.0 * gj) - 0.5 * gj - d / gj - xj

    def rate(t):
        gt = g_eval(t, 0).value
        return 0.5 * gt - d / gt

    # exp(int g'/(2g)) = sqrt(|g(x)| / |g(x_ref)|); the rest is integrated
    integral = _quad(rate, x_ref, x)
    gj = g_eval(x, order + 1)
    g_ref = g_eval(x_ref, 1)
    p_ref = prefactor(g_ref).value
    if p_ref == 0.0:
        raise DomainError(f"extremal state {which} vanishes at x_ref={x_ref}")
    g_lo = gj.truncate(order)
    rate_jet = 0.5 * g_lo - d / g_lo
    growth = jet_exp(rate_jet.integrate(integral)).truncate(order)
    amp = jet_sqrt_abs(g_lo) / math.sqrt(abs(g_ref.value))
    return prefactor(gj) * amp * growth / p_ref


def extremal_from_g(g_eval, p, which, x, x_ref):
    return extremal_jet_from_g(g_eval, p, which, x, x_ref, order=0).value


def grid_norm(values):
    return float(np.sqrt(np.sum(np.square(values))))


__all__ = [
    "Pain4Params", "LadderCoefficients", "pain4_params", "pain4_residual",
    "pha_jets", "pha_from_g", "g_from_family", "ladder_apply", "ladder_lower",
    "algebra_check", "commutator_check", "p2_coefficients", "gaussian_test_jet",
    "extremal_jet_from_g", "extremal_from_g", "hamiltonian_apply", "grid_norm",
]
