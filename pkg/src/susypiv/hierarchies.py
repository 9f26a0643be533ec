"""Closed-form P_IV solutions and the (eps1, nu1) hierarchy classifier.

The rational and error-function formulas accept either floats or jets, so
the same closed form can be fed to the P_IV residual with exact derivatives.
"""

import enum

from .errors import UnsupportedCaseError
from .numerics import SQRT_PI, erf_any, exp, gamma_ratio, kummer_1f1

HALF_INTEGER_TOL = 1e-12


class HierarchyClass(enum.Enum):
    CONFLUENT_HYPERGEOMETRIC = "ConfluentHypergeometric"
    ERROR_FUNCTION = "ErrorFunction"
    RATIONAL = "Rational"

    def __str__(self):
        return self.value


def _nonneg_integer(v):
    m = round(v)
    return m >= 0 and abs(v - m) <= HALF_INTEGER_TOL


def classify(params):
    """Most specific hierarchy the seed parameters fall into."""
    eps, nu = params.eps1, params.nu1
    if nu == 0.0 and _nonneg_integer((-2.0 * eps - 1.0) / 4.0):
        return HierarchyClass.RATIONAL
    if _nonneg_integer((-2.0 * eps - 1.0) / 2.0):
        return HierarchyClass.ERROR_FUNCTION
    return HierarchyClass.CONFLUENT_HYPERGEOMETRIC


def phi_aux(nu, x):
    """sqrt(pi) exp(x^2) (1 + nu erf(x)); x may be a jet."""
    return SQRT_PI * exp(x * x) * (1.0 + nu * erf_any(x))


def g1_explicit(eps1, nu1, x):
    """First-order solution g_1(x, eps1) written with four 1F1 factors.

    The common Gamma((1 - 2 eps1)/4) is divided out of numerator and
    denominator, leaving the ratio R = gamma_ratio(eps1).
    """
    z = x * x
    alpha = (1.0 - 2.0 * eps1) / 4.0
    beta = (3.0 - 2.0 * eps1) / 4.0
    r = gamma_ratio(eps1)
    m_a = kummer_1f1(alpha, 0.5, z)
    m_b = kummer_1f1(beta, 1.5, z)
    den = 3.0 * m_a + 6.0 * nu1 * x * r * m_b
    odd = 2.0 * nu1 * r * ((3.0 - 6.0 * z) * m_b
                           + z * (3.0 - 2.0 * eps1) * kummer_1f1((7.0 - 2.0 * eps1) / 4.0, 2.5, z))
    even = 3.0 * x * (-2.0 * m_a + (1.0 - 2.0 * eps1) * kummer_1f1((5.0 - 2.0 * eps1) / 4.0, 1.5, z))
    return odd / den + even / den


# ---------------------------------------------------------------------------
# error-function hierarchy
# ---------------------------------------------------------------------------

def phi_odd_aux(nu, x):
    """sqrt(pi) exp(x^2) (nu + erf(x)); the even-seed counterpart of phi_aux."""
    return SQRT_PI * exp(x * x) * (nu + erf_any(x))


def _erf_g1_m12(nu, x):
    return 2.0 * nu / phi_aux(nu, x)


def _erf_g1_m32(nu, x):
    # at eps1 = -3/2 the erf sits in the even part of the seed:
    # u1 = exp(-x^2/2) [1 + x psi] with psi = phi_odd_aux
    psi = phi_odd_aux(nu, x)
    return psi / (1.0 + x * psi)


def _erf_g1_m52(nu, x):
    phi = phi_aux(nu, x)
    return 4.0 * (nu + x * phi) / (2.0 * nu * x + (1.0 + 2.0 * x * x) * phi)


def _erf_g2_m12(nu, x):
    phi = phi_aux(nu, x)
    t = nu + x * phi
    return 4.0 * nu * t * t / (phi * (phi * phi - 2.0 * nu * x * phi - 2.0 * nu * nu))


ERF_CATALOG = {
    (1, -0.5): _erf_g1_m12,
    (1, -1.5): _erf_g1_m32,
    (1, -2.5): _erf_g1_m52,
    (2, -0.5): _erf_g2_m12,
}


def erf_hierarchy(k, eps1, nu1, x):
    try:
        fn = ERF_CATALOG[(k, eps1)]
    except KeyError:
        raise UnsupportedCaseError(
            f"no error-function closed form for k={k}, eps1={eps1}; "
            f"cataloged: {sorted(ERF_CATALOG)}") from None
    return fn(nu1, x)


# ---------------------------------------------------------------------------
# rational hierarchy
# ---------------------------------------------------------------------------
# Each entry is a sum of terms  scale * N(x) / D(x); polynomials are listed
# by ascending power.

_G1_52 = (4, (0, 1), (1, 0, 2))
_G1_92 = (8, (0, 3, 0, 2), (3, 0, 12, 0, 4))
_G1_132 = (12, (0, 15, 0, 20, 0, 4), (15, 0, 90, 0, 60, 0, 8))
_G2_52_TAIL = (16, (0, 0, 0, 1), (3, 0, 0, 0, 4))
_G2_92_TAIL = (32, (0, 0, 0, 15, 0, 12, 0, 4), (45, 0, 0, 0, 120, 0, 64, 0, 16))
_G2_132_TAIL = (48, (0, 0, 0, 525, 0, 840, 0, 600, 0, 160, 0, 16),
                (1575, 0, 0, 0, 6300, 0, 6720, 0, 3600, 0, 768, 0, 64))
_G3_52 = (4, (0, 27, 0, -72, 0, 0, 0, 0, 0, 16),
          (27, 0, 54, 0, 0, 0, 96, 0, -48, 0, 32))
_G3_92_TAIL = (24, (0, 225, 0, -150, 0, 120, 0, 240, 0, 80, 0, 32),
               (675, 0, 2700, 0, -900, 0, 480, 0, 720, 0, 192, 0, 64))


def _neg(term):
    scale, num, den = term
    return (-scale, num, den)


RATIONAL_CATALOG = {
    (1, -2.5): (_G1_52,),
    (1, -4.5): (_G1_92,),
    (1, -6.5): (_G1_132,),
    (2, -2.5): (_neg(_G1_52), _G2_52_TAIL),
    (2, -4.5): (_neg(_G1_92), _G2_92_TAIL),
    (2, -6.5): (_neg(_G1_132), _G2_132_TAIL),
    (3, -2.5): (_G3_52,),
    (3, -4.5): (_neg(_G2_92_TAIL), _G3_92_TAIL),
}


def horner(coeffs, x):
    """Evaluate sum coeffs[i] x^i; works for floats and jets."""
    acc = 0.0 * x + coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * x + c
    return acc


def rational_hierarchy(k, eps1, x):
    try:
        terms = RATIONAL_CATALOG[(k, eps1)]
    except KeyError:
        raise UnsupportedCaseError(
            f"no rational closed form for k={k}, eps1={eps1}; "
            f"cataloged: {sorted(RATIONAL_CATALOG)}") from None
    total = 0.0
    for scale, num, den in terms:
        total = total + scale * horner(num, x) / horner(den, x)
    return total


def rational_denominators(k, eps1):
    return [den for _, _, den in RATIONAL_CATALOG[(k, eps1)]]


def closed_form(k, eps1, nu1, x):
    """Most specific cataloged closed form for (k, eps1, nu1), or raise."""
    if nu1 == 0.0 and (k, eps1) in RATIONAL_CATALOG:
        return rational_hierarchy(k, eps1, x)
    if (k, eps1) in ERF_CATALOG:
        return erf_hierarchy(k, eps1, nu1, x)
    if k == 1:
        return g1_explicit(eps1, nu1, x)
    raise UnsupportedCaseError(f"no closed form cataloged for k={k}, eps1={eps1}, nu1={nu1}")

