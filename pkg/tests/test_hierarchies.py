import math

import mpmath
import numpy as np
import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from susypiv.errors import UnsupportedCaseError
from susypiv.hierarchies import (ERF_CATALOG, HALF_INTEGER_TOL, RATIONAL_CATALOG, HierarchyClass,
                                 classify, closed_form, erf_hierarchy, g1_explicit, horner,
                                 phi_aux, rational_denominators, rational_hierarchy)
from susypiv.numerics import SQRT_PI, Jet, gamma_ratio
from susypiv.painleve import pain4_params, pain4_residual
from susypiv.seeds import SeedFamily, SeedParams
from susypiv.susy import pain4_solution

X = sp.Symbol("x", real=True)


def _sympy_residual(g, k, eps1):
    pp = pain4_params(SeedParams(eps1, 0.0, k))
    a, b = sp.nsimplify(pp.a), sp.nsimplify(pp.b)
    g1, g2 = sp.diff(g, X), sp.diff(g, X, 2)
    return g * g2 - g1 ** 2 / 2 - sp.Rational(3, 2) * g ** 4 - 4 * X * g ** 3 - 2 * (X ** 2 - a) * g ** 2 - b


def _sympy_rational(k, eps1):
    total = 0
    for scale, num, den in RATIONAL_CATALOG[(k, eps1)]:
        total += scale * sum(c * X ** i for i, c in enumerate(num)) / sum(c * X ** i for i, c in enumerate(den))
    return total


# ---------------------------------------------------------------------------
# classifier
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("eps, nu, expected", [
    (-2.5, 0.0, HierarchyClass.RATIONAL),
    (-1.5, 0.999, HierarchyClass.ERROR_FUNCTION),
    (0.25, 0.5, HierarchyClass.CONFLUENT_HYPERGEOMETRIC),
    (-0.5, 0.0, HierarchyClass.RATIONAL),
    (-1.5, 0.0, HierarchyClass.ERROR_FUNCTION),
    (-2.5, 0.5, HierarchyClass.ERROR_FUNCTION),
    (-8.5, 0.0, HierarchyClass.RATIONAL),
    (-2.5 + 1e-9, 0.0, HierarchyClass.CONFLUENT_HYPERGEOMETRIC),
    (-2.5 + 1e-13, 0.0, HierarchyClass.RATIONAL),
    (-1.0, 0.0, HierarchyClass.CONFLUENT_HYPERGEOMETRIC),
])
def test_classify_examples(eps, nu, expected):
    assert classify(SeedParams(eps, nu)) is expected


def test_classify_tags_are_strings():
    assert str(HierarchyClass.RATIONAL) == "Rational"
    assert HALF_INTEGER_TOL == 1e-12


@given(st.integers(0, 30), st.floats(-0.99, 0.99))
def test_classify_invariants(m, nu):
    eps = -(2 * m + 1) / 2
    cls = classify(SeedParams(eps, nu))
    if nu == 0.0 and m % 2 == 0:
        assert cls is HierarchyClass.RATIONAL
    else:
        assert cls is HierarchyClass.ERROR_FUNCTION


# ---------------------------------------------------------------------------
# auxiliary function and the first-order closed form
# ---------------------------------------------------------------------------

def test_phi_aux_examples():
    assert phi_aux(0.3, 0.0) == SQRT_PI
    assert phi_aux(0.0, 1.2) == pytest.approx(SQRT_PI * math.exp(1.44), rel=1e-15)
    ref = mpmath.sqrt(mpmath.pi) * mpmath.e * (1 + mpmath.mpf("0.999") * mpmath.erf(1))
    assert phi_aux(0.999, 1.0) == pytest.approx(float(ref), rel=1e-14)
    assert phi_aux(0.999, 1.0) == pytest.approx(8.8741258763, abs=1e-9)


@given(st.floats(-15, 0.49), st.floats(-0.99, 0.99))
def test_g1_explicit_at_origin(eps, nu):
    assert g1_explicit(eps, nu, 0.0) == pytest.approx(2 * nu * gamma_ratio(eps), rel=1e-13, abs=1e-300)


def test_g1_explicit_example():
    assert g1_explicit(-0.5, 0.5, 0.0) == pytest.approx(1 / SQRT_PI, rel=1e-14)


@pytest.mark.parametrize("eps", [0.25, -0.75, -1.75, -3.3])
@pytest.mark.parametrize("nu", [0.5, -0.8, 0.0])
def test_g1_explicit_matches_wronskian(eps, nu):
    fam = SeedFamily(SeedParams(eps, nu, 1))
    for x in np.linspace(-5, 5, 41):
        assert abs(g1_explicit(eps, nu, x) - pain4_solution(fam, x)) <= 1e-9


# ---------------------------------------------------------------------------
# error-function hierarchy
# ---------------------------------------------------------------------------

@given(st.floats(-0.99, 0.99))
def test_erf_examples(nu):
    assert erf_hierarchy(1, -0.5, nu, 0.0) == pytest.approx(2 * nu / SQRT_PI, rel=1e-14, abs=1e-300)
    assert erf_hierarchy(1, -1.5, nu, 0.0) == pytest.approx(SQRT_PI * nu, rel=1e-14, abs=1e-300)
    assert erf_hierarchy(2, -0.5, 0.0, 0.7) == 0.0


@pytest.mark.parametrize("key", sorted(ERF_CATALOG))
@pytest.mark.parametrize("nu", [0.0, 0.5, -0.5, 0.999])
def test_erf_catalog_matches_wronskian(key, nu):
    k, eps = key
    fam = SeedFamily(SeedParams(eps, nu, k))
    for x in np.linspace(-5, 5, 41):
        assert abs(erf_hierarchy(k, eps, nu, x) - pain4_solution(fam, x)) <= 1e-9


@pytest.mark.parametrize("key", sorted(ERF_CATALOG))
@pytest.mark.parametrize("nu", [0.0, 0.5, 0.999])
def test_erf_catalog_solves_pain4(key, nu):
    k, eps = key
    pp = pain4_params(SeedParams(eps, nu, k))
    for x in np.linspace(-4, 4, 33):
        assert pain4_residual(erf_hierarchy(k, eps, nu, Jet.variable(x, 2)), pp) <= 1e-12


@pytest.mark.parametrize("key", sorted(ERF_CATALOG))
def test_erf_catalog_solves_pain4_symbolically(key):
    # symbolic derivatives, residual evaluated in 40-digit arithmetic
    k, eps = key
    nu = sp.Rational(3, 10)
    phi = sp.sqrt(sp.pi) * sp.exp(X ** 2) * (1 + nu * sp.erf(X))
    psi = sp.sqrt(sp.pi) * sp.exp(X ** 2) * (nu + sp.erf(X))
    forms = {
        (1, -0.5): 2 * nu / phi,
        (1, -1.5): psi / (1 + X * psi),
        (1, -2.5): 4 * (nu + X * phi) / (2 * nu * X + (1 + 2 * X ** 2) * phi),
        (2, -0.5): 4 * nu * (nu + X * phi) ** 2 / (phi * (phi ** 2 - 2 * nu * X * phi - 2 * nu ** 2)),
    }
    res = sp.lambdify(X, _sympy_residual(forms[key], k, eps), "mpmath")
    with mpmath.workdps(40):
        for x in ("-1.7", "0.3", "2.2"):
            assert abs(res(mpmath.mpf(x))) < mpmath.mpf("1e-30")
    for x in (-1.7, 0.3, 2.2):
        assert erf_hierarchy(k, eps, 0.3, x) == pytest.approx(float(forms[key].subs(X, x).evalf(30)), rel=1e-13)


@pytest.mark.parametrize("nu", [0.0, 0.5, -0.5, 0.999, -0.999])
def test_erf_first_member_matches_hypergeometric_form(nu):
    for x in np.linspace(-4, 4, 33):
        assert abs(erf_hierarchy(1, -0.5, nu, x) - g1_explicit(-0.5, nu, x)) <= 1e-10


def test_erf_uncataloged():
    with pytest.raises(UnsupportedCaseError):
        erf_hierarchy(3, -0.5, 0.2, 0.0)
    with pytest.raises(UnsupportedCaseError):
        erf_hierarchy(1, -3.5, 0.2, 0.0)


# ---------------------------------------------------------------------------
# rational hierarchy
# ---------------------------------------------------------------------------

def test_rational_examples():
    assert rational_hierarchy(1, -2.5, 1.0) == pytest.approx(4 / 3, rel=1e-15)
    assert rational_hierarchy(2, -2.5, 1.0) == pytest.approx(20 / 21, rel=1e-15)


@pytest.mark.parametrize("key", sorted(RATIONAL_CATALOG))
def test_rational_odd(key):
    assert rational_hierarchy(*key, 0.0) == 0.0
    for x in (0.3, 1.7, 4.2):
        assert rational_hierarchy(*key, -x) == -rational_hierarchy(*key, x)


@pytest.mark.parametrize("key", sorted(RATIONAL_CATALOG))
def test_rational_denominators_positive(key):
    xs = np.linspace(-10, 10, 2001)
    for den in rational_denominators(*key):
        assert den[0] > 0 and den[-1] > 0
        assert min(horner(den, x) for x in xs) > 0


@pytest.mark.parametrize("key", sorted(RATIONAL_CATALOG))
def test_rational_catalog_solves_pain4_exactly(key):
    assert sp.cancel(sp.together(_sympy_residual(_sympy_rational(*key), *key))) == 0


@pytest.mark.parametrize("key", sorted(RATIONAL_CATALOG))
def test_rational_catalog_numerical_residual(key):
    pp = pain4_params(SeedParams(key[1], 0.0, key[0]))
    for x in np.linspace(-5, 5, 21):
        assert pain4_residual(rational_hierarchy(*key, Jet.variable(x, 2)), pp) <= 1e-12


@pytest.mark.parametrize("key", sorted(RATIONAL_CATALOG))
def test_rational_catalog_matches_wronskian(key):
    fam = SeedFamily(SeedParams(key[1], 0.0, key[0]))
    for x in np.linspace(-5, 5, 51):
        assert abs(rational_hierarchy(*key, x) - pain4_solution(fam, x)) <= 1e-9


def test_rational_uncataloged():
    with pytest.raises(UnsupportedCaseError):
        rational_hierarchy(3, -6.5, 1.0)


def test_horner():
    assert horner((1, 2, 3), 2.0) == 17.0
    assert horner((5,), 3.0) == 5.0
    assert horner((0, 1), Jet.variable(1.5, 2)).coeffs.tolist() == [1.5, 1.0, 0.0]


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

def test_closed_form_dispatch():
    assert closed_form(1, -2.5, 0.0, 1.0) == rational_hierarchy(1, -2.5, 1.0)
    assert closed_form(1, -2.5, 0.5, 1.0) == erf_hierarchy(1, -2.5, 0.5, 1.0)
    assert closed_form(1, 0.25, 0.5, 1.0) == g1_explicit(0.25, 0.5, 1.0)
    assert closed_form(2, -0.5, 0.0, 1.0) == 0.0
    with pytest.raises(UnsupportedCaseError):
        closed_form(2, 0.25, 0.5, 1.0)
