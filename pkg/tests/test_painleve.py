import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from numpy.polynomial import hermite

from susypiv.errors import DomainError
from susypiv.hierarchies import rational_hierarchy
from susypiv.numerics import Jet, jet_exp
from susypiv.painleve import (LadderCoefficients, Pain4Params, algebra_check, commutator_check,
                              extremal_from_g, extremal_jet_from_g, g_from_family,
                              gaussian_test_jet, ladder_apply, ladder_lower, p2_coefficients,
                              pain4_params, pain4_residual, pha_from_g, pha_jets)
from susypiv.seeds import SeedFamily, SeedParams
from susypiv.susy import (extremal_state, pain4_solution_jet, partner_potential,
                          schrodinger_residual)

RATIONAL_G1 = lambda x, order: rational_hierarchy(1, -2.5, Jet.variable(x, order))  # noqa: E731
ZERO_G = lambda x, order: Jet.constant(0.0, x, order)  # noqa: E731


# ---------------------------------------------------------------------------
# parameters
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("k, eps1, energies, a, b", [
    (1, -2.5, (-2.5, 0.5, -1.5), 3.0, -8.0),
    (2, -0.5, (-1.5, 0.5, 0.5), 3.0, 0.0),
    (3, -2.5, (-4.5, 0.5, -1.5), 7.0, -8.0),
])
def test_pain4_params_examples(k, eps1, energies, a, b):
    pp = pain4_params(SeedParams(eps1, 0.0, k))
    assert pp.energies == energies
    assert (pp.a, pp.b) == (a, b)


@given(st.floats(-20, 0.49), st.floats(-0.99, 0.99), st.integers(1, 6))
def test_pain4_params_invariants(eps, nu, k):
    pp = pain4_params(SeedParams(eps, nu, k))
    assert pp.a == pytest.approx(2 * k - eps - 1.5, abs=1e-12)
    assert pp.b == pytest.approx(-2 * (eps + 0.5) ** 2, rel=1e-12, abs=1e-300)
    assert pp.b == -2.0 * pp.delta ** 2
    assert pp == Pain4Params.from_energies(*pp.energies)
    assert set(pp.as_dict()) == {"a", "b", "E1", "E2", "E3"}


@given(st.floats(-20, 0.49), st.integers(1, 6))
def test_degenerate_b_only_at_minus_half(eps, k):
    assert (pain4_params(SeedParams(eps, 0.0, k)).b == 0.0) == (eps == -0.5)


def test_p2_example():
    assert p2_coefficients(Pain4Params.from_energies(-2.5, 0.5, -1.5)) == (3.0, 10.0, 6.25)


# ---------------------------------------------------------------------------
# residual
# ---------------------------------------------------------------------------

@given(st.floats(-5, 5))
def test_residual_of_exact_rational_solution(x):
    pp = Pain4Params.from_energies(-2.5, 0.5, -1.5)
    assert pain4_residual(RATIONAL_G1(x, 2), pp) <= 1e-12


def test_residual_controls():
    pp = Pain4Params.from_energies(-0.5, 0.5, 0.5)
    assert pp.b == 0.0
    assert pain4_residual(ZERO_G(0.7, 2), pp) == 0.0
    bad = Pain4Params.from_energies(-2.5, 0.5, -1.5)
    assert pain4_residual(Jet.variable(1.3, 2), bad) > 0.05
    with pytest.raises(ValueError):
        pain4_residual(Jet.variable(1.3, 1), bad)


@pytest.mark.parametrize("p", [SeedParams(0.25, 0.5, 2), SeedParams(-1.5, 0.999, 1),
                               SeedParams(-4.5, 0.0, 3), SeedParams(-3.3, -0.6, 4)])
def test_residual_of_susy_solutions(p):
    fam, pp = SeedFamily(p), pain4_params(p)
    for x in np.linspace(-6, 6, 41):
        assert pain4_residual(pain4_solution_jet(fam, x, 2), pp) <= 1e-7


# ---------------------------------------------------------------------------
# f, h, V from g
# ---------------------------------------------------------------------------

def test_pha_at_origin():
    pp = Pain4Params.from_energies(-2.5, 0.5, -1.5)
    g = RATIONAL_G1(0.0, 2)
    f, h, _ = pha_from_g(g, pp)
    assert f == 0.0
    assert h == pytest.approx(0.5 * g.derivative(1) + pp.a)


@given(st.floats(-5, 5))
def test_pha_potential_matches_partner_potential(x):
    p = SeedParams(-2.5, 0.0, 1)
    v = pha_from_g(RATIONAL_G1(x, 2), pain4_params(p))[2]
    assert v == pytest.approx(partner_potential(SeedFamily(p), x), abs=1e-9)


@given(st.sampled_from([SeedParams(0.25, 0.5, 3), SeedParams(-0.75, -0.3, 2), SeedParams(-2.5, 0.9, 1)]),
       st.floats(-5, 5))
def test_pha_potential_matches_partner_potential_general(p, x):
    g = pain4_solution_jet(SeedFamily(p), x, 2)
    v = pha_from_g(g, pain4_params(p))[2]
    assert v == pytest.approx(partner_potential(SeedFamily(p), x), rel=1e-9, abs=1e-9)


def test_pha_jets_invariants():
    pp = Pain4Params.from_energies(-2.5, 0.5, -1.5)
    g = RATIONAL_G1(0.8, 4)
    f, h, v = pha_jets(g, pp)
    assert f.order == h.order == v.order == 3
    assert f.value == pytest.approx(0.8 + g.value)
    lc = LadderCoefficients(RATIONAL_G1, pp)
    assert lc.f(0.8, 2).value == pytest.approx(f.value)
    assert lc.h(0.8, 2).value == pytest.approx(h.value)
    assert lc.g(0.8, 2).value == g.value
    assert lc.potential(0.8) == pytest.approx(v.value)


# ---------------------------------------------------------------------------
# ladder operators and the algebra
# ---------------------------------------------------------------------------

def _lc(p):
    return LadderCoefficients(g_from_family(SeedFamily(p)), pain4_params(p))


@pytest.mark.parametrize("p", [SeedParams(-2.5, 0.0, 1), SeedParams(-0.5, 0.0, 1),
                               SeedParams(0.25, 0.5, 2), SeedParams(-1.5, 0.999, 1)])
@pytest.mark.parametrize("x0", [0.3, 1.1, -2.0])
def test_algebra_identities(p, x0):
    lc, pp = _lc(p), pain4_params(p)
    test = gaussian_test_jet(x0, 14)
    assert algebra_check(lc, pp, test, "LpLm") <= 1e-6
    assert algebra_check(lc, pp, test, "LmLp") <= 1e-6
    assert commutator_check(lc, pp, test) <= 1e-6


def test_algebra_identity_fails_for_wrong_energies():
    p = SeedParams(-2.5, 0.0, 1)
    lc = _lc(p)
    wrong = Pain4Params.from_energies(-2.0, 0.5, -1.5)
    assert algebra_check(lc, wrong, gaussian_test_jet(0.3, 14)) > 1e-3


def test_algebra_check_errors():
    p = SeedParams(-2.5, 0.0, 1)
    lc, pp = _lc(p), pain4_params(p)
    with pytest.raises(ValueError):
        algebra_check(lc, pp, gaussian_test_jet(0.3, 9))
    with pytest.raises(ValueError):
        commutator_check(lc, pp, gaussian_test_jet(0.3, 9))
    with pytest.raises(ValueError):
        algebra_check(lc, pp, gaussian_test_jet(0.3, 12), direction="up")
    with pytest.raises(ValueError):
        ladder_apply(lc, gaussian_test_jet(0.3, 2))
    with pytest.raises(ValueError):
        ladder_lower(lc, gaussian_test_jet(0.3, 2))


def test_ladder_is_linear_and_kills_zero():
    lc = _lc(SeedParams(-2.5, 0.0, 1))
    zero = Jet.constant(0.0, 0.4, 6)
    assert np.all(ladder_apply(lc, zero).coeffs == 0.0)
    a, b = gaussian_test_jet(0.4, 6), gaussian_test_jet(0.4, 6, coeffs=(0.2, -1.0))
    lhs = ladder_apply(lc, 2.0 * a + b)
    rhs = 2.0 * ladder_apply(lc, a) + ladder_apply(lc, b)
    assert np.allclose(lhs.coeffs, rhs.coeffs, rtol=1e-12, atol=1e-14)
    assert lhs.order == 3


@pytest.mark.parametrize("n", [0, 1, 2, 4])
@pytest.mark.parametrize("x0", [-1.3, 0.4, 2.1])
def test_ladder_raises_oscillator_states(n, x0):
    # eps1=-1/2, k=1: g = 0, V = x^2/2 - 1, eigenstates H_n(x) exp(-x^2/2) at n - 1/2
    p = SeedParams(-0.5, 0.0, 1)
    lc = _lc(p)
    xj = Jet.variable(x0, 8)
    herm = Jet.constant(0.0, x0, 8)
    for c in reversed(hermite.herm2poly([0] * n + [1])):
        herm = herm * xj + float(c)
    psi = herm * jet_exp(-0.5 * xj * xj)
    raised = ladder_apply(lc, psi)
    assert schrodinger_residual(lc.potential(x0), n - 0.5, psi) <= 1e-12
    assert schrodinger_residual(lc.potential(x0), n + 0.5, raised) <= 1e-5
    if n == 0:
        # the ground state at E1 is the top of the finite ladder
        assert abs(raised.value) <= 1e-12
    else:
        assert abs(raised.value) > 1e-3 * abs(psi.value)


def test_ladder_raises_extremal_state_nontrivially():
    p = SeedParams(-2.5, 0.0, 1)
    lc, fam = _lc(p), SeedFamily(p)
    for x0 in (0.3, 1.1):
        psi = extremal_state(fam, 2, x0, order=5)
        raised = ladder_apply(lc, psi)
        assert abs(raised.value) > 1e-3 * abs(psi.value)
        assert schrodinger_residual(partner_potential(fam, x0), 1.5, raised) <= 1e-5


def test_top_of_finite_ladder_is_annihilated():
    p = SeedParams(-2.5, 0.0, 1)
    lc, fam = _lc(p), SeedFamily(p)
    for x in np.linspace(-3, 3, 13):
        psi = extremal_state(fam, 1, x, order=3)
        assert abs(ladder_apply(lc, psi).value) <= 1e-7 * max(1.0, abs(psi.value))


def test_gaussian_test_jet_values():
    j = gaussian_test_jet(0.5, 4)
    poly = 1.0 + 0.5 * 0.5 - 0.3 * 0.25 + 0.2 * 0.125
    assert j.value == pytest.approx(poly * math.exp(-0.125))
    assert j.order == 4


# ---------------------------------------------------------------------------
# extremal states from g
# ---------------------------------------------------------------------------

def test_extremal_from_zero_g_is_gaussian():
    pp = Pain4Params.from_energies(-0.5, 0.5, 0.5)
    for x in (-2.0, 0.0, 1.5):
        assert extremal_from_g(ZERO_G, pp, 1, x, 0.0) == pytest.approx(math.exp(-0.5 * x * x))


@pytest.mark.parametrize("p", [SeedParams(0.25, 0.5, 1), SeedParams(-0.75, 0.5, 2)])
def test_extremal_e1_matches_crum_state(p):
    fam = SeedFamily(p)
    geval = g_from_family(fam)
    pp = pain4_params(p)
    ratios = [extremal_from_g(geval, pp, 1, x, 0.0) / extremal_state(fam, 1, x, order=0).value
              for x in np.linspace(-3, 3, 13)]
    assert np.allclose(ratios, ratios[0], rtol=1e-7)


@pytest.mark.parametrize("which", [2, 3])
def test_extremal_from_rational_g_solves_schrodinger(which):
    pp = Pain4Params.from_energies(-2.5, 0.5, -1.5)
    lc = LadderCoefficients(RATIONAL_G1, pp)
    for x in np.linspace(0.5, 2.0, 7):
        psi = extremal_jet_from_g(RATIONAL_G1, pp, which, x, 1.0, order=2)
        assert schrodinger_residual(lc.potential(x), pp.energies[which - 1], psi) <= 1e-6
    assert extremal_from_g(RATIONAL_G1, pp, which, 1.0, 1.0) == pytest.approx(1.0)


def test_extremal_from_g_matches_crum_e2():
    p = SeedParams(-2.5, 0.0, 1)
    fam, pp = SeedFamily(p), pain4_params(p)
    xs = np.linspace(0.5, 2.0, 7)
    ratios = [extremal_from_g(RATIONAL_G1, pp, 2, x, 1.0) / extremal_state(fam, 2, x, order=0).value
              for x in xs]
    assert np.allclose(ratios, ratios[0], rtol=1e-7)


def test_extremal_from_g_refuses_zero_crossing():
    pp = Pain4Params.from_energies(-2.5, 0.5, -1.5)
    with pytest.raises(DomainError):
        extremal_from_g(RATIONAL_G1, pp, 2, -1.0, 1.0)
    with pytest.raises(ValueError):
        extremal_from_g(RATIONAL_G1, pp, 4, 1.5, 1.0)
