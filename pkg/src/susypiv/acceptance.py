"""The nine acceptance criteria as plain functions.

Each criterion returns a :class:`CriterionResult` made of named checks. The
report text carries measured errors only (no timings), so it is byte-stable
between runs on the same kernel backend.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import painleve as pl
from .figures import BUNDLE_NAMES, FIGURE_SETS, all_bundles, figure_grid
from .grid import working_grid
from .hierarchies import ERF_CATALOG, RATIONAL_CATALOG, erf_hierarchy, g1_explicit, rational_hierarchy
from .numerics import SQRT_PI, Jet, kummer_1f1, kummer_jet
from .seeds import SeedFamily, SeedParams
from .susy import (extremal_energy, extremal_state, pain4_solution, pain4_solution_jet,
                   partner_potential, schrodinger_residual, wronskian_sign_constant)


@dataclass(frozen=True)
class Check:
    name: str
    value: float
    tol: float

    @property
    def passed(self):
        return bool(self.value <= self.tol)

    @property
    def ratio(self):
        if self.tol > 0:
            return self.value / self.tol
        return 0.0 if self.value == 0 else math.inf

    def line(self):
        mark = "ok  " if self.passed else "FAIL"
        return f"    {mark} {self.name}: {self.value:.3e} (tol {self.tol:.0e})"


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return bool(self.checks) and all(c.passed for c in self.checks)

    @property
    def worst(self):
        """Largest value/tol ratio over all checks."""
        return max((c.ratio for c in self.checks), default=math.inf)

    def summary(self):
        status = "PASS" if self.passed else "FAIL"
        failed = sum(not c.passed for c in self.checks)
        return (f"[{status}] criterion {self.number}: {self.title} "
                f"({len(self.checks) - failed}/{len(self.checks)} checks, "
                f"worst error/tol {self.worst:.3e})")


def _case(k, eps, nu):
    return SeedParams(eps, nu, k)


RATIONAL_SETS = [_case(k, e, 0.0) for k, e in sorted(RATIONAL_CATALOG)]
ERF_FIG_SETS = list(FIGURE_SETS["fig5"])
HYPERGEOMETRIC_SETS = FIGURE_SETS["fig2"] + FIGURE_SETS["fig3"] + FIGURE_SETS["fig4"]
RESIDUAL_SETS = RATIONAL_SETS + ERF_FIG_SETS + HYPERGEOMETRIC_SETS
ERF_NUS = (0.0, 0.5, 0.999)
ALGEBRA_SETS = [_case(1, -2.5, 0.0), _case(1, -0.5, 0.0)]
ALGEBRA_POINTS = (0.3, 1.1)
SCALE_FACTOR = 17.3


def label(p):
    return f"k={p.k} eps1={p.eps1:g} nu1={p.nu1:g}"


def _max_abs(fn, xs):
    return max(abs(fn(float(x))) for x in xs)


# ---------------------------------------------------------------------------
# criteria
# ---------------------------------------------------------------------------

def criterion_1(xs=None):
    xs = working_grid().xs if xs is None else xs
    res = CriterionResult(1, "rational catalog vs Wronskian g_k")
    for p in RATIONAL_SETS:
        fam = SeedFamily(p)
        err = _max_abs(lambda x: pain4_solution(fam, x) - rational_hierarchy(p.k, p.eps1, x), xs)
        res.checks.append(Check(label(p), err, 1e-9))
    return res


def criterion_2(xs=None):
    xs = working_grid().xs if xs is None else xs
    res = CriterionResult(2, "P_IV residual of the Wronskian g_k")
    for p in RESIDUAL_SETS:
        fam = SeedFamily(p)
        pp = pl.pain4_params(p)
        worst = max(pl.pain4_residual(pain4_solution_jet(fam, float(x), 2), pp) for x in xs)
        res.checks.append(Check(label(p), worst, 1e-7))
    return res


def criterion_3(xs=None):
    xs = working_grid().xs if xs is None else xs
    res = CriterionResult(3, "explicit 1F1 formula for g_1 vs Wronskian g_1")
    for p in FIGURE_SETS["fig2"]:
        fam = SeedFamily(p)
        err = _max_abs(lambda x: pain4_solution(fam, x) - g1_explicit(p.eps1, p.nu1, x), xs)
        res.checks.append(Check(label(p), err, 1e-9))
    return res


def criterion_4(xs=None):
    xs = working_grid().xs if xs is None else xs
    res = CriterionResult(4, "error-function closed forms vs Wronskian g_k")
    for k, eps in sorted(ERF_CATALOG):
        for nu in ERF_NUS:
            p = _case(k, eps, nu)
            fam = SeedFamily(p)
            err = _max_abs(lambda x: pain4_solution(fam, x) - erf_hierarchy(k, eps, nu, x), xs)
            res.checks.append(Check(label(p), err, 1e-9))
    return res


def criterion_5(xs=None):
    xs = working_grid().xs if xs is None else xs
    res = CriterionResult(5, "shifted oscillator at eps1=-1/2, nu1=0")
    for k in (1, 2, 3):
        p = _case(k, -0.5, 0.0)
        fam = SeedFamily(p)
        dv = _max_abs(lambda x: partner_potential(fam, x) - (0.5 * x * x - k), xs)
        dg = _max_abs(lambda x: pain4_solution(fam, x), xs)
        res.checks.append(Check(f"{label(p)} |V - (x^2/2 - k)|", dv, 1e-9))
        res.checks.append(Check(f"{label(p)} |g|", dg, 1e-10))
    return res


def criterion_6(xs=None):
    xs = working_grid().xs if xs is None else xs
    res = CriterionResult(6, "Schrodinger residuals of the extremal states")
    for p in RESIDUAL_SETS:
        fam = SeedFamily(p)
        pots = {float(x): partner_potential(fam, float(x)) for x in xs}
        for which in (1, 2, 3):
            e = extremal_energy(p, which)
            worst = max(schrodinger_residual(pots[float(x)], e, extremal_state(fam, which, float(x)))
                        for x in xs)
            res.checks.append(Check(f"{label(p)} psi_E{which} (E={e:g})", worst, 1e-6))
    return res


def _annihilation_ratio(lc, fam, xs):
    """Grid norm of L+ psi_E1 over grid norm of psi_E1 (both jets at each x)."""
    top = []
    base = []
    for x in xs:
        psi = extremal_state(fam, 1, float(x), order=3)
        top.append(pl.ladder_apply(lc, psi).value)
        base.append(psi.value)
    return pl.grid_norm(top) / pl.grid_norm(base)


def criterion_7(points=ALGEBRA_POINTS):
    res = CriterionResult(7, "third-order ladder operators and their algebra")
    for p in ALGEBRA_SETS:
        fam = SeedFamily(p)
        pp = pl.pain4_params(p)
        lc = pl.LadderCoefficients(pl.g_from_family(fam), pp)
        for x0 in points:
            test = pl.gaussian_test_jet(x0, 14)
            for direction in ("LpLm", "LmLp"):
                res.checks.append(Check(f"{label(p)} x0={x0:g} {direction}",
                                        pl.algebra_check(lc, pp, test, direction), 1e-6))
            res.checks.append(Check(f"{label(p)} x0={x0:g} [L-,L+] = P2(H)",
                                    pl.commutator_check(lc, pp, test), 1e-6))
            # psi_E2 starts the infinite ladder at 1/2; L+ moves it to 3/2
            psi = extremal_state(fam, 2, x0, order=5)
            raised = pl.ladder_apply(lc, psi)
            r = schrodinger_residual(partner_potential(fam, x0), extremal_energy(p, 2) + 1.0, raised)
            res.checks.append(Check(f"{label(p)} x0={x0:g} L+ psi_E2 at E+1", r, 1e-5))
        ratio = _annihilation_ratio(lc, fam, np.linspace(-3.0, 3.0, 61))
        res.checks.append(Check(f"{label(p)} |L+ psi_E1| / |psi_E1|", ratio, 1e-5))
    return res


def _parity_errors(p, xs):
    fam = SeedFamily(p)
    dg = max(abs(pain4_solution(fam, x) + pain4_solution(fam, -x)) for x in xs)
    dv = max(abs(partner_potential(fam, x) - partner_potential(fam, -x)) for x in xs)
    return dg, dv


def _scaling_error(p, xs):
    plain = SeedFamily(p)
    scaled = SeedFamily(p, scale=SCALE_FACTOR)
    worst = 0.0
    for x in xs:
        for fn in (pain4_solution, partner_potential):
            a, b = fn(plain, x), fn(scaled, x)
            worst = max(worst, abs(a - b) / max(1.0, abs(a)))
    return worst


def kummer_identity_error():
    """Relative mismatch of d^n/dz^n 1F1 from jets vs (a)_n/(b)_n 1F1(a+n, b+n; z)."""
    worst = 0.0
    for a in (0.125, 0.875, 1.625, 3.375):
        for b in (0.5, 1.5, 2.5):
            for z in (0.0, 0.5, 3.0, 12.0, 36.0):
                jet = kummer_jet(a, b, Jet.variable(z, 2))
                for n in (1, 2):
                    poch = math.prod((a + i) / (b + i) for i in range(n))
                    ref = poch * kummer_1f1(a + n, b + n, z)
                    worst = max(worst, abs(jet.derivative(n) - ref) / abs(ref))
    return worst


def erf_kummer_error():
    xs = np.linspace(-4.0, 4.0, 161)
    return max(abs(math.erf(x) - 2.0 * x / SQRT_PI * kummer_1f1(0.5, 1.5, -x * x)) for x in xs)


def criterion_8():
    res = CriterionResult(8, "property suite")
    half = np.linspace(0.1, 5.9, 30)
    for k in (1, 2, 3):
        for eps in (0.25, -0.75, -1.75, -2.5):
            p = _case(k, eps, 0.0)
            dg, dv = _parity_errors(p, half)
            res.checks.append(Check(f"{label(p)} g odd", dg, 1e-10))
            res.checks.append(Check(f"{label(p)} V even", dv, 1e-10))
    coarse = np.linspace(-6.0, 6.0, 25)
    for p in HYPERGEOMETRIC_SETS + ERF_FIG_SETS:
        res.checks.append(Check(f"{label(p)} scale c={SCALE_FACTOR:g}", _scaling_error(p, coarse), 1e-12))
    grid = working_grid().xs
    for p in RESIDUAL_SETS:
        constant = wronskian_sign_constant(SeedFamily(p), grid)
        res.checks.append(Check(f"{label(p)} Wronskian sign changes", 0.0 if constant else 1.0, 0.0))
    res.checks.append(Check("Kummer derivative identity", kummer_identity_error(), 1e-10))
    res.checks.append(Check("erf-Kummer identity", erf_kummer_error(), 1e-12))
    return res


def criterion_9(grid=None):
    grid = grid or figure_grid()
    res = CriterionResult(9, "figure data regeneration")
    bundles = all_bundles(grid)
    res.checks.append(Check("bundle count != 6", 0.0 if len(bundles) == len(BUNDLE_NAMES) == 6 else 1.0, 0.0))
    for name, curves in bundles.items():
        bad = sum(int(not np.all(np.isfinite(c.data.values))) for c in curves)
        res.checks.append(Check(f"{name}: non-finite curves (of {len(curves)})", float(bad), 0.0))
    computed = {c.params: c.data for c in bundles["fig6"] if c.name.startswith("g")}
    for c in bundles["fig6_catalog"]:
        err = float(np.max(np.abs(computed[c.params].values - c.data.values)))
        res.checks.append(Check(f"fig6 {label(c.params)} g_3 vs catalog", err, 1e-9))
    return res


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9)


def run_all(verbose=True):
    """Run every criterion; returns (all_passed, report_text)."""
    results = [fn() for fn in CRITERIA]
    lines = []
    for r in results:
        lines.append(r.summary())
        if verbose:
            lines.extend(c.line() for c in r.checks)
    ok = all(r.passed for r in results)
    lines.append(f"overall: {'PASS' if ok else 'FAIL'} "
                 f"({sum(r.passed for r in results)}/{len(results)} criteria)")
    return ok, "\n".join(lines) + "\n"
