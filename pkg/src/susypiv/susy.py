"""k-th order SUSY partners of the oscillator built from Wronskians of seed jets.

All x-derivatives come from jet arithmetic on the Wronskian matrix itself, so
``(ln W)''`` and friends carry no finite-difference error.
"""

from dataclasses import dataclass

from .errors import SingularWronskianError
from .grid import GridFunction
from .numerics import Jet, jet_log
from .seeds import SQRT2, SeedFamily, as_family, gauge

SINGULAR_THRESHOLD = 1e-250


# ---------------------------------------------------------------------------
# determinants of jet matrices
# ---------------------------------------------------------------------------

def det(m):
    """Determinant of a square matrix of jets (or floats).

    Cofactor expansion up to 3x3, fraction-free (Bareiss) elimination with
    row pivoting on the constant terms beyond that.
    """
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if n == 3:
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    return _bareiss(m)


def _const(e):
    return e.value if isinstance(e, Jet) else float(e)


def _bareiss(m):
    a = [list(row) for row in m]
    n = len(a)
    sign = 1.0
    prev = 1.0
    for p in range(n - 1):
        piv = max(range(p, n), key=lambda r: abs(_const(a[r][p])))
        if _const(a[piv][p]) == 0.0:
            x0 = a[piv][p].x0 if isinstance(a[piv][p], Jet) else float("nan")
            raise SingularWronskianError(x0, 0.0)
        if piv != p:
            a[p], a[piv] = a[piv], a[p]
            sign = -sign
        for i in range(p + 1, n):
            for j in range(p + 1, n):
                a[i][j] = (a[p][p] * a[i][j] - a[i][p] * a[p][j]) / prev
        prev = a[p][p]
    return a[n - 1][n - 1] * sign


def wronskian(jets, extra):
    """Jet (order ``extra``) of W(f_1, ..., f_n) from jets of the f_i.

    Every input jet must have order >= n - 1 + extra.
    """
    n = len(jets)
    if n == 0:
        raise ValueError("wronskian of an empty list")
    need = n - 1 + extra
    for j in jets:
        if j.order < need:
            raise ValueError(f"wronskian of {n} functions with {extra} spare orders "
                             f"needs jets of order {need}, got {j.order}")
    rows = []
    for i in range(n):
        rows.append([j.diff(i).truncate(extra) if i else j.truncate(extra) for j in jets])
    return det(rows)


def _checked(w):
    if not abs(w.value) >= SINGULAR_THRESHOLD:
        raise SingularWronskianError(w.x0, w.value)
    return w


def gauged_wronskian(family, x, extra=2, m=None):
    """Jet of W(w_1..w_m) = exp(-m x^2/2) W(u_1..u_m)."""
    family = as_family(family)
    m = family.k if m is None else m
    if m == 0:
        return Jet.constant(1.0, x, extra)
    return _checked(wronskian(family.gauged_jets(x, m - 1 + extra, count=m), extra))


def wronskian_jet(family, x, extra=2, m=None):
    """Jet of W(u_1, ..., u_m) at x with ``extra`` usable orders (m defaults to k)."""
    family = as_family(family)
    m = family.k if m is None else m
    return _checked(gauge(x, extra, m) * gauged_wronskian(family, x, extra, m))


def _gauged_pair(family, x, extra):
    """Gauged (W_{k-1}, W_k) sharing one set of seed jets."""
    k = family.k
    seeds = family.gauged_jets(x, k - 1 + extra)
    upper = _checked(wronskian(seeds, extra))
    if k == 1:
        lower = Jet.constant(1.0, x, extra)
    else:
        lower = _checked(wronskian([s.truncate(k - 2 + extra) for s in seeds[:-1]], extra))
    return lower, upper


# ---------------------------------------------------------------------------
# potential and Painleve IV solution
# ---------------------------------------------------------------------------

def partner_potential_jet(family, x, order=0):
    """Jet of V_k = x^2/2 - (ln W)'' = x^2/2 - k - (ln W(w_1..w_k))''."""
    family = as_family(family)
    w = gauged_wronskian(family, x, extra=order + 2)
    xj = Jet.variable(x, order)
    return 0.5 * xj * xj - family.k - jet_log(w).diff(2)


def partner_potential(family, x):
    """V_k(x) = x^2/2 - (ln W(u_1..u_k))''."""
    return partner_potential_jet(family, x, 0).value


def pain4_solution_jet(family, x, order=2):
    """Jet of g_k = -x - (ln[W_{k-1} / W_k])' at x.

    In the gauged frame the -x cancels exactly against the gauge factors,
    leaving g_k = (ln[W(w_1..w_k) / W(w_1..w_{k-1})])'.
    """
    family = as_family(family)
    lower, upper = _gauged_pair(family, x, order + 1)
    return jet_log(upper).diff() - jet_log(lower).diff()


def pain4_solution(family, x):
    return pain4_solution_jet(family, x, 0).value


def sample_potential(family, xs):
    family = as_family(family)
    return GridFunction.sample(lambda x: partner_potential(family, x), xs)


def sample_pain4(family, xs):
    family = as_family(family)
    return GridFunction.sample(lambda x: pain4_solution(family, x), xs)


def wronskian_sign_constant(family, xs):
    """True iff W(u_1..u_k) keeps one sign at every point of xs."""
    family = as_family(family)
    signs = {wronskian_jet(family, x, extra=0).value > 0 for x in xs}
    return len(signs) == 1


# ---------------------------------------------------------------------------
# spectrum
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpectrumReport:
    finite_ladder: tuple
    infinite_ladder_base: float
    q_roots: tuple

    def as_dict(self):
        return {
            "finite_ladder": list(self.finite_ladder),
            "infinite_ladder_base": self.infinite_ladder_base,
            "q_roots": list(self.q_roots),
        }


def spectrum(params):
    ladder = tuple(params.eps1 - (params.k - j) for j in range(1, params.k + 1))
    roots = ladder + (0.5,) + tuple(e + 1.0 for e in ladder)
    return SpectrumReport(ladder, 0.5, roots)


# ---------------------------------------------------------------------------
# extremal states and residuals
# ---------------------------------------------------------------------------

def crum_state(family, x, order, phi_gauged):
    """Jet of W(u_1..u_k, phi) / W(u_1..u_k), the k-th order intertwiner image of phi.

    ``phi_gauged`` is a jet of exp(-x^2/2) phi of order >= k + order.
    """
    family = as_family(family)
    k = family.k
    seeds = family.gauged_jets(x, k + order)
    upper = _checked(wronskian([s.truncate(k - 1 + order) for s in seeds], order))
    ext = wronskian(seeds + [phi_gauged.truncate(k + order)], order)
    return gauge(x, order) * (ext / upper)


def _extremal_raw(family, which, x, order):
    k = family.k
    if which == 1:
        lower, upper = _gauged_pair(family, x, order)
        return gauge(x, order, -1.0) * (lower / upper)
    if which == 2:
        # exp(-x^2/2) in the gauged frame
        phi = gauge(x, k + order, -2.0)
    elif which == 3:
        # a+ u_1 = -exp(x^2/2) w_1' / sqrt(2)
        phi = -family.gauged_jets(x, k + order + 1, count=1)[0].diff() / SQRT2
    else:
        raise ValueError(f"extremal state index must be 1, 2 or 3, got {which}")
    return crum_state(family, x, order, phi)


def extremal_energy(params, which):
    return (params.eps1 - (params.k - 1), 0.5, params.eps1 + 1.0)[which - 1]


def extremal_state(family, which, x, order=2, x_ref=None):
    """Jet of the extremal state psi_{E_which} of H_k at x.

    which=1 is the Wronskian ratio W_{k-1}/W_k (energy eps_k); which=2 and 3
    are Crum images of exp(-x^2/2) (energy 1/2) and of a+ u_1 (energy
    eps_1 + 1). With ``x_ref`` the state is scaled so that psi(x_ref) = 1.
    """
    family = as_family(family)
    psi = _extremal_raw(family, which, x, order)
    if x_ref is not None:
        ref = _extremal_raw(family, which, x_ref, 0).value
        if ref == 0.0:
            raise ValueError(f"extremal state {which} vanishes at x_ref={x_ref}")
        psi = psi / ref
    return psi


def schrodinger_residual(potential, energy, psi):
    """Scale-free residual |-psi''/2 + (V - E) psi| / (1 + |psi''|/2 + |E psi|).

    ``potential`` is a callable x -> V(x) or the value V(psi.x0).
    """
    x = psi.x0
    v = potential(x) if callable(potential) else float(potential)
    p0 = psi.value
    p2 = psi.derivative(2)
    num = abs(-0.5 * p2 + (v - energy) * p0)
    return num / (1.0 + 0.5 * abs(p2) + abs(energy * p0))


def oscillator_potential(x):
    return 0.5 * x * x


__all__ = [
    "SeedFamily", "SpectrumReport", "det", "wronskian", "wronskian_jet",
    "partner_potential", "partner_potential_jet", "pain4_solution",
    "pain4_solution_jet", "spectrum", "extremal_state", "extremal_energy",
    "schrodinger_residual", "sample_potential", "sample_pain4",
    "wronskian_sign_constant", "oscillator_potential", "crum_state",
    "gauged_wronskian",
]

