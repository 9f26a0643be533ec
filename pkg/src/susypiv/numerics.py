"""Special functions and truncated Taylor jets.

Everything downstream differentiates through :class:`Jet`: a jet of order N
at ``x0`` stores ``f^(n)(x0) / n!`` for ``n = 0..N``. Arithmetic between jets
of different order truncates to the smaller order, so a chain of operations
always reports honestly how many derivatives it still carries.
"""

import math
from numbers import Real

import numpy as np

from . import kernels
from .errors import ConvergenceError, DomainError, PoleError

KUMMER_MAX_TERMS = 100_000
SQRT_PI = math.sqrt(math.pi)


# ---------------------------------------------------------------------------
# scalar special functions
# ---------------------------------------------------------------------------

def kummer_1f1(a, b, z):
    """Confluent hypergeometric function 1F1(a; b; z) by its ascending series.

    All terms are positive when ``a, b > 0`` and ``z >= 0``, which is the
    production regime. For ``z < 0`` the Kummer transformation
    1F1(a; b; z) = e^z 1F1(b - a; b; -z) is applied first, which removes the
    alternating-sign cancellation whenever ``b > a``.

    Raises
    ------
    DomainError
        If ``b`` is zero or a negative integer.
    ConvergenceError
        If the series has not settled after ``KUMMER_MAX_TERMS`` terms.
    """
    if b <= 0 and float(b).is_integer():
        raise DomainError(f"1F1 undefined for b={b} (non-positive integer)")
    if z < 0:
        return math.exp(z) * kummer_ascending(b - a, b, -z)
    return kummer_ascending(a, b, z)


def kummer_ascending(a, b, z):
    """The raw ascending series for any real z, without the Kummer transformation."""
    value, nterms = kernels.kummer_series(float(a), float(b), float(z), KUMMER_MAX_TERMS)
    if nterms > KUMMER_MAX_TERMS or not math.isfinite(value):
        raise ConvergenceError(
            f"1F1({a}, {b}; {z}) did not converge within {KUMMER_MAX_TERMS} terms")
    return value


def log_gamma(x):
    if x <= 0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def gamma_ratio(eps):
    """Gamma((3 - 2 eps)/4) / Gamma((1 - 2 eps)/4), defined for eps < 1/2."""
    if eps >= 0.5:
        raise DomainError(f"gamma_ratio requires eps < 1/2, got {eps}")
    return math.exp(log_gamma((3.0 - 2.0 * eps) / 4.0) - log_gamma((1.0 - 2.0 * eps) / 4.0))


def erf(x):
    return math.erf(x)


# ---------------------------------------------------------------------------
# jets
# ---------------------------------------------------------------------------

class Jet:
    """Truncated Taylor expansion ``sum_n coeffs[n] (x - x0)^n``."""

    __slots__ = ("x0", "coeffs")
    __array_priority__ = 1000  # numpy scalars defer to our reflected ops

    def __init__(self, x0, coeffs):
        c = np.array(coeffs, dtype=float)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("jet coefficients must be a non-empty 1-d sequence")
        c.flags.writeable = False
        self.x0 = float(x0)
        self.coeffs = c

    # construction -------------------------------------------------------

    @classmethod
    def variable(cls, x0, order):
        """Jet of the identity function x -> x."""
        c = np.zeros(order + 1)
        c[0] = x0
        if order >= 1:
            c[1] = 1.0
        return cls(x0, c)

    @classmethod
    def constant(cls, value, x0, order):
        c = np.zeros(order + 1)
        c[0] = value
        return cls(x0, c)

    @classmethod
    def from_derivatives(cls, x0, derivs):
        d = np.asarray(derivs, dtype=float)
        return cls(x0, d / _factorials(len(d)))

    # inspection ---------------------------------------------------------

    @property
    def order(self):
        return len(self.coeffs) - 1

    @property
    def value(self):
        return float(self.coeffs[0])

    def derivative(self, n):
        """n-th derivative at x0."""
        if n > self.order:
            raise ValueError(f"jet of order {self.order} has no derivative of order {n}")
        return float(self.coeffs[n] * math.factorial(n))

    def derivatives(self):
        return self.coeffs * _factorials(len(self.coeffs))

    def __repr__(self):
        return f"Jet(x0={self.x0!r}, coeffs={self.coeffs.tolist()!r})"

    def __eq__(self, other):
        if not isinstance(other, Jet):
            return NotImplemented
        return self.x0 == other.x0 and np.array_equal(self.coeffs, other.coeffs)

    __hash__ = None

    # calculus -----------------------------------------------------------

    def diff(self, times=1):
        """Jet of the derivative; order drops by ``times``."""
        if times > self.order:
            raise ValueError(f"cannot differentiate a jet of order {self.order} {times} times")
        c = self.coeffs
        for _ in range(times):
            c = c[1:] * np.arange(1, len(c))
        return Jet(self.x0, c)

    def integrate(self, value_at_x0=0.0):
        """Jet of the antiderivative taking ``value_at_x0`` at x0 (order grows by one)."""
        c = np.empty(len(self.coeffs) + 1)
        c[0] = value_at_x0
        c[1:] = self.coeffs / np.arange(1, len(self.coeffs) + 1)
        return Jet(self.x0, c)

    def truncate(self, order):
        if order > self.order:
            raise ValueError(f"cannot raise jet order from {self.order} to {order}")
        return Jet(self.x0, self.coeffs[: order + 1])

    def evaluate(self, x):
        """Evaluate the truncated polynomial at x."""
        return float(np.polynomial.polynomial.polyval(x - self.x0, self.coeffs))

    # arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Jet):
            if other.x0 != self.x0:
                raise ValueError(f"jets expanded at different points: {self.x0} vs {other.x0}")
            return other.coeffs
        if isinstance(other, Real):
            c = np.zeros(len(self.coeffs))
            c[0] = other
            return c
        return None

    def __neg__(self):
        return Jet(self.x0, -self.coeffs)

    def __pos__(self):
        return self

    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        n = min(len(c), len(self.coeffs))
        return Jet(self.x0, self.coeffs[:n] + c[:n])

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        n = min(len(c), len(self.coeffs))
        return Jet(self.x0, self.coeffs[:n] - c[:n])

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, Real):
            return Jet(self.x0, self.coeffs * float(other))
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return Jet(self.x0, kernels.jet_mul(self.coeffs, c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Real):
            if other == 0:
                raise PoleError(self.x0)
            return Jet(self.x0, self.coeffs / float(other))
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        if c[0] == 0.0:
            raise PoleError(self.x0)
        return Jet(self.x0, kernels.jet_div(self.coeffs, c))

    def __rtruediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        if self.coeffs[0] == 0.0:
            raise PoleError(self.x0)
        return Jet(self.x0, kernels.jet_div(c, self.coeffs))

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Jet.constant(1.0, self.x0, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


def _factorials(n):
    out = np.ones(n)
    for i in range(2, n):
        out[i] = out[i - 1] * i
    return out


def jet_var(x0, order):
    return Jet.variable(x0, order)


def jet_scale(j, factor):
    return j * float(factor)


_OPS = {
    "add": lambda l, r: l + r,
    "sub": lambda l, r: l - r,
    "mul": lambda l, r: l * r,
    "div": lambda l, r: l / r,
}


def jet_arith(lhs, rhs, op):
    """Binary jet arithmetic by name (``add``, ``sub``, ``mul``, ``div``)."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown jet operation {op!r}") from None
    return fn(lhs, rhs)


def jet_exp(j):
    return Jet(j.x0, kernels.jet_exp(j.coeffs))


def jet_log(j):
    """Jet of ln|f|; the derivative part is exact even when f < 0."""
    if j.coeffs[0] == 0.0:
        raise PoleError(j.x0, f"logarithm of a jet vanishing at x0={j.x0!r}")
    return Jet(j.x0, kernels.jet_log(j.coeffs))


def jet_sqrt_abs(j):
    return jet_exp(0.5 * jet_log(j))


def jet_erf(j):
    """erf composed with a jet, via erf' = 2/sqrt(pi) exp(-t^2)."""
    value = math.erf(j.coeffs[0])
    if j.order == 0:
        return Jet(j.x0, [value])
    inner = j.truncate(j.order - 1)
    integrand = (2.0 / SQRT_PI) * jet_exp(-(inner * inner)) * j.diff()
    return integrand.integrate(value)


def kummer_jet(a, b, z):
    """1F1(a; b; .) composed with a jet ``z`` by summing the series in jet arithmetic.

    Independent of the contiguous relations, so it can check them. Only the
    non-negative regime ``z.value >= 0`` is supported.
    """
    if b <= 0 and float(b).is_integer():
        raise DomainError(f"1F1 undefined for b={b} (non-positive integer)")
    if z.value < 0:
        raise DomainError("kummer_jet needs a jet with non-negative value")
    term = Jet.constant(1.0, z.x0, z.order)
    total = term
    quiet = 0
    for n in range(KUMMER_MAX_TERMS):
        term = term * z * ((a + n) / ((b + n) * (n + 1.0)))
        total = total + term
        if np.all(np.abs(term.coeffs) <= 1e-17 * np.abs(total.coeffs)):
            quiet += 1
            if quiet >= 3:
                return total
        else:
            quiet = 0
    raise ConvergenceError(f"1F1 jet series did not converge for a={a}, b={b}")


def exp(x):
    """``math.exp`` that also accepts jets."""
    return jet_exp(x) if isinstance(x, Jet) else math.exp(x)


def erf_any(x):
    return jet_erf(x) if isinstance(x, Jet) else math.erf(x)
