"""Exception hierarchy shared by every module."""


class SusyPivError(Exception):
    """Base class for all package errors."""


class DomainError(SusyPivError, ValueError):
    """An argument lies outside the region where an operation is defined."""


class NumericalError(SusyPivError, ArithmeticError):
    """A numerical procedure failed (non-convergence, vanishing determinant)."""


class ConvergenceError(NumericalError):
    pass


class PoleError(NumericalError, ZeroDivisionError):
    """Division by a jet whose constant term is zero."""

    def __init__(self, x0, message=None):
        self.x0 = x0
        super().__init__(message or f"division by a jet vanishing at x0={x0!r}")


class SingularWronskianError(NumericalError):
    def __init__(self, x, value):
        self.x = x
        self.value = value
        super().__init__(f"Wronskian vanishes at x={x!r} (W={value!r})")


class UnsupportedCaseError(DomainError):
    """Requested closed form is not part of the catalog."""
