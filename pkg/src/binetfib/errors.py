"""Exception hierarchy shared by every module."""


class BinetFibError(Exception):
    """Base class; the CLI maps any of these to exit status 2."""


class PreconditionError(BinetFibError, ValueError):
    """An argument violates a documented precondition."""


class RangeExceeded(BinetFibError, ArithmeticError):
    """A value is not representable at the selected precision."""


class DegenerateRoots(PreconditionError):
    """x^2 - p x - q has no pair of distinct real roots (or no dominant one)."""


class DegenerateSequence(PreconditionError):
    pass


class DegenerateCombination(PreconditionError):
    pass


class DegenerateVelocity(BinetFibError, ArithmeticError):
    pass


class NonDivisible(BinetFibError, ArithmeticError):
    """F_k failed to divide F_{nk}. Can only mean a bug."""
