"""Exact Fibonacci, Lucas and generalized Fibonacci numbers.

All integer results are Python ints, so nothing overflows.  The float
versions of Binet's formula are kept here as cross-checks against the
exact values.

Indexing follows the recursion's initial values: ``G_0`` is term 0.  The
sequence ``4, 4, 8, 12, 20, 32, 52`` with ``(G_0, G_1) = (0, 4)`` is
therefore terms 1..7.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import PreconditionError, RangeExceeded
from .precision import (PHI_F, PHI_PRIME_F, SQRT5_F, check_precision,
                        golden_constants)

# Practical bound; fast doubling handles it in well under a second.
MAX_INDEX = 10**6


@dataclass(frozen=True)
class GenSpec:
    """Initial pair and recursion coefficients of G_{n+1} = p G_n + q G_{n-1}."""

    g0: int
    g1: int
    p: int = 1
    q: int = 1

    def __post_init__(self):
        for name in ("g0", "g1", "p", "q"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise PreconditionError(
                    f"GenSpec.{name} must be an integer, got {value!r}")

    @property
    def is_fibonacci_recursion(self) -> bool:
        return self.p == 1 and self.q == 1


FIBONACCI = GenSpec(0, 1)


def _fib_pair(n: int) -> tuple[int, int]:
    # Fast doubling: F_2m = F_m (2 F_{m+1} - F_m), F_{2m+1} = F_m^2 + F_{m+1}^2.
    a, b = 0, 1
    for bit in bin(n)[2:]:
        c = a * (2 * b - a)
        d = a * a + b * b
        if bit == "1":
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def fib(n: int) -> int:
    """Return F_n for any signed integer n.

    Negative indices use F_{-n} = (-1)^{n+1} F_n.

    >>> fib(20), fib(-4)
    (6765, -3)
    """
    if n >= 0:
        return _fib_pair(n)[0]
    m = -n
    value = _fib_pair(m)[0]
    return value if m % 2 else -value


def fib_pair(n: int) -> tuple[int, int]:
    """(F_n, F_{n+1}) for any signed n."""
    if n >= 0:
        return _fib_pair(n)
    return fib(n), fib(n + 1)


def lucas(n: int) -> int:
    """L_n = F_{n-1} + F_{n+1}, for any signed n."""
    f_n, f_next = fib_pair(n)
    return 2 * f_next - f_n


def gen_fib(spec: GenSpec, n: int) -> int:
    """G_n by running G_{n+1} = p G_n + q G_{n-1} forward from (G_0, G_1).

    Only n >= 0 is defined; there is no negative-index rule for arbitrary
    initial values.
    """
    if n < 0:
        raise PreconditionError(
            f"gen_fib needs n >= 0 (negative indices are undefined), got {n}")
    prev, cur = spec.g0, spec.g1
    if n == 0:
        return prev
    p, q = spec.p, spec.q
    for _ in range(n - 1):
        prev, cur = cur, p * cur + q * prev
    return cur


def gen_fib_terms(spec: GenSpec, n_from: int, n_to: int) -> list[int]:
    """Terms G_{n_from} .. G_{n_to} inclusive from a single recursion pass."""
    if n_from < 0:
        raise PreconditionError(f"gen_fib needs n >= 0, got {n_from}")
    out = []
    prev, cur = spec.g0, spec.g1
    for n in range(n_to + 1):
        if n >= n_from:
            out.append(prev)
        prev, cur = cur, spec.p * cur + spec.q * prev
    return out


def binet_float(n: int, precision: str = "float64"):
    """(phi^n - phi'^n) / (phi - phi').

    Rounds to F_n for |n| <= 70 in float64.  ``precision="extended"`` returns
    an mpmath value instead.
    """
    check_precision(precision)
    if precision == "extended":
        g = golden_constants()
        return (g.phi ** n - g.phi_prime ** n) / g.sqrt5
    try:
        return (PHI_F ** n - PHI_PRIME_F ** n) / SQRT5_F
    except OverflowError:
        raise RangeExceeded(f"phi^{n} overflows float64") from None


def gen_binet_float(spec: GenSpec, n: int, precision: str = "float64"):
    """Binet-type closed form for G_n when p = q = 1.

    G_n = ((G_1 - phi' G_0) phi^n - (G_1 - phi G_0) phi'^n) / (phi - phi')
    """
    check_precision(precision)
    if not spec.is_fibonacci_recursion:
        raise PreconditionError(
            "gen_binet_float needs p = q = 1; use fib_poly_binet otherwise")
    if precision == "extended":
        g = golden_constants()
        phi, phi_p = g.phi, g.phi_prime
        return ((spec.g1 - phi_p * spec.g0) * phi ** n
                - (spec.g1 - phi * spec.g0) * phi_p ** n) / g.sqrt5
    try:
        big = (spec.g1 - PHI_PRIME_F * spec.g0) * PHI_F ** n
        small = (spec.g1 - PHI_F * spec.g0) * PHI_PRIME_F ** n
    except OverflowError:
        raise RangeExceeded(f"phi^{n} overflows float64") from None
    if not math.isfinite(big):
        raise RangeExceeded(f"G_{n} overflows float64")
    return (big - small) / SQRT5_F

