"""Sequences built as integer combinations of shifted Fibonacci numbers.

A coefficient vector ``(a_0, ..., a_k)`` defines

    G_n = a_0 F_n + a_1 F_{n+1} + ... + a_k F_{n+k}

and the generating polynomial P(x) = a_0 + a_1 x + ... + a_k x^k, so that
G_n = (phi^n P(phi) - phi'^n P(phi')) / (phi - phi').
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import PreconditionError, RangeExceeded
from .exact_core import fib
from .precision import (PHI_F, PHI_PRIME_F, SQRT5_F, check_precision,
                        golden_constants)


@dataclass(frozen=True)
class CoefficientVector:
    alphas: tuple[int, ...]

    def __init__(self, alphas: Iterable[int]):
        alphas = tuple(alphas)
        if not alphas:
            raise PreconditionError("coefficient vector needs at least one entry")
        for a in alphas:
            if isinstance(a, bool) or not isinstance(a, int):
                raise PreconditionError(
                    f"coefficients must be integers, got {a!r}")
        object.__setattr__(self, "alphas", alphas)

    @property
    def degree(self) -> int:
        """k, the position of the last slot (zeros included)."""
        return len(self.alphas) - 1

    def __iter__(self):
        return iter(self.alphas)

    def __len__(self):
        return len(self.alphas)


def _coerce(cv) -> CoefficientVector:
    return cv if isinstance(cv, CoefficientVector) else CoefficientVector(cv)


def poly_eval(coeffs: Sequence[int], x):
    """Horner evaluation of sum coeffs[l] * x**l."""
    acc = 0 * x
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def combo_term(cv, n: int) -> int:
    """Exact sum of alpha_i * F_{n+i}."""
    cv = _coerce(cv)
    return sum(a * fib(n + i) for i, a in enumerate(cv.alphas) if a)


def combo_terms(cv, n_from: int, n_to: int) -> list[int]:
    return [combo_term(cv, n) for n in range(n_from, n_to + 1)]


def combo_binet(cv, n: int, precision: str = "float64"):
    """Evaluate G_n through the generating polynomial at phi and phi'."""
    cv = _coerce(cv)
    check_precision(precision)
    if precision == "extended":
        g = golden_constants()
        return (g.phi ** n * poly_eval(cv.alphas, g.phi)
                - g.phi_prime ** n * poly_eval(cv.alphas, g.phi_prime)) / g.sqrt5
    try:
        big = PHI_F ** n * poly_eval(cv.alphas, PHI_F)
        small = PHI_PRIME_F ** n * poly_eval(cv.alphas, PHI_PRIME_F)
    except OverflowError:
        raise RangeExceeded(f"phi^{n} overflows float64") from None
    return (big - small) / SQRT5_F


def dual(cv) -> CoefficientVector:
    """Reverse the coefficient order; zeros keep their (mirrored) slots."""
    return CoefficientVector(reversed(_coerce(cv).alphas))


@dataclass(frozen=True)
class DualCheck:
    ok: bool
    max_residual: object
    residual_phi: object
    residual_phi_prime: object
    residual_binet: object


DUAL_TOLERANCE = 1e-12


def verify_dual_identity(cv, n_range: Iterable[int] = range(0, 51),
                         tol: float = DUAL_TOLERANCE) -> DualCheck:
    """Check the dual-polynomial rewrites at extended precision.

    Residuals checked:

    * P(phi) against phi^k D(-phi'), with D the dual polynomial;
    * P(phi') against phi'^k D(-phi);
    * the two Binet forms of G_n for every n in ``n_range``, relative to
      max(1, |G_n|).
    """
    cv = _coerce(cv)
    g = golden_constants()
    phi, phi_p, k = g.phi, g.phi_prime, cv.degree
    a = cv.alphas
    d = dual(cv).alphas

    p_phi = poly_eval(a, phi)
    p_phi_p = poly_eval(a, phi_p)
    d_at_neg_phi_p = poly_eval(d, -phi_p)
    d_at_neg_phi = poly_eval(d, -phi)

    r1 = abs(p_phi - phi ** k * d_at_neg_phi_p)
    r2 = abs(p_phi_p - phi_p ** k * d_at_neg_phi)
    r3 = 0 * phi
    for n in n_range:
        direct = (phi ** n * p_phi - phi_p ** n * p_phi_p) / g.sqrt5
        via_dual = (phi ** (n + k) * d_at_neg_phi_p
                    - phi_p ** (n + k) * d_at_neg_phi) / g.sqrt5
        scale = max(abs(direct), 1)
        r3 = max(r3, abs(direct - via_dual) / scale)
    worst = max(r1, r2, r3)
    return DualCheck(ok=bool(worst < tol), max_residual=worst,
                     residual_phi=r1, residual_phi_prime=r2, residual_binet=r3)
