"""Equi-Fibonacci subsequences F_{kn+alpha} and higher-order Fibonacci numbers.

Every stride-k subsequence obeys

    G_{n+1} = L_k G_n + (-1)^(k-1) G_{n-1},

so it is the generalized Fibonacci polynomial sequence with p = L_k,
q = (-1)^(k-1), G_0 = F_alpha and G_1 = F_{alpha+k}.  The sign is written
(-1)^(k+1) in some places; the two agree for every integer k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonDivisible, PreconditionError
from .exact_core import GenSpec, fib, lucas


@dataclass(frozen=True)
class EquiSpec:
    k: int
    alpha: int = 0

    def __post_init__(self):
        if self.k < 1:
            raise PreconditionError(f"stride k must be >= 1, got {self.k}")
        if not 0 <= self.alpha < self.k:
            raise PreconditionError(
                f"residue alpha must satisfy 0 <= alpha < k={self.k}, got {self.alpha}")

    @property
    def sign(self) -> int:
        """(-1)^(k-1)."""
        return 1 if self.k % 2 else -1

    def gen_spec(self) -> GenSpec:
        return GenSpec(g0=fib(self.alpha), g1=fib(self.alpha + self.k),
                       p=lucas(self.k), q=self.sign)


def equi_term(spec: EquiSpec, n: int) -> int:
    return fib(spec.k * n + spec.alpha)


def equi_terms(spec: EquiSpec, n_from: int, n_to: int) -> list[int]:
    return [equi_term(spec, n) for n in range(n_from, n_to + 1)]


def equi_step(spec: EquiSpec, g_n: int, g_prev: int) -> int:
    """L_k g_n + (-1)^(k-1) g_prev."""
    return lucas(spec.k) * g_n + spec.sign * g_prev


def verify_theorem1(spec: EquiSpec, n_max: int) -> bool:
    """True iff the Lucas recursion reproduces F_{k(n+1)+alpha} for 1 <= n < n_max."""
    if n_max < 2:
        raise PreconditionError(f"n_max must be >= 2, got {n_max}")
    terms = equi_terms(spec, 0, n_max)
    return all(terms[n + 1] == equi_step(spec, terms[n], terms[n - 1])
               for n in range(1, n_max))


def higher_order_fib(k: int, n: int) -> int:
    """F_n^(k) = F_{nk} / F_k, checked to divide exactly."""
    if k < 1:
        raise PreconditionError(f"k must be >= 1, got {k}")
    if n < 0:
        raise PreconditionError(f"n must be >= 0, got {n}")
    quotient, remainder = divmod(fib(n * k), fib(k))
    if remainder:
        raise NonDivisible(f"F_{k} does not divide F_{n * k}")
    return quotient


def equi_superposition(spec: EquiSpec, n: int) -> int:
    """F_{alpha+k} F_n^(k) + F_alpha (-1)^(k-1) F_{n-1}^(k).

    n = 0 returns F_alpha directly, which avoids F_{-1}^(k).
    """
    if n < 0:
        raise PreconditionError(f"n must be >= 0, got {n}")
    if n == 0:
        return fib(spec.alpha)
    k, alpha = spec.k, spec.alpha
    return (fib(alpha + k) * higher_order_fib(k, n)
            + fib(alpha) * spec.sign * higher_order_fib(k, n - 1))
