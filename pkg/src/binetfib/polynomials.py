"""Fibonacci polynomials F_n(p, q) and their generalizations G_n(p, q).

F_0 = 0, F_1 = 1, F_{n+1} = p F_n + q F_{n-1}.  The same recursion with
arbitrary (G_0, G_1) gives G_n(p, q) = G_1 F_n(p, q) + q G_0 F_{n-1}(p, q).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import DegenerateRoots, PreconditionError, RangeExceeded
from .exact_core import GenSpec, gen_fib
from .precision import EXT, check_precision, to_mpf


class BivarPoly:
    """Sparse polynomial sum c_ij p^i q^j with integer coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        for (i, j), c in (coeffs or {}).items():
            if i < 0 or j < 0:
                raise PreconditionError(f"negative exponent in {(i, j)}")
            if c:
                clean[(int(i), int(j))] = int(c)
        self._coeffs = clean

    @classmethod
    def constant(cls, c: int) -> "BivarPoly":
        return cls({(0, 0): c})

    @property
    def coeffs(self) -> dict[tuple[int, int], int]:
        return dict(self._coeffs)

    def _promote(self, other) -> "BivarPoly":
        if isinstance(other, BivarPoly):
            return other
        if isinstance(other, int):
            return BivarPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._promote(other)
        if other is NotImplemented:
            return other
        out = dict(self._coeffs)
        for key, c in other._coeffs.items():
            out[key] = out.get(key, 0) + c
        return BivarPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other):
        other = self._promote(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._promote(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._coeffs.items():
            for (i2, j2), c2 in other._coeffs.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BivarPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._promote(other)
        if other is NotImplemented:
            return other
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self):
        return bool(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    def degree_p(self) -> int:
        return max((i for i, _ in self._coeffs), default=-1)

    def degree_q(self) -> int:
        return max((j for _, j in self._coeffs), default=-1)

    def evaluate(self, p, q):
        return sum(c * p ** i * q ** j for (i, j), c in self._coeffs.items())

    def terms(self) -> list[tuple[tuple[int, int], int]]:
        """Terms in canonical order: exponent pairs descending lexicographically."""
        return sorted(self._coeffs.items(), reverse=True)

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for (i, j), c in self.terms():
            factors = []
            if i:
                factors.append("p" if i == 1 else f"p^{i}")
            if j:
                factors.append("q" if j == 1 else f"q^{j}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = " ".join(factors)
            else:
                body = " ".join([str(mag)] + factors)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"BivarPoly({str(self)!r})"


P = BivarPoly({(1, 0): 1})
Q = BivarPoly({(0, 1): 1})


def fib_poly_symbolic_list(n_max: int) -> list[BivarPoly]:
    """[F_0, ..., F_{n_max}] as symbolic polynomials."""
    if n_max < 0:
        raise PreconditionError(f"n must be >= 0, got {n_max}")
    seq = [BivarPoly(), BivarPoly.constant(1)]
    while len(seq) <= n_max:
        seq.append(P * seq[-1] + Q * seq[-2])
    return seq[: n_max + 1]


def fib_poly_symbolic(n: int) -> BivarPoly:
    """Expanded F_n(p, q).

    >>> str(fib_poly_symbolic(7))
    'p^6 + 5 p^4 q + 6 p^2 q^2 + q^3'
    """
    return fib_poly_symbolic_list(n)[n]


def fib_poly_eval(n: int, p: int, q: int) -> int:
    """Exact F_n(p, q) for integer p, q."""
    if n < 0:
        raise PreconditionError(f"n must be >= 0, got {n}")
    return gen_fib(GenSpec(0, 1, p, q), n)


@dataclass(frozen=True)
class RootPair:
    """Roots a >= b of x^2 - p x - q = 0."""

    a: object
    b: object
    discriminant: object


def roots(p, q, ctx=EXT) -> RootPair:
    p = to_mpf(p, ctx)
    q = to_mpf(q, ctx)
    disc = p * p / 4 + q
    if disc <= 0:
        raise DegenerateRoots(
            f"p^2/4 + q = {ctx.nstr(disc, 10)} <= 0: no distinct real roots")
    s = ctx.sqrt(disc)
    return RootPair(a=p / 2 + s, b=p / 2 - s, discriminant=disc)


def _float_roots(p, q) -> tuple[float, float]:
    p, q = float(p), float(q)
    disc = p * p / 4 + q
    if disc <= 0:
        raise DegenerateRoots(f"p^2/4 + q = {disc!r} <= 0: no distinct real roots")
    s = disc ** 0.5
    return p / 2 + s, p / 2 - s


def fib_poly_binet(n: int, p, q, precision: str = "float64"):
    """(a^n - b^n) / (a - b) over the real roots of x^2 - p x - q."""
    check_precision(precision)
    if precision == "extended":
        r = roots(p, q)
        return (r.a ** n - r.b ** n) / (r.a - r.b)
    a, b = _float_roots(p, q)
    try:
        return (a ** n - b ** n) / (a - b)
    except OverflowError:
        raise RangeExceeded(f"root power {n} overflows float64") from None


def root_power_decompose(n: int, p: int, q: int) -> tuple[int, int]:
    """(F_n(p,q), q F_{n-1}(p,q)), so that a^n = F_n a + q F_{n-1} for either root."""
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    return fib_poly_eval(n, p, q), q * fib_poly_eval(n - 1, p, q)


def gen_fib_poly(spec: GenSpec, n: int) -> int:
    """G_n(p, q) by the recursion."""
    return gen_fib(spec, n)


def gen_fib_poly_superposition(spec: GenSpec, n: int) -> int:
    """G_1 F_n(p,q) + q G_0 F_{n-1}(p,q); n = 0 gives G_0."""
    if n < 0:
        raise PreconditionError(f"n must be >= 0, got {n}")
    if n == 0:
        return spec.g0
    return (spec.g1 * fib_poly_eval(n, spec.p, spec.q)
            + spec.q * spec.g0 * fib_poly_eval(n - 1, spec.p, spec.q))


def gen_fib_poly_binet(spec: GenSpec, n: int, precision: str = "float64"):
    """((G_1 - b G_0) a^n - (G_1 - a G_0) b^n) / (a - b)."""
    check_precision(precision)
    if precision == "extended":
        r = roots(spec.p, spec.q)
        a, b = r.a, r.b
    else:
        a, b = _float_roots(spec.p, spec.q)
    try:
        return ((spec.g1 - b * spec.g0) * a ** n
                - (spec.g1 - a * spec.g0) * b ** n) / (a - b)
    except OverflowError:
        raise RangeExceeded(f"root power {n} overflows float64") from None
