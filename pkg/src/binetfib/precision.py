"""Working-precision helpers and the golden-ratio constants.

Two precisions are used throughout the package:

``"float64"``
    plain Python floats, fast, good to ~1e-15 relative.
``"extended"``
    an isolated mpmath context at :data:`EXTENDED_DPS` decimal digits
    (about 136 significand bits).

The shared context :data:`EXT` is configured once at import time and never
mutated afterwards, so it is safe to use from several threads.  Code that
needs more digits asks :func:`context` for a private one.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import PreconditionError

EXTENDED_DPS = 40

PRECISIONS = ("float64", "extended")


@functools.lru_cache(maxsize=64)
def context(dps: int = EXTENDED_DPS) -> mpmath.ctx_mp.MPContext:
    """Return a dedicated mpmath context with ``dps`` decimal digits."""
    ctx = mpmath.MPContext()
    ctx.dps = int(dps)
    return ctx


EXT = context(EXTENDED_DPS)


def check_precision(precision: str) -> str:
    if precision not in PRECISIONS:
        raise PreconditionError(
            f"precision must be one of {PRECISIONS}, got {precision!r}")
    return precision


def to_mpf(value, ctx=EXT):
    """Convert int, float, str, Fraction or mpf to ``ctx.mpf`` exactly."""
    if isinstance(value, Fraction):
        return ctx.mpf(value.numerator) / value.denominator
    return ctx.mpf(value)


def to_fraction(value) -> Fraction:
    """Exact rational for a parameter given as int, str, float or Fraction.

    Floats go through ``repr`` so ``0.1`` means one tenth, which keeps
    uniform grids landing exactly on integers.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise PreconditionError(f"parameter must be finite, got {value}")
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(str(value))


@dataclass(frozen=True)
class GoldenConstants:
    phi: object
    phi_prime: object
    ln_phi: object
    sqrt5: object
    pi: object


@functools.lru_cache(maxsize=8)
def golden_constants(dps: int = EXTENDED_DPS) -> GoldenConstants:
    """phi, phi' = -1/phi, ln(phi), sqrt(5) and pi in a ``dps``-digit context."""
    ctx = context(dps)
    sqrt5 = ctx.sqrt(5)
    phi = (1 + sqrt5) / 2
    return GoldenConstants(phi=phi, phi_prime=(1 - sqrt5) / 2,
                           ln_phi=ctx.log(phi), sqrt5=sqrt5, pi=+ctx.pi)


SQRT5_F = math.sqrt(5.0)
PHI_F = (1.0 + SQRT5_F) / 2.0
PHI_PRIME_F = (1.0 - SQRT5_F) / 2.0
