"""Convergence of consecutive-term ratios G_{n+1} / G_n.

Ratios are formed from exact integer terms and divided once, at a precision
chosen large enough that the smallest error in the report is still
resolved.  The error is expected to shrink like |b/a|^n, where a, b are the
dominant and subdominant characteristic roots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (DegenerateCombination, DegenerateRoots,
                     DegenerateSequence, PreconditionError)
from .exact_core import GenSpec, gen_fib_terms
from .linear_combinations import _coerce, combo_terms, poly_eval
from .precision import EXTENDED_DPS, context, golden_constants, to_mpf

COMBO_DEGENERACY_TOL = 1e-12


@dataclass
class ConvergenceReport:
    terms: list = field(repr=False)
    limit_claim: object
    final_error: object
    geometric_rate_estimate: object
    expected_rate: object

    def to_dict(self) -> dict:
        return {
            "terms": [[n, float(r)] for n, r in self.terms],
            "limit_claim": float(self.limit_claim),
            "final_error": float(self.final_error),
            "geometric_rate_estimate": float(self.geometric_rate_estimate),
            "expected_rate": float(self.expected_rate),
        }


def _digits_needed(n_max: int, rate: float, magnitude_digits: int) -> int:
    rate = max(min(rate, 0.999), 1e-6)
    return EXTENDED_DPS + magnitude_digits + math.ceil(-n_max * math.log10(rate))


def _fit_rate(terms, limit, ctx):
    """exp(slope) of a least-squares line through ln|ratio_n - limit|."""
    floor = ctx.mpf(10) ** (-(ctx.dps - 10))
    pts = [(n, ctx.log(abs(r - limit))) for n, r in terms if abs(r - limit) > floor]
    pts = pts[len(pts) // 2:]
    if len(pts) < 2:
        return ctx.nan
    n_bar = ctx.fsum(n for n, _ in pts) / len(pts)
    y_bar = ctx.fsum(y for _, y in pts) / len(pts)
    num = ctx.fsum((n - n_bar) * (y - y_bar) for n, y in pts)
    den = ctx.fsum((n - n_bar) ** 2 for n, _ in pts)
    return ctx.exp(num / den)


def _build(values, offset, limit, expected_rate, ctx) -> ConvergenceReport:
    # values[i] is the term with index offset + i
    terms = []
    for i in range(len(values) - 1):
        den = values[i]
        if den == 0:
            continue
        terms.append((offset + i, to_mpf(values[i + 1], ctx) / to_mpf(den, ctx)))
    if not terms:
        raise DegenerateSequence("every term in range is zero")
    final_error = abs(terms[-1][1] - limit)
    return ConvergenceReport(terms=terms, limit_claim=limit, final_error=final_error,
                             geometric_rate_estimate=_fit_rate(terms, limit, ctx),
                             expected_rate=expected_rate)


def _check_n_max(n_max: int):
    if n_max < 3:
        raise PreconditionError(f"n_max must be >= 3, got {n_max}")


_PHI_RATE = ((5 ** 0.5 - 1) / 2) ** 2


def _phi_context(n_max: int, values) -> tuple:
    digits = max(len(str(abs(v))) for v in values)
    ctx = context(_digits_needed(n_max, _PHI_RATE, digits))
    phi = (1 + ctx.sqrt(5)) / 2
    return ctx, phi, 1 / phi ** 2


def ratio_limit_fib(n_max: int) -> ConvergenceReport:
    """F_{n+1}/F_n for n = 1..n_max against phi."""
    return ratio_limit_generalized(GenSpec(0, 1), n_max)


def ratio_limit_generalized(spec: GenSpec, n_max: int) -> ConvergenceReport:
    """G_{n+1}/G_n for n = 1..n_max against phi (p = q = 1 only)."""
    _check_n_max(n_max)
    if not spec.is_fibonacci_recursion:
        raise PreconditionError("ratio_limit_generalized needs p = q = 1")
    if spec.g0 == 0 and spec.g1 == 0:
        raise DegenerateSequence("G_0 = G_1 = 0 gives the zero sequence")
    values = gen_fib_terms(spec, 1, n_max + 1)
    ctx, phi, rate = _phi_context(n_max, values)
    return _build(values, 1, phi, rate, ctx)


def ratio_limit_combo(cv, n_max: int) -> ConvergenceReport:
    """G^(k)_{n+1}/G^(k)_n for n = 1..n_max against phi.

    Raises DegenerateCombination when the generating polynomial vanishes at
    phi, which happens exactly when it is a multiple of x^2 - x - 1.
    """
    _check_n_max(n_max)
    cv = _coerce(cv)
    g = golden_constants()
    if abs(poly_eval(cv.alphas, g.phi)) < COMBO_DEGENERACY_TOL:
        raise DegenerateCombination(
            f"P(phi) = 0 for coefficients {cv.alphas}; the phi^n mode is absent")
    values = combo_terms(cv, 1, n_max + 1)
    ctx, phi, rate = _phi_context(n_max, values)
    return _build(values, 1, phi, rate, ctx)


def ratio_limit_poly(p, q, n_max: int) -> ConvergenceReport:
    """F_{n+1}(p,q)/F_n(p,q) for n = 1..n_max against the dominant root a.

    Integer p, q are run exactly; anything else runs in extended precision.
    Requires distinct real roots with |a| > |b| (equivalently p > 0).
    """
    _check_n_max(n_max)
    pf, qf = float(p), float(q)
    disc = pf * pf / 4 + qf
    if disc <= 0:
        raise DegenerateRoots(f"p^2/4 + q = {disc!r} <= 0")
    if pf <= 0:
        raise DegenerateRoots("dominant root is not a: need p > 0 so |a| > |b|")
    a_f = pf / 2 + math.sqrt(disc)
    b_f = pf / 2 - math.sqrt(disc)
    rate = abs(b_f / a_f)
    magnitude = math.ceil((n_max + 2) * math.log10(max(a_f, 1.0))) + 1
    ctx = context(_digits_needed(n_max, rate, magnitude))
    exact = all(isinstance(v, int) and not isinstance(v, bool) for v in (p, q))
    if exact:
        pp, qq = p, q
    else:
        pp, qq = to_mpf(p, ctx), to_mpf(q, ctx)
    values = [pp * 0, pp * 0 + 1]
    while len(values) < n_max + 2:
        values.append(pp * values[-1] + qq * values[-2])
    pm, qm = to_mpf(p, ctx), to_mpf(q, ctx)
    s = ctx.sqrt(pm * pm / 4 + qm)
    a, b = pm / 2 + s, pm / 2 - s
    return _build(values[1:], 1, a, abs(b / a), ctx)
