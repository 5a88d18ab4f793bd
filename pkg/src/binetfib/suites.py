"""Named verification suites behind ``binetfib verify``.

Each suite returns a :class:`SuiteReport`; ``to_dict`` gives the JSON shape

    {"suite": ..., "claims": [{"id", "paper_ref", "status", "max_residual"}],
     "passed": bool}

``status`` is ``"pass"``, ``"fail"`` or ``"info"``.  Info claims record
behaviour outside a statement's range and never affect ``passed``.
"""

from __future__ import annotations

import inspect
import random
from dataclasses import dataclass, field

from . import curve
from .errors import PreconditionError
from .exact_core import GenSpec, fib, gen_fib, lucas
from .linear_combinations import CoefficientVector, dual, verify_dual_identity
from .polynomials import gen_fib_poly_superposition
from .precision import EXT
from .subsequences import (EquiSpec, equi_step, equi_superposition, equi_terms,
                           higher_order_fib)

AREA_QUAD_TOL = 1e-8
AREA_LIMIT_TOL = 1e-8
PHI_IDENTITY_TOL = 1e-14
LAMBDA_REL_TOL = 1e-10
LAMBDA_LIMIT_TOL = 1e-6
ODD_POWER_REL_TOL = 1e-12


@dataclass
class Claim:
    id: str
    paper_ref: str
    status: str
    max_residual: float | None = None

    def to_dict(self) -> dict:
        r = self.max_residual
        return {"id": self.id, "paper_ref": self.paper_ref, "status": self.status,
                "max_residual": None if r is None else float(r)}


def _claim(id, ref, ok, residual=None) -> Claim:
    return Claim(id, ref, "pass" if ok else "fail", residual)


@dataclass
class SuiteReport:
    suite: str
    claims: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.claims)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "claims": [c.to_dict() for c in self.claims],
                "passed": self.passed}


def _require(cond, msg):
    if not cond:
        raise PreconditionError(msg)


def suite_theorem1(k_max: int = 20, n_max: int = 200) -> list[Claim]:
    _require(1 <= k_max <= 200, f"--k-max must be in [1, 200], got {k_max}")
    _require(2 <= n_max <= 5000, f"--n-max must be in [2, 5000], got {n_max}")
    worst = 0
    as_poly_ok = True
    for k in range(1, k_max + 1):
        for alpha in range(k):
            spec = EquiSpec(k, alpha)
            terms = equi_terms(spec, 0, n_max)
            for n in range(1, n_max):
                worst = max(worst, abs(terms[n + 1] - equi_step(spec, terms[n], terms[n - 1])))
            gs = spec.gen_spec()
            as_poly_ok &= all(gen_fib(gs, n) == terms[n] for n in (0, 1, n_max // 2, n_max))
    coeffs = {k: (lucas(k), EquiSpec(k).sign) for k in (1, 2, 3)}
    cover_ok = True
    for k in range(1, min(k_max, 10) + 1):
        indices = []
        for alpha in range(k):
            for n, value in enumerate(equi_terms(EquiSpec(k, alpha), 0, n_max)):
                indices.append(k * n + alpha)
                cover_ok &= value == fib(k * n + alpha)
        # every index in range exactly once
        cover_ok &= sorted(indices) == list(range(k * (n_max + 1)))
    return [
        _claim("theorem1_recursion", "equi-Fibonacci Lucas recursion", worst == 0, worst),
        _claim("theorem1_coefficients", "stride 2: 3, -1; stride 3: 4, +1",
               coeffs == {1: (1, 1), 2: (3, -1), 3: (4, 1)}),
        _claim("equi_as_gen_fib_poly", "equi-Fibonacci as G_n(L_k, (-1)^(k-1))", as_poly_ok),
        _claim("equi_residues_cover", "residue classes cover the whole sequence", cover_ok),
    ]


def suite_superposition(k_max: int = 20, n_max: int = 100, seed: int = 0) -> list[Claim]:
    _require(1 <= k_max <= 200, f"--k-max must be in [1, 200], got {k_max}")
    _require(1 <= n_max <= 5000, f"--n-max must be in [1, 5000], got {n_max}")
    div_ok = all(fib(k) * higher_order_fib(k, n) == fib(k * n)
                 for k in range(1, k_max + 1) for n in range(n_max + 1))
    sup_ok = all(equi_superposition(EquiSpec(k, a), n) == fib(k * n + a)
                 for k in range(1, k_max + 1) for a in range(k) for n in range(n_max + 1))
    rng = random.Random(seed)
    gfp_ok = True
    for _ in range(50):
        spec = GenSpec(rng.randint(-50, 50), rng.randint(-50, 50),
                       rng.randint(-9, 9), rng.randint(-9, 9))
        n = rng.randint(0, n_max)
        gfp_ok &= gen_fib(spec, n) == gen_fib_poly_superposition(spec, n)
    return [
        _claim("higher_order_divisibility", "F_k divides F_nk", div_ok),
        _claim("equi_superposition", "equi-Fibonacci as higher-order superposition", sup_ok),
        _claim("gen_fib_poly_superposition", "G_n = G_1 F_n + q G_0 F_(n-1)", gfp_ok),
    ]


def suite_dual(count: int = 100, k_max: int = 10, seed: int = 0) -> list[Claim]:
    _require(1 <= count <= 10_000, f"--count must be in [1, 10000], got {count}")
    _require(0 <= k_max <= 50, f"--k-max must be in [0, 50], got {k_max}")
    rng = random.Random(seed)
    worst = EXT.mpf(0)
    ok = True
    inv_ok = True
    for _ in range(count):
        k = rng.randint(0, k_max)
        cv = CoefficientVector(rng.randint(-1000, 1000) for _ in range(k + 1))
        res = verify_dual_identity(cv)
        ok &= res.ok
        worst = max(worst, res.max_residual)
        inv_ok &= dual(dual(cv)) == cv
    return [
        _claim("dual_identity", "P(phi) = phi^k D(-phi') and the dual Binet form", ok, worst),
        _claim("dual_involution", "coefficient reversal is an involution", inv_ok),
    ]


def suite_areas(n_max: int = 50, panels: int = curve.DEFAULT_PANELS,
                quad_n_max: int = 20) -> list[Claim]:
    _require(3 <= n_max <= 2000, f"--n-max must be in [3, 2000], got {n_max}")
    _require(panels >= 4 and panels % 2 == 0, f"--panels must be even and >= 4, got {panels}")
    claims = []

    g = curve._G
    worst = EXT.mpf(0)
    for n in range(0, 21):
        lhs = EXT.mpf(fib(2 * n)) - EXT.mpf(fib(2 * n + 1)) / g.phi
        rhs = g.phi_prime ** (2 * n + 1)
        worst = max(worst, abs(lhs - rhs) / abs(rhs))
    claims.append(_claim("odd_power_identity", "F_2n - F_(2n+1)/phi = phi'^(2n+1)",
                         worst < ODD_POWER_REL_TOL, worst))

    worst = EXT.mpf(0)
    for n in range(0, min(quad_n_max, n_max) + 1):
        worst = max(worst, curve.area_segment(n, panels).abs_diff)
    claims.append(_claim("area_closed_vs_quadrature", "closed-form segment area vs Green integral",
                         worst < AREA_QUAD_TOL, worst))

    dev = abs(abs(curve.area_segment_closed(20)) - curve.area_limit())
    claims.append(_claim("area_limit", "|A_n,n+1| -> 2 ln(phi) / (5 pi)", dev < AREA_LIMIT_TOL, dev))
    dev = abs(curve.phi_from_area_limit() - g.phi)
    claims.append(_claim("phi_from_area_limit", "phi = exp(5 pi A_inf / 2)",
                         dev < PHI_IDENTITY_TOL, dev))

    rep = curve.check_sign_theorems(n_max)
    claims.append(_claim("theorem2_sign_alternation", "A_n,n+1 < 0 for even n, > 0 for odd n",
                         not rep.alternation_violations, len(rep.alternation_violations)))
    claims.append(_claim("theorem3_pair_sum", "A_n,n+1 + A_n+1,n+2 < 0",
                         not rep.pair_sum_violations, len(rep.pair_sum_violations)))
    a1 = rep.areas[1]
    claims.append(Claim("sign_n1_outside_range", "n = 1 lies below the stated range", "info",
                        float(a1)))
    return claims


def suite_lambda(n_max: int = 30) -> list[Claim]:
    _require(1 <= n_max <= 2000, f"--n-max must be in [1, 2000], got {n_max}")
    ratios = [curve.lambda_ratio(n) for n in range(1, n_max + 1)]
    worst = max(r.rel_diff for r in ratios)
    parity_ok = all((r.direct > 1) if r.n % 2 == 0 else (r.direct < 1)
                    for r in ratios if r.n >= 2)
    probe = max(n_max, 30)
    dev = abs(curve.lambda_ratio(probe).direct - 1)
    return [
        _claim("lambda_closed_form", "area ratio closed form", worst < LAMBDA_REL_TOL, worst),
        _claim("lambda_parity", "lambda_2k > 1, lambda_2k+1 < 1", parity_ok),
        _claim("lambda_limit", "lambda_n -> 1", dev < LAMBDA_LIMIT_TOL, dev),
    ]


SUITES = {
    "theorem1": suite_theorem1,
    "areas": suite_areas,
    "lambda": suite_lambda,
    "dual": suite_dual,
    "superposition": suite_superposition,
}


def run_suite(name: str, **bounds) -> SuiteReport:
    """Run one suite (or ``"all"``), passing only the bounds it accepts."""
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise PreconditionError(f"unknown suite {name!r}")
    report = SuiteReport(suite=name)
    for n in names:
        fn = SUITES[n]
        accepted = inspect.signature(fn).parameters
        kwargs = {k: v for k, v in bounds.items() if k in accepted and v is not None}
        report.claims.extend(fn(**kwargs))
    return report
