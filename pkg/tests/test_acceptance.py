"""One test per acceptance criterion, each with its time budget.

Every test prints a PASS/FAIL line (also collected into the terminal summary)
before asserting, so a failing criterion still reports its measured value.
"""

import random
import time

from binetfib import (CoefficientVector, EquiSpec, GenSpec, equi_step, fib, fib_poly_symbolic,
                      gen_fib, higher_order_fib, lucas, verify_dual_identity)
from binetfib import curve
from binetfib.asymptotics import (ratio_limit_combo, ratio_limit_fib, ratio_limit_generalized,
                                  ratio_limit_poly)
from binetfib.polynomials import P, Q, BivarPoly, fib_poly_symbolic_list
from binetfib.precision import EXT
from binetfib.subsequences import equi_terms

from conftest import ACCEPTANCE_LINES
from test_curve import fd_curvature

PHI = (1 + EXT.sqrt(5)) / 2


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def verdict(cid, ok, detail, timer, budget):
    in_time = timer.elapsed < budget
    passed = bool(ok) and in_time
    line = (f"[{'PASS' if passed else 'FAIL'}] criterion {cid}: {detail} "
            f"({timer.elapsed:.2f}s / {budget}s)")
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line
    assert in_time, line


def test_01_exact_values():
    with Timer() as t:
        fibs = [fib(n) for n in range(17)]
        gen = [gen_fib(GenSpec(0, 4), n) for n in range(1, 8)]
        equi = [equi_terms(EquiSpec(3, a), 0, 3) for a in range(3)]
        ok = (fib(20) == 6765
              and fibs == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610, 987]
              and gen == [4, 4, 8, 12, 20, 32, 52]
              and equi == [[0, 2, 8, 34], [1, 3, 13, 55], [1, 5, 21, 89]])
    verdict(1, ok, f"fib(20)={fib(20)}, stride-3 lists {equi}", t, 1)


def test_02_negative_index():
    with Timer() as t:
        bad = [n for n in range(1, 201) if fib(-n) != (-1) ** (n + 1) * fib(n)]
    verdict(2, not bad, f"F_-n = (-1)^(n+1) F_n for n in [1,200], {len(bad)} violations", t, 1)


def test_03_lucas_recursion():
    with Timer() as t:
        bad = 0
        for k in range(1, 21):
            for alpha in range(k):
                spec = EquiSpec(k, alpha)
                terms = equi_terms(spec, 0, 201)
                bad += sum(terms[n + 1] != equi_step(spec, terms[n], terms[n - 1])
                           for n in range(1, 201))
        coeffs = (lucas(2), EquiSpec(2).sign, lucas(3), EquiSpec(3).sign)
    verdict(3, bad == 0 and coeffs == (3, -1, 4, 1),
            f"{bad} recursion violations; (L_2, s_2, L_3, s_3) = {coeffs}", t, 5)


def test_04_divisibility():
    with Timer() as t:
        bad = [(k, n) for k in range(1, 21) for n in range(101)
               if fib(n * k) % fib(k) or higher_order_fib(k, n) * fib(k) != fib(n * k)]
    verdict(4, not bad, f"F_k | F_nk for k<=20, n<=100, {len(bad)} violations", t, 5)


def test_05_symbolic_polynomial():
    with Timer() as t:
        f7 = fib_poly_symbolic(7)
        p2 = P * P
        expected = p2 * p2 * p2 + 5 * p2 * p2 * Q + 6 * p2 * Q * Q + Q * Q * Q
        seq = fib_poly_symbolic_list(100)
        rec_ok = all(seq[n + 1] == P * seq[n] + Q * seq[n - 1] for n in range(1, 100))
        ok = f7 == expected and rec_ok and seq[0] == BivarPoly()
    verdict(5, ok, f"F_7 = {f7}, recursion to n=100 {'holds' if rec_ok else 'fails'}", t, 10)


def test_06_dual_identity():
    rng = random.Random(2024)
    with Timer() as t:
        worst = 0
        for _ in range(100):
            k = rng.randint(0, 10)
            res = verify_dual_identity(CoefficientVector(rng.randint(-1000, 1000)
                                                         for _ in range(k + 1)))
            worst = max(worst, res.max_residual)
    verdict(6, worst < 1e-12, f"max dual residual {float(worst):.3e}", t, 5)


def test_07_area_quadrature():
    with Timer() as t:
        worst = max(curve.area_segment(n, 10_000).abs_diff for n in range(21))
    verdict(7, worst < 1e-8, f"max |closed - Simpson| over n in [0,20] = {float(worst):.3e}", t, 30)


def test_08_area_limit():
    with Timer() as t:
        limit = 2 * EXT.log(PHI) / (5 * EXT.pi)
        dev = abs(abs(curve.area_segment_closed(20)) - limit)
        phi_dev = abs(EXT.exp(5 * EXT.pi * curve.area_limit() / 2) - PHI)
    verdict(8, dev < 1e-8 and phi_dev < 1e-14,
            f"||A_20| - A_inf| = {float(dev):.3e}, |exp(5 pi A_inf / 2) - phi| = {float(phi_dev):.1e}",
            t, 1)


def test_09_sign_theorems():
    with Timer() as t:
        a = {n: curve.area_segment_closed(n) for n in range(1, 52)}
        # alternation is stated for n = 2k, 2k+1 with k >= 1
        alt_bad = [n for n in range(2, 51) if (a[n] > 0) != (n % 2 == 1)]
        pair_bad = [n for n in range(2, 51) if not a[n] + a[n + 1] < 0]
    verdict(9, not alt_bad and not pair_bad,
            f"alternation violations {alt_bad}, pair-sum violations {pair_bad} "
            f"(n=1 outside stated range: A_1,2 = {float(a[1]):.5f})", t, 5)


def test_10_lambda():
    with Timer() as t:
        ratios = [curve.lambda_ratio(n) for n in range(1, 31)]
        worst = max(r.rel_diff for r in ratios)
        parity = all((r.direct > 1) == (r.n % 2 == 0) for r in ratios if r.n >= 2)
        dev = abs(ratios[-1].direct - 1)
    verdict(10, worst < 1e-10 and parity and dev < 1e-6,
            f"max rel diff {float(worst):.1e}, parity {'ok' if parity else 'broken'}, "
            f"|lambda_30 - 1| = {float(dev):.1e}", t, 5)


def test_11a_curvature_finite_differences():
    rng = random.Random(11)
    with Timer() as t:
        worst, used = 0, 0
        while used < 100:
            s = rng.uniform(-20, 20)
            k = curve.curvature(s).kappa
            if abs(k) < 1e-8:
                continue
            used += 1
            worst = max(worst, abs(fd_curvature(s) - k) / abs(k))
    verdict("11a", worst < 1e-6, f"analytic vs finite differences at 100 t, max rel {float(worst):.1e}",
            t, 30)


def test_11b_curvature_ratio_forward():
    with Timer() as t:
        ratio = curve.curvature(31).kappa / curve.curvature(30).kappa
        err = abs(ratio + 1 / PHI ** 3)
    verdict("11b", err < 1e-3, f"kappa(31)/kappa(30) = {float(ratio):.12f}, error {float(err):.1e}",
            t, 30)


def test_11c_curvature_ratio_spiral():
    # Stated as |kappa(t+1)/kappa(t) - 1/phi| < 1e-3 at t = -40.
    with Timer() as t:
        ratio = curve.curvature(-39).kappa / curve.curvature(-40).kappa
        err = abs(ratio - 1 / PHI)
        outward = curve.curvature(-41).kappa / curve.curvature(-40).kappa
    verdict("11c", err < 1e-3,
            f"kappa(-39)/kappa(-40) = {float(ratio):.12f}, error vs 1/phi {float(err):.3f} "
            f"(kappa(-41)/kappa(-40) = {float(outward):.12f})", t, 30)


def test_12_ratio_limits():
    with Timer() as t:
        f = abs(EXT.mpf(fib(41)) / fib(40) - PHI)
        gen = ratio_limit_generalized(GenSpec(0, 4), 60).final_error
        gen2 = ratio_limit_generalized(GenSpec(7, -3), 60).final_error
        combo = ratio_limit_combo([2, 3, -1], 60).final_error
        poly = ratio_limit_poly(4, 1, 40)
        poly_dev = abs(poly.limit_claim - (2 + EXT.sqrt(5)))
        base = ratio_limit_fib(40).final_error
        ok = (f < 1e-12 and base < 1e-12 and gen < 1e-10 and gen2 < 1e-10
              and combo < 1e-10 and poly.final_error < 1e-10 and poly_dev < 1e-30)
    verdict(12, ok, f"|F_41/F_40 - phi| = {float(f):.1e}; generalized {float(gen):.1e}, "
            f"combination {float(combo):.1e}, (4,1) poly vs 2+sqrt5 {float(poly.final_error):.1e}",
            t, 5)


def test_13_axis_crossings():
    with Timer() as t:
        found = curve.sign_change_scan(-10, 20, 100)
        extra = [s for s in found if s.denominator != 1]
        missing = sorted(set(range(-10, 21)) - {int(s) for s in found if s.denominator == 1})
    verdict(13, not extra and not missing,
            f"{len(found)} crossings, non-integer {extra}, missing integers {missing}", t, 5)

