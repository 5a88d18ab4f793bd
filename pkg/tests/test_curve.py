import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from binetfib import DegenerateVelocity, PreconditionError, RangeExceeded, fib
from binetfib import curve
from binetfib.precision import EXT

PHI = (1 + EXT.sqrt(5)) / 2

# Independent mpmath quadrature / differentiation at 50 digits, frozen here.
AREAS = {
    0: EXT.mpf("-0.2630116177910540576940526"),
    1: EXT.mpf("-0.01578872780043855144554639"),
    2: EXT.mpf("-0.09070352814029471875826228"),
    3: EXT.mpf("0.05002710590958751728643524"),
    10: EXT.mpf("-0.061283129045053804003001"),
}
KAPPA = {
    Fraction(0): EXT.mpf("2.137992506788407020085695"),
    Fraction(1, 2): EXT.mpf("1.803084296624979690911409"),
    Fraction(-3): EXT.mpf("0.5217212984158195916705541"),
    Fraction(30): EXT.mpf("6.800364885293226392895376e-18"),
    Fraction(-40): EXT.mpf("9.659250775983042609299459e-9"),
}


@pytest.mark.parametrize("n", range(-8, 15))
def test_integer_points_are_fibonacci(n):
    pt = curve.curve_point(n)
    assert pt.y == 0
    assert abs(pt.x - fib(n)) < 1e-30 * max(1, abs(fib(n)))


def test_half_point():
    pt = curve.curve_point(Fraction(1, 2))
    assert abs(pt.x - EXT.mpf("0.5688644810057831072783079")) < 1e-24
    assert abs(pt.y + EXT.mpf("0.3515775842541429284870573")) < 1e-24


def test_range_and_grid_errors():
    with pytest.raises(RangeExceeded):
        curve.curve_point(301)
    with pytest.raises(PreconditionError):
        curve.grid(1, 0, 10)
    with pytest.raises(PreconditionError):
        curve.grid(0, 1, 1)
    with pytest.raises(PreconditionError):
        curve.simpson(curve.green_integrand, 0, 1, 7)


def test_grid_is_exact():
    ts = curve.grid(-1, 1, 5)
    assert ts == [Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1, 2), Fraction(1)]


@pytest.mark.parametrize("n", sorted(AREAS))
def test_area_closed_form_matches_frozen_oracle(n):
    assert abs(curve.area_segment_closed(n) - AREAS[n]) < 1e-22


def test_stepped_grid_matches_direct_simpson():
    stepped = curve.area_segment_quadrature(4, 200)
    direct = curve.simpson(curve.green_integrand, 4, 5, 200)
    assert abs(stepped - direct) < 1e-35


def test_quadrature_converges():
    errs = [curve.area_segment(2, panels).abs_diff for panels in (50, 100, 200)]
    # fourth order: halving h cuts the error by ~16
    assert 12 < errs[0] / errs[1] < 20 and 12 < errs[1] / errs[2] < 20


def test_area_limit_and_phi():
    assert abs(curve.area_limit() - EXT.mpf("0.06126979250600662442313514")) < 1e-24
    assert abs(curve.phi_from_area_limit() - PHI) < 1e-30


def test_large_index_area_uses_enough_digits():
    # the bracket cancels ~0.42 digits per index; the limit still shows
    assert abs(abs(curve.area_segment_closed(400)) - curve.area_limit()) < 1e-30


def test_sign_theorems():
    rep = curve.check_sign_theorems(50)
    assert rep.ok
    assert rep.areas[1] < 0  # outside the stated range, recorded as a note
    assert any("n=1" in note for note in rep.notes)


def test_lambda_ratio():
    for n in range(1, 31):
        r = curve.lambda_ratio(n)
        assert r.rel_diff < 1e-10
        if n >= 2:
            assert (r.direct > 1) == (n % 2 == 0)
    assert abs(curve.lambda_ratio(2).direct - EXT.mpf("5.7448")) < 1e-3


@pytest.mark.parametrize("t", sorted(KAPPA))
def test_curvature_frozen(t):
    assert abs(curve.curvature(t).kappa - KAPPA[t]) < 1e-20 * abs(KAPPA[t])


def fd_curvature(t, h=None):
    h = EXT.mpf("1e-9") if h is None else h
    pts = [curve.curve_point(EXT.mpf(t) + i * h) for i in (-2, -1, 0, 1, 2)]
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    dx = (xs[0] - 8 * xs[1] + 8 * xs[3] - xs[4]) / (12 * h)
    dy = (ys[0] - 8 * ys[1] + 8 * ys[3] - ys[4]) / (12 * h)
    ddx = (xs[1] - 2 * xs[2] + xs[3]) / h ** 2
    ddy = (ys[1] - 2 * ys[2] + ys[3]) / h ** 2
    return (dx * ddy - dy * ddx) / (dx * dx + dy * dy) ** EXT.mpf(1.5)


@given(st.floats(-20, 20, allow_nan=False))
def test_curvature_against_finite_differences(t):
    k = curve.curvature(t).kappa
    if abs(k) < 1e-8:
        return
    assert abs(fd_curvature(t) - k) < 1e-6 * abs(k)


@given(st.floats(-30, 30, allow_nan=False))
def test_expanded_curvature_formula_agrees(t):
    (_, k, kp, rel), = curve.curvature_formula_residuals([t])
    assert rel < 1e-25


def test_curvature_ratios():
    fwd = curve.curvature_ratio_report("+inf", 1, 30)
    assert fwd.forward_error < 1e-3
    assert fwd.forward_ratio == fwd.outward_ratio
    back = curve.curvature_ratio_report("-inf", 1, -40)
    assert abs(back.outward_ratio - 1 / PHI) < 1e-30
    assert abs(back.forward_ratio - PHI) < 1e-30
    with pytest.raises(PreconditionError):
        curve.curvature_ratio_report("up", 1, 0)


def test_degenerate_velocity(monkeypatch):
    monkeypatch.setattr(curve, "MIN_SPEED", 1e300)
    with pytest.raises(DegenerateVelocity):
        curve.curvature(0)


def test_crossings_only_at_integers():
    found = curve.sign_change_scan(-10, 20, 100)
    assert found == [Fraction(n) for n in range(-10, 21)]
    assert curve.real_axis_crossings(Fraction(-7, 2), Fraction(5, 2)) == list(range(-3, 3))


def test_spiral():
    rep = curve.spiral_diagnostics(-40, step=5)
    errs = [e for _, _, e in rep.angles]
    assert errs[-1] < 1e-15
    assert abs(rep.angle_limit - EXT.atan2(EXT.pi, -EXT.log(PHI))) < 1e-35
    n, fwd, fwd_err, rev, rev_err = rep.ratios[0]
    assert n == -10 and fwd == EXT.mpf(-21) / -55
    assert rev_err < 1.1e-3
    assert rep.ratios[-1][4] < 1e-15
    with pytest.raises(PreconditionError):
        curve.spiral_diagnostics(-5)


def test_random_jets_consistent():
    rng = random.Random(3)
    for _ in range(20):
        t = rng.uniform(-15, 15)
        j = curve.jet(t)
        pt = curve.curve_point(t)
        assert abs(j.x - pt.x) < 1e-30 * max(1, abs(pt.x))
        assert abs(j.y - pt.y) < 1e-30 * max(1, abs(pt.x))


def test_spiral_angle_settles_and_curvature_vanishes():
    assert abs(curve.position_velocity_angle(-30) - curve.position_velocity_angle(-40)) < 1e-3
    assert curve.curvature(-40).kappa < 1e-6
