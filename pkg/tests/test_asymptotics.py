import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from binetfib import (DegenerateCombination, DegenerateRoots, DegenerateSequence, GenSpec,
                      PreconditionError)
from binetfib.asymptotics import (ratio_limit_combo, ratio_limit_fib, ratio_limit_generalized,
                                  ratio_limit_poly)

PHI = (1 + math.sqrt(5)) / 2


def test_fibonacci_ratio():
    rep = ratio_limit_fib(40)
    n, r = rep.terms[-1]
    assert n == 40
    assert abs(r - PHI) < 1e-12
    assert rep.final_error < 1e-12
    # error shrinks by 1/phi^2 per step
    assert abs(rep.geometric_rate_estimate - rep.expected_rate) < 1e-3


@given(st.integers(-100, 100), st.integers(-100, 100))
def test_generalized_ratio(g0, g1):
    if g0 == g1 == 0 or g1 - (1 - math.sqrt(5)) / 2 * g0 == 0:
        return
    rep = ratio_limit_generalized(GenSpec(g0, g1), 80)
    assert rep.final_error < 1e-10


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=6))
def test_combination_ratio(alphas):
    if all(a == 0 for a in alphas):
        return
    try:
        rep = ratio_limit_combo(alphas, 80)
    except DegenerateCombination:
        return
    assert rep.final_error < 1e-10


def test_combination_degenerate():
    with pytest.raises(DegenerateCombination):
        ratio_limit_combo([-1, -1, 1], 20)  # x^2 - x - 1


def test_polynomial_ratio():
    rep = ratio_limit_poly(4, 1, 40)
    assert abs(rep.limit_claim - (2 + math.sqrt(5))) < 1e-14
    assert rep.final_error < 1e-12
    assert abs(ratio_limit_poly(2.5, 0.75, 60).final_error) < 1e-12


def test_ratio_errors():
    with pytest.raises(DegenerateSequence):
        ratio_limit_generalized(GenSpec(0, 0), 10)
    with pytest.raises(DegenerateRoots):
        ratio_limit_poly(2, -1, 10)
    with pytest.raises(DegenerateRoots):
        ratio_limit_poly(-3, 1, 10)
    with pytest.raises(PreconditionError):
        ratio_limit_fib(2)
    with pytest.raises(PreconditionError):
        ratio_limit_generalized(GenSpec(0, 1, 2, 1), 10)
