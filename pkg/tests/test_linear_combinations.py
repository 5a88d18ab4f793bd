import pytest
from hypothesis import given
from hypothesis import strategies as st

from binetfib import (CoefficientVector, PreconditionError, combo_binet, combo_term,
                      dual, fib, verify_dual_identity)

coeff_lists = st.lists(st.integers(-1000, 1000), min_size=1, max_size=11)


def test_examples():
    # 2 F_n + 3 F_{n+1} - F_{n+2}
    cv = CoefficientVector([2, 3, -1])
    assert [combo_term(cv, n) for n in range(5)] == [
        2 * fib(n) + 3 * fib(n + 1) - fib(n + 2) for n in range(5)]
    assert dual(cv).alphas == (-1, 3, 2)
    assert dual([1, 0, 0]).alphas == (0, 0, 1)


def test_rejects_bad_vectors():
    with pytest.raises(PreconditionError):
        CoefficientVector([])
    with pytest.raises(PreconditionError):
        CoefficientVector([1, 2.5])


@given(coeff_lists, st.integers(0, 60))
def test_combination_obeys_fibonacci_recursion(alphas, n):
    assert combo_term(alphas, n + 2) == combo_term(alphas, n + 1) + combo_term(alphas, n)


@given(coeff_lists)
def test_dual_is_involution(alphas):
    cv = CoefficientVector(alphas)
    assert dual(dual(cv)) == cv
    assert dual(cv).degree == cv.degree


@given(coeff_lists)
def test_dual_identity_residuals(alphas):
    res = verify_dual_identity(alphas)
    assert res.ok
    assert res.max_residual < 1e-12


@given(coeff_lists, st.integers(0, 40))
def test_binet_form(alphas, n):
    exact = combo_term(alphas, n)
    assert abs(combo_binet(alphas, n, "extended") - exact) < 1e-25 * max(1, abs(exact))
    assert abs(combo_binet(alphas, n) - exact) <= 1e-9 * max(1, abs(exact)) + 1e-6
