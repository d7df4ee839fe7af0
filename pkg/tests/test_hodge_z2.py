from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from admcovers.hodge_z2 import (
    Codim2ClassZ2,
    DivisorClassZ2,
    alpha_z2_lambda1,
    alpha_z2_lambda2,
    alpha_z2_lambda2_closed,
    alpha_z2_lambda2_composed,
    check_forms,
    enumerate_codim2_classes,
    lambda1_expression_z2,
    lambda2_expression,
)


@pytest.mark.parametrize("i, N, value", [(2, 6, Fraction(1, 5)), (3, 6, Fraction(1, 10)), (5, 6, 0), (2, 4, Fraction(1, 6))])
def test_lambda1_values(i, N, value):
    assert alpha_z2_lambda1(i, N) == value


@given(st.integers(2, 40).map(lambda k: 2 * k), st.data())
def test_lambda1_symmetric(N, data):
    i = data.draw(st.integers(0, N))
    assert alpha_z2_lambda1(i, N) == alpha_z2_lambda1(N - i, N)


def test_lambda1_expression():
    assert {d.i: a for d, a in lambda1_expression_z2(6).items()} == {2: Fraction(1, 5), 3: Fraction(1, 10)}
    assert DivisorClassZ2(4, 6) == DivisorClassZ2(2, 6)
    with pytest.raises(ValueError):
        lambda1_expression_z2(5)
    with pytest.raises(ValueError):
        DivisorClassZ2(1, 6)


def test_codim2_class_validation():
    assert Codim2ClassZ2(3, 1, 2).triple == (2, 1, 3)
    for bad in [(1, 2, 3), (2, 0, 2), (2, 1, 2)]:
        with pytest.raises(ValueError):
            Codim2ClassZ2(*bad)


@pytest.mark.parametrize(
    "triple, value",
    [((2, 2, 2), Fraction(2, 15)), ((3, 2, 3), Fraction(2, 35)), ((3, 1, 2), Fraction(1, 30)), ((2, 1, 3), Fraction(1, 30))],
)
def test_composed_values(triple, value):
    assert alpha_z2_lambda2_composed(triple) == value
    assert alpha_z2_lambda2_composed(Codim2ClassZ2(*triple)) == value


def test_composed_hand_check():
    a = alpha_z2_lambda1
    assert alpha_z2_lambda2_composed((2, 2, 2)) == 2 * (Fraction(1, 5) * Fraction(1, 6) * 2)
    assert alpha_z2_lambda2_composed((3, 1, 2)) == 2 * (a(3, 6) * a(2, 4) + a(2, 6) * a(1, 4))


def test_closed_values():
    assert alpha_z2_lambda2_closed((2, 2, 2)) == Fraction(4, 45)
    assert alpha_z2_lambda2_closed((2, 2, 2), corrected=True) == Fraction(2, 15)
    for corrected in (False, True):
        assert alpha_z2_lambda2_closed((3, 2, 3), corrected) == Fraction(2, 35)
        assert alpha_z2_lambda2_closed((3, 1, 2), corrected) == Fraction(1, 30)


def test_form_dispatch():
    assert alpha_z2_lambda2((2, 2, 2), "closed-printed") == Fraction(4, 45)
    assert alpha_z2_lambda2((2, 2, 2), "closed-corrected") == Fraction(2, 15)
    with pytest.raises(ValueError):
        alpha_z2_lambda2((2, 2, 2), "other")


def test_enumeration():
    assert [c.triple for c in enumerate_codim2_classes(6)] == [(2, 1, 3), (2, 2, 2)]
    for N in range(6, 21, 2):
        brute = {
            min((a, b, c), (c, b, a))
            for a in range(2, N) for b in range(1, N) for c in range(2, N) if a + b + c == N
        }
        assert {c.triple for c in enumerate_codim2_classes(N)} == brute


def test_lambda2_expression():
    e6 = lambda2_expression(6)
    assert {c.triple: a for c, a in e6.coefficients.items()} == {(2, 2, 2): Fraction(2, 15), (2, 1, 3): Fraction(1, 30)}
    assert e6.normalizations == (1, 2)
    assert (3, 2, 3) not in {c.triple for c in e6.coefficients}
    assert lambda2_expression(8).coefficients[Codim2ClassZ2(3, 2, 3)] == Fraction(2, 35)
    with pytest.raises(ValueError):
        lambda2_expression(4)


def test_check_forms():
    rows = check_forms(6)
    assert (Codim2ClassZ2(2, 2, 2), Fraction(2, 15), Fraction(4, 45)) in rows
    assert check_forms(8, corrected=True) == []
    assert all(c.all_even for c, _, _ in check_forms(8))


@pytest.mark.parametrize("N", range(6, 31, 2))
def test_composed_mirror_symmetric(N):
    for c in enumerate_codim2_classes(N):
        i1, i2, i3 = c.triple
        assert alpha_z2_lambda2_composed((i1, i2, i3)) == alpha_z2_lambda2_composed((i3, i2, i1))


def test_coefficients_positive():
    # every printed factor is nonzero in the stability range, so no coefficient vanishes
    for N in range(6, 31, 2):
        for c in enumerate_codim2_classes(N):
            assert alpha_z2_lambda2_composed(c) > 0


# symbolic oracle: expand the composed form with parity-resolved lambda_1
# coefficients and compare with the closed forms as polynomials
x1, x2, x3 = sympy.symbols("i1 i2 i3", positive=True)


def _even(i, N):
    return i * (N - i) / (8 * (N - 1))


def _odd(i, N):
    return (i - 1) * (N - i - 1) / (8 * (N - 1))


def _closed(p1, p2, p3, corrected):
    # closed forms transcribed from the published statement
    N = x1 + x2 + x3
    if (p1, p2, p3) == (0, 0, 0):
        inner = 2 * x1 * x2 + 2 * x1 * x3 + 2 * x2 * x3 - x1 - 2 * x2 - x3 + (2 * x2**2 if corrected else 0)
        return x1 * x2 * x3 * inner / (32 * (N - 1) * (x1 + x2 - 1) * (x2 + x3 - 1))
    if (p1, p2, p3) == (1, 0, 1):
        return (x1 - 1) * x2 * (x3 - 1) * ((x2 + x3 - 1) * (x1 + x2) + (x1 + x2 - 1) * (x2 + x3)) / (
            32 * (N - 1) * (x1 + x2) * (x2 + x3)
        )
    return (
        (x1 - 1) * (x2 + x3 - 1) * (x2 + 1) * x3 * (x1 + x2 - 1) + x3 * (x1 + x2) * (x2 - 1) * (x1 - 1) * (x2 + x3)
    ) / (32 * (N - 1) * (x2 + x3) * (x1 + x2 - 1))


def _composed_symbolic(p1, p2, p3):
    N = x1 + x2 + x3
    if (p1, p2, p3) == (0, 0, 0):
        return 2 * (_even(x1, N) * _even(x2, x2 + x3) + _even(x3, N) * _even(x2, x1 + x2))
    if (p1, p2, p3) == (1, 0, 1):
        return 2 * (_odd(x1, N) * _odd(x2 + 1, x2 + x3 + 1) + _odd(x3, N) * _odd(x2 + 1, x1 + x2 + 1))
    return 2 * (_odd(x1, N) * _even(x2 + 1, x2 + x3 + 1) + _even(x3, N) * _odd(x2, x1 + x2))


@pytest.mark.parametrize("parity", [(0, 0, 0), (1, 0, 1), (1, 1, 0)])
def test_corrected_closed_is_composed_identically(parity):
    assert sympy.simplify(_closed(*parity, corrected=True) - _composed_symbolic(*parity)) == 0


def test_printed_case1_differs_by_the_missing_square():
    diff = sympy.factor(_composed_symbolic(0, 0, 0) - _closed(0, 0, 0, corrected=False))
    expected = x1 * x2**3 * x3 / (16 * (x1 + x2 + x3 - 1) * (x1 + x2 - 1) * (x2 + x3 - 1))
    assert sympy.simplify(diff - expected) == 0
