"""Gegenbauer/Chebyshev/Legendre constructions and the identity catalog."""
from fractions import Fraction
from math import factorial

import pytest

from critpoly.errors import InvalidLambda
from critpoly.orthopoly import (chebyshev, chebyshev_limit_from_lambda,
                                gegenbauer, identity_suite, legendre,
                                triangle_row_polynomial_b)
from critpoly.poly import Poly, pochhammer


@pytest.mark.parametrize("lam", [Fraction(1, 2), Fraction(1), Fraction(3, 2),
                                 Fraction(7, 3)])
def test_value_at_one(lam):
    # C_n^lam(1) = (2 lam)_n / n!
    for n in range(31):
        want = pochhammer(2 * lam, n) / factorial(n)
        assert gegenbauer(n, lam)(Fraction(1)) == want


def test_u_is_lambda_one():
    for n in range(25):
        assert gegenbauer(n, 1) == chebyshev("U", n)


def test_legendre_is_lambda_half():
    for n in range(20):
        assert gegenbauer(n, Fraction(1, 2)) == legendre(n)


@pytest.mark.parametrize("lam", [Fraction(1, 2), Fraction(2)])
def test_parity(lam):
    minus_x = Poly("x", [Fraction(0), Fraction(-1)])
    for n in range(12):
        c = gegenbauer(n, lam)
        reflected = c(minus_x)
        if not isinstance(reflected, Poly):
            reflected = Poly.constant("x", reflected)
        assert reflected == (c if n % 2 == 0 else -c)


def test_invalid_lambda_rejected():
    with pytest.raises(InvalidLambda):
        gegenbauer(3, 0)
    with pytest.raises(InvalidLambda):
        gegenbauer(3, Fraction(-3, 4))


def test_chebyshev_t_values():
    assert chebyshev("T", 3) == Poly("x", [Fraction(0), Fraction(-3),
                                           Fraction(0), Fraction(4)])
    assert chebyshev("U", -1).is_zero
    assert chebyshev("U", -3) == -chebyshev("U", 1)


def test_t_as_lambda_derivative_limit():
    for n in range(1, 12):
        assert chebyshev_limit_from_lambda(n) == chebyshev("T", n)


def test_b_row_polynomial_anchor():
    assert triangle_row_polynomial_b(2) == Poly("x", [Fraction(5), Fraction(5),
                                                      Fraction(1)])


def test_identity_suite_runs_clean():
    report = identity_suite(6)
    assert all(v > 0 for v in report.values())
    assert set(report) == {
        "composition_product", "product_linearization", "power_reduction",
        "legendre_convolution", "u_self_convolution", "parameter_addition",
        "lambda2_reduction", "b_row_substitution", "large_parameter_limit"}
