"""Certificates and exact cross-checks of the transform identities."""
from fractions import Fraction

import pytest

from critpoly.construct import p_beta, p_hyp, p_s21_chebyshev, p_s32
from critpoly.verify import (certify_critical_line, check_central_difference,
                             check_corollary2, check_difference_equation,
                             check_fq1, check_functional_equation,
                             check_gould_closures, check_gould_sum_forms,
                             check_integer_s_sums, check_M_recurrences,
                             check_q_range)

SAMPLES = [Fraction(1, 3), Fraction(7, 5), Fraction(5, 2), Fraction(11, 7),
           Fraction(9, 4)]
LAMBDAS = [Fraction(1), Fraction(1, 2), Fraction(7, 3)]


def test_certificate_structure():
    cert = certify_critical_line(p_s21_chebyshev(4))
    assert cert.passed
    assert cert.degree == 2
    assert cert.distinct_real_roots == 2
    assert cert.parity_paired
    assert cert.to_json()["pass"] is True


@pytest.mark.parametrize("lam", LAMBDAS)
def test_certificates_small_range(lam):
    for n in range(16):
        cert = certify_critical_line(p_s32(n, lam))
        assert cert.passed and cert.distinct_real_roots == n // 2


def test_certificates_beta_family():
    for n in range(16):
        for beta in (Fraction(0), Fraction(-2)):
            cert = certify_critical_line(p_beta(n, beta))
            assert cert.passed and cert.distinct_real_roots == n // 2


def test_functional_equation_and_fq1():
    for n in range(13):
        for lam in LAMBDAS:
            assert check_functional_equation(p_s32(n, lam).poly, n)
            if n >= 1:
                assert check_fq1(n, lam)


def test_difference_equations():
    for n in range(13):
        for lam in LAMBDAS:
            assert check_difference_equation(p_s32(n, lam).poly, n, lam)
            assert check_central_difference(p_hyp(n, lam).poly, n, lam)


def test_functional_equation_detects_breakage():
    # an added constant breaks the sign-flipped (odd floor(n/2)) reflection
    broken = p_s32(2, 1).poly + 1
    assert not check_functional_equation(broken, 2)


def test_M_recurrences():
    for n in range(9):
        for lam in LAMBDAS:
            rep = check_M_recurrences(n, lam, SAMPLES)
            for name, r in rep.items():
                assert r.get("pass", True), (n, lam, name, r)
                assert r.get("zero_polynomial", True), (n, lam, name)


def test_gould_sum_forms():
    for n in range(5):
        for lam in LAMBDAS:
            assert check_gould_sum_forms(n, lam, SAMPLES)["pass"]


def test_integer_s_sums():
    for n in range(4):
        for lam in LAMBDAS:
            assert check_integer_s_sums(n, lam, 6)["pass"]


def test_gould_closures():
    r = check_gould_closures(8, LAMBDAS + [Fraction(-1, 4)])
    assert r["pass"], r["failures"][:3]


def test_q_range_and_limit():
    grid = [Fraction(3, 2), Fraction(2), Fraction(10), Fraction(10 ** 6)]
    for n in range(1, 7):
        for lam in LAMBDAS:
            r = check_q_range(n, lam, grid)
            assert r["pass"], (n, lam, r)


def test_corollary2_numeric():
    for n in range(6):
        r = check_corollary2(n, [Fraction(3, 10), Fraction(5, 2)])
        assert r["pass"]
        assert r["worst_rel_err"] <= 1e-10
