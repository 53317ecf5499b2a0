"""Exact Gegenbauer, Chebyshev and Legendre polynomials, and the suite of
inter-family identities used to cross-validate them."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import InvalidLambda
from .poly import Poly, RatFun, gen_binom, pochhammer
from .rat import as_rat

X = Poly.var("x")


def _check_lambda(lam: Fraction):
    if lam <= Fraction(-1, 2) or lam == 0:
        raise InvalidLambda(f"need lambda > -1/2 and lambda != 0, got {lam}")


def gegenbauer(n: int, lam) -> Poly:
    """Gegenbauer polynomial of degree n, built from its binomial sum and
    cross-checked against the three-term recurrence."""
    lam = as_rat(lam)
    _check_lambda(lam)
    p = _gegenbauer_binomial(n, lam)
    q = _gegenbauer_recurrence(n, lam)
    if p != q:
        raise AssertionError(
            f"gegenbauer({n}, {lam}): binomial and recurrence forms differ")
    return p


def _gegenbauer_binomial(n: int, lam: Fraction) -> Poly:
    out = Poly.zero("x")
    for r in range(n // 2 + 1):
        c = (Fraction((-1) ** r) * comb(n - r, r)
             * gen_binom(n - r - 1 + lam, n - r) * Fraction(2) ** (n - 2 * r))
        out = out + c * X ** (n - 2 * r)
    return out


def _gegenbauer_recurrence(n: int, lam: Fraction) -> Poly:
    a = Poly.constant("x", Fraction(1))
    if n == 0:
        return a
    b = 2 * lam * X
    for m in range(2, n + 1):
        # m*C_m = 2(lam+m-1)*x*C_{m-1} - (2lam+m-2)*C_{m-2}
        a, b = b, (2 * (lam + m - 1) * X * b - (2 * lam + m - 2) * a) / m
    return b


def gegenbauer_lambda_poly(n: int) -> Poly:
    """Gegenbauer polynomial with the parameter kept symbolic: a Poly in x
    whose coefficients are exact polynomials in the parameter."""
    lam = Poly.var("lam")
    out = Poly.zero("x")
    for r in range(n // 2 + 1):
        c = (comb(n - r, r) * gen_binom(lam + (n - r - 1), n - r)
             * Fraction((-1) ** r) * Fraction(2) ** (n - 2 * r))
        term = Poly("x", [Poly.zero("lam")] * (n - 2 * r) + [_as_lam_poly(c)])
        out = out + term
    return out


def _as_lam_poly(c) -> Poly:
    return c if isinstance(c, Poly) else Poly.constant("lam", as_rat(c))


def chebyshev_limit_from_lambda(n: int) -> Poly:
    """T_n recovered as the first-order-in-the-parameter part of the
    symbolic Gegenbauer polynomial, normalized by the same operation on
    its value at x = 1."""
    if n == 0:
        return Poly.constant("x", Fraction(1))
    g = gegenbauer_lambda_poly(n)
    at_one = Poly.zero("lam")
    lin = []
    for c in g.coeffs:
        c = _as_lam_poly(c)
        if c.coeff(0) != 0:
            raise AssertionError(f"constant-in-lambda part nonzero at n={n}")
        lin.append(c.coeff(1))
        at_one = at_one + c
    if at_one.coeff(0) != 0:
        raise AssertionError("C_n at x=1 has nonzero constant-in-lambda part")
    return Poly("x", lin) / at_one.coeff(1)


@lru_cache(maxsize=None)
def chebyshev(kind: str, n: int) -> Poly:
    """Chebyshev polynomial T_n or U_n (kind 'T' or 'U')."""
    if kind not in ("T", "U"):
        raise ValueError("kind must be 'T' or 'U'")
    if n < 0:
        # U_{-n} = -U_{n-2}; in particular U_{-1} = 0
        if kind == "U":
            if n == -1:
                return Poly.zero("x")
            return -chebyshev("U", -n - 2)
        raise ValueError("negative index only defined for U")
    if n == 0:
        return Poly.constant("x", Fraction(1))
    if n == 1:
        return X if kind == "T" else 2 * X
    return 2 * X * chebyshev(kind, n - 1) - chebyshev(kind, n - 2)


@lru_cache(maxsize=None)
def legendre(n: int) -> Poly:
    if n == 0:
        return Poly.constant("x", Fraction(1))
    if n == 1:
        return X
    return ((2 * n - 1) * X * legendre(n - 1) - (n - 1) * legendre(n - 2)) / n


def triangle_row_polynomial_b(k: int) -> Poly:
    """B_k(x) = sum_j (2k+1)/(2j+1) C(k+j, 2j) x^j."""
    return Poly("x", [Fraction(2 * k + 1, 2 * j + 1) * comb(k + j, 2 * j)
                      for j in range(k + 1)])


# ---------------------------------------------------------------------------
# identity suite
# ---------------------------------------------------------------------------

def identity_suite(nmax: int, lambda_samples=None) -> dict:
    """Verify the inter-polynomial identity catalog exactly for all
    applicable indices <= nmax. Returns a report dict; raises AssertionError
    with the failing identity and indices on the first failure."""
    if nmax < 4:
        raise ValueError("nmax must be >= 4")
    if lambda_samples is None:
        lambda_samples = [Fraction(1, 2), Fraction(3, 2), Fraction(2)]
    report = {}

    # (i) composition-product: U_{mn-1}(x) = U_{m-1}(T_n(x)) U_{n-1}(x)
    checks = 0
    for m in range(1, nmax + 1):
        for n in range(1, nmax + 1):
            lhs = chebyshev("U", m * n - 1)
            rhs = chebyshev("U", m - 1)(chebyshev("T", n)) * chebyshev("U", n - 1)
            assert lhs == rhs, f"(i) composition-product failed at m={m}, n={n}"
            checks += 1
    report["composition_product"] = checks

    # (ii) 2 T_n U_{m-1} = U_{m+n-1} + U_{m-n-1}, with U_{-k} = -U_{k-2}
    checks = 0
    for m in range(1, nmax + 1):
        for n in range(0, nmax + 1):
            lhs = 2 * chebyshev("T", n) * chebyshev("U", m - 1)
            rhs = chebyshev("U", m + n - 1) + chebyshev("U", m - n - 1)
            assert lhs == rhs, f"(ii) product-linearization failed at m={m}, n={n}"
            checks += 1
    report["product_linearization"] = checks

    # (iii) x^m U_n = 2^-m sum_r C(m,r) U_{m+n-2r}
    checks = 0
    for m in range(0, nmax + 1):
        for n in range(0, nmax + 1):
            lhs = X ** m * chebyshev("U", n)
            rhs = Poly.zero("x")
            for r in range(m + 1):
                rhs = rhs + comb(m, r) * chebyshev("U", m + n - 2 * r)
            rhs = rhs / Fraction(2) ** m
            assert lhs == rhs, f"(iii) power reduction failed at m={m}, n={n}"
            checks += 1
    report["power_reduction"] = checks

    # (iv) U_m = sum_k P_k P_{m-k}
    checks = 0
    for m in range(0, nmax + 1):
        rhs = Poly.zero("x")
        for k in range(m + 1):
            rhs = rhs + legendre(k) * legendre(m - k)
        assert chebyshev("U", m) == rhs, f"(iv) Legendre convolution failed at m={m}"
        checks += 1
    report["legendre_convolution"] = checks

    # (v) 2(x^2-1) sum_k U_k U_{m-k} = (m+1) x U_{m+1} - (m+2) U_m
    checks = 0
    for m in range(0, nmax + 1):
        conv = Poly.zero("x")
        for k in range(m + 1):
            conv = conv + chebyshev("U", k) * chebyshev("U", m - k)
        lhs = 2 * (X * X - 1) * conv
        rhs = (m + 1) * X * chebyshev("U", m + 1) - (m + 2) * chebyshev("U", m)
        assert lhs == rhs, f"(v) U self-convolution failed at m={m}"
        checks += 1
    report["u_self_convolution"] = checks

    # (vi) C_m^{l1+l2} = sum_k C_k^{l1} C_{m-k}^{l2}
    checks = 0
    for l1 in lambda_samples:
        for l2 in lambda_samples:
            for m in range(0, nmax + 1):
                rhs = Poly.zero("x")
                for k in range(m + 1):
                    rhs = rhs + gegenbauer(k, l1) * gegenbauer(m - k, l2)
                assert gegenbauer(m, l1 + l2) == rhs, \
                    f"(vi) parameter addition failed at m={m}, {l1}+{l2}"
                checks += 1
    report["parameter_addition"] = checks

    # (vii) 2(x^2-1) C_n^2 = (n+1) x U_{n+1} - (n+2) U_n
    checks = 0
    for n in range(0, nmax + 1):
        lhs = 2 * (X * X - 1) * gegenbauer(n, Fraction(2))
        rhs = (n + 1) * X * chebyshev("U", n + 1) - (n + 2) * chebyshev("U", n)
        assert lhs == rhs, f"(vii) lambda=2 reduction failed at n={n}"
        checks += 1
    report["lambda2_reduction"] = checks

    # (viii) B_k(x) = U_{2k}(sqrt(x+4)/2): U_{2k} is even, so substitute
    # its squared argument u = (x+4)/4
    checks = 0
    for k in range(0, nmax + 1):
        u2k = chebyshev("U", 2 * k)
        assert all(u2k.coeff(j) == 0 for j in range(1, u2k.degree + 1, 2))
        even = Poly("x", [u2k.coeff(2 * j) for j in range(k + 1)])
        rhs = even(Poly("x", [Fraction(1), Fraction(1, 4)]))
        if not isinstance(rhs, Poly):
            rhs = Poly.constant("x", rhs)
        assert triangle_row_polynomial_b(k) == rhs, \
            f"(viii) B_k substitution failed at k={k}"
        checks += 1
    report["b_row_substitution"] = checks

    # (ix) large-parameter limit: C_n^l(x)/C_n^l(1) -> x^n, error <= 10/l
    checks = 0
    lam = Fraction(10 ** 6)
    grid = [Fraction(i, 4) for i in range(-4, 5)]
    for n in range(0, nmax + 1):
        c = _gegenbauer_binomial(n, lam)
        at_one = pochhammer(2 * lam, n) / factorial(n)
        for x in grid:
            err = abs(c(x) / at_one - x ** n)
            assert err <= Fraction(10) / lam, \
                f"(ix) limit envelope failed at n={n}, x={x}: err={err}"
            checks += 1
    report["large_parameter_limit"] = checks

    return report
