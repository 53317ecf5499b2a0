"""Construction of the critical polynomials p_n(s), the normalized rational
functions q_n(s), the reflection family p_n(s; beta), and the closed-form
Mellin transform descriptors, via every independent formula.

Normalization bookkeeping: the canonical normalization (tag ``paper_S``)
matches the printed list p_0 = 1/2, p_1 = 1, p_2 = 3s/2 - 3/4, ...; the
hypergeometric construction yields exactly twice that (tag ``thm4_hat``),
and the factor 2 is asserted rather than silently absorbed.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import (InvalidBeta, InvalidLambda, PoleInDenominator,
                     UndefinedIndex)
from .hyp3f2 import poly_from_3f2
from .poly import Poly, RatFun, gen_binom, pochhammer
from .rat import as_rat, format_rat

S = Poly.var("s")
ONE_MINUS_S = Poly("s", [Fraction(1), Fraction(-1)])


def _check_lambda(lam: Fraction):
    if lam <= Fraction(-1, 2) or lam == 0:
        raise InvalidLambda(f"need lambda > -1/2 and lambda != 0, got {lam}")


def reflection_sign(n: int) -> int:
    return (-1) ** (n // 2)


@dataclass(frozen=True)
class CriticalPolynomial:
    """A constructed critical polynomial with its provenance tags.

    Invariants (checked at construction): degree = floor(n/2) and the
    reflection functional equation p(s) = (-1)^{floor(n/2)} p(1-s).
    """

    n: int
    family: str          # "gegenbauer" or "beta"
    param: Fraction      # lambda or beta
    form: str            # S41 | S32 | S21 | HYP | RECUR
    poly: Poly
    normalization: str   # paper_S | thm4_hat

    def __post_init__(self):
        if self.poly.degree != self.n // 2:
            raise AssertionError(
                f"degree {self.poly.degree} != floor({self.n}/2) "
                f"[{self.family} n={self.n} param={self.param} {self.form}]")
        reflected = self.poly(ONE_MINUS_S)
        if not isinstance(reflected, Poly):
            reflected = Poly.constant("s", reflected)
        if self.poly != reflection_sign(self.n) * reflected:
            raise AssertionError(
                f"functional equation fails [{self.family} n={self.n} "
                f"param={self.param} {self.form}]")

    def to_json(self) -> dict:
        key = "lambda" if self.family == "gegenbauer" else "beta"
        out = {"n": self.n, key: format_rat(self.param), "form": self.form,
               "normalization": self.normalization}
        out.update(self.poly.to_json())
        return out


# ---------------------------------------------------------------------------
# binomial-sum forms
# ---------------------------------------------------------------------------

def p_s41(n: int, lam) -> CriticalPolynomial:
    """Four-binomial-numerator sum form (no s-dependent denominators)."""
    lam = as_rat(lam)
    _check_lambda(lam)
    m, eps = n // 2, n % 2
    out = Poly.zero("s")
    if eps == 0:
        for r in range(m + 1):
            out = out + (Fraction((-1) ** (m - r)) * Fraction(2) ** (2 * r - 1)
                         * gen_binom(m + r + lam - 1, m + r) * comb(m + r, 2 * r)
                         * gen_binom((S - 2) / 2 + r, r)
                         * gen_binom(m + (S + lam) / 2 - Fraction(3, 4), m - r)
                         / comb(m, r))
        out = factorial(m) * factorial(2 * m) * out
    else:
        for r in range(m + 1):
            out = out + (Fraction((-1) ** (m - r)) * Fraction(4) ** r
                         * gen_binom(m + r + lam, m + r + 1) * comb(m + r + 1, 2 * r + 1)
                         * gen_binom((S - 1) / 2 + r, r)
                         * gen_binom(m + (S + 1 + lam) / 2 - Fraction(3, 4), m - r)
                         / comb(m, r))
        out = factorial(m) * factorial(2 * m + 1) * out
    return CriticalPolynomial(n, "gegenbauer", lam, "S41", out, "paper_S")


def p_s32(n: int, lam) -> CriticalPolynomial:
    """Three-numerator/two-denominator sum form.

    The s-dependent denominator binomial is cancelled against the prefactor
    binomial: C(m+A, m) / C(A+r, r) = (r!/m!) (A+r+1)_{m-r}, keeping the
    whole computation in Poly.
    """
    lam = as_rat(lam)
    _check_lambda(lam)
    m, eps = n // 2, n % 2
    out = Poly.zero("s")
    if eps == 0:
        a = (S + lam) / 2 - Fraction(3, 4)
        for r in range(m + 1):
            out = out + (Fraction((-1) ** (m - r)) * Fraction(2) ** (2 * r - 1)
                         * gen_binom(m + r + lam - 1, r) * comb(m + r, 2 * r)
                         * gen_binom((S - 2) / 2 + r, r) * factorial(r)
                         * pochhammer(a + r + 1, m - r) / comb(m + r, r))
        out = factorial(2 * m) * gen_binom(m + lam - 1, m) * out
    else:
        a = (S + lam) / 2 - Fraction(1, 4)
        for r in range(m + 1):
            out = out + (Fraction((-1) ** (m - r)) * Fraction(4) ** r
                         * gen_binom(m + r + lam, r) * comb(m + r + 1, 2 * r + 1)
                         * gen_binom((S - 1) / 2 + r, r) * factorial(r)
                         * pochhammer(a + r + 1, m - r) / comb(m + r + 1, r))
        out = factorial(2 * m + 1) * gen_binom(m + lam, m + 1) * out
    return CriticalPolynomial(n, "gegenbauer", lam, "S32", out, "paper_S")


@lru_cache(maxsize=None)
def p_s21_chebyshev(n: int) -> CriticalPolynomial:
    """Two-numerator/one-denominator sum; the lambda = 1 simplification."""
    m, eps = n // 2, n % 2
    out = Poly.zero("s")
    if eps == 0:
        a = S / 2 - Fraction(1, 4)
        for r in range(m + 1):
            out = out + (Fraction((-1) ** (m - r)) * Fraction(2) ** (2 * r - 1)
                         * comb(m + r, 2 * r) * gen_binom((S - 2) / 2 + r, r)
                         * factorial(r) * pochhammer(a + r + 1, m - r))
        out = factorial(2 * m) * out
    else:
        a = S / 2 + Fraction(1, 4)
        for r in range(m + 1):
            out = out + (Fraction((-1) ** (m - r)) * Fraction(4) ** r
                         * comb(m + r + 1, 2 * r + 1) * gen_binom((S - 1) / 2 + r, r)
                         * factorial(r) * pochhammer(a + r + 1, m - r))
        out = factorial(2 * m + 1) * out
    return CriticalPolynomial(n, "gegenbauer", Fraction(1), "S21", out,
                              "paper_S")


def p_hyp(n: int, lam) -> CriticalPolynomial:
    """Hypergeometric-series construction (the Gamma-ratio normalization).

    Builds hat-p_n(s) = n! (2 lam)_n sum_k c_k ((s+eps)/2)_{m-k}; this is
    exactly twice the canonical polynomial, which is asserted here.
    """
    lam = as_rat(lam)
    _check_lambda(lam)
    eps = n % 2
    front = factorial(n) * pochhammer(2 * lam, n)

    def c(k: int) -> Fraction:
        return (front * Fraction((-1) ** k)
                * pochhammer(lam / 2 + Fraction(1, 4), k)
                / (Fraction(4) ** k * factorial(k)
                   * pochhammer(lam + Fraction(1, 2), k)
                   * factorial(n - 2 * k)))

    out = poly_from_3f2(n, eps, c)
    if out != 2 * p_s32(n, lam).poly:
        raise AssertionError(f"hat normalization ratio != 2 at n={n}, "
                             f"lambda={lam}")
    return CriticalPolynomial(n, "gegenbauer", lam, "HYP", out, "thm4_hat")


def p_chebyshev_recursive(n: int) -> CriticalPolynomial:
    """Mixed recursion in (n, s) for lambda = 1.

    The recursion with seeds 1/2, 1 produces p_n(s)/n!; the final n!
    rescaling restores the canonical normalization.
    """
    a = Poly.constant("s", Fraction(1, 2))
    b = Poly.constant("s", Fraction(1))
    if n == 0:
        out = a
    elif n == 1:
        out = b
    else:
        for k in range(2, n + 1):
            lead = S if k % 2 == 0 else 2
            a, b = b, lead * b.shift(1) - Fraction(1, 2) * (S + k - Fraction(1, 2)) * a
        out = b
    return CriticalPolynomial(n, "gegenbauer", Fraction(1), "RECUR",
                              factorial(n) * out, "paper_S")


def p_beta(n: int, beta) -> CriticalPolynomial:
    """One-parameter reflection family, beta < 1 rational."""
    beta = as_rat(beta)
    if beta >= 1:
        raise InvalidBeta(f"need beta < 1, got {beta}")

    def c(k: int) -> Fraction:
        return (Fraction((-1) ** k) * pochhammer(1 - beta, k)
                * pochhammer(Fraction(1 - n, 2), k) * pochhammer(Fraction(-n, 2), k)
                / (pochhammer(2 * (1 - beta), k) * factorial(k)))

    out = poly_from_3f2(n, n % 2, c)
    return CriticalPolynomial(n, "beta", beta, "HYP", out, "paper_S")


# ---------------------------------------------------------------------------
# normalized rational functions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NormalizedRational:
    """q_n(s): the critical polynomial divided by its limit normalization.

    Numerator and denominator both have degree floor(n/2); the denominator
    has all roots on the nonpositive real axis.
    """

    n: int
    lam: Fraction
    fun: RatFun

    def __post_init__(self):
        m = self.n // 2
        if self.fun.num.degree != m or self.fun.den.degree != m:
            raise AssertionError(f"q degrees != {m} at n={self.n}, "
                                 f"lambda={self.lam}")

    def __call__(self, point):
        return self.fun(point)


def q_rational(n: int, lam) -> NormalizedRational:
    """Both printed normalizations of q_n(s), asserted equal.

    The odd-index product form is implemented with p_{2n+1} in the
    numerator (dimensional consistency; see package notes).
    """
    lam = as_rat(lam)
    _check_lambda(lam)
    m = n // 2
    p = p_s32(n, lam).poly
    if n % 2 == 0:
        if n == 0:
            raise UndefinedIndex("q is undefined at n = 0")
        den_binom = (lam * factorial(m - 1) * factorial(2 * m)
                     * gen_binom(2 * m + 2 * lam - 1, 2 * m - 1)
                     * gen_binom(m + (S + lam) / 2 - Fraction(3, 4), m))
        q1 = RatFun(2 * p, den_binom)
        prod = Poly.constant("s", pochhammer(2 * lam, 2 * m))
        for j in range(1, m + 1):
            prod = prod * (2 * S + 2 * lam + 4 * j - 3)
        q2 = RatFun(Fraction(2) ** (2 * m + 1) * p, prod)
    else:
        den_binom = (lam * factorial(m) * factorial(2 * m)
                     * gen_binom(2 * m + 2 * lam, 2 * m)
                     * gen_binom(m + (S + lam) / 2 - Fraction(1, 4), m))
        q1 = RatFun(p, den_binom)
        prod = Poly.constant("s", pochhammer(2 * lam, 2 * m + 1))
        for j in range(1, m + 1):
            prod = prod * (2 * S + 2 * lam + 4 * j - 1)
        q2 = RatFun(Fraction(2) ** (2 * m + 1) * p, prod)
    if q1 != q2:
        raise AssertionError(f"q normalizations disagree at n={n}, "
                             f"lambda={lam}")
    return NormalizedRational(n, lam, q1)


def s32_bare_sum(n: int, lam, s, parity: str) -> Fraction:
    """The bare three-over-two binomial sum, without the normalizing
    prefactor: index 2n for parity 'even', 2n+1 for parity 'odd'."""
    lam, s = as_rat(lam), as_rat(s)
    total = Fraction(0)
    try:
        if parity == "even":
            for r in range(n + 1):
                total += (Fraction((-1) ** (n - r)) * Fraction(2) ** (2 * r - 1)
                          * gen_binom(n + r + lam - 1, r) * comb(n + r, 2 * r)
                          * gen_binom((s - 2) / 2 + r, r)
                          / (comb(n + r, r)
                             * gen_binom((s + lam) / 2 - Fraction(3, 4) + r, r)))
        elif parity == "odd":
            for r in range(n + 1):
                total += (Fraction((-1) ** (n - r)) * Fraction(4) ** r
                          * gen_binom(n + r + lam, r) * comb(n + r + 1, 2 * r + 1)
                          * gen_binom((s - 1) / 2 + r, r)
                          / (comb(n + r + 1, r)
                             * gen_binom((s + lam) / 2 - Fraction(1, 4) + r, r)))
        else:
            raise ValueError("parity must be 'even' or 'odd'")
    except ZeroDivisionError:
        raise PoleInDenominator(
            f"denominator binomial vanishes at s={s}, lambda={lam}") from None
    return total


def s32_bare_closed_form(n: int, lam, parity: str) -> Fraction:
    """Printed closed forms of the bare sums at s=1 (even) / s=2 (odd)."""
    lam = as_rat(lam)
    if parity == "even":
        return (Fraction(1, 2) * gen_binom(n + (2 * lam - 3) / 4, n)
                / gen_binom(n + (2 * lam - 1) / 4, n))
    if parity == "odd":
        return ((n + 1) * gen_binom(n + (2 * lam - 3) / 4, n)
                / gen_binom(n + (2 * lam + 3) / 4, n))
    raise ValueError("parity must be 'even' or 'odd'")


# ---------------------------------------------------------------------------
# closed-form Mellin transform descriptors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MellinClosedForm:
    """M(s) = const_rat * Gamma(const_gamma_arg)
              * Gamma((s+eps)/2) / Gamma((s+den_offset)/2) * factor(s)."""

    kind: str                    # "gegenbauer" or "T"
    n: int
    lam: Fraction | None
    eps: int
    factor: Poly
    const_rat: Fraction
    const_gamma_arg: Fraction
    den_offset: Fraction

    def to_json(self) -> dict:
        out = {"kind": self.kind, "n": self.n,
               "eps": self.eps, "const_rat": format_rat(self.const_rat),
               "const_gamma_arg": format_rat(self.const_gamma_arg),
               "den_offset": format_rat(self.den_offset),
               "factor": self.factor.to_json()}
        if self.lam is not None:
            out["lambda"] = format_rat(self.lam)
        return out


def mellin_closed(n: int, lam) -> MellinClosedForm:
    lam = as_rat(lam)
    _check_lambda(lam)
    hat = p_hyp(n, lam).poly
    return MellinClosedForm("gegenbauer", n, lam, n % 2, hat,
                            Fraction(1, 2 * factorial(n)),
                            lam / 2 + Fraction(1, 4),
                            n + lam + Fraction(1, 2))


def mellin_T_closed(n: int) -> MellinClosedForm:
    """First-kind transform via the exact symbolic recursion
    M_n(s) = 2 M_{n-1}(s+1) - M_{n-2}(s) from the Beta-function seeds.

    The polynomial factor's zero set is asserted to be
    {integers of parity n-1 up to n-3} union {n^2 - 1}; the constant works
    out to sqrt(pi)/(4 * 2^{floor(n/2)}) (the printed 2^n is off for
    n >= 4, as the recursion shows).
    """
    facs = [Poly.constant("s", Fraction(1)), Poly.constant("s", Fraction(1))]
    for k in range(2, n + 1):
        # c_{k-1}/c_k = 2^{floor(k/2)-floor((k-1)/2)}, c_{k-2}/c_k = 2
        ratio1 = Fraction(2) ** (k // 2 - (k - 1) // 2)
        e = S / 2 if k % 2 == 0 else Poly.constant("s", Fraction(1))
        facs.append(2 * ratio1 * e * facs[k - 1].shift(1)
                    - 2 * ((S + k + 1) / 2) * facs[k - 2])
    factor = facs[n]
    if n >= 2:
        expect = Poly.constant("s", Fraction(1))
        start = 1 if n % 2 == 0 else 2
        for z in range(start, n - 2, 2):
            expect = expect * (S - z)
        expect = expect * (S - (n * n - 1))
        if factor != expect:
            raise AssertionError(f"T-transform factor mismatch at n={n}: "
                                 f"{factor!r} vs {expect!r}")
    return MellinClosedForm("T", n, None, n % 2, factor,
                            Fraction(1, 4 * 2 ** (n // 2)),
                            Fraction(1, 2), Fraction(n + 3))
