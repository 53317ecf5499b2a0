"""Certification engine: critical-line zero certificates, functional
equations, difference/recurrence identities, closure identities, and the
float Gamma-form cross-checks.

Every recurrence among the Mellin transforms is reduced to an exact
polynomial or rational identity by expressing all terms over a common
Gamma-ratio: shifting n or s by integers changes the ratio by exact
Pochhammer factors, so the Gamma functions cancel completely.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

import mpmath as mp

from .construct import (CriticalPolynomial, mellin_closed, p_beta, p_hyp,
                        p_s32, q_rational, reflection_sign)
from .errors import GammaPole
from .hyp3f2 import eval_3f2
from .poly import (Poly, RatFun, gen_binom, pochhammer, real_root_data,
                   substitute_critical)
from .rat import as_rat

S = Poly.var("s")
ONE_MINUS_S = Poly("s", [Fraction(1), Fraction(-1)])


# ---------------------------------------------------------------------------
# critical-line certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    subject: dict
    degree: int
    v_degree: int
    distinct_real_roots: int
    squarefree: bool
    parity_paired: bool
    passed: bool

    def to_json(self) -> dict:
        return {"subject": self.subject, "degree": self.degree,
                "v_degree": self.v_degree,
                "distinct_real_roots": self.distinct_real_roots,
                "squarefree": self.squarefree,
                "parity_paired": self.parity_paired, "pass": self.passed}


def certify_critical_line(p: CriticalPolynomial) -> Certificate:
    """Sturm-certify that every zero of p lies on Re s = 1/2.

    Substituting s = 1/2 + it yields a rational polynomial v(t); the
    certificate passes when the distinct real roots of v's squarefree part
    account for its entire degree. Roots of v pair as +-t, which shows as
    v being an even or odd polynomial; that parity is checked too.
    """
    v, _ = substitute_critical(p.poly)
    data = real_root_data(v)
    neg = v(Poly("t", [Fraction(0), Fraction(-1)]))
    if not isinstance(neg, Poly):
        neg = Poly.constant("t", neg)
    paired = neg == v or neg == -v
    subject = {"n": p.n, "family": p.family, "param": str(p.param),
               "form": p.form}
    return Certificate(subject, p.poly.degree, data.degree,
                       data.distinct_real_roots, data.is_squarefree, paired,
                       data.all_roots_real() and paired)


def check_functional_equation(p: Poly, n: int) -> bool:
    reflected = p(ONE_MINUS_S)
    if not isinstance(reflected, Poly):
        reflected = Poly.constant("s", reflected)
    return p == reflection_sign(n) * reflected


def check_fq1(n: int, lam) -> bool:
    """Reflection equation of q_n as an exact cross-multiplied identity."""
    lam = as_rat(lam)
    m, eps = n // 2, n % 2
    q = q_rational(n, lam).fun
    b_left = gen_binom(m + (1 - S + lam + eps) / 2 - Fraction(3, 4), m)
    b_right = gen_binom(m + (S + lam + eps) / 2 - Fraction(3, 4), m)
    n1 = q.num(ONE_MINUS_S)
    d1 = q.den(ONE_MINUS_S)
    # q(s) * B2 * D(1-s) = sign * B1 * N(1-s) * D(s)
    return (q.num * b_right * d1
            == reflection_sign(n) * b_left * n1 * q.den)


# ---------------------------------------------------------------------------
# difference equations in s
# ---------------------------------------------------------------------------

def check_difference_equation(p: Poly, n: int, lam) -> bool:
    """Four-step difference equation of the canonical polynomials, with n
    the full index; exact zero-polynomial residual."""
    lam = as_rat(lam)
    h = n // 2
    p0, p2, p4 = p, p.shift(2), p.shift(4)
    if n % 2 == 0:
        res = ((S + 2) * (2 * lam + 4 * h - 2 * S - 5) * p4
               - (8 * lam * h + 2 * lam + 8 * h * h - 4 * S * S - 12 * S - 11) * p2
               - (S + 1) * (2 * lam + 4 * h + 2 * S + 1) * p0)
    else:
        res = ((S + 3) * (2 * lam + 4 * h - 2 * S - 3) * p4
               - (8 * lam * h + 6 * lam + 8 * h * h + 8 * h - 4 * S * S - 12 * S - 9) * p2
               - S * (2 * lam + 4 * h + 2 * S + 3) * p0)
    return res.is_zero


def check_central_difference(p: Poly, n: int, lam) -> bool:
    """The symmetric three-point relation connecting p(s-2), p(s), p(s+2)
    used in the zero-location proof; exact zero-polynomial residual."""
    lam = as_rat(lam)
    eps = n % 2
    a = 6 - 4 * (lam + 2 * lam * n + n * n) - 16 * S + 8 * S * (S + 1)
    b = -9 + 4 * (n + lam) ** 2 - 4 * (S - 1) * (S + 2)
    c = 4 * (S - 1) * (S - 2)
    e_half = (S + eps) / 2
    g_half = (S + n + lam) / 2 + Fraction(1, 4)
    res = (a * (e_half - 1) * g_half * p
           + b * e_half * (e_half - 1) * p.shift(2)
           - c * g_half * (g_half - 1) * p.shift(-2))
    return res.is_zero


# ---------------------------------------------------------------------------
# Mellin-transform recurrences, reduced to exact identities
# ---------------------------------------------------------------------------

def _guard_gamma(s_samples, offsets):
    for s in s_samples:
        for off in offsets:
            arg = (as_rat(s) + off) / 2
            if arg.denominator == 1 and arg <= 0:
                raise GammaPole(f"Gamma argument {arg} at s={s}")


def _hat_series(nmax: int, lam):
    return [p_hyp(k, lam).poly for k in range(nmax + 1)]


def check_M_recurrences(n: int, lam, s_samples) -> dict:
    """Verify every Mellin-transform relation at index n as an exact
    identity, then report the (zero) residual at each rational s sample.

    Covered: the mixed (n, s) recurrence, its lambda = 1 special case, the
    central s-recurrence, both lambda = 1 hypergeometric re-expressions,
    and the even/odd quarter-shifted series forms.
    """
    lam = as_rat(lam)
    s_samples = [as_rat(s) for s in s_samples]
    _guard_gamma(s_samples, [Fraction(n % 2), n + lam + Fraction(1, 2)])
    hats = _hat_series(max(n, 2), lam)
    report = {}

    def poly_identity(name: str, res: Poly):
        report[name] = {"zero_polynomial": res.is_zero,
                        "residuals": [str(res(s)) for s in s_samples]}

    # mixed recurrence: common ratio Gamma((s+eps)/2)/Gamma((s+n+lam)/2+1/4)
    if n >= 2:
        e = S / 2 if n % 2 == 0 else Poly.constant("s", Fraction(1))
        res = (Fraction(n, factorial(n)) * hats[n]
               - 2 * (lam + n - 1) * e * hats[n - 1].shift(1) / factorial(n - 1)
               + (2 * lam + n - 2) * ((S + n + lam) / 2 - Fraction(3, 4))
               * hats[n - 2] / factorial(n - 2))
        poly_identity("mixed_recurrence", res)
        if lam == 1:
            res = (hats[n] / factorial(n)
                   - 2 * e * hats[n - 1].shift(1) / factorial(n - 1)
                   + ((S + n + 1) / 2 - Fraction(3, 4)) * hats[n - 2]
                   / factorial(n - 2))
            poly_identity("mixed_recurrence_chebyshev", res)

    # central s-recurrence
    report["central_recurrence"] = {
        "zero_polynomial": check_central_difference(hats[n], n, lam)}

    # hypergeometric re-expressions (lambda = 1 statements)
    if lam == 1:
        report["quarter_shift_series"] = _check_quarter_shift(n, hats[n],
                                                              s_samples)
        report["beta_kernel_series"] = _check_beta_kernel(n, hats[n],
                                                          s_samples)
        report["duplication_series"] = _check_duplication(n, hats[n],
                                                          s_samples)
    return report


def _check_quarter_shift(n: int, hat: Poly, s_samples) -> dict:
    """Even/odd series with the quarter-shifted parameters: for n = 2k,
    hat_p(s) = (2k)! 4^k (s/2)_k F; for n = 2k+1 the half-shifted analogue."""
    k = n // 2
    oks = []
    for s in s_samples:
        if n % 2 == 0:
            f = eval_3f2(Fraction(1, 2) - k, -k - s / 2 + Fraction(1, 4), -k,
                         1 - s / 2 - k, -2 * k)
            val = factorial(2 * k) * Fraction(4) ** k * pochhammer(s / 2, k) * f
        else:
            f = eval_3f2(-Fraction(1, 2) - k, -k - s / 2 - Fraction(1, 4), -k,
                         (1 - s) / 2 - k, -1 - 2 * k)
            val = (2 * factorial(2 * k + 1) * Fraction(4) ** k
                   * pochhammer((s + 1) / 2, k) * f)
        oks.append(val == hat(s))
    return {"pass": all(oks), "samples": len(oks)}


def _check_beta_kernel(n: int, hat: Poly, s_samples) -> dict:
    """hat_p_n(s) = n!(n+1) ((s+eps)/2)_m 3F2(3/4, (1-n)/2, -n/2;
    3/2, 1-(n+s)/2; 1)."""
    m, eps = n // 2, n % 2
    oks = []
    for s in s_samples:
        f = eval_3f2(Fraction(3, 4), Fraction(1 - n, 2), Fraction(-n, 2),
                     Fraction(3, 2), 1 - (n + s) / 2)
        val = (factorial(n) * (n + 1)
               * pochhammer((s + eps) / 2, m) * f)
        oks.append(val == hat(s))
    return {"pass": all(oks), "samples": len(oks)}


def _check_duplication(n: int, hat: Poly, s_samples) -> dict:
    """hat_p_n(s) = 2^n n! ((s+eps)/2)_m 3F2((1-n)/2, -n/2, 1/4-(n+s)/2;
    -n, 1-(n+s)/2; 1)."""
    m, eps = n // 2, n % 2
    oks = []
    for s in s_samples:
        if n == 0:
            oks.append(hat(s) == 1)
            continue
        f = eval_3f2(Fraction(1 - n, 2), Fraction(-n, 2),
                     Fraction(1, 4) - (n + s) / 2, Fraction(-n),
                     1 - (n + s) / 2)
        val = Fraction(2) ** n * factorial(n) * pochhammer((s + eps) / 2, m) * f
        oks.append(val == hat(s))
    return {"pass": all(oks), "samples": len(oks)}


def check_gould_sum_forms(n: int, lam, s_samples) -> dict:
    """The four-over-two and three-over-one sum forms of M_{2n} / M_{2n+1},
    divided through by M_0: both must equal
    hat_p(s) / (n'! ((s+lam+eps)/2 + 1/4)_{n}) exactly."""
    lam = as_rat(lam)
    s_samples = [as_rat(s) for s in s_samples]
    results = {"even": [], "odd": []}
    for s in s_samples:
        # even index 2n
        hat = p_hyp(2 * n, lam).poly
        rhs = hat(s) / (factorial(2 * n)
                        * pochhammer((s + lam) / 2 + Fraction(1, 4), n))
        s42 = Fraction(0)
        s31 = Fraction(0)
        top = gen_binom(n + (s + lam) / 2 - Fraction(3, 4), n)
        for r in range(n + 1):
            common = (Fraction((-1) ** (n - r)) * Fraction(4) ** r
                      * gen_binom(n + r + lam - 1, n + r) * comb(n + r, 2 * r)
                      * gen_binom((s - 2) / 2 + r, r))
            s42 += (common * gen_binom(n + (s + lam) / 2 - Fraction(3, 4), n - r)
                    / (comb(n, r) * top))
            s31 += common / gen_binom((s + lam) / 2 - Fraction(3, 4) + r, r)
        f = eval_3f2(-n, lam + n, s / 2, Fraction(1, 2),
                     lam / 2 + s / 2 + Fraction(1, 4))
        hyp = Fraction((-1) ** n) * gen_binom(lam + n - 1, n) * f
        results["even"].append(s42 == rhs and s31 == rhs and hyp == rhs)
        # odd index 2n+1
        hat = p_hyp(2 * n + 1, lam).poly
        rhs = hat(s) / (factorial(2 * n + 1)
                        * pochhammer((s + 1 + lam) / 2 + Fraction(1, 4), n))
        s42 = Fraction(0)
        s31 = Fraction(0)
        top = gen_binom(n + (s + lam) / 2 - Fraction(1, 4), n)
        for r in range(n + 1):
            common = (Fraction((-1) ** (n - r)) * 2 * Fraction(4) ** r
                      * gen_binom(n + r + lam, n + r + 1) * comb(n + r + 1, 2 * r + 1)
                      * gen_binom((s - 1) / 2 + r, r))
            s42 += (common * gen_binom(n + (s + lam) / 2 - Fraction(1, 4), n - r)
                    / (comb(n, r) * top))
            s31 += common / gen_binom((s + lam) / 2 - Fraction(1, 4) + r, r)
        f = eval_3f2(-n, lam + n + 1, s / 2 + Fraction(1, 2), Fraction(3, 2),
                     (lam + s) / 2 + Fraction(3, 4))
        hyp = (Fraction((-1) ** n) * 2 * (n + 1) * gen_binom(lam + n, n + 1) * f)
        results["odd"].append(s42 == rhs and s31 == rhs and hyp == rhs)
    results["pass"] = all(results["even"]) and all(results["odd"])
    return results


def check_integer_s_sums(n: int, lam, s1_max: int = 12) -> dict:
    """At even/odd integer arguments the Gamma-ratios become exact
    rationals; the four-over-three sum forms must then reproduce the
    closed-form transform values exactly."""
    lam = as_rat(lam)
    hat_even = p_hyp(2 * n, lam).poly
    hat_odd = p_hyp(2 * n + 1, lam).poly
    quarter = lam / 2 + Fraction(1, 4)
    oks = []
    for s1 in range(1, s1_max + 1):
        # even argument s = 2 s1: M_0(2 s1) = (s1-1)! / (2 (lam/2+1/4)_{s1})
        m0 = Fraction(factorial(s1 - 1), 2) / pochhammer(quarter, s1)
        # the printed prefactors 1/2s and lambda/(s+1) read s as s1
        assert m0 == Fraction(1, 2 * s1) / gen_binom(quarter + s1 - 1, s1)
        closed_even = (m0 * hat_even(Fraction(2 * s1))
                       / (factorial(2 * n) * pochhammer(s1 + quarter, n)))
        total = Fraction(0)
        for r in range(n + 1):
            total += (Fraction((-1) ** (n - r)) * Fraction(4) ** r
                      * gen_binom(n + r + lam - 1, n + r) * comb(n + r, 2 * r)
                      * comb(s1 - 1 + r, r)
                      * gen_binom(n + s1 + quarter - 1, n - r)
                      / (comb(n, n - r)
                         * gen_binom(s1 + quarter - 1, s1)
                         * gen_binom(n + s1 + quarter - 1, n)))
        oks.append(total / (2 * s1) == closed_even)
        # odd argument s = 2 s1 + 1: closed form over M_0(2 s1 + 2)
        s = Fraction(2 * s1 + 1)
        m0_next = Fraction(factorial(s1), 2) / pochhammer(quarter, s1 + 1)
        closed_odd = (m0_next * hat_odd(s)
                      / (factorial(2 * n + 1)
                         * pochhammer(s1 + 1 + quarter, n)))
        total = Fraction(0)
        for r in range(n + 1):
            total += (Fraction((-1) ** (n - r)) * 2 * Fraction(4) ** r
                      * gen_binom(n + r + lam, n + r + 1)
                      * comb(n + r + 1, 2 * r + 1) * comb(s1 + r, r)
                      * gen_binom(n + s1 + quarter, n - r)
                      / (comb(n, r) * gen_binom(s1 + quarter, s1 + 1)
                         * gen_binom(n + s1 + quarter, n)))
        # the r = 0 term already carries the factor 2*lam, so the matching
        # prefactor is 1/(2(s1+1)) = M_0(2 s1 + 2) over its binomial part
        oks.append(total / (2 * (s1 + 1)) == closed_odd)
    return {"pass": all(oks), "checks": len(oks)}


# ---------------------------------------------------------------------------
# closure identities and q behavior
# ---------------------------------------------------------------------------

def check_gould_closures(nmax: int, lam_samples) -> dict:
    """Closed forms of the s -> infinity limits of the bare sums, plus the
    leading-coefficient statement lim q(s) = 1."""
    failures = []
    for lam in map(as_rat, lam_samples):
        for n in range(1, nmax + 1):
            total = sum(Fraction((-1) ** (n - r)) * Fraction(2) ** (2 * r - 1)
                        * gen_binom(n + r + lam - 1, r) * comb(n + r, 2 * r)
                        / comb(n + r, r) for r in range(n + 1))
            want = (Fraction(1, 2) * gen_binom(2 * n + 2 * lam - 1, 2 * n - 1)
                    / gen_binom(n + lam - 1, n - 1))
            if total != want:
                failures.append(("even", n, str(lam)))
        for n in range(0, nmax + 1):
            total = sum(Fraction((-1) ** (n - r)) * Fraction(4) ** r
                        * gen_binom(n + r + lam, r) * comb(n + r + 1, 2 * r + 1)
                        / comb(n + r + 1, r) for r in range(n + 1))
            want = (Fraction(n + 1, 2 * n + 1)
                    * gen_binom(2 * n + 2 * lam, 2 * n)
                    / gen_binom(n + lam, n))
            if total != want:
                failures.append(("odd", n, str(lam)))
        for n in range(1, nmax + 1):
            q = q_rational(n, lam).fun
            if q.num.leading / q.den.leading != 1:
                failures.append(("leading", n, str(lam)))
    return {"pass": not failures, "failures": failures}


def check_q_range(n: int, lam, s_grid) -> dict:
    """0 < q(s) < 1 on a rational grid in (1, inf); at grid points
    s >= 10^6 n the value must sit within 10^-3 of 1."""
    lam = as_rat(lam)
    q = q_rational(n, lam)
    degree_zero = q.fun.num.degree == 0
    oks, near_one = [], []
    for s in map(as_rat, s_grid):
        val = q(s)
        oks.append(val == 1 if degree_zero else 0 < val < 1)
        if s >= 10 ** 6 * n:
            near_one.append(abs(1 - val) <= Fraction(1, 1000))
    return {"pass": all(oks) and all(near_one), "degree_zero": degree_zero,
            "points": len(oks), "near_one_points": len(near_one)}


# ---------------------------------------------------------------------------
# beta = 0 Gamma-form cross-check (float oracle)
# ---------------------------------------------------------------------------

def check_corollary2(n: int, s_samples) -> dict:
    """Gamma-function closed form of p_n(s; 0) versus the exact series
    construction, compared in floating point to 1e-10 relative."""
    exact = p_beta(n, Fraction(0)).poly
    eps = n % 2
    worst = 0.0
    with mp.workdps(40):
        for s in s_samples:
            s = as_rat(s)
            for arg in ((n + s) / 2, (s + eps) / 2, -(n + s) / 2,
                        (1 - s) / 2, 1 - s / 2, (n + 3 - s) / 2):
                if arg.denominator == 1 and arg <= 0:
                    raise GammaPole(f"Gamma argument {arg} at s={s}")
            sm = mp.mpf(s.numerator) / s.denominator
            bracket = 1 - (mp.gamma(-(n + sm) / 2) * mp.gamma((n + 3 - sm) / 2)
                           / (mp.gamma((1 - sm) / 2) * mp.gamma(1 - sm / 2)))
            val = (2 * (n + sm) / ((n + 1) * (n + 2))
                   * mp.gamma((n + sm) / 2) / mp.gamma((sm + eps) / 2)
                   * bracket)
            want = mp.mpf(exact(s).numerator) / exact(s).denominator
            rel = abs(val - want) / max(abs(want), mp.mpf(1e-300))
            worst = max(worst, float(rel))
    return {"pass": worst <= 1e-10, "worst_rel_err": worst}
