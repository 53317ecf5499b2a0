"""Floating-point oracle: tanh-sinh quadrature of the defining Mellin
integrals, Gamma-form closed values, and the generating-function checks
that cannot be made exact."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .construct import MellinClosedForm, mellin_T_closed, mellin_closed
from .errors import (ConvergenceMarginViolated, InvalidParameters,
                     ToleranceNotMet)
from .poly import Poly

_QUAD_DPS = 30


@dataclass(frozen=True)
class QuadResult:
    value: float
    error_estimate: float
    evaluations: int

    def to_json(self) -> dict:
        return {"value": self.value, "error_estimate": self.error_estimate,
                "evaluations": self.evaluations}


def _poly_at(p: Poly, x):
    acc = mp.mpf(0)
    for c in reversed(p.coeffs):
        acc = acc * x + mp.mpf(c.numerator) / c.denominator
    return acc


def _gegenbauer_at(n: int, lam, x):
    # three-term recurrence; stable enough for the n <= ~40 used here
    if n == 0:
        return mp.mpf(1)
    a, b = mp.mpf(1), 2 * lam * x
    for m in range(2, n + 1):
        a, b = b, (2 * (lam + m - 1) * x * b - (2 * lam + m - 2) * a) / m
    return b


def _chebyshev_t_at(n: int, x):
    if n == 0:
        return mp.mpf(1)
    a, b = mp.mpf(1), x
    for _ in range(2, n + 1):
        a, b = b, 2 * x * b - a
    return b


def _chebyshev_u_at(n: int, x):
    if n < 0:
        return mp.mpf(0) if n == -1 else -_chebyshev_u_at(-n - 2, x)
    if n == 0:
        return mp.mpf(1)
    a, b = mp.mpf(1), 2 * x
    for _ in range(2, n + 1):
        a, b = b, 2 * x * b - a
    return b


def _half_pi():
    # the integrable singularity sits at the endpoint, so the endpoint must
    # be located at full quadrature precision, not the caller's
    with mp.workdps(_QUAD_DPS):
        return mp.pi / 2


def _run_quad(f, interval, tol) -> QuadResult:
    count = [0]

    def g(x):
        count[0] += 1
        return f(x)

    with mp.workdps(_QUAD_DPS):
        value, err = mp.quad(g, interval, error=True)
    value_f, err_f = float(value), float(err)
    if err_f > tol * max(1.0, abs(value_f)):
        raise ToleranceNotMet(
            f"quadrature error estimate {err_f} exceeds {tol}")
    return QuadResult(value_f, err_f, count[0])


def quad_mellin_gegenbauer(n: int, lam: float, s: float,
                           tol: float = 1e-12) -> QuadResult:
    """Int_0^1 x^(s-1) C_n^lam(x) (1-x^2)^(lam/2 - 3/4) dx, computed in the
    theta form cos^(s-1) * C_n^lam(cos) * sin^(lam - 1/2) over [0, pi/2] so
    tanh-sinh quadrature absorbs both endpoint singularities."""
    if lam <= -0.5 or lam == 0:
        raise InvalidParameters(f"need lambda > -1/2, lambda != 0, got {lam}")
    smin = 0.0 if n % 2 == 0 else -1.0
    if not s > smin:
        raise InvalidParameters(f"need s > {smin} for n = {n}, got s = {s}")
    lam_m, s_m = mp.mpf(lam), mp.mpf(s)

    def f(theta):
        c, si = mp.cos(theta), mp.sin(theta)
        return c ** (s_m - 1) * _gegenbauer_at(n, lam_m, c) \
            * si ** (lam_m - mp.mpf("0.5"))

    return _run_quad(f, [0, _half_pi()], tol)


def quad_mellin_T(n: int, s: float, tol: float = 1e-12) -> QuadResult:
    """Int_0^1 x^(s-1) T_n(x) (1-x^2)^(1/2) dx."""
    smin = 0.0 if n % 2 == 0 else -1.0
    if not s > smin:
        raise InvalidParameters(f"need s > {smin} for n = {n}, got s = {s}")
    s_m = mp.mpf(s)

    def f(x):
        return x ** (s_m - 1) * _chebyshev_t_at(n, x) * mp.sqrt(1 - x * x)

    return _run_quad(f, [0, 1], tol)


def closed_form_value(form: MellinClosedForm, s) -> float:
    """Evaluate a Gamma-form Mellin transform at float s via mp.gamma."""
    with mp.workdps(_QUAD_DPS):
        s_m = mp.mpf(s)
        c = mp.mpf(form.const_rat.numerator) / form.const_rat.denominator
        g1 = mp.gamma(mp.mpf(form.const_gamma_arg.numerator)
                      / form.const_gamma_arg.denominator)
        num = mp.gamma((s_m + form.eps) / 2)
        den = mp.gamma((s_m + mp.mpf(form.den_offset.numerator)
                        / form.den_offset.denominator) / 2)
        return float(c * g1 * num / den * _poly_at(form.factor, s_m))


def log_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0 (thin wrapper, kept as the single
    point of entry the comparisons rely on)."""
    if x <= 0:
        raise InvalidParameters(f"log_gamma needs x > 0, got {x}")
    return math.lgamma(x)


def compare_mellin(n: int, lam, s: float, tol: float = 1e-12) -> dict:
    """One CSV-shaped row: quadrature vs closed form."""
    lam_r = Fraction(lam)
    q = quad_mellin_gegenbauer(n, float(lam), s, tol)
    c = closed_form_value(mellin_closed(n, lam_r), s)
    abs_err = abs(q.value - c)
    # at an exact zero of the polynomial factor the relative error is
    # meaningless; report the absolute error there instead
    rel_err = abs_err / abs(c) if abs(c) > 1e-13 else abs_err
    return {"n": n, "lambda": float(lam), "s": s, "quadrature": q.value,
            "closed_form": c, "abs_err": abs_err, "rel_err": rel_err}


def compare_mellin_T(n: int, s: float, tol: float = 1e-12) -> dict:
    q = quad_mellin_T(n, s, tol)
    c = closed_form_value(mellin_T_closed(n), s)
    abs_err = abs(q.value - c)
    # at an exact zero of the polynomial factor the relative error is
    # meaningless; report the absolute error there instead
    rel_err = abs_err / abs(c) if abs(c) > 1e-13 else abs_err
    return {"n": n, "lambda": None, "s": s, "quadrature": q.value,
            "closed_form": c, "abs_err": abs_err, "rel_err": rel_err}


# ---------------------------------------------------------------------------
# generating functions
# ---------------------------------------------------------------------------

def _hyp_partial(nums, dens, z, max_terms=4000):
    """Partial sum of a (generalized) hypergeometric series at z, stopping
    on termination or when the tail is negligible at working precision.
    Returns (sum, last_term_magnitude)."""
    term = mp.mpf(1)
    total = mp.mpf(1)
    eps = mp.mpf(10) ** (-(mp.mp.dps - 2))
    last = mp.mpf(0)
    for k in range(max_terms):
        num = mp.mpf(1)
        for a in nums:
            num *= a + k
        if num == 0:
            return total, mp.mpf(0)
        den = mp.mpf(k + 1)
        for b in dens:
            den *= b + k
        term = term * num / den * z
        total += term
        last = abs(term)
        if last < eps * max(mp.mpf(1), abs(total)):
            return total, last
    return total, last


def _z_of(t):
    return 4 * t * t / (1 + t * t) ** 2


def _genfun_rhs_general(lam, s, t):
    """Right side of the general-parameter generating function. The printed
    form carries spurious Gamma(lam) and Gamma(lam+1) prefactors (at t = 0 it
    would equal Gamma(lam) * M_0(s)); they are corrected to 1 and lam."""
    z = _z_of(t)
    even, _ = _hyp_partial([(lam + 1) / 2, lam / 2, s / 2],
                           [mp.mpf("0.5"), (s + lam) / 2 + mp.mpf("0.25")], z)
    odd, _ = _hyp_partial([(lam + 1) / 2, 1 + lam / 2, (s + 1) / 2],
                          [mp.mpf("1.5"), (s + lam) / 2 + mp.mpf("0.75")], z)
    pre = (1 + t * t) ** (-lam) * mp.gamma(mp.mpf("0.25") + lam / 2) / 2
    return pre * (mp.gamma(s / 2) / mp.gamma((s + lam) / 2 + mp.mpf("0.25"))
                  * even
                  + 2 * t * lam / (1 + t * t)
                  * mp.gamma((s + 1) / 2)
                  / mp.gamma((s + lam) / 2 + mp.mpf("0.75")) * odd)


def _genfun_rhs_lambda1(s, t):
    z = _z_of(t)
    even, _ = _hyp_partial([mp.mpf(1), s / 2], [(2 * s + 3) / 4], z)
    odd, _ = _hyp_partial([mp.mpf(1), (s + 1) / 2], [(2 * s + 5) / 4], z)
    pre = mp.gamma(mp.mpf("0.75")) / (2 * (1 + t * t))
    return pre * (mp.gamma(s / 2) / mp.gamma(s / 2 + mp.mpf("0.75")) * even
                  + 2 * t / (1 + t * t) * mp.gamma((s + 1) / 2)
                  / mp.gamma(s / 2 + mp.mpf("1.25")) * odd)


def _genfun_rhs_T(s, t):
    z = _z_of(t)
    even, _ = _hyp_partial([mp.mpf(1), s / 2], [(s + 3) / 2], z)
    odd, _ = _hyp_partial([mp.mpf(1), (s + 1) / 2], [(s + 4) / 2], z)
    pre = mp.sqrt(mp.pi) / 4 * (1 - t * t)
    return pre * (mp.gamma(s / 2) / ((1 + t * t) * mp.gamma(s / 2 + 1.5))
                  * even
                  + 2 * t / (1 + t * t) ** 2 * mp.gamma((s + 1) / 2)
                  / mp.gamma(s / 2 + 2) * odd)


def _genfun_rhs_reexpanded(s, t, K):
    """Power-series re-expansion of the lambda = 1 generating function in
    which each t^(2k) coefficient is a pair of terminating series at 4/t^2.
    Returns (partial sum to K, magnitude of the last added term)."""
    g34 = mp.gamma(mp.mpf("0.75"))
    ge = mp.gamma(s / 2) / mp.gamma(s / 2 + mp.mpf("0.75"))
    go = mp.gamma((s + 1) / 2) / mp.gamma(s / 2 + mp.mpf("1.25"))
    w = 4 / (t * t)
    total = mp.mpf(0)
    last = mp.mpf(0)
    for k in range(K + 1):
        e, _ = _hyp_partial([(1 - k) / mp.mpf(2), s / 2, -k / mp.mpf(2)],
                            [mp.mpf("0.5"), (2 * s + 3) / 4], w)
        o, _ = _hyp_partial([(1 - k) / mp.mpf(2), 1 - k / mp.mpf(2),
                             (s + 1) / 2],
                            [mp.mpf("1.5"), (2 * s + 5) / 4], w)
        piece = (g34 / 2 * (-1) ** k * t ** (2 * k)
                 * (ge * e - 2 * k / t * go * o))
        total += piece
        last = abs(piece)
    return total, last


def _series_sum(values, t):
    """Sum_k values[k] t^k with a geometric tail bound from the last ratio."""
    total = mp.mpf(0)
    terms = []
    for k, v in enumerate(values):
        term = mp.mpf(v) * t ** k
        total += term
        terms.append(abs(term))
    if len(terms) >= 2 and terms[-2] > 0:
        r = terms[-1] / terms[-2]
        tail = terms[-1] * r / (1 - r) if r < 1 else mp.inf
    else:
        tail = terms[-1] if terms else mp.mpf(0)
    return total, tail


def genfun_check(lam: float, s: float, t: float, K: int = 40,
                 tol: float = 1e-9) -> dict:
    """Compare the truncated transform series Sum_k M_k(s) t^k against every
    closed generating-function form that applies at this parameter point.

    The truncation error is bounded by a geometric tail estimate from the
    last computed term; each comparison must satisfy
    |series - closed| <= tol + tail bound.
    """
    if abs(t) >= 0.25:
        raise ConvergenceMarginViolated(
            f"|t| = {abs(t)} outside the enforced margin |t| < 1/4")
    if not s > 0:
        raise InvalidParameters(f"need s > 0, got {s}")
    if K < 2:
        raise InvalidParameters("K must be >= 2")
    lam_r = Fraction(lam)
    with mp.workdps(_QUAD_DPS):
        t_m, s_m, lam_m = mp.mpf(t), mp.mpf(s), mp.mpf(lam)
        series, tail = _series_sum(
            [closed_form_value(mellin_closed(k, lam_r), s)
             for k in range(K + 1)], t_m)
        checks = {"general": float(_genfun_rhs_general(lam_m, s_m, t_m))}
        if lam == 1:
            checks["lambda1"] = float(_genfun_rhs_lambda1(s_m, t_m))
            if t != 0:
                reexp, _ = _genfun_rhs_reexpanded(s_m, t_m, K)
                checks["reexpanded"] = float(reexp)
        # T family is parameter-free; checked at the same (s, t)
        t_vals = [closed_form_value(mellin_T_closed(k), s)
                  for k in range(K + 1)]
        t_series, t_tail = _series_sum(
            [t_vals[0]] + [2 * v for v in t_vals[1:]], t_m)
        t_closed = float(_genfun_rhs_T(s_m, t_m))
    series_f, tail_f = float(series), float(tail)
    report = {"lambda": lam, "s": s, "t": t, "K": K,
              "series": series_f, "tail_bound": tail_f,
              "closed": checks, "errors": {}, "pass": True}
    for name, val in checks.items():
        err = abs(series_f - val)
        report["errors"][name] = err
        if err > tol + tail_f:
            report["pass"] = False
    err = abs(float(t_series) - t_closed)
    report["closed"]["chebyshev_T"] = t_closed
    report["series_T"] = float(t_series)
    report["errors"]["chebyshev_T"] = err
    if err > tol + float(t_tail):
        report["pass"] = False
    return report


def transform_level_lemma1_check(m: int, n: int, s: float,
                                 tol: float = 1e-10) -> dict:
    """Quadrature confirmation that the composition-product integrand
    x^(s-1)(1-x^2)^(-1/4) U_(m-1)(T_n(x)) U_(n-1)(x) has the same transform
    as the single second-kind polynomial of degree mn - 1."""
    if m < 1 or n < 1:
        raise InvalidParameters("need m, n >= 1")
    if not s > 0:
        raise InvalidParameters(f"need s > 0, got {s}")
    s_m = mp.mpf(s)

    def f(theta):
        c = mp.cos(theta)
        return (c ** (s_m - 1) * mp.sin(theta) ** mp.mpf("0.5")
                * _chebyshev_u_at(m - 1, _chebyshev_t_at(n, c))
                * _chebyshev_u_at(n - 1, c))

    lhs = _run_quad(f, [0, _half_pi()], tol)
    rhs = quad_mellin_gegenbauer(m * n - 1, 1.0, s, tol)
    err = abs(lhs.value - rhs.value)
    return {"m": m, "n": n, "s": s, "lhs": lhs.value, "rhs": rhs.value,
            "abs_err": err, "pass": err <= tol * max(1.0, abs(rhs.value))}


def lemma3a_check(m: int, n: int, s: float, tol: float = 1e-10) -> dict:
    """Argument-shift identity M_n(s + m) = 2^(-m) Sum_r C(m, r)
    M_(m+n-2r)(s) for the second-kind (lambda = 1) transforms, with the
    negative-index convention M_(-1) = 0, M_(-k) = -M_(k-2)."""
    if m < 0 or n < 0:
        raise InvalidParameters("need m, n >= 0")

    def M(k: int, arg: float) -> float:
        if k == -1:
            return 0.0
        if k < -1:
            return -M(-k - 2, arg)
        return closed_form_value(mellin_closed(k, 1), arg)

    lhs = M(n, s + m)
    rhs = sum(math.comb(m, r) * M(m + n - 2 * r, s)
              for r in range(m + 1)) / 2.0 ** m
    err = abs(lhs - rhs)
    return {"m": m, "n": n, "s": s, "lhs": lhs, "rhs": rhs, "abs_err": err,
            "pass": err <= tol * max(1.0, abs(lhs))}
