"""Exact verification of the radical inequality chain on the window
(1/sqrt(s+1), 1/sqrt(s)) for s >= 9.

All comparisons happen in the multi-quadratic field generated by sqrt(s),
sqrt(s+1) and sqrt(1 - s*delta^2); every verdict is an exact sign.  The
dichotomy checker evaluates, for concrete integer curve data (gamma, M, m),
the four inequalities whose joint satisfiability the main argument rules
out, and reports which of them fail.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional

from .algnum import AlgNum, SqrtField, rational_sqrt
from .errors import WindowViolation
from .rational import fmt_rational


def window_contains(s: int, delta: Fraction) -> bool:
    """Exact test of 1/sqrt(s+1) < delta < 1/sqrt(s), by squaring."""
    delta = Fraction(delta)
    return delta > 0 and delta * delta * (s + 1) > 1 and delta * delta * s < 1


def _require_window(s: int, delta: Fraction) -> Fraction:
    if s < 9:
        raise WindowViolation(f"s must be >= 9, got {s}")
    delta = Fraction(delta)
    if not window_contains(s, delta):
        raise WindowViolation(
            f"delta={delta} outside the open window (1/sqrt({s + 1}), 1/sqrt({s}))")
    return delta


def _radicand(s: int, delta: Fraction) -> Fraction:
    return 1 - s * delta * delta


def window_function(s: int, delta: Fraction,
                    field: Optional[SqrtField] = None) -> AlgNum:
    """(2*sqrt(s+1) - s) * sqrt(1 - s*delta^2) + s*(1 - sqrt(s+1))*delta + s - 2.

    Nonnegative on the window; vanishes at the lower endpoint.  Returned as
    an exact field element so its sign can be decided exactly.
    """
    delta = _require_window(s, delta)
    field = field or SqrtField()
    u = field.sqrt(s + 1)
    r = field.sqrt(_radicand(s, delta))
    return (2 * u - s) * r + s * delta * (1 - u) + (s - 2)


def window_function_at_lower_bound(s: int) -> AlgNum:
    """The same function evaluated exactly at delta = 1/sqrt(s+1) (the window
    check does not apply to this boundary substitution).  Identically zero."""
    if s < 9:
        raise WindowViolation(f"s must be >= 9, got {s}")
    field = SqrtField()
    u = field.sqrt(s + 1)
    delta = u / (s + 1)                      # 1/sqrt(s+1)
    radicand = 1 - Fraction(s, s + 1)        # 1 - s*delta^2 = 1/(s+1)
    r = field.sqrt(radicand)
    return (2 * u - s) * r + s * delta * (1 - u) + (s - 2)


@dataclass(frozen=True)
class DerivativeReport:
    """Exact facts forcing the window function to increase on the window."""

    s: int
    delta: Fraction
    h_at_least_one: bool          # delta / sqrt(1 - s*delta^2) >= 1
    coefficient_positive: bool    # s - 2*sqrt(s+1) > 0
    closing_bound_positive: bool  # 1 + s - 3*sqrt(s+1) > 0
    derivative_sign: int

    @property
    def all_hold(self) -> bool:
        return (self.h_at_least_one and self.coefficient_positive
                and self.closing_bound_positive and self.derivative_sign > 0)

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "delta": fmt_rational(self.delta),
            "h_at_least_one": self.h_at_least_one,
            "coefficient_positive": self.coefficient_positive,
            "closing_bound_positive": self.closing_bound_positive,
            "derivative_sign": self.derivative_sign,
        }


def window_derivative_report(s: int, delta: Fraction) -> DerivativeReport:
    """Verify exactly the monotonicity ingredients and the sign of the
    derivative s*(1 + h(delta)*(s - 2*sqrt(s+1)) - sqrt(s+1)) itself."""
    delta = _require_window(s, delta)
    # h(delta) >= 1 iff delta^2 >= 1 - s*delta^2 iff delta^2 (s+1) >= 1
    h_ge_1 = delta * delta * (s + 1) >= 1
    # s - 2 sqrt(s+1) > 0 iff s^2 > 4(s+1), valid to square since s > 0
    coeff_pos = s * s > 4 * (s + 1)
    # 1 + s - 3 sqrt(s+1) > 0 iff (1+s)^2 > 9(s+1) iff s+1 > 9
    closing_pos = (1 + s) * (1 + s) > 9 * (s + 1)
    field = SqrtField()
    u = field.sqrt(s + 1)
    r = field.sqrt(_radicand(s, delta))
    h = field.rational(delta) / r
    derivative = s * (1 + h * (s - 2 * u) - u)
    return DerivativeReport(s, delta, h_ge_1, coeff_pos, closing_pos,
                            derivative.sign())


@dataclass(frozen=True)
class QuadraticFormReport:
    """The degree-2 part of the dimension-count bound, as a form in (M, m)."""

    s: int
    delta: Fraction
    leading_coefficient: Fraction        # s^2 d^2 - s, negative on the window
    leading_negative: bool
    determinant: Fraction                # always exactly zero
    determinant_zero: bool

    @property
    def negative_semidefinite(self) -> bool:
        return self.leading_negative and self.determinant_zero

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "delta": fmt_rational(self.delta),
            "leading_coefficient": fmt_rational(self.leading_coefficient),
            "leading_negative": self.leading_negative,
            "determinant": fmt_rational(self.determinant),
            "determinant_zero": self.determinant_zero,
        }


def quadratic_form_report(s: int, delta: Fraction) -> QuadraticFormReport:
    """Exact negative-semidefiniteness of
    (s^2 d^2 - s) M^2 + 2 s d sqrt(1-s d^2) M m - s d^2 m^2:
    the leading coefficient is negative on the window and the determinant of
    the symmetric matrix vanishes identically (the radical squares away)."""
    delta = Fraction(delta)
    lead = s * s * delta * delta - s
    r = _radicand(s, delta)
    det = lead * (-s * delta * delta) - s * s * delta * delta * r
    return QuadraticFormReport(s, delta, lead, lead < 0, det, det == 0)


@dataclass(frozen=True)
class DichotomyCertificate:
    """Concrete data for the dichotomy checker: s >= 9, a rational delta in
    the open window, and positive integers (gamma, M, m)."""

    s: int
    delta: Fraction
    gamma: int
    M: int
    m: int

    def __post_init__(self):
        _require_window(self.s, self.delta)
        if min(self.gamma, self.M, self.m) <= 0:
            raise ValueError("gamma, M, m must be positive integers")


@dataclass(frozen=True)
class DichotomyReport:
    certificate: DichotomyCertificate
    upper_bound_on_gamma: bool       # gamma < m*sqrt(1-s d^2) + d*s*M
    lower_bound_on_gamma: bool       # gamma/(s M + m) >= 1/sqrt(s+1)
    cremona_inequality: bool         # gamma >= 2M + m
    a_positive: bool
    b_positive: bool
    combined_leq_one: bool           # b + a*sqrt(1-s d^2) <= 1 (window fact)
    dimension_count: bool            # the dim-count RHS >= 0
    sqrt_radicand_rational: bool     # 1 - s d^2 is a rational square
    failed: tuple

    @property
    def all_pass(self) -> bool:
        return not self.failed

    def to_json(self) -> dict:
        c = self.certificate
        return {
            "s": c.s, "delta": fmt_rational(c.delta),
            "gamma": c.gamma, "M": c.M, "m": c.m,
            "upper_bound_on_gamma": self.upper_bound_on_gamma,
            "lower_bound_on_gamma": self.lower_bound_on_gamma,
            "cremona_inequality": self.cremona_inequality,
            "a_positive": self.a_positive,
            "b_positive": self.b_positive,
            "combined_leq_one": self.combined_leq_one,
            "dimension_count": self.dimension_count,
            "sqrt_radicand_rational": self.sqrt_radicand_rational,
            "failed": list(self.failed),
        }


def _dimension_count_value(s: int, delta: Fraction, M: int, m: int,
                           field: SqrtField) -> AlgNum:
    r = field.sqrt(_radicand(s, delta))
    bound = s * delta * M + m * r
    return bound * (bound + 3) - (m * m + m + s * M + s * M * M)


def check_dichotomy(cert: DichotomyCertificate) -> DichotomyReport:
    """Exact verdicts for the inequality chain at concrete (gamma, M, m).

    The checked facts cannot all hold at once: any triple satisfying the
    upper and lower bounds together with the Cremona inequality fails the
    dimension count, which is the mechanized content of the dichotomy.
    """
    s, delta, gamma, M, m = cert.s, cert.delta, cert.gamma, cert.M, cert.m
    field = SqrtField()
    u = field.sqrt(s + 1)
    r = field.sqrt(_radicand(s, delta))

    upper = field.rational(gamma) < m * r + s * delta * M
    # gamma/(sM+m) >= 1/sqrt(s+1)  <=>  gamma*sqrt(s+1) >= sM+m
    lower = (field.rational(gamma) * u - (s * M + m)).sign() >= 0
    cremona = gamma >= 2 * M + m
    denom = field.rational(2 - delta * s)
    a = (2 * u - s) / denom
    b = (s - delta * s * u) / denom
    combined = (b + a * r - 1).sign() <= 0
    dim_count = _dimension_count_value(s, delta, M, m, field).sign() >= 0

    flags = {
        "upper_bound_on_gamma": upper,
        "lower_bound_on_gamma": lower,
        "cremona_inequality": cremona,
        "dimension_count": dim_count,
    }
    failed = tuple(name for name, ok in flags.items() if not ok)
    return DichotomyReport(cert, upper, lower, cremona,
                           a.sign() > 0, b.sign() > 0, combined, dim_count,
                           rational_sqrt(_radicand(s, delta)) is not None,
                           failed)


@dataclass(frozen=True)
class ScanResult:
    s: int
    delta: Fraction
    gamma_max: int
    pairs_scanned: int
    triples_passing_bounds: int      # satisfy upper+lower+cremona
    counterexamples: tuple           # triples passing all four (expected none)

    def to_json(self) -> dict:
        return {
            "s": self.s, "delta": fmt_rational(self.delta),
            "gamma_max": self.gamma_max,
            "pairs_scanned": self.pairs_scanned,
            "triples_passing_bounds": self.triples_passing_bounds,
            "counterexamples": [list(t) for t in self.counterexamples],
        }


def scan_box(s: int, delta: Fraction, gamma_max: int) -> ScanResult:
    """Exhaustive scan of integer triples with gamma <= gamma_max.

    For every (M, m) compatible with the lower bound, the gamma interval cut
    out by the three linear/quadratic bounds is intersected exactly, and the
    dimension count is evaluated once (it does not involve gamma).  Any
    triple passing all four inequalities is returned as a counterexample.
    """
    delta = _require_window(s, delta)
    field = SqrtField()
    u = field.sqrt(s + 1)
    r = field.sqrt(_radicand(s, delta))

    # lower bound forces s*M + m <= gamma*sqrt(s+1) <= gamma_max*sqrt(s+1)
    cap = gamma_max * gamma_max * (s + 1)
    m_max = isqrt(cap)
    counterexamples = []
    pairs = 0
    passing = 0
    for M in range(1, m_max // s + 2):
        if s * M + 1 > m_max + 1:
            break
        for m in range(1, m_max - s * M + 2):
            pairs += 1
            weight = s * M + m
            if weight * weight > cap:
                break
            # smallest gamma with gamma*sqrt(s+1) >= weight
            g_lo = isqrt((weight * weight) // (s + 1))
            while g_lo * g_lo * (s + 1) < weight * weight:
                g_lo += 1
            g_lo = max(g_lo, 2 * M + m)
            # largest gamma with gamma < m*r + s*delta*M (exact)
            ub = m * r + s * delta * M
            if ub.is_rational():
                q = ub.as_rational()
                g_hi = (q.numerator - 1) // q.denominator
            else:
                g_hi = g_lo - 1
                while g_hi < gamma_max and field.rational(g_hi + 1) < ub:
                    g_hi += 1
            g_hi = min(g_hi, gamma_max)
            if g_hi < g_lo:
                continue
            gammas = range(g_lo, g_hi + 1)
            passing += len(gammas)
            if _dimension_count_value(s, delta, M, m, field).sign() >= 0:
                counterexamples.extend((g, M, m) for g in gammas)
    return ScanResult(s, delta, gamma_max, pairs, passing, tuple(counterexamples))
