"""Seshadri constants and pseudoeffective thresholds at points.

Both invariants are computed on a blow-up model: for a fresh very general
point the model gains one exceptional class, for the homogeneous multi-point
quotient the direction is the sum of all exceptionals.  A rational value
achieved by a catalog curve is reported exactly together with the curve;
when no catalog curve is submaximal the honest output is an interval whose
upper end is the exact square-root bound (irrationality is never asserted:
curves beyond the degree bound cannot be excluded by a finite search).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .algnum import AlgNum, SqrtField, rational_sqrt
from .curves import NegCurveCatalog
from .errors import NotNef
from .lattice import DivClass
from .rational import fmt_rational
from .zariski import UNBOUNDED, is_nef, pseff_threshold

At = Union[int, str]  # 1-based point index, "very-general", or "all"


@dataclass(frozen=True)
class ThresholdResult:
    """Exact threshold: either a rational value with the achieving curve, or
    a certified interval [best_lower, sqrt_bound]."""

    kind: str  # "epsilon" | "mu"
    value: Optional[Fraction] = None
    interval: Optional[tuple] = None  # (Fraction, AlgNum)
    achieved_by: Optional[DivClass] = None
    certified_dmax: int = 0
    catalog_complete: bool = False

    def upper(self):
        return self.value if self.value is not None else self.interval[1]

    def lower(self):
        return self.value if self.value is not None else self.interval[0]

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind, "certified_dmax": self.certified_dmax,
                     "catalog_complete": self.catalog_complete}
        if self.value is not None:
            out["value"] = fmt_rational(self.value)
        else:
            lo, hi = self.interval
            out["interval"] = {
                "lower": fmt_rational(lo),
                "upper": hi.to_json() if isinstance(hi, AlgNum) else fmt_rational(hi),
            }
        if self.achieved_by is not None:
            out["achieved_by"] = self.achieved_by.to_json()
        return out


def _model(divisor: DivClass, at: At):
    """Resolve the point specifier to (origin class, direction class, s_eff)."""
    s = divisor.s
    if at == "very-general":
        origin = divisor.extended(1)
        direction = DivClass(0, (0,) * s + (-1,))
        return origin, direction, s + 1
    if at == "all":
        if s == 0:
            raise ValueError("homogeneous multi-point threshold needs s >= 1")
        return divisor, DivClass(0, (-1,) * s), s
    if isinstance(at, int):
        if not 1 <= at <= s:
            raise ValueError(f"point index {at} outside 1..{s}")
        m = [0] * s
        m[at - 1] = -1
        return divisor, DivClass(0, tuple(m)), s
    raise ValueError(f"unsupported point specifier: {at!r}")


def _sqrt_bound(origin: DivClass, direction: DivClass):
    """Exit of the ray origin - t*direction from the positive cone, as an
    exact AlgNum; None when the ray never exits through the quadric."""
    c0 = origin.dot(origin)
    c1 = -2 * origin.dot(direction)
    c2 = direction.dot(direction)
    from .zariski import _quadratic_first_root

    return _quadratic_first_root(c0, c1, c2, Fraction(0))


def _as_algnum(value) -> AlgNum:
    if isinstance(value, AlgNum):
        return value
    return SqrtField().rational(Fraction(value))


def _rational_floor_of(value, precision=Fraction(1, 1 << 32)) -> Fraction:
    if isinstance(value, Fraction):
        return value
    bits = 16
    while True:
        lo, hi = value.interval(bits)
        if hi - lo <= precision:
            return lo
        bits *= 2


def seshadri(divisor: DivClass, at: At, cat: NegCurveCatalog) -> ThresholdResult:
    """Seshadri constant of a nef class at a point: the infimum of
    (L.C)/(multiplicity at the point) over catalog curves through it, capped
    by the square-root bound sqrt(L^2)-along-the-ray."""
    origin, direction, s_eff = _model(divisor, at)
    if cat.s != s_eff:
        raise ValueError(f"catalog has s={cat.s}, model needs s={s_eff}")
    if not is_nef(origin, cat):
        raise NotNef(f"{divisor!r} is not nef against the catalog")

    best_q: Optional[Fraction] = None
    best_curve: Optional[DivClass] = None
    for c in cat:
        mult = direction.dot(c)
        if mult > 0:
            q = Fraction(origin.dot(c), mult)
            if best_q is None or q < best_q:
                best_q, best_curve = q, c
    bound = _sqrt_bound(origin, direction)

    if best_q is not None and (bound is None or _as_algnum(best_q) <= bound):
        return ThresholdResult("epsilon", value=best_q, achieved_by=best_curve,
                               certified_dmax=cat.d_max,
                               catalog_complete=cat.complete)
    if bound is None:
        raise ValueError("ray never leaves the nef cone; Seshadri quotient "
                         "undefined in this direction")
    if cat.complete and isinstance(bound, Fraction):
        # complete catalog: no curve in any degree is submaximal, so the
        # square-root bound is attained exactly
        return ThresholdResult("epsilon", value=bound,
                               certified_dmax=cat.d_max, catalog_complete=True)
    bound_alg = _as_algnum(bound)
    lower = _rational_floor_of(bound)
    if best_q is not None and best_q < lower:
        lower = best_q
    return ThresholdResult("epsilon", interval=(lower, bound_alg),
                           certified_dmax=cat.d_max,
                           catalog_complete=cat.complete)


def mu(divisor: DivClass, at: At, cat: NegCurveCatalog) -> ThresholdResult:
    """Pseudoeffective threshold at a point (the walk's volume root)."""
    origin, direction, s_eff = _model(divisor, at)
    if cat.s != s_eff:
        raise ValueError(f"catalog has s={cat.s}, model needs s={s_eff}")
    end = pseff_threshold(origin, direction, cat)
    if end is UNBOUNDED:
        raise ValueError("ray never leaves the big cone; threshold is unbounded")
    if isinstance(end, AlgNum):
        return ThresholdResult("mu", interval=(_rational_floor_of(end), end),
                               certified_dmax=cat.d_max,
                               catalog_complete=cat.complete)
    return ThresholdResult("mu", value=end, certified_dmax=cat.d_max,
                           catalog_complete=cat.complete)


@dataclass(frozen=True)
class RelationReport:
    """Comparison of epsilon and mu at the same point.

    ``epsilon_le_mu`` is verified exactly on the computed representatives.
    When epsilon < mu strictly, both are rational and epsilon carries an
    achieving curve.  Interval outputs leave the relation undetermined; no
    irrationality claim is ever made.
    """

    epsilon: ThresholdResult
    mu: ThresholdResult
    epsilon_le_mu: bool
    strict: Optional[bool]
    status: str  # "both-rational" | "undetermined"

    def to_json(self) -> dict:
        return {
            "epsilon": self.epsilon.to_json(),
            "mu": self.mu.to_json(),
            "epsilon_le_mu": self.epsilon_le_mu,
            "strict": self.strict,
            "status": self.status,
        }


def epsilon_mu_relation(divisor: DivClass, at: At,
                        cat: NegCurveCatalog) -> RelationReport:
    eps = seshadri(divisor, at, cat)
    muv = mu(divisor, at, cat)
    if eps.value is not None and muv.value is not None:
        le = eps.value <= muv.value
        return RelationReport(eps, muv, le, strict=eps.value < muv.value,
                              status="both-rational")
    le = _as_algnum(eps.lower()) <= _as_algnum(muv.upper())
    return RelationReport(eps, muv, bool(le), strict=None, status="undetermined")
