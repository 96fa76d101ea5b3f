"""Zariski decompositions, nef/pseudoeffective thresholds and chamber walks.

Everything is computed against a catalog of negative curve classes.  The
decomposition of a pseudoeffective class D is the unique splitting
D = P + sum a_i C_i with P nef, a_i > 0, P.C_i = 0 and (C_i.C_j) negative
definite; it is found by the usual fixed-point iteration: repeatedly adjoin
the catalog curves that the current positive part meets negatively and solve
the Gram system for the coefficients.

A walk along the ray A - t*B tracks the decomposition as an exact affine
family of t on each Zariski chamber.  Chamber boundaries, support changes
and the volume root at the end are all computed exactly; an irrational end
is reported as an explicit quadratic irrational, never rounded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .algnum import AlgNum, SqrtField, rational_sqrt
from .curves import NegCurveCatalog
from .errors import (CatalogInsufficient, GramNotNegativeDefinite, NotBig,
                     NotNef, NotPseudoEffective)
from .lattice import DivClass
from .linalg import SingularMatrix, is_negative_definite, solve
from .rational import fmt_rational

UNBOUNDED = math.inf

_ZERO = Fraction(0)


@dataclass(frozen=True)
class ZariskiDecomposition:
    divisor: DivClass
    positive: DivClass
    negative: tuple  # ((curve, coefficient), ...) with positive coefficients
    certified_dmax: int
    catalog_complete: bool = False

    @property
    def volume(self) -> Fraction:
        return self.positive.dot(self.positive)

    def negative_part(self) -> DivClass:
        acc = DivClass(0, (0,) * self.divisor.s)
        for curve, coeff in self.negative:
            acc = acc + curve.scale(coeff)
        return acc

    def support(self) -> frozenset:
        return frozenset(curve for curve, _ in self.negative)

    def to_json(self) -> dict:
        return {
            "divisor": self.divisor.to_json(),
            "positive": self.positive.to_json(),
            "negative": [{"curve": c.to_json(), "coeff": fmt_rational(a)}
                         for c, a in self.negative],
            "volume": fmt_rational(self.volume),
            "certified_dmax": self.certified_dmax,
            "catalog_complete": self.catalog_complete,
        }


class _Family:
    """Decomposition of A - t*B with a fixed support, as affine data in t."""

    def __init__(self, origin: DivClass, direction: DivClass,
                 support: Sequence[DivClass]):
        self.support = list(support)
        if self.support:
            gram = [[ci.dot(cj) for cj in self.support] for ci in self.support]
            if not is_negative_definite(gram):
                raise GramNotNegativeDefinite(
                    f"support Gram matrix is not negative definite: {self.support}")
            rhs_a = [origin.dot(c) for c in self.support]
            rhs_b = [-direction.dot(c) for c in self.support]
            try:
                self.a0, self.a1 = solve(gram, [rhs_a, rhs_b])
            except SingularMatrix as exc:  # negative definite => nonsingular
                raise GramNotNegativeDefinite(str(exc)) from exc
        else:
            self.a0, self.a1 = [], []
        p0 = origin
        p1 = -direction
        for c, c0, c1 in zip(self.support, self.a0, self.a1):
            p0 = p0 - c.scale(c0)
            p1 = p1 - c.scale(c1)
        self.p0 = p0
        self.p1 = p1

    def coeffs_at(self, t: Fraction) -> list[Fraction]:
        return [c0 + t * c1 for c0, c1 in zip(self.a0, self.a1)]

    def positive_at(self, t: Fraction) -> DivClass:
        return self.p0 + self.p1.scale(t)

    def wall(self, c: DivClass) -> tuple[Fraction, Fraction]:
        """P(t).c as (value at 0, slope)."""
        return self.p0.dot(c), self.p1.dot(c)

    def volume_quadratic(self) -> tuple[Fraction, Fraction, Fraction]:
        """P(t).P(t) = c0 + c1*t + c2*t^2."""
        return (self.p0.dot(self.p0),
                2 * self.p0.dot(self.p1),
                self.p1.dot(self.p1))


def _stabilize(origin: DivClass, direction: DivClass, cat: NegCurveCatalog,
               t: Fraction, support: list[DivClass]) -> tuple[_Family, list[DivClass]]:
    """Adjust the support so the family is valid on a right-neighborhood of t:
    every coefficient and every off-support wall must be positive, or zero
    with nonnegative slope."""
    support = list(support)
    tried = set()
    for _ in range(3 * len(cat) + 16):
        key = frozenset(support)
        if key in tried:
            raise NotPseudoEffective(
                f"support selection cycles at t={t}; class is not pseudoeffective "
                "against this catalog")
        tried.add(key)
        fam = _Family(origin, direction, support)
        changed = False
        keep = []
        for c, c0, c1 in zip(fam.support, fam.a0, fam.a1):
            v = c0 + t * c1
            if v < 0 or (v == 0 and c1 < 0):
                changed = True  # drop: coefficient would go negative
            else:
                keep.append(c)
        in_support = set(support)
        additions = []
        for c in cat:
            if c in in_support:
                continue
            v0, v1 = fam.wall(c)
            v = v0 + t * v1
            if v < 0 or (v == 0 and v1 < 0):
                additions.append(c)
        if additions:
            changed = True
        if not changed:
            return fam, support
        support = keep + additions
    raise NotPseudoEffective(
        f"no consistent Zariski support found at t={t} (iteration cap)")


def decompose(divisor: DivClass, cat: NegCurveCatalog) -> ZariskiDecomposition:
    """Zariski decomposition of a pseudoeffective class against the catalog.

    Raises NotPseudoEffective when no valid decomposition exists, and
    CatalogInsufficient when the support reaches the degree frontier of a
    catalog that was actually pruned there (the bound must grow).
    """
    if divisor.s != cat.s:
        raise ValueError(f"class has s={divisor.s} but catalog has s={cat.s}")
    zero = DivClass(0, (0,) * divisor.s)
    try:
        fam, support = _stabilize(divisor, zero, cat, _ZERO, [])
    except GramNotNegativeDefinite as exc:
        raise NotPseudoEffective(str(exc)) from exc
    pos = fam.p0
    h = DivClass(1, (0,) * divisor.s)
    vol = pos.dot(pos)
    deg = pos.dot(h)
    if vol < 0 or deg < 0 or (deg == 0 and not pos.is_zero()):
        raise NotPseudoEffective(
            f"{divisor!r} is not pseudoeffective (positive part {pos!r} "
            f"has volume {vol}, degree {deg})")
    negative = tuple((c, a) for c, a in zip(fam.support, fam.a0) if a > 0)
    if not cat.complete:
        frontier = [c for c, _ in negative if c.d == cat.d_max]
        if frontier:
            raise CatalogInsufficient(
                f"negative part uses curves of degree d_max={cat.d_max} "
                f"({frontier[0]!r}); regenerate the catalog with a larger bound")
    return ZariskiDecomposition(divisor, pos, negative, cat.d_max, cat.complete)


def is_nef(divisor: DivClass, cat: NegCurveCatalog) -> bool:
    """Nef against the catalog: pairs >= 0 with every entry, lies in the
    nonnegative half of the positive cone."""
    if any(divisor.dot(c) < 0 for c in cat):
        return False
    h = DivClass(1, (0,) * divisor.s)
    return divisor.dot(divisor) >= 0 and divisor.dot(h) >= 0


# -- thresholds ---------------------------------------------------------------


def _quadratic_first_root(c0, c1, c2, t_from: Fraction, strict: bool = False):
    """Smallest root >= t_from (or > t_from when strict) of c0 + c1 t + c2 t^2.

    Returns a Fraction, an AlgNum, or None when there is no such root.
    """
    def admit(r):
        return r > t_from if strict else r >= t_from

    if c2 == 0:
        if c1 == 0:
            return (t_from if c0 == 0 and not strict else None)
        root = Fraction(-c0, c1)
        return root if admit(root) else None
    disc = c1 * c1 - 4 * c2 * c0
    if disc < 0:
        return None
    sq = rational_sqrt(disc)
    if sq is not None:
        roots = sorted([Fraction(-c1 - sq, 2 * c2), Fraction(-c1 + sq, 2 * c2)])
    else:
        fieldobj = SqrtField()
        alg = fieldobj.sqrt(disc)
        roots = sorted([(fieldobj.rational(-c1) - alg) / (2 * c2),
                        (fieldobj.rational(-c1) + alg) / (2 * c2)])
    for r in roots:
        if admit(r):
            return r
    return None


def nef_threshold(origin: DivClass, direction: DivClass, cat: NegCurveCatalog):
    """sup { t >= 0 : origin - t*direction is nef }.

    The minimum of the catalog walls (A.C)/(B.C) over curves with B.C > 0
    and of the exit from the positive cone; the latter may be a quadratic
    irrational.  Returns UNBOUNDED when the ray never leaves the nef cone.
    """
    if not is_nef(origin, cat):
        raise NotNef(f"{origin!r} is not nef against the catalog")
    best = None

    def consider(value):
        nonlocal best
        if value is not None and (best is None or value < best):
            best = value

    for c in cat:
        bc = direction.dot(c)
        if bc > 0:
            consider(Fraction(origin.dot(c), bc))
    h = DivClass(1, (0,) * origin.s)
    bh = direction.dot(h)
    if bh > 0:
        consider(Fraction(origin.dot(h), bh))
    consider(_quadratic_first_root(origin.dot(origin),
                                   -2 * origin.dot(direction),
                                   direction.dot(direction), _ZERO))
    return UNBOUNDED if best is None else best


@dataclass(frozen=True)
class ChamberWalk:
    """Trace of the Zariski chamber structure along the ray A - t*B.

    ``supports[i]`` is the negative-part support on the open interval between
    ``breakpoints[i]`` and the next breakpoint (or the end of the walk).  The
    end is the exit from the big cone: ``end_t`` is UNBOUNDED when the ray
    stays big forever, and can be an AlgNum when the volume root is
    irrational.  ``end_quadratic`` holds the exact volume polynomial of the
    final chamber.
    """

    origin: DivClass
    direction: DivClass
    breakpoints: tuple
    supports: tuple
    end_t: object
    end_reason: str  # "volume-zero" | "boundary-witness" | "unbounded"
    end_quadratic: tuple
    certified_dmax: int
    catalog_complete: bool = False
    families: tuple = field(default=(), repr=False, compare=False)

    @property
    def n_chambers(self) -> int:
        return len(self.supports)

    def positive_part_at(self, t: Fraction) -> DivClass:
        for i in reversed(range(len(self.breakpoints))):
            if t >= self.breakpoints[i]:
                return self.families[i].positive_at(t)
        raise ValueError(f"t={t} before the walk start")

    def volume_at(self, t: Fraction) -> Fraction:
        p = self.positive_part_at(t)
        return p.dot(p)

    def to_json(self) -> dict:
        if self.end_t is UNBOUNDED:
            end: object = "unbounded"
        elif isinstance(self.end_t, AlgNum):
            end = self.end_t.to_json()
        else:
            end = fmt_rational(self.end_t)
        return {
            "origin": self.origin.to_json(),
            "direction": self.direction.to_json(),
            "breakpoints": [fmt_rational(t) for t in self.breakpoints],
            "supports": [sorted(c.to_json() for c in s) for s in self.supports],
            "end": {"t": end, "reason": self.end_reason},
            "volume_quadratics": [[fmt_rational(c) for c in fam.volume_quadratic()]
                                  for fam in self.families],
            "certified_dmax": self.certified_dmax,
            "catalog_complete": self.catalog_complete,
        }


def _ray_walk(origin: DivClass, direction: DivClass,
              cat: NegCurveCatalog) -> ChamberWalk:
    s = origin.s
    anti_k = DivClass(3, (1,) * s)  # boundary witness, square zero iff s = 9
    watch_witness = (s == 9)
    t = _ZERO
    support: list[DivClass] = []
    breakpoints = []
    supports = []
    families = []
    for _ in range(2 * len(cat) + 16):
        fam, support = _stabilize(origin, direction, cat, t, support)
        breakpoints.append(t)
        supports.append(frozenset(support))
        families.append(fam)

        c0, c1, c2 = fam.volume_quadratic()
        vol_now = c0 + c1 * t + c2 * t * t
        if vol_now < 0:
            raise NotPseudoEffective(
                f"volume negative at t={t}; ray left the pseudoeffective cone")
        reason = "volume-zero"
        if vol_now == 0:
            slope = c1 + 2 * c2 * t
            if slope < 0 or (slope == 0 and c2 <= 0):
                end_candidate = t
            else:
                end_candidate = _quadratic_first_root(c0, c1, c2, t, strict=True)
        else:
            end_candidate = _quadratic_first_root(c0, c1, c2, t, strict=True)
        if watch_witness:
            v0, v1 = fam.wall(anti_k)
            if v1 < 0:
                w = Fraction(-v0, v1)
                if w > t and (end_candidate is None or w < end_candidate):
                    end_candidate, reason = w, "boundary-witness"

        event = None
        in_support = set(support)
        for c in cat:
            if c in in_support:
                continue
            v0, v1 = fam.wall(c)
            if v1 < 0:
                root = Fraction(-v0, v1)
                if root > t and (event is None or root < event):
                    event = root
        for c, a0, a1 in zip(fam.support, fam.a0, fam.a1):
            if a1 < 0:
                root = Fraction(-a0, a1)
                if root > t and (event is None or root < event):
                    event = root

        if end_candidate is not None and (event is None or end_candidate <= event):
            end_t = end_candidate
            if reason == "volume-zero" and watch_witness:
                p_end = None
                if isinstance(end_t, Fraction):
                    p_end = fam.positive_at(end_t)
                    if not p_end.is_zero() and p_end.dot(anti_k) == 0:
                        reason = "boundary-witness"
            return ChamberWalk(origin, direction, tuple(breakpoints),
                               tuple(supports), end_t, reason,
                               (c0, c1, c2), cat.d_max, cat.complete,
                               tuple(families))
        if event is None:
            return ChamberWalk(origin, direction, tuple(breakpoints),
                               tuple(supports), UNBOUNDED, "unbounded",
                               (c0, c1, c2), cat.d_max, cat.complete,
                               tuple(families))
        t = event
    raise NotPseudoEffective("chamber walk did not terminate (catalog defect?)")


def walk_ray(origin: DivClass, direction: DivClass,
             cat: NegCurveCatalog) -> ChamberWalk:
    """Chamber walk along origin - t*direction starting from a nef, big class."""
    if not is_nef(origin, cat):
        raise NotNef(f"walk origin {origin!r} is not nef against the catalog")
    if decompose(origin, cat).volume == 0:
        raise NotBig(f"walk origin {origin!r} is not big")
    walk = _ray_walk(origin, direction, cat)
    _check_frontier(walk, cat)
    return walk


def _check_frontier(walk: ChamberWalk, cat: NegCurveCatalog):
    if cat.complete:
        return
    for sup in walk.supports:
        for c in sup:
            if c.d == cat.d_max:
                raise CatalogInsufficient(
                    f"walk support reached the catalog degree bound d_max={cat.d_max}; "
                    "regenerate with a larger bound")


def pseff_threshold(origin: DivClass, direction: DivClass, cat: NegCurveCatalog):
    """sup { t >= 0 : origin - t*direction is pseudoeffective }: the volume
    root at the end of the chamber walk.  Exact rational, AlgNum, or
    UNBOUNDED."""
    if decompose(origin, cat).volume == 0:
        raise NotBig(f"{origin!r} is not big")
    walk = _ray_walk(origin, direction, cat)
    _check_frontier(walk, cat)
    return walk.end_t
