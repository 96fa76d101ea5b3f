"""Newton-Okounkov bodies and Okounkov functions on blow-ups of P^2.

The flag is a general line together with a general point on it.  The body of
a big class D is computed by slicing along the flag curve: on each Zariski
chamber of the ray D - u*(flag curve) the profile functions

    alpha(u) = order of vanishing at the flag point of the restricted
               negative part (zero for a general flag unless the slice
               construction below introduces the exceptional curve over the
               flag point),
    beta(u)  = alpha(u) + P_u . (flag curve)

are affine, and the body is the region between them.

The Okounkov function of the order-of-vanishing filtration at the flag point
is represented by its superlevel slices.  The slice at level t is realized
on the blow-up at the flag point: sections vanishing to order >= kt give the
graded series of pi*D - t*F, and with the induced flag (proper transform of
the line, its intersection with F) the valuation vectors transform by the
unimodular shear (a, y) -> (a, y - a + t).  Slicing that model and shearing
back yields exact nested polygons.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Optional

from .algnum import AlgNum
from .curves import NegCurveCatalog
from .errors import IrrationalThreshold, NotBig
from .lattice import DivClass, SurfaceModel
from .polygon import Polygon
from .rational import fmt_rational
from .zariski import (UNBOUNDED, ChamberWalk, _check_frontier, _ray_walk,
                      decompose, pseff_threshold)

DEFAULT_TOL = Fraction(1, 1024)


@dataclass(frozen=True)
class Flag:
    """A general-line-point flag on Bl_s(P^2): a line avoiding all blown-up
    points and catalog curves' special positions, and a general point on it.
    Generality is an assumption recorded here, not a computed fact."""

    s: int
    kind: str = "general-line-point"

    def __post_init__(self):
        if self.kind != "general-line-point":
            raise ValueError("only general line-point flags are supported")


@dataclass(frozen=True)
class BodyProfile:
    """Piecewise-affine profile of a body: alpha and beta per chamber.

    ``breakpoints`` has one more entry than the piece lists; piece i covers
    [breakpoints[i], breakpoints[i+1]] and stores (value at 0, slope)."""

    breakpoints: tuple
    alpha_pieces: tuple
    beta_pieces: tuple

    def _piece(self, t: Fraction) -> int:
        bp = self.breakpoints
        if not bp[0] <= t <= bp[-1]:
            raise ValueError(f"t={t} outside [{bp[0]}, {bp[-1]}]")
        for i in range(len(bp) - 2, -1, -1):
            if t >= bp[i]:
                return i
        return 0

    def alpha(self, t) -> Fraction:
        c0, c1 = self.alpha_pieces[self._piece(Fraction(t))]
        return c0 + c1 * Fraction(t)

    def beta(self, t) -> Fraction:
        c0, c1 = self.beta_pieces[self._piece(Fraction(t))]
        return c0 + c1 * Fraction(t)

    def area(self) -> Fraction:
        acc = Fraction(0)
        for i in range(len(self.alpha_pieces)):
            lo, hi = self.breakpoints[i], self.breakpoints[i + 1]
            a0, a1 = self.alpha_pieces[i]
            b0, b1 = self.beta_pieces[i]
            width_lo = (b0 + b1 * lo) - (a0 + a1 * lo)
            width_hi = (b0 + b1 * hi) - (a0 + a1 * hi)
            acc += (width_lo + width_hi) * (hi - lo) / 2
        return acc

    def to_json(self) -> dict:
        return {
            "breakpoints": [fmt_rational(t) for t in self.breakpoints],
            "alpha": [[fmt_rational(t), fmt_rational(self.alpha(t))]
                      for t in self.breakpoints],
            "beta": [[fmt_rational(t), fmt_rational(self.beta(t))]
                     for t in self.breakpoints],
        }


@dataclass(frozen=True)
class Body:
    """A Newton-Okounkov body: exact polygon plus its slicing profile."""

    divisor: DivClass
    polygon: Polygon
    profile: BodyProfile
    volume: Fraction
    certified_dmax: int
    catalog_complete: bool = False

    def area(self) -> Fraction:
        return self.polygon.area()

    def to_json(self) -> dict:
        return {
            "divisor": self.divisor.to_json(),
            "vertices": self.polygon.to_json(),
            "area": fmt_rational(self.area()),
            "volume": fmt_rational(self.volume),
            "profile": self.profile.to_json(),
            "certified_dmax": self.certified_dmax,
            "catalog_complete": self.catalog_complete,
        }


def _profile_from_walk(walk: ChamberWalk, flag_curve: DivClass,
                       alpha_curve: Optional[DivClass]) -> BodyProfile:
    """alpha tracks the coefficient of ``alpha_curve`` in the negative part
    (zero when absent); beta = alpha + P_u . flag_curve."""
    end = walk.end_t
    if end is UNBOUNDED:
        raise IrrationalThreshold("body slicing never exits the big cone")
    if isinstance(end, AlgNum):
        raise IrrationalThreshold(
            "body has an irrational slicing threshold; exact polygon "
            "representation is unavailable", end)
    breakpoints = list(walk.breakpoints) + [end]
    alpha_pieces = []
    beta_pieces = []
    for fam in walk.families:
        assert flag_curve not in fam.support, \
            "flag curve entered a negative part; the flag is not general"
        a0, a1 = Fraction(0), Fraction(0)
        if alpha_curve is not None:
            for c, c0, c1 in zip(fam.support, fam.a0, fam.a1):
                if c == alpha_curve:
                    a0, a1 = Fraction(c0), Fraction(c1)
                    break
        alpha_pieces.append((a0, a1))
        b0 = fam.p0.dot(flag_curve)
        b1 = fam.p1.dot(flag_curve)
        beta_pieces.append((a0 + b0, a1 + b1))
    return BodyProfile(tuple(breakpoints), tuple(alpha_pieces), tuple(beta_pieces))


def _polygon_from_profile(profile: BodyProfile) -> Polygon:
    lower = [(t, profile.alpha(t)) for t in profile.breakpoints]
    upper = [(t, profile.beta(t)) for t in reversed(profile.breakpoints)]
    return Polygon(lower + upper)


def okounkov_body(divisor: DivClass, flag: Optional[Flag],
                  cat: NegCurveCatalog) -> Body:
    """Newton-Okounkov body of a big class with respect to a general
    line-point flag.  Exact; raises NotBig for volume-zero classes and
    IrrationalThreshold when the slicing exit is a quadratic irrational."""
    flag = flag or Flag(divisor.s)
    if flag.s != divisor.s or cat.s != divisor.s:
        raise ValueError("divisor, flag and catalog must share the same s")
    dec = decompose(divisor, cat)
    if dec.volume <= 0:
        raise NotBig(f"{divisor!r} has volume {dec.volume}")
    flag_curve = DivClass(1, (0,) * divisor.s)
    walk = _ray_walk(divisor, flag_curve, cat)
    _check_frontier(walk, cat)
    profile = _profile_from_walk(walk, flag_curve, alpha_curve=None)
    return Body(divisor, _polygon_from_profile(profile), profile,
                dec.volume, cat.d_max, cat.complete)


# -- the Okounkov function of ord at the flag point ---------------------------


@dataclass(frozen=True)
class PhiBracket:
    """Certified bracket for a value of the Okounkov function; ``outside``
    marks query points not in the body."""

    lo: object = None
    hi: object = None
    outside: bool = False

    def width(self):
        if self.outside or isinstance(self.hi, AlgNum):
            return None
        return self.hi - self.lo

    def to_json(self) -> dict:
        if self.outside:
            return {"outside": True}
        hi = self.hi.to_json() if isinstance(self.hi, AlgNum) else fmt_rational(self.hi)
        return {"outside": False, "lo": fmt_rational(self.lo), "hi": hi}


@dataclass(frozen=True)
class OkounkovSlices:
    """Superlevel slices of the Okounkov function of ord at the flag point.

    ``polygons[j]`` is the exact slice at parameter ``ts[j]``; slices are
    nested decreasingly and cover [0, e_max) with gaps of at most ``tol``
    between consecutive parameters (and up to e_max after the last)."""

    divisor: DivClass
    ts: tuple
    polygons: tuple
    e_max: object  # Fraction or AlgNum
    tol: Fraction
    certified_dmax: int
    catalog_complete: bool = False

    def query(self, point) -> PhiBracket:
        p = (Fraction(point[0]), Fraction(point[1]))
        if not self.polygons[0].contains_point(p):
            return PhiBracket(outside=True)
        lo_idx, hi_idx = 0, len(self.ts) - 1
        # nested slices: membership is a prefix property over ts
        if self.polygons[hi_idx].contains_point(p):
            return PhiBracket(self.ts[hi_idx], self.e_max)
        while hi_idx - lo_idx > 1:
            mid = (lo_idx + hi_idx) // 2
            if self.polygons[mid].contains_point(p):
                lo_idx = mid
            else:
                hi_idx = mid
        return PhiBracket(self.ts[lo_idx], self.ts[hi_idx])

    def deepest_nonempty(self) -> Fraction:
        return self.ts[-1]

    def to_json(self) -> dict:
        emax = (self.e_max.to_json() if isinstance(self.e_max, AlgNum)
                else fmt_rational(self.e_max))
        return {
            "divisor": self.divisor.to_json(),
            "ts": [fmt_rational(t) for t in self.ts],
            "polygons": [p.to_json() for p in self.polygons],
            "e_max": emax,
            "tol": fmt_rational(self.tol),
            "certified_dmax": self.certified_dmax,
            "catalog_complete": self.catalog_complete,
        }


def _slice_polygon(div_ext: DivClass, cat_ext: NegCurveCatalog,
                   t: Fraction) -> Polygon:
    """Exact slice polygon at level t, via the blow-up at the flag point.

    ``div_ext`` is the pullback of the divisor to the model with the flag
    point blown up last (exceptional curve F).  The flag curve upstairs is
    the proper transform H - F and the flag point is its intersection with
    F, so alpha picks up the coefficient of F in the negative parts.  The
    final shear returns to downstairs valuation coordinates.
    """
    s_ext = div_ext.s
    f_curve = DivClass(0, (0,) * (s_ext - 1) + (-1,))
    flag_curve = DivClass(1, (0,) * (s_ext - 1) + (1,))  # H - F
    slice_class = div_ext - f_curve.scale(t)  # pi*D - t*F has m_last = t
    walk = _ray_walk(slice_class, flag_curve, cat_ext)
    _check_frontier(walk, cat_ext)
    profile = _profile_from_walk(walk, flag_curve, alpha_curve=f_curve)
    upstairs = _polygon_from_profile(profile)
    return upstairs.map_affine(lambda v: (v[0], v[1] - v[0] + t))


def e_max(divisor: DivClass, cat_ext: NegCurveCatalog):
    """Largest normalized vanishing order at a general point: the
    pseudoeffective threshold of the pullback against the new exceptional."""
    if cat_ext.s != divisor.s + 1:
        raise ValueError("catalog must live on the model with the extra point "
                         f"(need s={divisor.s + 1}, got s={cat_ext.s})")
    div_ext = divisor.extended(1)
    direction = DivClass(0, (0,) * divisor.s + (-1,))
    return pseff_threshold(div_ext, direction, cat_ext)


def _rational_floor(value, tol: Fraction) -> Fraction:
    if isinstance(value, Fraction):
        return value
    bits = 16
    while True:
        lo, hi = value.interval(bits)
        if hi - lo <= tol / 4:
            return lo
        bits *= 2


def okounkov_function(divisor: DivClass, flag: Optional[Flag],
                      cat_ext: NegCurveCatalog,
                      tol: Fraction = DEFAULT_TOL) -> OkounkovSlices:
    """Superlevel slices of the Okounkov function of ord at the flag point.

    The slice parameters form a grid of spacing <= tol on [0, e_max),
    refined by bisection wherever the vertex combinatorics of neighbouring
    slices differ.  Every polygon is exact; only the placement of the
    combinatorial breakpoints is bracketed.
    """
    flag = flag or Flag(divisor.s)
    if flag.s != divisor.s:
        raise ValueError("flag does not match the divisor's surface")
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    emax = e_max(divisor, cat_ext)
    if emax is UNBOUNDED:
        raise IrrationalThreshold("filtration has no finite maximal jumping number")
    div_ext = divisor.extended(1)
    e_lo = _rational_floor(emax, tol)
    steps = max(1, ceil(e_lo / tol))
    ts = sorted({Fraction(i) * e_lo / steps for i in range(steps)})

    polygons = {t: _slice_polygon(div_ext, cat_ext, t) for t in ts}
    # refine where the facet structure changes, down to gaps of tol
    queue = list(zip(ts, ts[1:]))
    while queue:
        a, b = queue.pop()
        if b - a <= tol:
            continue
        if polygons[a].combinatorial_key() == polygons[b].combinatorial_key():
            continue
        mid = (a + b) / 2
        if mid not in polygons:
            polygons[mid] = _slice_polygon(div_ext, cat_ext, mid)
        queue.append((a, mid))
        queue.append((mid, b))

    ts = sorted(polygons)
    polys = [polygons[t] for t in ts]
    for j in range(len(ts) - 1):
        if not polys[j].contains_polygon(polys[j + 1]):
            raise AssertionError(
                f"slices are not nested between t={ts[j]} and t={ts[j + 1]}")
    return OkounkovSlices(divisor, tuple(ts), tuple(polys), emax, tol,
                          cat_ext.d_max, cat_ext.complete)


def query_phi(slices: OkounkovSlices, point) -> PhiBracket:
    """Certified bracket [phi_lo, phi_hi] for the Okounkov function at a
    rational point, or the distinguished outside result."""
    return slices.query(point)
