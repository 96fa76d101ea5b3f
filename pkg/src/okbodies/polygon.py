"""Exact rational convex polygons in the plane (possibly degenerate)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .rational import fmt_rational, parse_rational


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class Polygon:
    """Convex polygon with exact rational vertices, counterclockwise.

    Degenerate bodies (a segment or a single point) are allowed and keep the
    same containment and area semantics.
    """

    vertices: tuple

    def __init__(self, vertices):
        pts = [(Fraction(x), Fraction(y)) for x, y in vertices]
        object.__setattr__(self, "vertices", tuple(_clean(pts)))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def is_degenerate(self) -> bool:
        return len(self.vertices) < 3

    def area(self) -> Fraction:
        verts = self.vertices
        if len(verts) < 3:
            return Fraction(0)
        acc = Fraction(0)
        for i in range(len(verts)):
            x1, y1 = verts[i]
            x2, y2 = verts[(i + 1) % len(verts)]
            acc += x1 * y2 - x2 * y1
        return acc / 2

    def contains_point(self, point) -> bool:
        p = (Fraction(point[0]), Fraction(point[1]))
        verts = self.vertices
        if len(verts) == 0:
            return False
        if len(verts) == 1:
            return p == verts[0]
        if len(verts) == 2:
            a, b = verts
            if _cross(a, b, p) != 0:
                return False
            return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
                    and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))
        for i in range(len(verts)):
            if _cross(verts[i], verts[(i + 1) % len(verts)], p) < 0:
                return False
        return True

    def contains_polygon(self, other: "Polygon") -> bool:
        return all(self.contains_point(v) for v in other.vertices)

    def edge_lines(self) -> tuple:
        """Primitive integer triples (a, b, c) with the interior on
        a*x + b*y <= c, one per edge, canonically comparable."""
        verts = self.vertices
        if len(verts) < 2:
            return ()
        lines = []
        m = len(verts)
        for i in range(m if m > 2 else 1):
            (x1, y1), (x2, y2) = verts[i], verts[(i + 1) % m]
            a = y2 - y1
            b = x1 - x2
            c = a * x1 + b * y1
            den = (a.denominator * b.denominator * c.denominator)
            ai, bi, ci = (int(a * den), int(b * den), int(c * den))
            g = gcd(gcd(abs(ai), abs(bi)), abs(ci)) or 1
            lines.append((ai // g, bi // g, ci // g))
        return tuple(sorted(set(lines)))

    def canonical(self) -> "Polygon":
        """Rotate the vertex cycle to start at the lexicographic minimum."""
        verts = self.vertices
        if len(verts) <= 1:
            return self
        k = min(range(len(verts)), key=lambda i: verts[i])
        return Polygon(verts[k:] + verts[:k])

    def same_shape(self, other: "Polygon") -> bool:
        return self.canonical().vertices == other.canonical().vertices

    def map_affine(self, fn) -> "Polygon":
        """Apply an orientation-preserving affine map to every vertex."""
        return Polygon([fn(v) for v in self.vertices])

    def combinatorial_key(self):
        """Vertex count plus sorted primitive edge directions; used to detect
        changes of facet structure between neighbouring slices."""
        dirs = sorted({(a, b) for a, b, _ in self.edge_lines()})
        return (len(self.vertices), tuple(dirs))

    def to_json(self) -> list:
        return [[fmt_rational(x), fmt_rational(y)] for x, y in self.vertices]

    @classmethod
    def from_json(cls, data) -> "Polygon":
        return cls([(parse_rational(x), parse_rational(y)) for x, y in data])

    def __repr__(self):
        pts = ", ".join(f"({fmt_rational(x)}, {fmt_rational(y)})"
                        for x, y in self.vertices)
        return f"Polygon[{pts}]"


def _clean(points):
    """Deduplicate and drop collinear vertices; verify convex CCW order."""
    if not points:
        return []
    # drop consecutive duplicates (cyclically)
    pts = [points[0]]
    for p in points[1:]:
        if p != pts[-1]:
            pts.append(p)
    if len(pts) > 1 and pts[0] == pts[-1]:
        pts.pop()
    if len(pts) <= 2:
        return pts
    # drop collinear middle vertices cyclically
    changed = True
    while changed and len(pts) > 2:
        changed = False
        out = []
        m = len(pts)
        for i in range(m):
            if _cross(pts[i - 1], pts[i], pts[(i + 1) % m]) == 0:
                changed = True
            else:
                out.append(pts[i])
        pts = out
    if len(pts) <= 2:
        # fully collinear input: keep the extreme points of the segment
        if len(pts) < 2:
            lo = min(points)
            hi = max(points)
            return [lo] if lo == hi else [lo, hi]
        return pts
    for i in range(len(pts)):
        if _cross(pts[i - 1], pts[i], pts[(i + 1) % len(pts)]) < 0:
            raise ValueError(f"vertices are not in convex CCW position: {points}")
    return pts
