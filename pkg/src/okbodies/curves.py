"""Catalog of classes of irreducible negative curves on Bl_s(P^2).

For very general points the irreducible curves of negative self-intersection
are exactly the (-1)-classes: integral classes C with C.C = C.K = -1 (this is
a theorem for s <= 9 and the expected picture in general).  The catalog is
the orbit of the exceptional classes (plus the lines through two points)
under coordinate permutations and the quadratic Cremona reflection

    (d; m1, m2, m3, ...) -> (2d - m1 - m2 - m3; d - m2 - m3, d - m1 - m3,
                             d - m1 - m2, ...),

pruned at a degree bound.  Both generators preserve the pairing and the
canonical class, and repeated reduction on the three largest multiplicities
strictly decreases degree, so a breadth-first search from the seeds finds
every (-1)-class of degree <= d_max.  For s <= 8 the search exhausts (finite
root system) and the catalog is complete in every degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import MemoryCapExceeded, NonIntegralClass
from .lattice import DivClass, SurfaceModel


def is_neg_class(c: DivClass) -> bool:
    """True iff C.C = -1 and C.K = -1 (canonical degree -1)."""
    if not c.is_integral():
        raise NonIntegralClass(f"negative-curve test needs integer coefficients: {c!r}")
    k = DivClass(-3, (-1,) * c.s)
    return c.dot(c) == -1 and c.dot(k) == -1


def _cremona_triple(d, m, i, j, k):
    a, b, c = m[i], m[j], m[k]
    d2 = 2 * d - a - b - c
    m2 = list(m)
    m2[i] = d - b - c
    m2[j] = d - a - c
    m2[k] = d - a - b
    return d2, tuple(m2)


def _distinct_permutations(values: Sequence[int]) -> Iterator[tuple]:
    """All distinct orderings of a multiset (classic counter recursion)."""
    from collections import Counter

    counts = Counter(values)
    keys = sorted(counts)
    n = len(values)
    buf = [0] * n

    def rec(pos):
        if pos == n:
            yield tuple(buf)
            return
        for v in keys:
            if counts[v]:
                counts[v] -= 1
                buf[pos] = v
                yield from rec(pos + 1)
                counts[v] += 1

    yield from rec(0)


@dataclass(frozen=True)
class NegCurveCatalog:
    """All (-1)-classes of degree <= d_max, as full classes (not orbits).

    ``complete`` is True when the generating search exhausted without ever
    pruning at the degree bound; in that case the catalog lists every
    negative curve class on the surface, in any degree.
    """

    s: int
    d_max: int
    entries: tuple = field(default_factory=tuple)
    complete: bool = False

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __contains__(self, c: DivClass):
        return c in set(self.entries)

    def by_degree(self, d: int):
        return [c for c in self.entries if c.d == d]

    def max_degree(self) -> int:
        return max((int(c.d) for c in self.entries), default=0)

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "d_max": self.d_max,
            "complete": self.complete,
            "entries": [c.to_json() for c in self.entries],
        }

    @classmethod
    def from_json(cls, data: dict) -> "NegCurveCatalog":
        entries = tuple(sorted((DivClass.from_json(e) for e in data["entries"]),
                               key=DivClass.sort_key))
        return cls(int(data["s"]), int(data["d_max"]), entries,
                   bool(data.get("complete", False)))


def generate_catalog(surface: SurfaceModel, d_max: int,
                     max_entries: int = 500_000) -> NegCurveCatalog:
    """Breadth-first orbit of the seed classes under permutations and Cremona.

    The search runs on sorted multiplicity types; permutations are expanded
    explicitly at the end (the catalog stores full classes).  ``max_entries``
    caps the expansion to keep memory bounded.
    """
    if d_max < 0:
        raise ValueError("d_max must be >= 0")
    s = surface.s

    seeds = set()
    pruned = False
    if s >= 1:
        seeds.add((0, tuple(sorted([-1] + [0] * (s - 1), reverse=True))))
    if s >= 2:
        if d_max >= 1:
            seeds.add((1, tuple(sorted([1, 1] + [0] * (s - 2), reverse=True))))
        else:
            pruned = True  # the line through two points exists in degree 1
    seen = set(seeds)
    frontier = list(seeds)
    from itertools import combinations

    triples = list(combinations(range(s), 3)) if s >= 3 else []
    while frontier:
        nxt = []
        for d, m in frontier:
            for i, j, k in triples:
                d2, m2 = _cremona_triple(d, m, i, j, k)
                if d2 < 0:
                    continue
                if d2 > d_max:
                    pruned = True
                    continue
                key = (d2, tuple(sorted(m2, reverse=True)))
                if key not in seen:
                    seen.add(key)
                    nxt.append(key)
        frontier = nxt

    entries = []
    for d, m in sorted(seen):
        for perm in _distinct_permutations(m):
            entries.append(DivClass(d, perm))
            if len(entries) > max_entries:
                raise MemoryCapExceeded(
                    f"catalog for s={s}, d_max={d_max} exceeds {max_entries} entries")
    entries.sort(key=DivClass.sort_key)
    return NegCurveCatalog(s, d_max, tuple(entries), complete=not pruned)
