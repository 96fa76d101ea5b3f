"""Exact Picard-lattice arithmetic for blow-ups of the projective plane.

Classes live in Z*H + Z*E_1 + ... + Z*E_s with the signature-(1, s) pairing
H^2 = 1, E_i^2 = -1, H.E_i = E_i.E_j = 0 (i != j).  A class is stored as
(d; m_1, ..., m_s) and denotes d*H - sum_i m_i*E_i, so the effective
exceptional curve E_i is (0; 0, ..., -1, ..., 0) and the canonical class is
(-3; -1, ..., -1).  All coefficients are exact rationals; no floating point
enters any computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch
from .rational import coerce_coeff, fmt_rational, parse_rational


@dataclass(frozen=True)
class SurfaceModel:
    """Blow-up of the projective plane at ``s`` very general points.

    ``generality`` records the standing assumption that the points are very
    general; nothing in this artifact models special configurations.
    """

    s: int
    generality: bool = True

    def __post_init__(self):
        if self.s < 0:
            raise ValueError("number of blown-up points must be >= 0")

    @property
    def hyperplane(self) -> "DivClass":
        return DivClass(1, (0,) * self.s)

    def exceptional(self, i: int) -> "DivClass":
        """E_i as an effective curve class; ``i`` is 1-based like E_1..E_s."""
        if not 1 <= i <= self.s:
            raise ValueError(f"exceptional index {i} outside 1..{self.s}")
        m = [0] * self.s
        m[i - 1] = -1
        return DivClass(0, tuple(m))

    @property
    def sum_exceptional(self) -> "DivClass":
        """E_1 + ... + E_s."""
        return DivClass(0, (-1,) * self.s)

    @property
    def canonical(self) -> "DivClass":
        return DivClass(-3, (-1,) * self.s)

    def extended(self, extra: int = 1) -> "SurfaceModel":
        return SurfaceModel(self.s + extra, self.generality)


@dataclass(frozen=True)
class DivClass:
    """A divisor class (d; m_1, ..., m_s) = d*H - sum m_i E_i."""

    d: Fraction
    mults: tuple

    def __init__(self, d, mults: Iterable = ()):
        object.__setattr__(self, "d", coerce_coeff(d))
        object.__setattr__(self, "mults", tuple(coerce_coeff(m) for m in mults))

    @property
    def s(self) -> int:
        return len(self.mults)

    def dot(self, other: "DivClass"):
        if len(self.mults) != len(other.mults):
            raise DimensionMismatch(
                f"classes over different surfaces: s={self.s} vs s={other.s}")
        acc = self.d * other.d
        for a, b in zip(self.mults, other.mults):
            acc -= a * b
        return acc

    def self_intersection(self):
        return self.dot(self)

    def is_integral(self) -> bool:
        return isinstance(self.d, int) and all(isinstance(m, int) for m in self.mults)

    def is_zero(self) -> bool:
        return self.d == 0 and all(m == 0 for m in self.mults)

    def __add__(self, other: "DivClass") -> "DivClass":
        if len(self.mults) != len(other.mults):
            raise DimensionMismatch("cannot add classes over different surfaces")
        return DivClass(self.d + other.d,
                        tuple(a + b for a, b in zip(self.mults, other.mults)))

    def __sub__(self, other: "DivClass") -> "DivClass":
        if len(self.mults) != len(other.mults):
            raise DimensionMismatch("cannot subtract classes over different surfaces")
        return DivClass(self.d - other.d,
                        tuple(a - b for a, b in zip(self.mults, other.mults)))

    def __neg__(self) -> "DivClass":
        return DivClass(-self.d, tuple(-m for m in self.mults))

    def scale(self, c) -> "DivClass":
        c = coerce_coeff(c)
        return DivClass(c * self.d, tuple(c * m for m in self.mults))

    __mul__ = scale
    __rmul__ = scale

    def extended(self, extra: int = 1) -> "DivClass":
        """Pull back under blowing up ``extra`` further points."""
        return DivClass(self.d, self.mults + (0,) * extra)

    def sort_key(self):
        return (self.d, self.mults)

    # -- serialization: JSON arrays of basis coefficients (d, e_1, ..., e_s)
    #    with e_i the coefficient of E_i, i.e. e_i = -m_i.

    def to_json(self) -> list:
        return [fmt_rational(self.d)] + [fmt_rational(-m) for m in self.mults]

    @classmethod
    def from_json(cls, data: Sequence) -> "DivClass":
        if not data:
            raise ValueError("empty class vector")
        vals = [parse_rational(str(x)) for x in data]
        return cls(vals[0], tuple(-v for v in vals[1:]))

    def __repr__(self):
        body = ", ".join(fmt_rational(m) for m in self.mults)
        return f"({fmt_rational(self.d)}; {body})"


def intersect(a: DivClass, b: DivClass):
    """Intersection number d_a*d_b - sum_i m_{a,i}*m_{b,i}."""
    return a.dot(b)


def canonical_class(surface: SurfaceModel) -> DivClass:
    """The class -3H + E_1 + ... + E_s, of square 9 - s."""
    return surface.canonical


def symmetrize(div: DivClass) -> DivClass:
    """Replace a class by the sum over a full cyclic orbit of its
    multiplicities: (d; m_1..m_s) -> (s*d; M, ..., M) with M = sum m_i.

    Homogeneous classes map to a point on their own ray.
    """
    total = sum(div.mults, start=Fraction(0))
    return DivClass(len(div.mults) * Fraction(div.d), (total,) * len(div.mults))
