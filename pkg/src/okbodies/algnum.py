"""Exact arithmetic in multi-quadratic extensions Q(sqrt(r1), ..., sqrt(rk)).

Elements are stored as coordinates over the basis {prod_{i in T} sqrt(r_i)}
indexed by subsets T.  The generators are kept multiplicatively independent
modulo squares (no subset product of them is a rational square), which makes
the basis linearly independent over Q, so equality with zero is a coordinate
check.  The sign of a nonzero element is decided by rational interval
arithmetic with doubling precision, which terminates because the element is
provably nonzero.

No radicand is ever factored: dependence of a new radicand on the existing
generators is tested with perfect-square checks only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional

from .rational import fmt_rational


def rational_sqrt(value: Fraction) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or None if irrational."""
    value = Fraction(value)
    if value < 0:
        return None
    if value == 0:
        return Fraction(0)
    rn = isqrt(value.numerator)
    rd = isqrt(value.denominator)
    if rn * rn == value.numerator and rd * rd == value.denominator:
        return Fraction(rn, rd)
    return None


def sqrt_bounds(value: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Rational enclosure lo <= sqrt(value) <= hi with hi - lo <= 2^-bits-ish."""
    value = Fraction(value)
    if value < 0:
        raise ValueError("negative radicand")
    if value == 0:
        return Fraction(0), Fraction(0)
    # sqrt(p/q) = sqrt(p*q)/q; scale by 4^bits so isqrt gives 2^-bits accuracy
    n = value.numerator * value.denominator
    scale = 1 << bits
    root = isqrt(n * scale * scale)
    lo = Fraction(root, value.denominator * scale)
    hi = Fraction(root + 1, value.denominator * scale)
    return lo, hi


class SqrtField:
    """The field Q(sqrt(r1), ..., sqrt(rk)) for independent radicands r_i > 0."""

    def __init__(self):
        self.radicands: list[Fraction] = []
        self._cache_bits = 0
        self._cache: list[tuple[Fraction, Fraction]] = []

    @classmethod
    def for_radicands(cls, radicands) -> "SqrtField":
        field = cls()
        for r in radicands:
            field.sqrt(r)
        return field

    # -- construction -----------------------------------------------------

    def rational(self, value) -> "AlgNum":
        return AlgNum(self, {frozenset(): Fraction(value)})

    def zero(self) -> "AlgNum":
        return AlgNum(self, {})

    def sqrt(self, value) -> "AlgNum":
        """sqrt of a nonnegative rational, adjoining a generator if needed."""
        value = Fraction(value)
        if value < 0:
            raise ValueError("cannot adjoin the square root of a negative rational")
        exact = rational_sqrt(value)
        if exact is not None:
            return self.rational(exact)
        rep = self._find_representation(value)
        if rep is not None:
            subset, coeff = rep
            return AlgNum(self, {subset: coeff})
        self.radicands.append(value)
        self._cache_bits = 0
        idx = len(self.radicands) - 1
        return AlgNum(self, {frozenset([idx]): Fraction(1)})

    def _find_representation(self, value: Fraction):
        """Find T, q with sqrt(value) = q * prod_{i in T} sqrt(r_i), if any."""
        from itertools import combinations

        k = len(self.radicands)
        for size in range(1, k + 1):
            for subset in combinations(range(k), size):
                prod = Fraction(1)
                for i in subset:
                    prod *= self.radicands[i]
                q = rational_sqrt(value * prod)
                if q is not None:
                    # sqrt(value) = sqrt(value*prod)/prod * sqrt(prod)
                    return frozenset(subset), q / prod
        return None

    # -- numeric enclosures ------------------------------------------------

    def generator_bounds(self, bits: int) -> list[tuple[Fraction, Fraction]]:
        if bits > self._cache_bits or len(self._cache) != len(self.radicands):
            self._cache = [sqrt_bounds(r, bits) for r in self.radicands]
            self._cache_bits = bits
        return self._cache


def _mul_interval(a, b):
    candidates = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(candidates), max(candidates)


@dataclass(frozen=True)
class AlgNum:
    """An element of a SqrtField, as basis coordinates subset -> Fraction."""

    field: SqrtField
    coords: dict

    def __init__(self, field: SqrtField, coords: dict):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords",
                           {k: Fraction(v) for k, v in coords.items() if v != 0})

    # -- ring structure -----------------------------------------------------

    def _coerce(self, other) -> "AlgNum":
        if isinstance(other, AlgNum):
            if other.field is self.field:
                return other
            return other.rebase(self.field)
        return AlgNum(self.field, {frozenset(): Fraction(other)})

    def rebase(self, field: SqrtField) -> "AlgNum":
        """Re-express this element in another field (adjoining as needed)."""
        out = field.zero()
        for subset, coeff in self.coords.items():
            term = field.rational(coeff)
            for i in subset:
                term = term * field.sqrt(self.field.radicands[i])
            out = out + term
        return out

    def __add__(self, other):
        other = self._coerce(other)
        coords = dict(self.coords)
        for k, v in other.coords.items():
            coords[k] = coords.get(k, Fraction(0)) + v
        return AlgNum(self.field, coords)

    __radd__ = __add__

    def __neg__(self):
        return AlgNum(self.field, {k: -v for k, v in self.coords.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + self._coerce(other)

    def __mul__(self, other):
        other = self._coerce(other)
        rads = self.field.radicands
        coords: dict = {}
        for t1, c1 in self.coords.items():
            for t2, c2 in other.coords.items():
                coeff = c1 * c2
                for i in t1 & t2:
                    coeff *= rads[i]
                key = t1 ^ t2
                coords[key] = coords.get(key, Fraction(0)) + coeff
        return AlgNum(self.field, coords)

    __rmul__ = __mul__

    def conjugate(self, index: int) -> "AlgNum":
        """Flip the sign of sqrt(r_index)."""
        return AlgNum(self.field,
                      {k: (-v if index in k else v) for k, v in self.coords.items()})

    def inverse(self) -> "AlgNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero algebraic number")
        used = set()
        for subset in self.coords:
            used |= subset
        if not used:
            return AlgNum(self.field, {frozenset(): 1 / self.coords[frozenset()]})
        i = max(used)
        conj = self.conjugate(i)
        norm = self * conj  # lives in the subfield without generator i
        return conj * norm.inverse()

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        out = self.field.rational(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- exact decisions -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coords

    def is_rational(self) -> bool:
        return all(not k for k in self.coords)

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coords.get(frozenset(), Fraction(0))

    def interval(self, bits: int) -> tuple[Fraction, Fraction]:
        gens = self.field.generator_bounds(bits)
        lo = Fraction(0)
        hi = Fraction(0)
        for subset, coeff in self.coords.items():
            iv = (Fraction(1), Fraction(1))
            for i in sorted(subset):
                iv = _mul_interval(iv, gens[i])
            iv = _mul_interval(iv, (coeff, coeff))
            lo += iv[0]
            hi += iv[1]
        return lo, hi

    def sign(self) -> int:
        """Exact sign: -1, 0 or +1.  Terminates because zero is decided
        symbolically (basis independence) before any numeric refinement."""
        if self.is_zero():
            return 0
        bits = 32
        while True:
            lo, hi = self.interval(bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2
            if bits > 1 << 20:
                raise RuntimeError("sign refinement failed to converge")

    def __eq__(self, other):
        try:
            return (self - self._coerce(other)).is_zero()
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(frozenset((k, v) for k, v in self.coords.items()))

    def __lt__(self, other):
        return (self - self._coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - self._coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - self._coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - self._coerce(other)).sign() >= 0

    def __float__(self):
        lo, hi = self.interval(64)
        return float((lo + hi) / 2)

    # -- presentation ---------------------------------------------------------

    def to_json(self) -> dict:
        terms = []
        for subset, coeff in sorted(self.coords.items(), key=lambda kv: sorted(kv[0])):
            rad = Fraction(1)
            for i in subset:
                rad *= self.field.radicands[i]
            terms.append({"coeff": fmt_rational(coeff), "radicand": fmt_rational(rad)})
        return {"terms": terms, "approx": f"{float(self):.12g}"}

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for subset, coeff in sorted(self.coords.items(), key=lambda kv: sorted(kv[0])):
            if not subset:
                parts.append(fmt_rational(coeff))
            else:
                rad = Fraction(1)
                for i in subset:
                    rad *= self.field.radicands[i]
                parts.append(f"{fmt_rational(coeff)}*sqrt({fmt_rational(rad)})")
        return " + ".join(parts)


def alg_sqrt(value, field: Optional[SqrtField] = None) -> AlgNum:
    """Square root of a nonnegative rational as an AlgNum (fresh field if None)."""
    field = field or SqrtField()
    return field.sqrt(Fraction(value))
