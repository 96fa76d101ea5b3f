"""Helpers for exact rational I/O: every number crossing the API boundary is
a string "p/q" (or a plain integer string)."""

from __future__ import annotations

from fractions import Fraction


def parse_rational(text: str) -> Fraction:
    """Parse "p/q", "n" or a decimal literal into an exact Fraction."""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc


def fmt_rational(value) -> str:
    """Render a Fraction or int as "p/q" (or "n" when integral)."""
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def coerce_coeff(value):
    """Normalize a coefficient to int or Fraction; floats are rejected.

    Fractions with denominator 1 collapse to int so that equal classes hash
    equally regardless of how they were built.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a divisor coefficient")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        return coerce_coeff(parse_rational(value))
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass Fraction, int or 'p/q'")
    raise TypeError(f"unsupported coefficient type: {type(value)!r}")
