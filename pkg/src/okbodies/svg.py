"""Minimal SVG emitter.  Plots are decorated with ``data-*`` attributes
carrying the exact rational coordinates, so rendered figures remain
machine-checkable."""

from __future__ import annotations

from fractions import Fraction

from .rational import fmt_rational

_SIZE = 420
_PAD = 30


def _scaler(xs, ys):
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)
    span_x = xmax - xmin or Fraction(1)
    span_y = ymax - ymin or Fraction(1)
    span = max(span_x, span_y)

    def to_px(p):
        x = _PAD + float((p[0] - xmin) / span) * (_SIZE - 2 * _PAD)
        y = _SIZE - _PAD - float((p[1] - ymin) / span) * (_SIZE - 2 * _PAD)
        return f"{x:.3f},{y:.3f}"

    return to_px


def _document(content: str) -> str:
    return (f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" '
            f'height="{_SIZE}" viewBox="0 0 {_SIZE} {_SIZE}">\n{content}\n</svg>\n')


def polygon_svg(polygons, labels=None) -> str:
    """Nested polygons, outermost first; exact vertices in data-vertices."""
    all_pts = [v for poly in polygons for v in poly.vertices]
    if not all_pts:
        return _document("<!-- empty -->")
    to_px = _scaler([p[0] for p in all_pts] + [0], [p[1] for p in all_pts] + [0])
    parts = []
    n = max(len(polygons), 1)
    for i, poly in enumerate(polygons):
        pts = " ".join(to_px(v) for v in poly.vertices)
        exact = ";".join(f"{fmt_rational(x)},{fmt_rational(y)}"
                         for x, y in poly.vertices)
        label = labels[i] if labels else str(i)
        shade = 0.15 + 0.75 * (i / n)
        parts.append(
            f'<polygon points="{pts}" fill="rgb(40,90,170)" '
            f'fill-opacity="{shade:.3f}" stroke="black" stroke-width="0.6" '
            f'data-label="{label}" data-vertices="{exact}"/>')
    return _document("\n".join(parts))


def walk_svg(walk) -> str:
    """Volume of the positive part against the ray parameter, one quadratic
    arc per chamber, sampled for display with exact breakpoints attached."""
    end = walk.end_t
    if not isinstance(end, Fraction):
        lo, hi = (end.interval(32) if hasattr(end, "interval")
                  else (walk.breakpoints[-1] + 1, walk.breakpoints[-1] + 1))
        end = hi
    ts = list(walk.breakpoints) + [end]
    samples = []
    for i, fam in enumerate(walk.families):
        a, b = ts[i], ts[i + 1]
        for k in range(9):
            t = a + (b - a) * Fraction(k, 8)
            p = fam.positive_at(t)
            samples.append((t, p.dot(p)))
    to_px = _scaler([s[0] for s in samples], [s[1] for s in samples] + [0])
    pts = " ".join(to_px(s) for s in samples)
    breaks = ";".join(fmt_rational(t) for t in walk.breakpoints)
    content = (f'<polyline points="{pts}" fill="none" stroke="rgb(170,60,40)" '
               f'stroke-width="1.4" data-breakpoints="{breaks}"/>')
    return _document(content)
