"""Deterministic text renderings: CSV tables and a plain SVG polyline plot.

Reals are written as 64-bit floats with 17 significant digits, which
round-trips exactly; integers are written in full.
"""

from __future__ import annotations

import io
import math
from typing import Iterable, Sequence

from .curve import AreaSegment, CurvatureSample, CurvePoint


def fmt_real(value) -> str:
    v = float(value)
    if v == 0:
        return "0"
    return format(v, ".17g")


def fmt_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, str)):
        return str(value)
    return fmt_real(value)


def csv_table(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(fmt_value(v) for v in row) + "\n")
    return buf.getvalue()


def plain_table(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    cells = [list(header)] + [[fmt_value(v) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    return "\n".join(lines) + "\n"


def samples_csv(points: Iterable[CurvePoint]) -> str:
    return csv_table(("t", "x", "y"), ((p.t, p.x, p.y) for p in points))


def areas_rows(segments: Iterable[AreaSegment]) -> list[tuple]:
    return [(s.n, s.closed_form, s.quadrature, s.abs_diff) for s in segments]


AREA_HEADER = ("n", "closed_form", "quadrature", "abs_diff")


def areas_csv(segments: Iterable[AreaSegment]) -> str:
    return csv_table(AREA_HEADER, areas_rows(segments))


def curvature_csv(samples: Iterable[CurvatureSample]) -> str:
    return csv_table(("t", "kappa"), ((s.t, s.kappa) for s in samples))


SVG_WIDTH = 800.0
SVG_MIN_HEIGHT = 200.0
SVG_MAX_HEIGHT = 2400.0
MARGIN = 0.05


def _num(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_svg(points: Sequence[CurvePoint], crossings: Sequence[CurvePoint] = (),
               stroke: str = "#1f4e9c") -> str:
    """One polyline for the curve, two axis lines, a 2px circle per crossing.

    The data bounding box (axes included) is padded by 5% on every side and
    mapped onto a canvas 800 units wide.  Scales are equal unless the data
    is so flat or tall that the height would leave [200, 2400].
    """
    xs = [float(p.x) for p in points]
    ys = [float(p.y) for p in points]
    x_lo, x_hi = min(xs + [0.0]), max(xs + [0.0])
    y_lo, y_hi = min(ys + [0.0]), max(ys + [0.0])
    dx = (x_hi - x_lo) or 1.0
    dy = (y_hi - y_lo) or 1.0
    x_lo, x_hi = x_lo - MARGIN * dx, x_hi + MARGIN * dx
    y_lo, y_hi = y_lo - MARGIN * dy, y_hi + MARGIN * dy
    w = SVG_WIDTH
    h = min(max(w * (y_hi - y_lo) / (x_hi - x_lo), SVG_MIN_HEIGHT), SVG_MAX_HEIGHT)
    sx = w / (x_hi - x_lo)
    sy = h / (y_hi - y_lo)

    def px(x, y):
        return (x - x_lo) * sx, (y_hi - y) * sy

    ox, oy = px(0.0, 0.0)
    poly = " ".join(f"{_num(a)},{_num(b)}" for a, b in (px(x, y) for x, y in zip(xs, ys))
                    if math.isfinite(a) and math.isfinite(b))
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_num(w)}" height="{_num(h)}" '
        f'viewBox="0 0 {_num(w)} {_num(h)}">',
        f'<line x1="0" y1="{_num(oy)}" x2="{_num(w)}" y2="{_num(oy)}" stroke="#888" stroke-width="1"/>',
        f'<line x1="{_num(ox)}" y1="0" x2="{_num(ox)}" y2="{_num(h)}" stroke="#888" stroke-width="1"/>',
        f'<polyline fill="none" stroke="{stroke}" stroke-width="1.5" points="{poly}"/>',
    ]
    for c in crossings:
        cx, cy = px(float(c.x), float(c.y))
        out.append(f'<circle cx="{_num(cx)}" cy="{_num(cy)}" r="2" fill="#c0392b"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
