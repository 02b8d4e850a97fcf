"""Deterministic SVG drawings of folded layouts and quotient charts.

The geometry kernel works in mathematical coordinates (y up); this
module flips the y axis at emission time only.  Output sticks to a
small SVG 1.1 subset (path, polygon, circle, line) with no scripts or
external references, and identical inputs always produce identical
bytes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .errors import InvalidInputError, ParameterError
from .fold_core import FoldedLayout, Point
from .formulas import RatioReport

__all__ = ["RenderOptions", "render_table_figure", "to_svg"]

# fixed pastel fills cycled by layer so stacking order stays readable
_LAYER_FILLS = (
    "#a6cee3",
    "#fdbf6f",
    "#b2df8a",
    "#cab2d6",
    "#fb9a99",
    "#ffff99",
    "#d9d9d9",
    "#ccebc5",
)
_PANEL_STROKE = "#1f3044"
_CREASE_STROKE = "#c23b22"
_CENTERLINE_STROKE = "#2a62a8"
_CIRCLE_STROKE = "#5b5b5b"

_SERIES_STROKES = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#9467bd",
    "#ff7f0e",
    "#8c564b",
    "#17becf",
    "#7f7f7f",
    "#bcbd22",
)


@dataclass(frozen=True)
class RenderOptions:
    """Switches for layout drawings.

    ``epsilon_display`` shifts each panel by its layer index times this
    amount, so edges that coincide exactly in the fold stay visible as
    a stack.  ``scale`` is document units per length unit.
    """

    epsilon_display: float = 0.0
    show_creases: bool = True
    show_circumcircle: bool = False
    show_centerline: bool = False
    scale: float = 40.0

    def __post_init__(self):
        if not (isinstance(self.scale, (int, float)) and self.scale > 0):
            raise ParameterError("scale must be a positive number")
        if not (isinstance(self.epsilon_display, (int, float)) and self.epsilon_display >= 0):
            raise ParameterError("epsilon_display must be nonnegative")


def _num(x: float) -> str:
    text = "%.6g" % (x + 0.0)
    if text == "-0":
        return "0"
    return text


def _emit(x: float, y: float, scale: float) -> Tuple[str, str]:
    # the single place where the y axis flips to screen convention
    return _num(scale * x), _num(-scale * y)


def _displaced(panel, epsilon: float) -> List[Point]:
    dx = epsilon * panel.layer
    return [Point(v[0] + dx, v[1] + dx) for v in panel.vertices]


def _centerline_center(layout: FoldedLayout) -> Point:
    starts = [seg[0] for seg in layout.centerline]
    n = float(len(starts))
    return Point(sum(p[0] for p in starts) / n, sum(p[1] for p in starts) / n)


def _crease_segments(layout: FoldedLayout) -> List[Tuple[Point, Point]]:
    panels = layout.panels
    closed = layout.source is not None and layout.source.presentation == "closed"
    picked = panels if closed else panels[:-1]
    return [panel.side(1) for panel in picked]


def to_svg(layout: FoldedLayout, options: RenderOptions = RenderOptions()) -> str:
    """Draw a folded layout as an SVG document.

    Panels paint in ascending layer order so upper layers occlude
    lower ones; the viewport is the drawing bounding box plus a 5%
    margin on every side.
    """
    if not layout.panels:
        raise InvalidInputError("cannot render a layout with no panels")
    order = sorted(layout.panels, key=lambda panel: (panel.layer, panel.index))
    eps = options.epsilon_display

    xs: List[float] = []
    ys: List[float] = []
    for panel in order:
        for v in _displaced(panel, eps):
            xs.append(v[0])
            ys.append(v[1])
    center = _centerline_center(layout)
    radius = 0.0
    if options.show_circumcircle:
        radius = max(
            math.hypot(v[0] - center[0], v[1] - center[1])
            for panel in layout.panels
            for v in panel.vertices
        )
        xs += [center[0] - radius, center[0] + radius]
        ys += [center[1] - radius, center[1] + radius]

    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    pad_x = 0.05 * max(max_x - min_x, 1e-9)
    pad_y = 0.05 * max(max_y - min_y, 1e-9)
    min_x -= pad_x
    max_x += pad_x
    min_y -= pad_y
    max_y += pad_y

    s = options.scale
    view_w = s * (max_x - min_x)
    view_h = s * (max_y - min_y)
    # after the y flip the top of the viewport is -max_y
    view = "%s %s %s %s" % (_num(s * min_x), _num(-s * max_y), _num(view_w), _num(view_h))

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        'width="%s" height="%s" viewBox="%s">' % (_num(view_w), _num(view_h), view),
    ]

    if options.show_circumcircle:
        cx, cy = _emit(center[0], center[1], s)
        parts.append(
            '<circle cx="%s" cy="%s" r="%s" fill="none" stroke="%s" '
            'stroke-width="%s" stroke-dasharray="%s %s"/>'
            % (cx, cy, _num(s * radius), _CIRCLE_STROKE, _num(0.02 * s), _num(0.1 * s), _num(0.07 * s))
        )

    for panel in order:
        points = " ".join(
            "%s,%s" % _emit(v[0], v[1], s) for v in _displaced(panel, eps)
        )
        fill = _LAYER_FILLS[panel.layer % len(_LAYER_FILLS)]
        parts.append(
            '<polygon points="%s" fill="%s" fill-opacity="0.85" stroke="%s" '
            'stroke-width="%s" stroke-linejoin="round"/>'
            % (points, fill, _PANEL_STROKE, _num(0.025 * s))
        )

    if options.show_creases:
        for a, b in _crease_segments(layout):
            x1, y1 = _emit(a[0], a[1], s)
            x2, y2 = _emit(b[0], b[1], s)
            parts.append(
                '<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="%s" '
                'stroke-width="%s" stroke-dasharray="%s %s"/>'
                % (x1, y1, x2, y2, _CREASE_STROKE, _num(0.02 * s), _num(0.08 * s), _num(0.05 * s))
            )

    if options.show_centerline:
        for a, b in layout.centerline:
            x1, y1 = _emit(a[0], a[1], s)
            x2, y2 = _emit(b[0], b[1], s)
            parts.append(
                '<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="%s" stroke-width="%s"/>'
                % (x1, y1, x2, y2, _CENTERLINE_STROKE, _num(0.03 * s))
            )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _report_x(report: RatioReport) -> float:
    # fixed folds have no family parameter; place the shorts at their
    # knot's q and the rectangle fold at its crossing count
    if report.family.parameter is not None:
        return float(report.family.parameter)
    if report.params is not None:
        return float(report.params.q)
    return float(report.crossings)


def render_table_figure(reports: Sequence[RatioReport]) -> str:
    """Chart kusner quotients against the family parameter.

    One series per (family, presentation) pair, with horizontal guide
    lines at the two limit constants 4/pi and 2/pi.
    """
    if not reports:
        raise InvalidInputError("cannot chart an empty report list")

    series: dict = {}
    for report in reports:
        key = (report.family.tag, report.presentation)
        series.setdefault(key, []).append((_report_x(report), report.quotient))
    for points in series.values():
        points.sort()

    all_x = [x for pts in series.values() for x, _ in pts]
    all_y = [y for pts in series.values() for _, y in pts]
    guides = (4.0 / math.pi, 2.0 / math.pi)
    all_y += list(guides)

    min_x, max_x = min(all_x), max(all_x)
    min_y, max_y = min(all_y), max(all_y)
    span_x = max(max_x - min_x, 1e-9)
    span_y = max(max_y - min_y, 1e-9)

    width, height, margin = 640.0, 400.0, 40.0

    def place(x: float, y: float) -> Tuple[str, str]:
        px = margin + (x - min_x) / span_x * (width - 2 * margin)
        py = height - margin - (y - min_y) / span_y * (height - 2 * margin)
        return _num(px), _num(py)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        'width="%s" height="%s" viewBox="0 0 %s %s">' % (_num(width), _num(height), _num(width), _num(height)),
    ]

    # axes
    ox, oy = place(min_x, min_y)
    x_end, _ = place(max_x, min_y)
    _, y_end = place(min_x, max_y)
    parts.append(
        '<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="#333333" stroke-width="1"/>'
        % (ox, oy, x_end, oy)
    )
    parts.append(
        '<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="#333333" stroke-width="1"/>'
        % (ox, oy, ox, y_end)
    )

    for guide in guides:
        gx1, gy = place(min_x, guide)
        gx2, _ = place(max_x, guide)
        parts.append(
            '<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="#888888" '
            'stroke-width="1" stroke-dasharray="6 4"/>' % (gx1, gy, gx2, gy)
        )

    for rank, key in enumerate(sorted(series)):
        points = series[key]
        stroke = _SERIES_STROKES[rank % len(_SERIES_STROKES)]
        if len(points) > 1:
            steps = []
            for i, (x, y) in enumerate(points):
                px, py = place(x, y)
                steps.append("%s%s %s" % ("M" if i == 0 else "L", px, py))
            parts.append(
                '<path d="%s" fill="none" stroke="%s" stroke-width="1.5"/>'
                % (" ".join(steps), stroke)
            )
        for x, y in points:
            px, py = place(x, y)
            parts.append(
                '<circle cx="%s" cy="%s" r="3" fill="%s"/>' % (px, py, stroke)
            )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
