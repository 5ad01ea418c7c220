# -*- coding: utf-8 -*-

"""
SVG drawing of a planar arrangement.

Presentation only: coordinates are converted to floats here and nowhere
else. Lines are clipped to a viewport fitted around the finite intersection
points; points on three or more lines are highlighted.
"""

import typing as T
import math
import xml.etree.ElementTree as ET
from pathlib import Path

from .exactfield import Scalar, QuadraticNumber
from .arrangement import Arrangement
from .planar import incidence_stats
from .exc import PreconditionError
from .utils import write_bytes

SVG_NS = "http://www.w3.org/2000/svg"

HIGHLIGHT_COLOR = "#d62728"
LINE_COLOR = "#1f3b73"


def to_float(x: Scalar) -> float:
    if isinstance(x, QuadraticNumber):
        return float(x.a) + float(x.b) * math.sqrt(x.d)
    return float(x)


def _finite_points(
    arrangement: Arrangement,
) -> list[tuple[float, float, int]]:
    points = []
    for p in incidence_stats(arrangement).points:
        x, y, z = p.point.coefficients
        if z == 0:
            continue
        points.append((to_float(x / z), to_float(y / z), p.multiplicity))
    return points


def _viewport(
    points: T.Sequence[tuple[float, float, int]],
    pad_ratio: float,
) -> tuple[float, float, float, float]:
    if not points:
        return -1.0, -1.0, 1.0, 1.0
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0, 1.0)
    pad = span * pad_ratio
    cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
    half = span / 2 + pad
    return cx - half, cy - half, cx + half, cy + half


def _clip(
    a: float,
    b: float,
    c: float,
    box: tuple[float, float, float, float],
) -> tuple[tuple[float, float], tuple[float, float]] | None:
    """
    Segment of ``a x + b y = c`` inside ``box``.
    """
    x0, y0, x1, y1 = box
    hits = []
    if b != 0:
        for x in (x0, x1):
            y = (c - a * x) / b
            if y0 - 1e-9 <= y <= y1 + 1e-9:
                hits.append((x, y))
    if a != 0:
        for y in (y0, y1):
            x = (c - b * y) / a
            if x0 - 1e-9 <= x <= x1 + 1e-9:
                hits.append((x, y))
    hits = sorted(set((round(x, 9), round(y, 9)) for x, y in hits))
    if len(hits) < 2:
        return None
    return hits[0], hits[-1]


def render_svg(
    arrangement: Arrangement,
    path: Path,
    width: int = 600,
    height: int = 600,
    pad_ratio: float = 0.25,
) -> ET.Element:
    """
    Write ``arrangement`` as an SVG file and return the root element.
    """
    if arrangement.dimension != 2:
        raise PreconditionError("only planar arrangements can be rendered")
    points = _finite_points(arrangement)
    box = _viewport(points, pad_ratio)
    x0, y0, x1, y1 = box
    sx = width / (x1 - x0)
    sy = height / (y1 - y0)

    def to_screen(x: float, y: float) -> tuple[str, str]:
        # svg y grows downwards
        return f"{(x - x0) * sx:.3f}", f"{(y1 - y) * sy:.3f}"

    svg = ET.Element(
        "svg",
        xmlns=SVG_NS,
        width=str(width),
        height=str(height),
        viewBox=f"0 0 {width} {height}",
    )
    group = ET.SubElement(svg, "g", stroke=LINE_COLOR, fill="none")
    labels = ET.SubElement(svg, "g", fill=LINE_COLOR)
    labels.set("font-size", "12")
    labels.set("font-family", "sans-serif")
    for h in arrangement.hyperplanes:
        a, b = (to_float(v) for v in h.normal)
        segment = _clip(a, b, to_float(h.offset), box)
        if segment is None:  # pragma: no cover
            continue
        (ax, ay), (bx, by) = segment
        sx1, sy1 = to_screen(ax, ay)
        sx2, sy2 = to_screen(bx, by)
        ET.SubElement(group, "line", x1=sx1, y1=sy1, x2=sx2, y2=sy2)
        text = ET.SubElement(labels, "text", x=sx2, y=sy2)
        text.text = h.label
    marks = ET.SubElement(svg, "g", fill=HIGHLIGHT_COLOR)
    for x, y, multiplicity in points:
        if multiplicity >= 3:
            cx, cy = to_screen(x, y)
            ET.SubElement(marks, "circle", cx=cx, cy=cy, r=str(2 + multiplicity))
    content = ET.tostring(svg, encoding="utf-8", xml_declaration=True)
    write_bytes(path=Path(path), content=content)
    return svg
