"""Standalone SVG drawings of reconstructed quadrilaterals."""

from __future__ import annotations

import xml.etree.ElementTree as ET
from itertools import combinations
from pathlib import Path

from .core import Configuration
from .realizability import PointQuad

SVG_NS = "http://www.w3.org/2000/svg"
MARGIN = 0.10


def _num(x: float) -> str:
    return f"{x + 0.0:.6g}"  # + 0.0 folds -0.0 into 0.0


def view_box(points: list[tuple[float, float]]) -> tuple[float, float, float, float]:
    """(min_x, min_y, width, height) with a 10% margin; unit box if degenerate."""
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    w, h = max(xs) - min(xs), max(ys) - min(ys)
    extent = max(w, h)
    if extent == 0:
        return xs[0] - 0.5, ys[0] - 0.5, 1.0, 1.0
    # a collinear quad has one flat side; pad it by the other side
    w, h = w or extent, h or extent
    cx, cy = (max(xs) + min(xs)) / 2, (max(ys) + min(ys)) / 2
    w, h = w * (1 + 2 * MARGIN), h * (1 + 2 * MARGIN)
    return cx - w / 2, cy - h / 2, w, h


def render_svg(quad: PointQuad, config: Configuration | None = None) -> str:
    # SVG's y axis points down; flip so the drawing matches the plane.
    pts = [(float(p.alpha), -float(p.beta)) for p in quad.points]
    x0, y0, w, h = view_box(pts)
    unit = max(w, h)
    svg = ET.Element(
        "svg",
        {
            "xmlns": SVG_NS,
            "version": "1.1",
            "viewBox": " ".join(_num(v) for v in (x0, y0, w, h)),
        },
    )
    ET.SubElement(svg, "title").text = "Quadrilateral Q1 Q2 Q3 Q4"
    if config is not None:
        ET.SubElement(svg, "desc").text = "; ".join(
            f"v{i}{j}=({v.alpha}, {v.beta})" for (i, j), v in config.items()
        )
    edges = ET.SubElement(
        svg, "g", {"stroke": "#333", "stroke-width": _num(unit * 0.006), "fill": "none"}
    )
    for a, b in combinations(range(4), 2):
        ET.SubElement(
            edges,
            "line",
            {
                "class": f"edge Q{a + 1}Q{b + 1}",
                "x1": _num(pts[a][0]),
                "y1": _num(pts[a][1]),
                "x2": _num(pts[b][0]),
                "y2": _num(pts[b][1]),
            },
        )
    nodes = ET.SubElement(svg, "g", {"fill": "#c0392b"})
    labels = ET.SubElement(
        svg, "g", {"font-family": "sans-serif", "font-size": _num(unit * 0.05)}
    )
    for n, (x, y) in enumerate(pts, start=1):
        stacked = pts[: n - 1].count((x, y))
        ET.SubElement(
            nodes,
            "circle",
            {"class": f"point Q{n}", "cx": _num(x), "cy": _num(y), "r": _num(unit * 0.02)},
        )
        # coincident points get their labels stacked upward
        ET.SubElement(
            labels,
            "text",
            {"x": _num(x + unit * 0.03), "y": _num(y - unit * (0.03 + 0.05 * stacked))},
        ).text = f"Q{n}"
    ET.indent(svg)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(svg, encoding="unicode") + "\n"


def emit_svg(quad: PointQuad, config: Configuration | None, path) -> Path:
    path = Path(path)
    path.write_text(render_svg(quad, config), encoding="utf-8")
    return path
