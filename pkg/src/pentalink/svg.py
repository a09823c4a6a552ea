"""Static SVG rendering of polygon configurations.

Plain string assembly against SVG 1.1; no drawing dependency.  Polygons are
stroked only (never filled), so self-intersecting star paths come out as
expected, and the y axis is flipped so counterclockwise means what it says.
"""

from __future__ import annotations

import math
from typing import Optional, Sequence

from .oracle import Circle, PolygonConfiguration

_STYLE = {
    "polygon": "#1f3a5f",
    "incircle": "#b23a48",
    "circumcircle": "#2a7f62",
    "label": "#333333",
}


def render_svg(
    config: PolygonConfiguration,
    circles: Sequence[Circle] = (),
    path: Optional[str] = None,
    labels: bool = True,
    size: int = 512,
) -> str:
    """Render the configuration (plus optional circles) as a standalone SVG.

    Returns the SVG text; when ``path`` is given the text is also written
    there.  The viewBox is fitted to the geometry with a 5% margin.
    """
    pts = [(x, -y) for x, y in config.vertices]  # SVG y grows downward
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    for c in circles:
        xs += [c.center[0] - c.radius, c.center[0] + c.radius]
        ys += [-c.center[1] - c.radius, -c.center[1] + c.radius]
    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    span = max(max_x - min_x, max_y - min_y, 1e-12)
    margin = 0.05 * span
    vb = (min_x - margin, min_y - margin, (max_x - min_x) + 2 * margin, (max_y - min_y) + 2 * margin)
    stroke = 0.006 * span
    font = 0.045 * span

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="{vb[0]:.6g} {vb[1]:.6g} {vb[2]:.6g} {vb[3]:.6g}">',
    ]
    names = ("incircle", "circumcircle")
    for i, c in enumerate(circles):
        color = _STYLE[names[i]] if i < 2 else _STYLE["polygon"]
        parts.append(
            f'  <circle cx="{c.center[0]:.9g}" cy="{-c.center[1]:.9g}" r="{c.radius:.9g}" '
            f'fill="none" stroke="{color}" stroke-width="{stroke:.6g}"/>'
        )
    d = "M " + " L ".join(f"{x:.9g} {y:.9g}" for x, y in pts) + " Z"
    parts.append(
        f'  <path d="{d}" fill="none" stroke="{_STYLE["polygon"]}" '
        f'stroke-width="{stroke:.6g}" stroke-linejoin="round"/>'
    )
    if labels:
        cx = sum(p[0] for p in pts) / len(pts)
        cy = sum(p[1] for p in pts) / len(pts)
        for i, (x, y) in enumerate(pts, start=1):
            dx, dy = x - cx, y - cy
            norm = math.hypot(dx, dy) or 1.0
            lx, ly = x + dx / norm * font, y + dy / norm * font
            parts.append(
                f'  <text x="{lx:.9g}" y="{ly:.9g}" font-size="{font:.6g}" '
                f'fill="{_STYLE["label"]}" text-anchor="middle" '
                f'dominant-baseline="middle">V{i}</text>'
            )
    parts.append("</svg>")
    text = "\n".join(parts) + "\n"
    if path is not None:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    return text
