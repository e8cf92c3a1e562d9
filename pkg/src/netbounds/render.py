"""Static SVG drawings of nets."""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from pathlib import Path

from .diagrams import ChordDiagram

_SIZE = 320
_RADIUS = 120.0
_CENTER = _SIZE / 2


def _point(angle: float, radius: float = _RADIUS) -> tuple[str, str]:
    # counterclockwise on screen: svg y grows downwards
    x = _CENTER + radius * math.cos(angle)
    y = _CENTER - radius * math.sin(angle)
    return f"{x:.2f}", f"{y:.2f}"


def _angle(g: ChordDiagram, p: float) -> float:
    """Angle of (possibly fractional) 1-based position ``p``; position 1 at 3 o'clock."""
    return 2 * math.pi * (p - 1) / g.size


def net_svg(g: ChordDiagram, k: int | None = None) -> str:
    """SVG source for ``g``; with ``k`` the arc (r, s) holding the last k vertices is shaded."""
    if k is not None and not 1 <= k <= g.size - 2:
        raise ValueError(f"k must lie in 1..{g.size - 2}, got {k}")
    svg = ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        width=str(_SIZE),
        height=str(_SIZE),
        viewBox=f"0 0 {_SIZE} {_SIZE}",
    )
    ET.SubElement(svg, "title").text = f"net {g.word}"
    ET.SubElement(
        svg, "circle", cx=str(_CENTER), cy=str(_CENTER), r=str(_RADIUS),
        fill="none", stroke="black",
    )
    if k is not None:
        # r sits halfway before the first of the last k positions, s halfway before position 1
        a0 = _angle(g, g.size - k + 0.5)
        a1 = _angle(g, g.size + 0.5)
        x0, y0 = _point(a0)
        x1, y1 = _point(a1)
        large = 1 if a1 - a0 > math.pi else 0
        ET.SubElement(
            svg, "path", d=f"M {x0} {y0} A {_RADIUS} {_RADIUS} 0 {large} 0 {x1} {y1}",
            fill="none", stroke="#4a7ab8", **{"stroke-width": "8", "stroke-opacity": "0.4"},
        )
        for name, a in (("r", a0), ("s", a1)):
            x, y = _point(a, _RADIUS + 22)
            ET.SubElement(svg, "text", x=x, y=y, fill="#4a7ab8", **{"text-anchor": "middle"}).text = name
    for a, b in g.pairs():
        x0, y0 = _point(_angle(g, a))
        x1, y1 = _point(_angle(g, b))
        ET.SubElement(svg, "line", x1=x0, y1=y0, x2=x1, y2=y1, stroke="black")
    for p in range(1, g.size + 1):
        x, y = _point(_angle(g, p))
        ET.SubElement(
            svg, "circle", cx=x, cy=y, r="6" if p == 1 else "4",
            fill="#c0392b" if p == 1 else "black",
        )
        tx, ty = _point(_angle(g, p), _RADIUS + 12)
        ET.SubElement(
            svg, "text", x=tx, y=ty, **{"font-size": "11", "text-anchor": "middle"}
        ).text = str(p)
    ET.indent(svg)
    return ET.tostring(svg, encoding="unicode") + "\n"


def write_net_svg(g: ChordDiagram, path: Path | str, k: int | None = None) -> Path:
    path = Path(path)
    path.write_text(net_svg(g, k))
    return path
