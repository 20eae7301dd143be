"""SVG rendering of curve families.

Rational coordinates are converted to 12-significant-digit decimals here and
nowhere else; the SVG is for looking at, never for reading back.
"""

from __future__ import annotations

import colorsys
import math
import xml.etree.ElementTree as ET
from fractions import Fraction

from .coloring import Coloring
from .realization import CurveFamily

SVG_NS = "http://www.w3.org/2000/svg"


def _num(q: Fraction | int) -> str:
    text = format(float(q), ".12g")
    return "0" if text == "-0" else text


def _palette(coloring: Coloring | None) -> dict[tuple[int, ...], str]:
    if coloring is None:
        return {}
    out = {}
    for i, key in enumerate(sorted(coloring.palette)):
        # golden-ratio hue walk keeps neighbouring indices visually apart
        r, g, b = colorsys.hls_to_rgb((i * 0.618033988749895) % 1.0, 0.45, 0.75)
        out[key] = f"#{round(r * 255):02x}{round(g * 255):02x}{round(b * 255):02x}"
    return out


def emit_svg(fam: CurveFamily, coloring: Coloring | None = None, scale: int = 40) -> str:
    """One ``<path>`` per curve; y is flipped so larger y draws higher."""
    xs = [p[0] for c in fam.curves for p in c.points] + [Fraction(0)]
    ys = [p[1] for c in fam.curves for p in c.points] + [Fraction(0), Fraction(1)]
    x0, x1 = math.floor(min(xs)) - 1, math.ceil(max(xs)) + 1
    y0, y1 = math.floor(min(ys)) - 1, math.ceil(max(ys)) + 1
    width, height = x1 - x0, y1 - y0
    root = ET.Element(
        "svg",
        xmlns=SVG_NS,
        version="1.1",
        width=str(width * scale),
        height=str(height * scale),
        viewBox=f"{x0} {-y1} {width} {height}",
    )
    if fam.kind in ("grounded", "split"):
        ET.SubElement(
            root,
            "line",
            x1="0",
            y1=str(-y1),
            x2="0",
            y2=str(-y0),
            stroke="#888888",
            **{"stroke-width": "0.03", "stroke-dasharray": "0.15 0.1", "class": "ground"},
        )
    colors = _palette(coloring)
    for c in sorted(fam.curves, key=lambda c: c.id):
        d = " ".join(
            f"{'M' if i == 0 else 'L'}{_num(x)} {_num(-y)}" for i, (x, y) in enumerate(c.points)
        )
        stroke = colors.get(coloring.colors.get(c.id), "#000000") if coloring else "#000000"
        ET.SubElement(
            root,
            "path",
            d=d,
            fill="none",
            stroke=stroke,
            id=f"curve-{c.id}",
            **{"stroke-width": "0.05", "stroke-linejoin": "round"},
        )
    return ET.tostring(root, encoding="unicode") + "\n"
