"""Deterministic emitters: canonical JSON, DOT graphs, and 2D SVG figures.

Everything here is presentation: geometry is converted to floats only at the
last step, with fixed formatting, so repeated runs are byte-identical.
"""

import json
import math

from .errors import NotPlanar
from .exactlin import as_vec

CANVAS = 600
CENTER = CANVAS // 2
LINE_RADIUS = 280
LABEL_RADIUS = 170


def emit_json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _node_name(chamber):
    return "C" + chamber.sign_string()


def emit_dot_wall_graph(chambers, edges, graph_name="walls", nodes=None) -> str:
    """Undirected DOT graph; node names are stable sign-vector strings."""
    if nodes is None:
        nodes = range(len(chambers))
    lines = [f"graph {graph_name} {{"]
    for i in nodes:
        lines.append(f'  "{_node_name(chambers[i])}";')
    for a, b, h in edges:
        lines.append(f'  "{_node_name(chambers[a])}" -- '
                     f'"{_node_name(chambers[b])}" [label="H{h}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _fmt(x: float) -> str:
    s = f"{x:.2f}"
    return "0.00" if s == "-0.00" else s


def _svg_header():
    return [f'<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" '
            f'height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">',
            f'<rect width="{CANVAS}" height="{CANVAS}" fill="white"/>']


def _to_canvas(x, y, radius):
    norm = math.hypot(x, y)
    if norm == 0:
        return CENTER, CENTER
    return (CENTER + radius * x / norm, CENTER - radius * y / norm)


def _svg_line(direction):
    x, y = float(direction[0]), float(direction[1])
    x1, y1 = _to_canvas(x, y, LINE_RADIUS)
    x2, y2 = _to_canvas(-x, -y, LINE_RADIUS)
    return (f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" '
            f'y2="{_fmt(y2)}" stroke="black" stroke-width="1"/>')


def _svg_label(text, point):
    x, y = _to_canvas(float(point[0]), float(point[1]), LABEL_RADIUS)
    return (f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-size="14" '
            f'text-anchor="middle">{text}</text>')


def emit_svg_arrangement(arr, chambers) -> str:
    """Lines through the origin with chamber sign labels at the witnesses."""
    if arr.dim != 2 or arr.equalities:
        raise NotPlanar("SVG output needs a 2-dimensional ambient space")
    parts = _svg_header()
    for h in arr.hyperplanes:
        a, b = h.normal
        parts.append(_svg_line((-b, a)))
    for c in chambers:
        parts.append(_svg_label(_node_name(c), c.witness))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def emit_svg_fan(fan) -> str:
    """Rays as half-lines with one label per maximal cone."""
    if fan.dim != 2:
        raise NotPlanar("SVG output needs a 2-dimensional fan")
    parts = _svg_header()
    rays = sorted({tuple(r) for cone in fan.maximal_cones for r in cone})
    for r in rays:
        x, y = float(r[0]), float(r[1])
        x2, y2 = _to_canvas(x, y, LINE_RADIUS)
        parts.append(f'<line x1="{CENTER}" y1="{CENTER}" x2="{_fmt(x2)}" '
                     f'y2="{_fmt(y2)}" stroke="black" stroke-width="1"/>')
    for i, cone in enumerate(fan.maximal_cones):
        mid = [sum(as_vec(r)[j] for r in cone) for j in range(2)]
        parts.append(_svg_label(f"sigma{i}", mid))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
