"""Deterministic SVG figures of planar bodies, overlays and failure markers."""
from __future__ import annotations

import numpy as np


def _num(x: float) -> str:
    s = f"{x:.10g}"
    return "0" if s == "-0" else s


def _path(points) -> str:
    pts = np.asarray(points, dtype=float)
    head = f"M {_num(pts[0, 0])} {_num(pts[0, 1])}"
    rest = " ".join(f"L {_num(x)} {_num(y)}" for x, y in pts[1:])
    return f"{head} {rest} Z" if rest else f"{head} Z"


def render_svg(bodies, overlays=(), markers=()) -> str:
    """Render closed polygons (vertex arrays) as an SVG document.

    Bodies are drawn first, then overlays, then failure markers.  The
    viewBox is the joint bounding box grown by 5% of its larger side on every
    side; the y-axis points up.
    """
    bodies = [np.asarray(b, dtype=float).reshape(-1, 2) for b in bodies]
    overlays = [np.asarray(o, dtype=float).reshape(-1, 2) for o in overlays]
    markers = np.asarray(markers, dtype=float).reshape(-1, 2)
    if not bodies:
        raise ValueError("nothing to render: at least one body is required")
    allpts = np.vstack(bodies + overlays + [markers])
    lo, hi = allpts.min(axis=0), allpts.max(axis=0)
    size = float(max(hi - lo))
    if size == 0:
        raise ValueError("degenerate drawing extent")
    m = 0.05 * size
    x0, y0 = lo[0] - m, lo[1] - m
    w, h = (hi[0] - lo[0]) + 2 * m, (hi[1] - lo[1]) + 2 * m
    flip = lo[1] + hi[1]
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{_num(x0)} {_num(y0)} {_num(w)} {_num(h)}">',
        f'<g transform="matrix(1 0 0 -1 0 {_num(flip)})">',
    ]
    for b in bodies:
        lines.append(f'<path class="body" d="{_path(b)}" fill="none" stroke="black" '
                     f'stroke-width="1" vector-effect="non-scaling-stroke"/>')
    for o in overlays:
        lines.append(f'<path class="overlay" d="{_path(o)}" fill="none" stroke="steelblue" '
                     f'stroke-width="1" vector-effect="non-scaling-stroke"/>')
    r = _num(0.01 * size)
    for x, y in markers:
        lines.append(f'<circle class="failure" cx="{_num(x)}" cy="{_num(y)}" r="{r}" fill="red"/>')
    lines += ["</g>", "</svg>"]
    return "\n".join(lines) + "\n"
