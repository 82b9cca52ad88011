"""SVG rendering of 2-dimensional developments.

Hyperbolic developments project to the Poincare disk, spherical ones
orthographically, Euclidean ones directly.  Geodesic edges are sampled as
polylines; chamber-boundary walls are stroked heavier than tile edges.
Output is byte-deterministic.
"""

from __future__ import annotations

import numpy as np

SAMPLES = 24
SIZE = 640.0
MARGIN = 0.05


def _project(space, p):
    if space.kind == "hyperbolic":
        return np.array([p[0] / (1.0 + p[2]), p[1] / (1.0 + p[2])])
    if space.kind == "spherical":
        return np.array([p[0], p[1]])
    return np.array([p[0] / p[2], p[1] / p[2]])


def _edge_polyline(space, p, q):
    return [_project(space, x) for x in space.geodesic_points(p, q, SAMPLES)]


def _fmt(x):
    return f"{x:.6f}"


def render_svg(df):
    """SVG document for a 2-dimensional development."""
    if df.mirror.dim != 2:
        raise ValueError("SVG output needs a 2-dimensional development")
    space = df.mirror

    tile_paths = []
    for tile in df.tiles:
        pts = []
        k = len(tile.verts)
        for i in range(k):
            pts.extend(_edge_polyline(space, tile.verts[i],
                                      tile.verts[(i + 1) % k])[:-1])
        tile_paths.append(pts)
    wall_paths = [_edge_polyline(space, w.verts[0], w.verts[1])
                  for w in df.walls if len(w.verts) == 2]

    all_pts = np.array([p for path in tile_paths + wall_paths for p in path])
    lo, hi = all_pts.min(axis=0), all_pts.max(axis=0)
    span = float(max(hi - lo)) or 1.0
    pad = MARGIN * span

    def to_screen(p):
        x = (p[0] - lo[0] + pad) / (span + 2 * pad) * SIZE
        y = SIZE - (p[1] - lo[1] + pad) / (span + 2 * pad) * SIZE
        return x, y

    lines = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{int(SIZE)}" '
             f'height="{int(SIZE)}" viewBox="0 0 {int(SIZE)} {int(SIZE)}">']
    if space.kind == "hyperbolic":
        cx, cy = to_screen(np.zeros(2))
        r = SIZE / (span + 2 * pad)
        lines.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}" '
                     'fill="none" stroke="#cccccc" stroke-width="1"/>')
    for pts in tile_paths:
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}"
                          for x, y in (to_screen(p) for p in pts))
        lines.append(f'<polygon points="{coords}" fill="#e8eef7" '
                     'stroke="#5577aa" stroke-width="1"/>')
    for pts in wall_paths:
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}"
                          for x, y in (to_screen(p) for p in pts))
        lines.append(f'<polyline points="{coords}" fill="none" '
                     'stroke="#aa3333" stroke-width="2.5"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
