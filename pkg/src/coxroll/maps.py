"""Combinatorial builders for the standard 3-valent planar maps.

Handy inputs for the Andreev checker: cube, dodecahedron, n-gonal prisms
and the tetrahedron, with a uniform or per-edge label assignment.  The
dodecahedron is built from the convex hull of its golden-ratio coordinates
rather than a hand-typed face list.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.spatial import ConvexHull

from .andreev import PlanarAngleMap


def _with_labels(vertex_count, faces, labels, default):
    faces = tuple(tuple(f) for f in faces)
    edges = set()
    for face in faces:
        k = len(face)
        edges.update(frozenset((face[i], face[(i + 1) % k])) for i in range(k))
    merged = {e: default for e in edges}
    for (u, v), m in (labels or {}).items():
        key = frozenset((u, v))
        if key not in merged:
            raise ValueError(f"({u}, {v}) is not an edge")
        merged[key] = m
    return PlanarAngleMap(vertex_count, faces, merged).validate()


def tetrahedron(default=2, labels=None):
    faces = [(0, 1, 2), (0, 3, 1), (1, 3, 2), (2, 3, 0)]
    return _with_labels(4, faces, labels, default)


def cube(default=2, labels=None):
    # vertices 0..3 bottom cycle, 4..7 top cycle
    faces = [(0, 1, 2, 3), (7, 6, 5, 4),
             (0, 4, 5, 1), (1, 5, 6, 2), (2, 6, 7, 3), (3, 7, 4, 0)]
    return _with_labels(8, faces, labels, default)


def prism(n, default=2, labels=None):
    """n-gonal prism: bottom cycle 0..n-1, top cycle n..2n-1."""
    bottom = tuple(range(n))
    top = tuple(range(2 * n - 1, n - 1, -1))
    sides = [(i, n + i, n + (i + 1) % n, (i + 1) % n) for i in range(n)]
    return _with_labels(2 * n, [bottom, top] + sides, labels, default)


def dodecahedron(default=2, labels=None):
    """Regular dodecahedron combinatorics from its golden-ratio hull."""
    phi = (1 + math.sqrt(5)) / 2
    pts = []
    for sx in (-1, 1):
        for sy in (-1, 1):
            for sz in (-1, 1):
                pts.append((sx, sy, sz))
    for a in (-phi, phi):
        for b in (-1 / phi, 1 / phi):
            pts.extend([(0, a, b), (b, 0, a), (a, b, 0)])
    pts = np.array(pts, dtype=float)
    hull = ConvexHull(pts)
    # merge coplanar hull triangles into pentagonal faces
    groups = {}
    for simplex, eq in zip(hull.simplices, hull.equations):
        key = tuple(np.round(eq, 6))
        groups.setdefault(key, set()).update(simplex.tolist())
    faces = []
    for key, members in sorted(groups.items()):
        normal = np.array(key[:3])
        members = sorted(members)
        center = pts[members].mean(axis=0)
        e1 = pts[members[0]] - center
        e1 -= (e1 @ normal) * normal / (normal @ normal)
        e1 /= np.linalg.norm(e1)
        e2 = np.cross(normal / np.linalg.norm(normal), e1)
        ordered = sorted(members, key=lambda v: math.atan2(
            (pts[v] - center) @ e2, (pts[v] - center) @ e1))
        faces.append(tuple(ordered))
    return _with_labels(20, faces, labels, default)
