"""Geometric rolling: tile a mirror with facet traces and measure the result.

Rolling a chamber over an odd hyperedge applies the rotation about that
hyperedge through (m-1)/m of a half-turn, which is a group element exactly
when m is odd; even (and infinite) hyperedges stop the roll and contribute
chamber-boundary walls lying in mirrors orthogonal to the rolling mirror.
All tile coordinates are expressed in an isometric chart that maps the
mirror onto the standard model one dimension down.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from .geomkernel import GeometricChamber, GeometryError, SpaceModel
from .rolling import component_of, scheme_from_adjacency, unfold
from .scheme import CoxeterMatrix, CoxeterType, classify

INF = math.inf

LAND_TOL = 1e-6     # distinguishes the two roll candidates (separation is O(1))
GLUE_TOL = 1e-7     # shared faces of adjacent tiles must agree to this
WALL_ORTHO_TOL = 1e-8
POINT_KEY_DECIMALS = 6
STRAIGHT_TOL = 1e-3  # boundary vertices closer than this to angle pi are not corners


class DevelopError(GeometryError):
    """Rolling or measurement failure."""


class MirrorChart:
    """Isometric identification of a mirror with the standard (n-1)-model."""

    def __init__(self, space, mirror_normal):
        self.space = space
        self.normal = np.asarray(mirror_normal, dtype=float)
        self.mirror = SpaceModel(space.kind, space.dim - 1)
        if space.kind == "euclidean":
            u = self.normal[:-1]
            c = self.normal[-1]
            self._base = -c * u
            A = np.zeros((1, space.dim))
            A[0] = u
            _, _, vt = np.linalg.svd(A)
            self._frame = vt[1:]  # orthonormal basis of the linear part of the wall
        else:
            J = space.form_matrix()
            row = (J @ self.normal)[None, :]
            _, _, vt = np.linalg.svd(row)
            N = vt[1:].T  # columns span the mirror hyperplane
            M = N.T @ J @ N
            lam, Q = np.linalg.eigh(M)
            order = [i for i in range(len(lam)) if lam[i] > 0] + \
                    [i for i in range(len(lam)) if lam[i] < 0]
            if space.kind == "hyperbolic" and sum(1 for x in lam if x < 0) != 1:
                raise GeometryError("mirror of a spacelike normal must be Lorentzian")
            basis = []
            for i in order:
                b = (N @ Q[:, i]) / math.sqrt(abs(lam[i]))
                if lam[i] < 0 and b[-1] < 0:
                    b = -b  # future-point the timelike chart direction
                basis.append(b)
            signs = np.array([1.0 if lam[i] > 0 else -1.0 for i in order])
            self._map = (signs[:, None] * np.array(basis)) @ J

    def point(self, x):
        """Chart coordinates of a point lying on the mirror."""
        x = np.asarray(x, dtype=float)
        if self.space.kind == "euclidean":
            y = self._frame @ (x[:-1] / x[-1] - self._base)
            return np.append(y, 1.0)
        return self._map @ x

    def covector(self, w):
        """Chart wall functional of an ambient wall orthogonal to the mirror."""
        w = np.asarray(w, dtype=float)
        if self.space.kind == "euclidean":
            lin = self._frame @ w[:-1]
            off = w[:-1] @ self._base + w[-1]
            return np.append(lin, off)
        return self._map @ w

    def unmap(self, y):
        """Ambient coordinates of a chart point."""
        y = np.asarray(y, dtype=float)
        if self.space.kind == "euclidean":
            x = self._frame.T @ y[:-1] + self._base
            return np.append(x, 1.0)
        # invert [chart rows; mirror constraint] x = [y; 0]
        J = self.space.form_matrix()
        A = np.vstack([self._map, (J @ self.normal)[None, :]])
        return np.linalg.solve(A, np.append(y, 0.0))


@dataclass
class Tile:
    node: int
    facet: int
    depth: int
    placement: np.ndarray
    verts: np.ndarray          # chart coordinates, rows in facet cycle order
    verts_ambient: np.ndarray


@dataclass
class WallPiece:
    tile: int
    facet: int                 # chamber facet whose even/infinite bond stopped here
    label: object
    normal: np.ndarray         # chart covector, unit, pointing into the chamber
    verts: np.ndarray          # chart coordinates of the stopped face
    normal_ambient: np.ndarray = None  # the same wall in ambient coordinates


@dataclass
class DevelopedFigure:
    mirror: SpaceModel
    chart: MirrorChart
    chamber: GeometricChamber
    facet: int
    tiles: list
    walls: list
    complete: bool
    tree: object = None

    def tile_count(self):
        return len(self.tiles)

    def total_measure(self):
        """Sum of tile measures for 1-dimensional developments (arc length)."""
        if self.mirror.dim != 1:
            raise DevelopError("total_measure is for 1-dimensional developments")
        return sum(self.mirror.distance(t.verts[0], t.verts[1]) for t in self.tiles)

    def boundary_points(self):
        """Deduplicated wall-piece vertices (chart coordinates)."""
        seen = {}
        for piece in self.walls:
            for v in piece.verts:
                seen.setdefault(tuple(np.round(v, POINT_KEY_DECIMALS)), v)
        return [seen[k] for k in sorted(seen)]

    def to_json(self):
        payload = {
            "mirror": {"kind": self.mirror.kind, "dim": self.mirror.dim},
            "facet": self.facet + 1,
            "complete": self.complete,
            "tiles": [{"node": t.node, "facet": t.facet + 1, "depth": t.depth,
                       "verts": _round12(t.verts)} for t in self.tiles],
            "walls": [{"tile": w.tile, "facet": w.facet + 1,
                       "label": ("inf" if w.label == INF else int(w.label)),
                       "normal": _round12([w.normal])[0],
                       "verts": _round12(w.verts)} for w in self.walls],
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _round12(arr):
    return [[float(f"{x:.12g}") for x in row] for row in np.asarray(arr)]


def _transform_points(space, mat, points):
    return np.asarray(points) @ mat.T


def _roll_candidates(space, mirror_normal, other_normal, m):
    s_other = space.reflection(other_normal)
    s_mirror = space.reflection(mirror_normal)
    p = (m - 1) // 2
    return (np.linalg.matrix_power(s_other @ s_mirror, p),
            np.linalg.matrix_power(s_mirror @ s_other, p))


def _select_roll(chamber, mirror_normal, g, facet_from, facet_to, m):
    """The group element rolling the placed chamber over an odd hyperedge.

    Of the two rotation directions about the hyperedge exactly one lands the
    next facet back on the rolling mirror; both landing would be a bug.
    """
    space = chamber.space
    pushed = space.push_normal(g, chamber.normals[facet_to])
    pushed = space.normalize_normal(pushed)
    verts = chamber.vertices[list(chamber.facet_vertices[facet_to])]
    best = []
    for R in _roll_candidates(space, mirror_normal, pushed, m):
        g2 = R @ g
        moved = _transform_points(space, g2, verts)
        err = max(abs(space.eval(mirror_normal, v)) for v in moved)
        if err < LAND_TOL:
            best.append(g2)
    if len(best) != 1:
        raise DevelopError(
            f"roll over facets ({facet_from},{facet_to}) with label {m}: "
            f"{len(best)} landing candidates")
    return best[0]


def _orthogonal_wall_normal(space, mirror_normal, other_normal, m):
    """The pencil mirror through the stopped hyperedge orthogonal to the
    rolling mirror; exists exactly because the label is even."""
    if m == INF:
        raise DevelopError("infinite bonds have no geometric hyperedge to stop at")
    rot = space.reflection(other_normal) @ space.reflection(mirror_normal)
    best, best_dot = None, np.inf
    cur = [np.asarray(other_normal, float), np.asarray(mirror_normal, float)]
    for _ in range(int(m)):
        for w in cur:
            d = abs(space.dot(w, mirror_normal))
            if d < best_dot:
                best, best_dot = w.copy(), d
        cur = [space.push_normal(rot, w) for w in cur]
    if best_dot > WALL_ORTHO_TOL:
        raise DevelopError(
            f"no pencil mirror orthogonal to the rolling mirror (label {m}, "
            f"best deviation {best_dot:.2e})")
    return space.normalize_normal(best)


def _tile_walls(chamber, chart, mirror_normal, tile_index, facet, g, stop_labels):
    """Wall pieces of one tile: faces toward even/infinite bonds."""
    space = chamber.space
    out = []
    for j, m in chamber.facets_adjacent_to(facet):
        if not stop_labels(m):
            continue
        shared = sorted(set(chamber.facet_vertices[facet])
                        & set(chamber.facet_vertices[j]))
        verts_amb = _transform_points(
            space, g, chamber.vertices[shared])
        pushed = space.normalize_normal(
            space.push_normal(g, chamber.normals[j]))
        w = _orthogonal_wall_normal(space, mirror_normal, pushed, m)
        bary = np.mean(_transform_points(
            space, g, chamber.vertices[list(chamber.facet_vertices[facet])]), axis=0)
        if space.eval(w, bary) < 0:
            w = -w
        out.append(WallPiece(tile_index, j, m, chart.covector(w),
                             np.array([chart.point(v) for v in verts_amb]), w))
    return out


def _is_even_stop(m):
    return m == INF or m % 2 == 0


def _tile_from_placement(chamber, chart, mirror_normal, node, facet, depth, g):
    space = chamber.space
    verts_amb = _transform_points(
        space, g, chamber.vertices[list(chamber.facet_vertices[facet])])
    for v in verts_amb:
        if abs(space.eval(mirror_normal, v)) > LAND_TOL:
            raise DevelopError("tile drifted off the rolling mirror")
    verts = np.array([chart.point(v) for v in verts_amb])
    return Tile(node, facet, depth, g, verts, verts_amb)


def roll_onto_mirror(chamber, facet, max_tiles=5000):
    """Admissible rolling only: the developed chamber B of the induced group.

    Walks the development tree of the rolling-scheme component containing
    the facet; each tree edge contributes the unique odd rotation landing
    the next facet on the mirror.  Even and infinite bonds stop the roll
    and are recorded as boundary walls.
    """
    space = chamber.space
    rs = scheme_from_adjacency(chamber.facet_count, chamber.adjacency)
    comp = component_of(rs, facet)
    tree = unfold(comp, facet, max_nodes=max_tiles)
    mirror_normal = chamber.normals[facet]
    chart = MirrorChart(space, mirror_normal)

    placements = {0: np.eye(space.ambient)}
    for edge in tree.edges:
        parent = tree.nodes[edge.parent]
        child = tree.nodes[edge.child]
        placements[child.id] = _select_roll(
            chamber, mirror_normal, placements[parent.id],
            parent.facet, child.facet, edge.label)

    tiles, walls = [], []
    for node in tree.nodes:
        g = placements[node.id]
        tiles.append(_tile_from_placement(
            chamber, chart, mirror_normal, node.id, node.facet, node.depth, g))
        walls.extend(_tile_walls(chamber, chart, mirror_normal,
                                 node.id, node.facet, g, _is_even_stop))
    return DevelopedFigure(chart.mirror, chart, chamber, facet,
                           tiles, walls, tree.complete, tree)


def full_development(chamber, facet, max_tiles=5000):
    """Both rolling operations: the whole tiling of the mirror.

    On top of the odd rolls, even walls reflect the development inside the
    mirror, generating the induced reflection group; tiles are deduplicated
    by facet color and barycenter.
    """
    space = chamber.space
    mirror_normal = chamber.normals[facet]
    chart = MirrorChart(space, mirror_normal)

    def key(color, g):
        verts = _transform_points(
            space, g, chamber.vertices[list(chamber.facet_vertices[color])])
        bary = verts.mean(axis=0)
        return (color, tuple(np.round(bary, POINT_KEY_DECIMALS)))

    start = (facet, np.eye(space.ambient))
    queue = deque([(facet, start[1], 0)])
    seen = {key(*start)}
    tiles, walls = [], []
    truncated = False
    while queue:
        if len(tiles) >= max_tiles:
            truncated = True
            break
        color, g, depth = queue.popleft()
        idx = len(tiles)
        tiles.append(_tile_from_placement(
            chamber, chart, mirror_normal, idx, color, depth, g))
        walls.extend(_tile_walls(chamber, chart, mirror_normal,
                                 idx, color, g, _is_even_stop))
        for j, m in chamber.facets_adjacent_to(color):
            if m != INF and m % 2 == 1 and m >= 3:
                g2 = _select_roll(chamber, mirror_normal, g, color, j, m)
                nxt = (j, g2, depth + 1)
            elif _is_even_stop(m) and m != INF:
                pushed = space.normalize_normal(
                    space.push_normal(g, chamber.normals[j]))
                w = _orthogonal_wall_normal(space, mirror_normal, pushed, m)
                g2 = space.reflection(w) @ g
                nxt = (color, g2, depth + 1)
            else:
                continue
            k = key(nxt[0], nxt[1])
            if k not in seen:
                seen.add(k)
                queue.append(nxt)
    return DevelopedFigure(chart.mirror, chart, chamber, facet,
                           tiles, walls, not truncated, None)


# ---------------------------------------------------------------------------
# Re-chambering: turn a complete development into a chamber of its own


def rechamber(df):
    """Build a GeometricChamber from the boundary of a complete development.

    Boundary wall pieces lying in a common hyperplane merge into one facet;
    chamber vertices are wall-piece vertices incident to at least dim
    facets; dihedral labels are read back from the facet normals.
    """
    if not df.complete:
        raise DevelopError("cannot re-chamber a truncated development")
    space = df.mirror
    interior = _interior_point(df)

    planes = {}
    for piece in df.walls:
        w = piece.normal
        if space.eval(w, interior) < 0:
            w = -w
        k = tuple(np.round(w, POINT_KEY_DECIMALS))
        planes.setdefault(k, [w, []])[1].append(piece)
    keys = sorted(planes)
    normals = np.array([planes[k][0] for k in keys])

    verts_map = {}
    for k in keys:
        for piece in planes[k][1]:
            for v in piece.verts:
                verts_map.setdefault(tuple(np.round(v, POINT_KEY_DECIMALS)), v)
    candidates = [verts_map[k] for k in sorted(verts_map)]

    vertices = []
    incidence = []
    for v in candidates:
        on = frozenset(i for i, w in enumerate(normals)
                       if abs(space.eval(w, v)) < LAND_TOL)
        if len(on) >= space.dim:
            vertices.append(v)
            incidence.append(on)
    vertices = np.array(vertices)

    facet_vertex_ids = [tuple(i for i, inc in enumerate(incidence) if f in inc)
                        for f in range(len(normals))]
    adjacency = {}
    shared_needed = max(1, space.dim - 1)
    for i in range(len(normals)):
        for j in range(i + 1, len(normals)):
            shared = set(facet_vertex_ids[i]) & set(facet_vertex_ids[j])
            if len(shared) >= shared_needed:
                angle = math.acos(max(-1.0, min(1.0, -space.dot(normals[i],
                                                                normals[j]))))
                m = max(2, round(math.pi / angle))
                if abs(angle - math.pi / m) > 1e-5:
                    raise DevelopError(
                        f"dihedral angle {angle} of facets {i},{j} is not pi/m")
                adjacency[frozenset((i, j))] = m

    cycles = tuple(_facet_cycle(space, vertices, ids, normals[f])
                   for f, ids in enumerate(facet_vertex_ids))
    if any(len(ids) < space.dim for ids in facet_vertex_ids):
        raise DevelopError("development boundary does not close up a chamber")
    return GeometricChamber(space, normals, vertices, cycles, adjacency,
                            True, None)


def _interior_point(df):
    space = df.mirror
    pts = np.vstack([t.verts for t in df.tiles])
    bary = pts.mean(axis=0)
    if space.kind == "euclidean":
        return bary / bary[-1]
    return space.normalize_point(bary)


def _facet_cycle(space, vertices, ids, normal):
    """Order the vertices of one facet cyclically (dim-2 polygons) or flat."""
    if len(ids) <= 2:
        return tuple(ids)
    pts = vertices[list(ids)]
    if space.kind == "euclidean":
        center = pts.mean(axis=0)
        center[-1] = 1.0
    else:
        center = space.normalize_point(pts.mean(axis=0))
    t0 = space.tangent(center, pts[0])
    e1 = t0 / math.sqrt(space.dot(t0, t0))
    e2 = None
    for p in pts[1:]:
        t = space.tangent(center, p)
        t = t - space.dot(t, e1) * e1
        n = space.dot(t, t)
        if n > 1e-12:
            e2 = t / math.sqrt(n)
            break
    if e2 is None:
        raise DevelopError("degenerate facet polygon")
    angles = []
    for vid, p in zip(ids, pts):
        t = space.tangent(center, p)
        angles.append((math.atan2(space.dot(t, e2), space.dot(t, e1)), vid))
    return tuple(vid for _, vid in sorted(angles))


@dataclass
class TwoStageResult:
    first: DevelopedFigure
    chamber: GeometricChamber   # the re-chambered first development
    second: DevelopedFigure


def two_stage(chamber, facet1=0, facet2=None, max_tiles=5000):
    """Roll, re-chamber, roll again: the development on a codim-2 mirror.

    facet2 defaults to the first facet of the intermediate chamber whose
    rolling component is a spanning tree, so the second development is
    complete and carries every facet.
    """
    df1 = roll_onto_mirror(chamber, facet1, max_tiles=max_tiles)
    mid = rechamber(df1)
    if facet2 is None:
        facet2 = _spanning_tree_facet(mid)
    df2 = roll_onto_mirror(mid, facet2, max_tiles=max_tiles)
    return TwoStageResult(df1, mid, df2)


def _spanning_tree_facet(chamber):
    rs = scheme_from_adjacency(chamber.facet_count, chamber.adjacency)
    for facet in range(chamber.facet_count):
        comp = component_of(rs, facet)
        if comp.is_tree and len(comp.nodes) == chamber.facet_count:
            return facet
    raise DevelopError("no facet unfolds the whole chamber as a tree")


# ---------------------------------------------------------------------------
# Measurement


def _boundary_cycle(df):
    """Ordered boundary vertices of a complete 2-dimensional development."""
    if df.mirror.dim != 2:
        raise DevelopError("boundary traversal needs a 2-dimensional development")
    if not df.complete:
        raise DevelopError("development is truncated")
    pieces = []
    points = {}

    def intern(v):
        k = tuple(np.round(v, POINT_KEY_DECIMALS))
        points.setdefault(k, v)
        return k

    for piece in df.walls:
        if len(piece.verts) != 2:
            raise DevelopError("2-dimensional walls must be segments")
        pieces.append((intern(piece.verts[0]), intern(piece.verts[1])))

    adj = {}
    for a, b in pieces:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    for k, nb in adj.items():
        if len(nb) != 2:
            raise DevelopError(f"boundary vertex {k} has {len(nb)} incident walls")

    start = min(adj)
    second = min(adj[start])
    cycle = [start, second]
    while True:
        prev, cur = cycle[-2], cycle[-1]
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        if nxt == start:
            break
        cycle.append(nxt)
    return [points[k] for k in cycle]


def measure_polygon(df):
    """Side lengths and interior angles of the chamber boundary.

    Boundary vertices with a straight angle (subdivision lines hitting the
    boundary) are merged into their side; the result lists one (length,
    angle) pair per corner, starting from the lexicographically smallest
    corner, with the angle measured at the corner where the side starts.
    """
    cycle = _boundary_cycle(df)
    space = df.mirror
    n = len(cycle)
    angles = [space.angle_at(cycle[i], cycle[i - 1], cycle[(i + 1) % n])
              for i in range(n)]
    corner_ids = [i for i in range(n) if angles[i] < math.pi - STRAIGHT_TOL]
    if not corner_ids:
        raise DevelopError("boundary has no corners")
    sides = []
    for a, b in zip(corner_ids, corner_ids[1:] + [corner_ids[0] + n]):
        p = cycle[a % n]
        q = cycle[b % n]
        sides.append((space.distance(p, q), angles[a % n], tuple(np.round(p, 9))))
    start = min(range(len(sides)), key=lambda i: sides[i][2])
    ordered = sides[start:] + sides[:start]
    return [(length, angle) for length, angle, _ in ordered]


# ---------------------------------------------------------------------------
# Meetings of subdivision lines with the boundary


@dataclass
class MeetingVariant:
    tag: str                  # 'a': odd dihedral, 'b': BC3, 'c': A3, 'd': H3
    vertex_type: CoxeterType
    incidence_angles: tuple   # angle of each interior line against the boundary
    point: np.ndarray


def _stratum_type(df, point):
    """Rank-3 vertex group at a boundary point, from any incident tile."""
    space = df.mirror
    chamber = df.chamber
    found = None
    for tile in df.tiles:
        hit = [i for i, v in enumerate(tile.verts)
               if np.abs(v - point).max() < 1e-6]
        if not hit:
            continue
        amb = tile.verts_ambient[hit[0]]
        on = [i for i in range(chamber.facet_count)
              if abs(chamber.space.eval(
                  chamber.space.push_normal(tile.placement, chamber.normals[i]),
                  amb)) < LAND_TOL]
        if len(on) != chamber.space.dim:
            continue
        labels = {}
        for a in range(len(on)):
            for b in range(a + 1, len(on)):
                labels[(a, b)] = chamber.label(on[a], on[b])
        t = classify(CoxeterMatrix(len(on), labels))
        if found is None:
            found = t
        elif found != t:
            raise DevelopError(f"inconsistent vertex group at {point}: {found} vs {t}")
    if found is None:
        raise DevelopError(f"no chamber vertex meets the point {point}")
    return found


def _edge_directions_at(df, point):
    """Unit tangents of tile edges at the point, split boundary/interior."""
    space = df.mirror
    wall_segments = [(w.verts[0], w.verts[1]) for w in df.walls]

    def on_boundary(p, q):
        for a, b in wall_segments:
            if (np.abs(a - p).max() < 1e-6 and np.abs(b - q).max() < 1e-6) or \
               (np.abs(a - q).max() < 1e-6 and np.abs(b - p).max() < 1e-6):
                return True
        return False

    boundary, interior = {}, {}
    for tile in df.tiles:
        k = len(tile.verts)
        for i in range(k):
            p, q = tile.verts[i], tile.verts[(i + 1) % k]
            for a, b in ((p, q), (q, p)):
                if np.abs(a - point).max() < 1e-6:
                    t = space.tangent(np.asarray(point, float), b)
                    nrm = space.dot(t, t)
                    if nrm < 1e-14:
                        continue
                    t = t / math.sqrt(nrm)
                    kk = tuple(np.round(t, 6))
                    (boundary if on_boundary(a, b) else interior)[kk] = t
    # an interior direction may coincide with a boundary one when tiles
    # on both sides contribute; boundary wins
    for k in list(interior):
        if k in boundary:
            del interior[k]
    return list(boundary.values()), list(interior.values())


def classify_meeting(df, point):
    """Classify how subdivision lines meet the boundary at one vertex.

    The local rank-3 vertex group decides the variant: an odd dihedral plus
    a mirror passes through ('a'), BC3 arrives orthogonally at a corner
    ('b'), A3 is the arctan(sqrt 2) billiard bounce ('c'), H3 the
    icosahedral one ('d').  Incidence angles are measured, not assumed.
    """
    if df.mirror.dim != 2:
        raise DevelopError("meetings are defined on 2-dimensional developments")
    point = np.asarray(point, dtype=float)
    if not any(np.abs(v - point).max() < 1e-6
               for w in df.walls for v in w.verts):
        raise DevelopError("point is not a boundary vertex")
    vertex_type = _stratum_type(df, point)

    tags = {}
    for fam, tag in (("BC", "b"), ("A", "c"), ("H", "d")):
        tags[fam] = tag
    factors = vertex_type.factors
    tag = None
    if len(factors) == 1:
        fam, rank = factors[0].family, factors[0].rank
        if rank == 3 and fam in tags:
            tag = tags[fam]
    elif len(factors) == 2:
        fams = sorted(f.family for f in factors)
        dihedral = [f for f in factors if f.rank == 2]
        if "A" in fams and dihedral:
            f = dihedral[0]
            m = f.m if f.family == "G" else {"A": 3, "BC": 4}[f.family]
            if m % 2 == 1:
                tag = "a"
    if tag is None:
        raise DevelopError(
            f"vertex group {vertex_type} admits no subdivision meeting")

    boundary, interior = _edge_directions_at(df, point)
    if not interior:
        raise DevelopError(f"no subdivision line reaches {point}")
    space = df.mirror
    angles = []
    for t in interior:
        best = min(math.acos(max(-1.0, min(1.0, space.dot(t, b))))
                   for b in boundary)
        angles.append(best)
    return MeetingVariant(tag, vertex_type, tuple(sorted(angles)), point)


def boundary_meetings(df):
    """All classifiable boundary meetings of a 2-dimensional development."""
    out = []
    for p in df.boundary_points():
        try:
            out.append(classify_meeting(df, p))
        except DevelopError:
            continue
    return out
