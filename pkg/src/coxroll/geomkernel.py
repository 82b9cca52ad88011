"""Quadratic-form models of the three constant-curvature geometries.

Spherical S^n and hyperbolic L^n live on the unit / hyperboloid quadric of
R^{n+1} with form I resp. diag(1..1,-1); Euclidean E^n uses homogeneous
coordinates (x, 1) so that translations are matrices too.  Chambers are
realized from Gram matrices by a signature-adapted LDL factorization that
allows the last pivot to be negative.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace

import numpy as np

FORM_TOL = 1e-9
CLAMP_TOL = 1e-10  # domain guard before acos/acosh


class GeometryError(ValueError):
    """Inconsistent geometric data."""


class UnsupportedSignatureError(GeometryError):
    """Cosine matrix signature fits none of S^n, E^n, L^n simplices."""


class UltraparallelError(GeometryError):
    """Mirrors in L^n that do not intersect have no dihedral angle."""


@dataclass(frozen=True)
class SpaceModel:
    """One of the three constant-curvature spaces, with its ambient form."""

    kind: str  # "spherical" | "euclidean" | "hyperbolic"
    dim: int

    def __post_init__(self):
        if self.kind not in ("spherical", "euclidean", "hyperbolic"):
            raise GeometryError(f"unknown space kind {self.kind!r}")
        if self.dim < 0:
            raise GeometryError("dimension must be >= 0")

    @property
    def ambient(self):
        return self.dim + 1

    def form_matrix(self):
        """Metric form on normals (and on points, for S/L)."""
        J = np.eye(self.ambient)
        if self.kind == "hyperbolic":
            J[-1, -1] = -1.0
        elif self.kind == "euclidean":
            J[-1, -1] = 0.0  # homogeneous slot carries no metric
        return J

    def dot(self, a, b):
        """Metric pairing: normal-normal angles and point-point distances."""
        return float(a @ self.form_matrix() @ b)

    def eval(self, normal, point):
        """Signed incidence of a point against a wall functional."""
        if self.kind == "euclidean":
            return float(normal @ point)  # (u, c) . (x, 1) = u.x + c
        return self.dot(normal, point)

    def reflection(self, normal):
        """Reflection matrix fixing the wall of the (unit) normal."""
        u = np.asarray(normal, dtype=float)
        nn = self.dot(u, u)
        if abs(nn - 1.0) > 1e-7:
            raise GeometryError(f"normal has metric norm {nn}, expected 1")
        n1 = self.ambient
        if self.kind == "euclidean":
            direction = u.copy()
            direction[-1] = 0.0
            return np.eye(n1) - 2.0 * np.outer(direction, u)
        return np.eye(n1) - 2.0 * np.outer(u, self.form_matrix() @ u)

    def is_isometry(self, mat, tol=FORM_TOL):
        mat = np.asarray(mat, dtype=float)
        if self.kind == "euclidean":
            linear = mat[:-1, :-1]
            ortho = np.abs(linear.T @ linear - np.eye(self.dim)).max() <= tol
            last = abs(mat[-1, -1] - 1.0) <= tol and np.abs(mat[-1, :-1]).max() <= tol
            return bool(ortho and last)
        J = self.form_matrix()
        return bool(np.abs(mat.T @ J @ mat - J).max() <= tol)

    def push_normal(self, mat, normal):
        """Wall functional of the transformed wall: x -> eval(normal, mat^-1 x)."""
        if self.kind == "euclidean":
            return np.linalg.solve(mat.T, normal)
        return mat @ normal

    def normalize_point(self, p):
        p = np.asarray(p, dtype=float)
        if self.kind == "spherical":
            return p / math.sqrt(self.dot(p, p))
        if self.kind == "hyperbolic":
            nn = self.dot(p, p)
            if nn >= -CLAMP_TOL:
                raise GeometryError("point is not timelike")
            q = p / math.sqrt(-nn)
            return q if q[-1] > 0 else -q
        return p / p[-1]

    def normalize_normal(self, u):
        u = np.asarray(u, dtype=float)
        nn = self.dot(u, u)
        if nn <= CLAMP_TOL:
            raise GeometryError("normal is not spacelike")
        return u / math.sqrt(nn)

    def distance(self, p, q):
        if self.kind == "spherical":
            return math.acos(_clamp(self.dot(p, q), -1.0, 1.0))
        if self.kind == "hyperbolic":
            return math.acosh(max(1.0, -self.dot(p, q)))
        d = p - q
        return math.sqrt(self.dot(d, d))

    def tangent(self, p, q):
        """Component of q - p orthogonal to p: direction of the p->q geodesic."""
        if self.kind == "euclidean":
            t = q - p
            t[-1] = 0.0
            return t
        return q - (self.dot(q, p) / self.dot(p, p)) * p

    def angle_at(self, p, q1, q2):
        """Angle at p between the geodesics toward q1 and q2."""
        t1, t2 = self.tangent(p, q1), self.tangent(p, q2)
        n1, n2 = self.dot(t1, t1), self.dot(t2, t2)
        if n1 <= CLAMP_TOL or n2 <= CLAMP_TOL:
            raise GeometryError("degenerate tangent at angle measurement")
        c = self.dot(t1, t2) / math.sqrt(n1 * n2)
        return math.acos(_clamp(c, -1.0, 1.0))

    def geodesic_points(self, p, q, count):
        """Sample points along the geodesic from p to q, endpoints included."""
        ts = np.linspace(0.0, 1.0, count)
        if self.kind == "euclidean":
            return [(1 - t) * p + t * q for t in ts]
        d = self.distance(p, q)
        if d < 1e-12:
            return [p.copy() for _ in ts]
        if self.kind == "spherical":
            return [(math.sin((1 - t) * d) * p + math.sin(t * d) * q) / math.sin(d)
                    for t in ts]
        return [(math.sinh((1 - t) * d) * p + math.sinh(t * d) * q) / math.sinh(d)
                for t in ts]


def _clamp(x, lo, hi):
    return lo if x < lo else (hi if x > hi else x)


def reflection(space, normal):
    """Reflection isometry for a unit spacelike normal."""
    return space.reflection(normal)


def dihedral_angle(space, ui, uj):
    """Angle between two intersecting walls: arccos(-<u_i, u_j>)."""
    c = space.dot(ui, uj)
    if space.kind == "hyperbolic" and abs(c) >= 1.0 - CLAMP_TOL:
        raise UltraparallelError(f"mirrors with <u_i,u_j> = {c} do not intersect")
    return math.acos(_clamp(-c, -1.0, 1.0))


@dataclass(frozen=True)
class GeometricChamber:
    """Facet normals, vertices and face data of a realized chamber.

    normals[i] is the inward unit wall functional of facet i; vertices are
    model points (rows).  facet_vertices[i] lists the vertex ids on facet i
    (a cycle when the facet is 2-dimensional); adjacency maps facet pairs
    that share a codimension-2 face to the dihedral label m.
    """

    space: SpaceModel
    normals: np.ndarray
    vertices: np.ndarray
    facet_vertices: tuple
    adjacency: dict
    compact: bool
    matrix: object = None  # CoxeterMatrix for simplices

    @property
    def facet_count(self):
        return len(self.normals)

    def label(self, i, j):
        pair = frozenset((i, j))
        if pair not in self.adjacency:
            raise GeometryError(f"facets {i} and {j} are not adjacent")
        return self.adjacency[pair]

    def facets_adjacent_to(self, i):
        out = []
        for pair, m in self.adjacency.items():
            if i in pair:
                (j,) = pair - {i}
                out.append((j, m))
        return sorted(out)

    def to_json(self):
        labels = {f"{min(p)+1},{max(p)+1}": (str(m) if m == math.inf else int(m))
                  for p, m in self.adjacency.items()}
        payload = {
            "kind": self.space.kind,
            "dim": self.space.dim,
            "compact": self.compact,
            "normals": _round12(self.normals),
            "vertices": _round12(self.vertices),
            "labels": labels,
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _round12(arr):
    return [[float(f"{x:.12g}") for x in row] for row in np.asarray(arr)]


def _ldl_pivots(G):
    """Pivots and unit-lower-triangular factor of G = L D L^T, index order."""
    n = G.shape[0]
    A = G.astype(float).copy()
    L = np.eye(n)
    d = np.zeros(n)
    for i in range(n):
        d[i] = A[i, i]
        if i == n - 1:
            break
        if abs(d[i]) < FORM_TOL:
            raise UnsupportedSignatureError(
                f"zero pivot at position {i} before the last index")
        L[i + 1:, i] = A[i + 1:, i] / d[i]
        A[i + 1:, i + 1:] -= np.outer(A[i + 1:, i], A[i + 1:, i]) / d[i]
    return d, L


def realize_simplex(matrix, kind=None):
    """Realize a rank-(n+1) scheme as a simplex chamber in S^n, E^n or L^n.

    The cosine matrix is factored in index order: all leading pivots must be
    positive, and the sign of the last pivot picks the geometry (positive:
    sphere, zero: Euclidean, negative: hyperbolic).  kind, when given, must
    match.  Hyperbolic vertices that fail to be timelike mark the chamber
    non-compact (flagged, not fatal).
    """
    G = matrix.cosine_matrix()
    rank = matrix.rank
    d, L = _ldl_pivots(G)
    if any(p <= FORM_TOL for p in d[:-1]):
        raise UnsupportedSignatureError(
            f"non-positive leading pivot: {d[:-1].tolist()}")
    last = d[-1]
    if last > FORM_TOL:
        found = "spherical"
    elif last < -FORM_TOL:
        found = "hyperbolic"
    else:
        found = "euclidean"
    if kind is not None and kind != found:
        raise UnsupportedSignatureError(f"signature gives {found}, not {kind}")

    space = SpaceModel(found, rank - 1)
    if found == "spherical":
        U = L * np.sqrt(d)
        V = np.linalg.inv(U).T
        vertices = np.array([space.normalize_point(v) for v in V])
        return GeometricChamber(space, U, vertices, _simplex_facets(rank),
                                _simplex_adjacency(matrix), True, matrix)
    if found == "hyperbolic":
        scale = np.sqrt(np.abs(d))
        U = L * scale  # row i has coordinates L[i, k] * sqrt(|d_k|)
        J = space.form_matrix()
        V = (J @ np.linalg.inv(U)).T  # rows: <u_i, v_j> = delta_ij
        norms = np.array([space.dot(v, v) for v in V])
        compact = bool(np.all(norms < -CLAMP_TOL))
        sheets = [np.sign(v[-1]) for v, nn in zip(V, norms) if nn < -CLAMP_TOL]
        if sheets and all(s < 0 for s in sheets):
            # dual frame came out on the lower sheet; conjugate by -I,
            # which preserves the Gram matrix and all incidence signs
            U, V = -U, -V
        elif sheets and any(s < 0 for s in sheets):
            compact = False
        verts = [v / math.sqrt(-nn) if nn < -CLAMP_TOL else v
                 for v, nn in zip(V, norms)]
        return GeometricChamber(space, U, np.array(verts), _simplex_facets(rank),
                                _simplex_adjacency(matrix), compact, matrix)

    # euclidean: normals in R^(rank-1), offsets from the kernel direction
    U_lin = (L * np.sqrt(np.maximum(d, 0.0)))[:, :-1]
    eigval, eigvec = np.linalg.eigh(G)
    lam = eigvec[:, 0]
    if abs(eigval[0]) > 1e-7:
        raise UnsupportedSignatureError("euclidean case without a kernel vector")
    if np.all(lam <= 1e-12):
        lam = -lam
    if np.any(lam <= 1e-12):
        raise UnsupportedSignatureError("kernel vector is not positive")
    lam = lam / lam.sum()
    normals = np.hstack([U_lin, lam[:, None]])  # rows (u_i, c_i)
    verts = []
    for j in range(rank):
        rows = [i for i in range(rank) if i != j]
        A = U_lin[rows]
        b = -lam[rows]
        x = np.linalg.solve(A, b)
        verts.append(np.append(x, 1.0))
    vertices = np.array(verts)
    return GeometricChamber(space, normals, vertices, _simplex_facets(rank),
                            _simplex_adjacency(matrix), True, matrix)


def _simplex_facets(rank):
    return tuple(tuple(j for j in range(rank) if j != i) for i in range(rank))


def _simplex_adjacency(matrix):
    return {frozenset((i, j)): matrix.label(i, j)
            for i in range(matrix.rank) for j in range(i + 1, matrix.rank)}
