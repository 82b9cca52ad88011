"""Andreev's conditions for compact Coxeter polyhedra in L^3.

Input is a 3-valent planar map with a label m >= 2 on every edge (dihedral
angle pi/m).  The checks: every vertex triple must be a finite rank-3
Coxeter type (angle sum > pi; the printed form "> 2pi" cannot hold for the
all-right vertex, whose sum is 3pi/2, so the spherical-link form is what is
implemented); every 3- and 4-prismatic circuit needs exterior angle sum
> 2pi; and a quadrilateral face forced to have four right angles is
forbidden outright.  All arithmetic is exact over the rationals.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .scheme import CoxeterMatrix, CoxeterType, SchemeError, classify


class MapError(ValueError):
    """Malformed planar map."""


@dataclass(frozen=True)
class PlanarAngleMap:
    """3-valent planar map: faces as vertex cycles, labels on edges."""

    vertex_count: int
    faces: tuple        # tuples of vertex ids, cyclic
    labels: dict        # frozenset {u, v} -> m >= 2

    @property
    def edges(self):
        out = set()
        for face in self.faces:
            k = len(face)
            for i in range(k):
                out.add(frozenset((face[i], face[(i + 1) % k])))
        return out

    def label(self, u, v):
        return self.labels[frozenset((u, v))]

    def vertex_edges(self, v):
        return sorted((e for e in self.edges if v in e),
                      key=lambda e: sorted(e))

    def faces_of_edge(self, e):
        out = []
        for idx, face in enumerate(self.faces):
            k = len(face)
            for i in range(k):
                if frozenset((face[i], face[(i + 1) % k])) == e:
                    out.append(idx)
                    break
        return out

    def validate(self):
        edges = self.edges
        V, E, F = self.vertex_count, len(edges), len(self.faces)
        if V - E + F != 2:
            raise MapError(f"Euler characteristic V-E+F = {V - E + F}, expected 2")
        degree = {v: 0 for v in range(V)}
        for e in edges:
            for v in e:
                if v not in degree:
                    raise MapError(f"edge vertex {v} out of range")
                degree[v] += 1
        bad = [v for v, d in degree.items() if d != 3]
        if bad:
            raise MapError(f"vertices {bad} do not have degree 3")
        for face in self.faces:
            if len(face) < 3:
                raise MapError(f"face {face} has fewer than 3 edges")
            if len(set(face)) != len(face):
                raise MapError(f"face {face} repeats a vertex")
        for e in edges:
            borders = self.faces_of_edge(e)
            if len(borders) != 2:
                raise MapError(f"edge {sorted(e)} borders {len(borders)} faces")
        for i in range(F):
            for j in range(i + 1, F):
                common = self._common_edges(i, j)
                if len(common) > 1:
                    raise MapError(f"faces {i} and {j} share {len(common)} edges")
        missing = [sorted(e) for e in edges if e not in self.labels]
        if missing:
            raise MapError(f"edges without labels: {missing}")
        for e, m in self.labels.items():
            if not isinstance(m, int) or m < 2:
                raise MapError(f"label {m} on edge {sorted(e)} must be int >= 2")
            if e not in edges:
                raise MapError(f"label on non-edge {sorted(e)}")
        return self

    def _common_edges(self, i, j):
        def face_edges(idx):
            face = self.faces[idx]
            k = len(face)
            return {frozenset((face[t], face[(t + 1) % k])) for t in range(k)}
        return face_edges(i) & face_edges(j)

    def face_vertex_sets(self):
        return [frozenset(f) for f in self.faces]


VERTEX_FAMILIES = "accepted triples: (2,2,m), (2,3,3), (2,3,4), (2,3,5)"


def vertex_triple_admissible(m1, m2, m3):
    """Angle sum pi/m1 + pi/m2 + pi/m3 > pi, exactly."""
    return Fraction(1, m1) + Fraction(1, m2) + Fraction(1, m3) > 1


def vertex_type(m1, m2, m3):
    """Rank-3 Coxeter type of a vertex whose three edges carry these labels."""
    labels = {(0, 1): m3, (0, 2): m2, (1, 2): m1}
    return classify(CoxeterMatrix(3, labels))


@dataclass(frozen=True)
class Violation:
    condition: str   # "vertex" | "prismatic3" | "prismatic4" | "quadrilateral"
    witness: tuple
    detail: str

    def to_dict(self):
        return {"condition": self.condition, "witness": list(self.witness),
                "detail": self.detail}


@dataclass
class AndreevVerdict:
    passed: bool
    violations: list
    vertex_types: dict          # vertex -> CoxeterType (admissible vertices only)
    simplex_warning: bool = False

    def to_json(self):
        payload = {
            "pass": self.passed,
            "violations": [v.to_dict() for v in self.violations],
            "vertex_types": {str(v): str(t)
                             for v, t in sorted(self.vertex_types.items())},
        }
        if self.simplex_warning:
            payload["simplex_warning"] = True
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def check_vertices(pm):
    """Per-vertex admissibility: the label triple must be a finite rank-3 type."""
    types = {}
    violations = []
    for v in range(pm.vertex_count):
        edges = pm.vertex_edges(v)
        if len(edges) != 3:
            raise MapError(f"vertex {v} has degree {len(edges)}")
        ms = sorted(pm.labels[e] for e in edges)
        if vertex_triple_admissible(*ms):
            types[v] = vertex_type(*ms)
        else:
            violations.append(Violation(
                "vertex", (v,),
                f"labels {tuple(ms)} have angle sum <= pi; {VERTEX_FAMILIES}"))
    return types, violations


def _dual_adjacency(pm):
    adj = {}
    for e in pm.edges:
        f = pm.faces_of_edge(e)
        adj.setdefault(f[0], {})[f[1]] = e
        adj.setdefault(f[1], {})[f[0]] = e
    return adj


def _prismatic_circuits(pm, k):
    """k-circuits of faces, consecutive ones sharing an edge, with all triple
    intersections empty (not a vertex link; no chords between non-consecutive
    faces)."""
    adj = _dual_adjacency(pm)
    vsets = pm.face_vertex_sets()
    found = set()
    out = []

    def triple_ok(circuit):
        for a in range(len(circuit)):
            for b in range(a + 1, len(circuit)):
                for c in range(b + 1, len(circuit)):
                    if vsets[circuit[a]] & vsets[circuit[b]] & vsets[circuit[c]]:
                        return False
        return True

    def chords_ok(circuit):
        n = len(circuit)
        for a in range(n):
            for b in range(a + 1, n):
                consecutive = (b - a == 1) or (a == 0 and b == n - 1)
                if not consecutive and circuit[b] in adj.get(circuit[a], {}):
                    return False
        return True

    def extend(path):
        if len(path) == k:
            if path[0] in adj[path[-1]]:
                key = frozenset(path)
                if key not in found and triple_ok(path) and chords_ok(path):
                    found.add(key)
                    out.append(tuple(path))
            return
        for nxt in sorted(adj.get(path[-1], {})):
            if nxt in path:
                continue
            if nxt < path[0]:
                continue  # canonical start: smallest face first
            extend(path + [nxt])

    for start in sorted(adj):
        extend([start])
    return out


def check_prismatic(pm, k):
    """Exterior-angle sum of every k-prismatic circuit must exceed 2*pi.

    Violation when sum(pi - pi/m_i) <= 2*pi, i.e. sum(1/m_i) >= k - 2,
    checked in exact rational arithmetic.
    """
    if k not in (3, 4):
        raise SchemeError("prismatic circuits are checked for k in {3, 4}")
    violations = []
    for circuit in _prismatic_circuits(pm, k):
        pairs = list(zip(circuit, circuit[1:] + circuit[:1]))
        edges = [_shared_edge(pm, a, b) for a, b in pairs]
        total = sum(Fraction(1, pm.labels[e]) for e in edges)
        if total >= k - 2:
            labels = tuple(pm.labels[e] for e in edges)
            violations.append(Violation(
                f"prismatic{k}", circuit,
                f"faces {circuit} with labels {labels}: "
                f"sum(1/m) = {total} >= {k - 2}"))
    return violations


def _shared_edge(pm, f1, f2):
    common = pm._common_edges(f1, f2)
    if len(common) != 1:
        raise MapError(f"faces {f1}, {f2} share {len(common)} edges")
    return next(iter(common))


def check_forbidden_quad(pm):
    """Quadrilateral faces forced to have four right angles are forbidden.

    The flat angle of face F at a 3-valent vertex is pi/2 exactly when the
    off-face edge has label 2 and at least one of the two face edges does
    (spherical cosine rule: cos(angle) = (cos c + cos a cos b)/(sin a sin b)
    vanishes for acute labels only in that degenerate pattern).
    """
    violations = []
    for idx, face in enumerate(pm.faces):
        if len(face) != 4:
            continue
        right = 0
        for t in range(4):
            v = face[t]
            prev_v = face[(t - 1) % 4]
            next_v = face[(t + 1) % 4]
            face_edges = {frozenset((prev_v, v)), frozenset((v, next_v))}
            other = [e for e in pm.vertex_edges(v) if e not in face_edges]
            if len(other) != 1:
                raise MapError(f"vertex {v} is not 3-valent around face {idx}")
            a, b = sorted(pm.labels[e] for e in face_edges)
            c = pm.labels[other[0]]
            if c == 2 and (a == 2 or b == 2):
                right += 1
        if right == 4:
            violations.append(Violation(
                "quadrilateral", (idx,),
                f"face {face} has four forced right angles"))
    return violations


def check_all(pm):
    """Full verdict; simplices (V <= 4) are examined but flagged."""
    pm.validate()
    types, vertex_violations = check_vertices(pm)
    violations = list(vertex_violations)
    violations += check_prismatic(pm, 3)
    violations += check_prismatic(pm, 4)
    violations += check_forbidden_quad(pm)
    return AndreevVerdict(
        passed=not violations,
        violations=violations,
        vertex_types=types,
        simplex_warning=pm.vertex_count <= 4,
    )


# ---------------------------------------------------------------------------
# Map file format


def parse_map(text):
    """Parse the map format: `vertices N`, `face v1 ... vk`, `edge u v m`."""
    vertex_count = None
    faces = []
    labels = {}
    for num, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertices":
            if vertex_count is not None:
                raise MapError(f"line {num}: duplicate vertices header")
            vertex_count = int(parts[1])
        elif parts[0] == "face":
            faces.append(tuple(int(p) - 1 for p in parts[1:]))
        elif parts[0] == "edge":
            if len(parts) != 4:
                raise MapError(f"line {num}: expected `edge u v m`")
            u, v, m = int(parts[1]) - 1, int(parts[2]) - 1, int(parts[3])
            labels[frozenset((u, v))] = m
        else:
            raise MapError(f"line {num}: unknown directive {parts[0]!r}")
    if vertex_count is None:
        raise MapError("missing `vertices N` header")
    return PlanarAngleMap(vertex_count, tuple(faces), labels).validate()


def serialize_map(pm):
    out = [f"vertices {pm.vertex_count}"]
    for face in pm.faces:
        out.append("face " + " ".join(str(v + 1) for v in face))
    for e in sorted(pm.edges, key=lambda e: sorted(e)):
        u, v = sorted(e)
        out.append(f"edge {u + 1} {v + 1} {pm.labels[e]}")
    return "\n".join(out) + "\n"
