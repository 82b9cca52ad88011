"""Finite root systems by orbit closure of the simple basis.

Roots live in simple-root coordinates with the cosine matrix as bilinear
form; every simple root has unit length, so non-crystallographic types fit
the same machinery.  This module is the brute-force oracle behind the
mirror-reduction table.
"""

from __future__ import annotations

import json
import math

import numpy as np

from . import config
from .scheme import CoxeterMatrix, CoxeterType, SchemeError, TypeFactor, classify

ROOT_CAP = 100000  # total roots; guards misuse on non-finite input

ANGLE_TOL = 1e-6  # label recovery from pairwise inner products
MAX_LABEL = 1000


class NotFiniteError(SchemeError):
    """Root generation requested for a non-finite Coxeter matrix."""


class NonClosureError(RuntimeError):
    """Orbit closure exceeded the safety cap (internal error)."""


class AngleUnrecognizedError(SchemeError):
    """An inner product matches no -cos(pi/m) with m <= MAX_LABEL."""


class RootSystem:
    """Positive roots of a finite Coxeter matrix, closed under reflection.

    Roots are stored as rows in simple-root coordinates, one representative
    per +/- pair, with the sign convention that the first nonzero coordinate
    is positive.  The first `rank` rows are the simple roots themselves.
    """

    def __init__(self, matrix, tol=None):
        t = classify(matrix)
        if not t.finite:
            raise NotFiniteError(f"cannot enumerate roots of type {t}")
        self.matrix = matrix
        self.type = t
        self.form = matrix.cosine_matrix()
        self.tol = config.match_tol() if tol is None else tol
        self._generate()
        self._orbits = None

    # -- construction ------------------------------------------------------

    def _canonical(self, v):
        for x in v:
            if abs(x) > self.tol:
                return v if x > 0 else -v
        raise NonClosureError("zero vector reached during closure")

    def _find(self, v):
        """Index of the positive representative matching +/-v, or -1."""
        d_pos = np.abs(self.roots - v).max(axis=1)
        d_neg = np.abs(self.roots + v).max(axis=1)
        d = np.minimum(d_pos, d_neg)
        k = int(np.argmin(d))
        return k if d[k] < self.tol else -1

    def _generate(self):
        n = self.matrix.rank
        basis = np.eye(n)
        self.roots = basis.copy()
        frontier = list(range(n))
        while frontier:
            new = []
            for k in frontier:
                v = self.roots[k]
                coeff = 2.0 * (self.form @ v)
                for i in range(n):
                    w = v - coeff[i] * basis[i]
                    if self._find(w) < 0:
                        w = self._canonical(w)
                        self.roots = np.vstack([self.roots, w])
                        new.append(len(self.roots) - 1)
                        if 2 * len(self.roots) > ROOT_CAP:
                            raise NonClosureError(
                                f"orbit closure exceeded {ROOT_CAP} roots")
            frontier = new

    # -- queries -----------------------------------------------------------

    @property
    def positive_count(self):
        return len(self.roots)

    @property
    def root_count(self):
        return 2 * len(self.roots)

    @property
    def mirror_count(self):
        return len(self.roots)

    def inner(self, v, w):
        return float(v @ self.form @ w)

    def reflect(self, v, k):
        """Reflect v in the mirror of positive root k; returns raw coordinates."""
        a = self.roots[k]
        return v - 2.0 * self.inner(a, v) * a

    def simple_root_index(self, i):
        """Positive-root index of the i-th simple root (equals i by construction)."""
        if not (0 <= i < self.matrix.rank):
            raise IndexError(f"simple root {i} out of range")
        return i

    def orthogonal_set(self, k):
        """Indices of positive roots orthogonal to root k."""
        if not (0 <= k < len(self.roots)):
            raise IndexError(f"root index {k} out of range")
        prods = self.roots @ self.form @ self.roots[k]
        return [i for i in range(len(self.roots))
                if i != k and abs(prods[i]) <= self.tol]

    def simple_system(self, subset):
        """Indecomposable roots of the subset: not a nonnegative combination
        of two others.  Returned as an array of rows, subset order preserved."""
        idx = list(subset)
        if not idx:
            return np.zeros((0, self.matrix.rank))
        S = self.roots[idx]
        G = S @ self.form @ S.T  # pairwise inner products, unit diagonal
        n = len(idx)
        simple = []
        for a in range(n):
            if not self._decomposable(G, a, n):
                simple.append(idx[a])
        out = self.roots[simple]
        # sanity: a simple system is obtuse
        prods = out @ self.form @ out.T
        off = prods - np.diag(np.diag(prods))
        if off.size and off.max() > self.tol:
            raise RuntimeError("simple system has a positive inner product")
        return out

    def _decomposable(self, G, a, n):
        # alpha = c1*beta + c2*gamma with c1, c2 >= 0: solve in span(beta, gamma)
        # and check the residual 1 - c1<b,a> - c2<g,a> vanishes.
        tol = self.tol
        for b in range(n):
            if b == a:
                continue
            for c in range(b + 1, n):
                if c == a:
                    continue
                g = G[b, c]
                den = 1.0 - g * g
                if den < 1e-12:
                    continue
                c1 = (G[b, a] - g * G[c, a]) / den
                c2 = (G[c, a] - g * G[b, a]) / den
                if c1 < -tol or c2 < -tol:
                    continue
                residual = 1.0 - c1 * G[b, a] - c2 * G[c, a]
                if abs(residual) <= 10 * tol:
                    return True
        return False

    def subsystem_type(self, subset, pad_to=None):
        """CoxeterType of the reflection subgroup spanned by the subset.

        With pad_to set, R factors are appended until the total rank reaches
        it (used for mirror reductions, pad_to = rank - 1).
        """
        simples = self.simple_system(subset)
        s = len(simples)
        labels = {}
        prods = simples @ self.form @ simples.T
        for i in range(s):
            for j in range(i + 1, s):
                labels[(i, j)] = self._label_from_product(prods[i, j])
        t = classify(CoxeterMatrix(s, labels)) if s else CoxeterType()
        if pad_to is not None:
            if s > pad_to:
                raise RuntimeError(
                    f"subsystem rank {s} exceeds padding target {pad_to}")
            for _ in range(pad_to - s):
                t = t + CoxeterType([TypeFactor("R", 1)])
        return t

    @staticmethod
    def _label_from_product(c):
        if abs(c) <= ANGLE_TOL:
            return 2
        angle = math.acos(max(-1.0, min(1.0, -c)))
        m = round(math.pi / angle)
        if m < 2 or m > MAX_LABEL or abs(-math.cos(math.pi / m) - c) > ANGLE_TOL:
            raise AngleUnrecognizedError(
                f"inner product {c} matches no -cos(pi/m) with m <= {MAX_LABEL}")
        return int(m)

    def orbits(self):
        """Mirror orbits: positive roots connected by simple reflections."""
        if self._orbits is not None:
            return self._orbits
        n = self.matrix.rank
        parent = list(range(len(self.roots)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for k in range(len(self.roots)):
            v = self.roots[k]
            coeff = 2.0 * (self.form @ v)
            for i in range(n):
                w = v - coeff[i] * np.eye(n)[i]
                j = self._find(w)
                if j < 0:
                    raise NonClosureError("reflection left the root set")
                ra, rb = find(k), find(j)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)

        groups = {}
        for k in range(len(self.roots)):
            groups.setdefault(find(k), []).append(k)
        self._orbits = sorted((tuple(sorted(g)) for g in groups.values()),
                              key=lambda g: g[0])
        return self._orbits

    def orbit_of(self, k):
        for orbit in self.orbits():
            if k in orbit:
                return orbit
        raise IndexError(f"root index {k} out of range")

    def check_closure(self, tol=1e-8):
        """Reflection closure at the stated tolerance; True when closed."""
        for k in range(len(self.roots)):
            for j in range(len(self.roots)):
                w = self.reflect(self.roots[j], k)
                d_pos = np.abs(self.roots - w).max(axis=1).min()
                d_neg = np.abs(self.roots + w).max(axis=1).min()
                if min(d_pos, d_neg) > tol:
                    return False
        return True

    def to_json(self):
        """Debug dump: coordinates to 12 significant digits."""
        return json.dumps(
            {"rank": self.matrix.rank,
             "type": str(self.type),
             "positive_roots": [[float(f"{x:.12g}") for x in r]
                                for r in self.roots]},
            sort_keys=True, separators=(",", ":"))


def generate_roots(matrix, tol=None):
    """Orbit closure of the simple basis; requires a finite type."""
    return RootSystem(matrix, tol=tol)
