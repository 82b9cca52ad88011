"""Coxeter matrices, scheme graphs, and classification of Coxeter types.

A Coxeter matrix is a symmetric integer matrix of bond labels m_ij with
m_ii = 1 and m_ij >= 2 (possibly infinite).  The scheme graph draws an edge
for every label >= 3.  Classification runs twice: a diagram pattern match
against the finite catalogue, and positive-definiteness of the cosine
matrix; the two must agree or a RuntimeError is raised.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

INF = math.inf

# Threshold on cosine-matrix eigenvalues for (semi)definiteness.  Labels up
# to ~50 keep the spectra separated by far more than this at double precision.
EIG_TOL = 1e-9


class SchemeError(ValueError):
    """Invalid Coxeter matrix or scheme data."""


class SchemeParseError(SchemeError):
    """Scheme file syntax or consistency error; carries a 1-based line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


def _check_label(m):
    if m == INF:
        return INF
    if not isinstance(m, (int, np.integer)) or m < 2:
        raise SchemeError(f"bond label must be an integer >= 2 or inf, got {m!r}")
    return int(m)


class CoxeterMatrix:
    """Symmetric matrix of bond labels; label(i, j) defaults to 2 off the edges."""

    __slots__ = ("rank", "_labels")

    def __init__(self, rank, labels=None):
        if rank < 1:
            raise SchemeError("rank must be positive")
        self.rank = int(rank)
        store = {}
        for (i, j), m in (labels or {}).items():
            if i == j:
                raise SchemeError("diagonal labels are fixed at 1")
            if not (0 <= i < rank and 0 <= j < rank):
                raise SchemeError(f"index pair ({i}, {j}) out of range for rank {rank}")
            key = (min(i, j), max(i, j))
            m = _check_label(m)
            if key in store and store[key] != m:
                raise SchemeError(f"conflicting labels for pair {key}")
            if m != 2:
                store[key] = m
        self._labels = store

    @classmethod
    def path(cls, labels):
        """Chain scheme: node i is joined to i+1 with the i-th label."""
        labels = list(labels)
        return cls(len(labels) + 1, {(i, i + 1): m for i, m in enumerate(labels)})

    @classmethod
    def cycle(cls, labels):
        """Cyclic scheme over len(labels) nodes; last label closes the cycle."""
        labels = list(labels)
        n = len(labels)
        if n < 3:
            raise SchemeError("a cycle needs at least 3 nodes")
        d = {(i, (i + 1) % n): m for i, m in enumerate(labels)}
        return cls(n, d)

    def label(self, i, j):
        if i == j:
            return 1
        return self._labels.get((min(i, j), max(i, j)), 2)

    def edges(self):
        """Scheme edges: sorted (i, j, m) with m >= 3."""
        return sorted((i, j, m) for (i, j), m in self._labels.items())

    def cosine_matrix(self):
        """B_ij = -cos(pi/m_ij), with the infinite label contributing -1."""
        B = np.eye(self.rank)
        for (i, j), m in self._labels.items():
            c = -1.0 if m == INF else -math.cos(math.pi / m)
            B[i, j] = B[j, i] = c
        return B

    def submatrix(self, subset):
        """Principal submatrix on the given nodes, in sorted node order."""
        nodes = sorted(subset)
        pos = {v: k for k, v in enumerate(nodes)}
        labels = {}
        for (i, j), m in self._labels.items():
            if i in pos and j in pos:
                labels[(pos[i], pos[j])] = m
        return CoxeterMatrix(len(nodes), labels)

    def permuted(self, perm):
        """Relabel nodes: new node perm[i] carries old node i."""
        labels = {(perm[i], perm[j]): m for (i, j), m in self._labels.items()}
        return CoxeterMatrix(self.rank, labels)

    def has_infinite_label(self):
        return any(m == INF for m in self._labels.values())

    def __eq__(self, other):
        return (isinstance(other, CoxeterMatrix)
                and self.rank == other.rank and self._labels == other._labels)

    def __hash__(self):
        return hash((self.rank, frozenset(self._labels.items())))

    def __repr__(self):
        return f"CoxeterMatrix(rank={self.rank}, labels={self._labels})"


@dataclass(frozen=True)
class SchemeGraph:
    """Node set plus labelled edges (label >= 3 only, per the drawing rule)."""

    nodes: tuple
    edges: tuple  # (i, j, label) triples, i < j


def scheme_graph(matrix):
    return SchemeGraph(tuple(range(matrix.rank)), tuple(matrix.edges()))


# ---------------------------------------------------------------------------
# Coxeter types


@dataclass(frozen=True, order=True)
class TypeFactor:
    """One irreducible summand; family "G" carries the dihedral label in m."""

    family: str
    rank: int
    m: int = 0


def _expand(factor):
    """Low-rank aliases: D1=BC1=A1, D2=A1+A1, D3=A3, G2(3)=A2, G2(4)=BC2."""
    fam, r, m = factor.family, factor.rank, factor.m
    if r == 0 and fam in ("A", "BC", "D"):
        return []
    if fam in ("BC", "D") and r == 1:
        return [TypeFactor("A", 1)]
    if fam == "D" and r == 2:
        return [TypeFactor("A", 1), TypeFactor("A", 1)]
    if fam == "D" and r == 3:
        return [TypeFactor("A", 3)]
    if fam == "G":
        if m == 3:
            return [TypeFactor("A", 2)]
        if m == 4:
            return [TypeFactor("BC", 2)]
    return [factor]


_FACTOR_ORDERS = {"E": {6: 51840, 7: 2903040, 8: 696729600}, "F": {4: 1152},
                  "H": {3: 120, 4: 14400}}


def factor_order(f):
    """Order of the finite reflection group of one factor (R counts as 1)."""
    if f.family == "A":
        return math.factorial(f.rank + 1)
    if f.family == "BC":
        return (2 ** f.rank) * math.factorial(f.rank)
    if f.family == "D":
        return (2 ** (f.rank - 1)) * math.factorial(f.rank)
    if f.family == "G":
        return 2 * f.m
    if f.family == "R":
        return 1
    if f.family in _FACTOR_ORDERS:
        return _FACTOR_ORDERS[f.family][f.rank]
    raise SchemeError(f"{f} has no finite order")


class CoxeterType:
    """Direct sum of type factors, kept sorted so equality is decidable."""

    __slots__ = ("factors",)

    def __init__(self, factors=()):
        flat = []
        for f in factors:
            flat.extend(_expand(f))
        self.factors = tuple(sorted(flat))

    def __add__(self, other):
        return CoxeterType(self.factors + other.factors)

    def __eq__(self, other):
        return isinstance(other, CoxeterType) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    @property
    def finite(self):
        return all(f.family in ("A", "BC", "D", "E", "F", "G", "H", "R")
                   for f in self.factors)

    @property
    def rank(self):
        """Total rank, counting each R factor as one dimension."""
        return sum(f.rank for f in self.factors)

    def order(self):
        if not self.finite:
            raise SchemeError(f"{self} is not a finite type")
        out = 1
        for f in self.factors:
            out *= factor_order(f)
        return out

    def irreducible_factor(self):
        if len(self.factors) != 1:
            raise SchemeError(f"{self} is not irreducible")
        return self.factors[0]

    def __str__(self):
        if not self.factors:
            return "1"
        out = []
        for f in self.factors:
            if f.family == "G":
                out.append(f"G2({f.m})")
            elif f.family == "R":
                out.append("R")
            elif f.family in ("Euc", "Ind"):
                out.append(f"{f.family}({f.rank})")
            else:
                out.append(f"{f.family}{f.rank}")
        return "+".join(out)

    __repr__ = __str__


def A(n):
    return CoxeterType([TypeFactor("A", n)])


def BC(n):
    return CoxeterType([TypeFactor("BC", n)])


def D(n):
    return CoxeterType([TypeFactor("D", n)])


def E(n):
    if n not in (6, 7, 8):
        raise SchemeError("E family has ranks 6, 7, 8")
    return CoxeterType([TypeFactor("E", n)])


def F4():
    return CoxeterType([TypeFactor("F", 4)])


def G2(m):
    if m < 3:
        raise SchemeError("dihedral label must be >= 3")
    return CoxeterType([TypeFactor("G", 2, m)])


def H(n):
    if n not in (3, 4):
        raise SchemeError("H family has ranks 3, 4")
    return CoxeterType([TypeFactor("H", n)])


def R():
    return CoxeterType([TypeFactor("R", 1)])


def euclidean(rank):
    return CoxeterType([TypeFactor("Euc", rank)])


def indefinite(rank):
    return CoxeterType([TypeFactor("Ind", rank)])


def empty_type():
    return CoxeterType()


def standard_diagram(factor):
    """Coxeter matrix of one irreducible finite factor, in canonical node order."""
    fam, n, m = factor.family, factor.rank, factor.m
    if fam == "A":
        return CoxeterMatrix.path([3] * (n - 1)) if n > 1 else CoxeterMatrix(1)
    if fam == "BC":
        return CoxeterMatrix.path([3] * (n - 2) + [4])
    if fam == "D":
        labels = {(i, i + 1): 3 for i in range(n - 2)}
        labels[(n - 3, n - 1)] = 3  # fork at the penultimate chain node
        return CoxeterMatrix(n, labels)
    if fam == "E":
        labels = {(i, i + 1): 3 for i in range(n - 2)}
        labels[(2, n - 1)] = 3  # short arm off the third node
        return CoxeterMatrix(n, labels)
    if fam == "F":
        return CoxeterMatrix.path([3, 4, 3])
    if fam == "G":
        return CoxeterMatrix.path([m])
    if fam == "H":
        return CoxeterMatrix.path([5] + [3] * (n - 2))
    raise SchemeError(f"no standard diagram for {factor}")


# ---------------------------------------------------------------------------
# Decomposition and classification


def decompose(matrix):
    """Connected components of the scheme graph, as (node tuple, submatrix)."""
    adj = {i: set() for i in range(matrix.rank)}
    for i, j, _ in matrix.edges():
        adj[i].add(j)
        adj[j].add(i)
    seen = set()
    out = []
    for start in range(matrix.rank):
        if start in seen:
            continue
        comp = []
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in sorted(adj[v]):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        nodes = tuple(sorted(comp))
        out.append((nodes, matrix.submatrix(nodes)))
    return out


def _arm_lengths(n, adj, branch):
    arms = []
    for first in sorted(adj[branch]):
        length = 1
        prev, cur = branch, first
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    return sorted(arms)


def _match_finite_component(matrix):
    """Pattern-match a connected scheme against the finite catalogue.

    Returns a TypeFactor or None.  Independent of the cosine matrix; the
    caller cross-checks against definiteness.
    """
    n = matrix.rank
    edges = matrix.edges()
    if any(m == INF for _, _, m in edges):
        return None
    if n == 1:
        return TypeFactor("A", 1)
    if len(edges) != n - 1:
        return None  # finite connected diagrams are trees
    if n == 2:
        m = edges[0][2]
        if m == 3:
            return TypeFactor("A", 2)
        if m == 4:
            return TypeFactor("BC", 2)
        return TypeFactor("G", 2, m)

    adj = {i: set() for i in range(n)}
    for i, j, _ in edges:
        adj[i].add(j)
        adj[j].add(i)
    degrees = {v: len(a) for v, a in adj.items()}
    if max(degrees.values()) > 3:
        return None
    branch = [v for v, d in degrees.items() if d == 3]
    high = [(i, j, m) for i, j, m in edges if m >= 4]

    if len(branch) > 1:
        return None
    if branch:
        if high:
            return None
        arms = _arm_lengths(n, adj, branch[0])
        if arms[0] == 1 and arms[1] == 1:
            return TypeFactor("D", n)
        if arms == [1, 2, 2] and n == 6:
            return TypeFactor("E", 6)
        if arms == [1, 2, 3] and n == 7:
            return TypeFactor("E", 7)
        if arms == [1, 2, 4] and n == 8:
            return TypeFactor("E", 8)
        return None

    # path: order the labels from one endpoint
    ends = [v for v, d in degrees.items() if d == 1]
    prev, cur = None, min(ends)
    seq = []
    while True:
        nxt = [w for w in adj[cur] if w != prev]
        if not nxt:
            break
        seq.append(matrix.label(cur, nxt[0]))
        prev, cur = cur, nxt[0]
    if all(m == 3 for m in seq):
        return TypeFactor("A", n)
    big = [m for m in seq if m >= 4]
    if len(big) != 1:
        return None
    if big[0] == 4:
        if seq[0] == 4 or seq[-1] == 4:
            return TypeFactor("BC", n)
        if n == 4 and seq[1] == 4:
            return TypeFactor("F", 4)
        return None
    if big[0] == 5 and n in (3, 4) and (seq[0] == 5 or seq[-1] == 5):
        return TypeFactor("H", n)
    return None


def _classify_component(matrix):
    pattern = _match_finite_component(matrix)
    eigs = np.linalg.eigvalsh(matrix.cosine_matrix())
    definite = eigs[0] > EIG_TOL
    if definite != (pattern is not None):
        raise RuntimeError(
            "finite-type double entry disagrees: pattern match says "
            f"{pattern}, smallest cosine eigenvalue is {eigs[0]:.3e}")
    if pattern is not None:
        return pattern
    if matrix.has_infinite_label():
        return TypeFactor("Ind", matrix.rank)
    if eigs[0] > -EIG_TOL:
        return TypeFactor("Euc", matrix.rank)
    return TypeFactor("Ind", matrix.rank)


def classify(matrix):
    """CoxeterType of the whole matrix (direct sum over components)."""
    return CoxeterType([_classify_component(sub) for _, sub in decompose(matrix)])


def is_finite(matrix):
    return classify(matrix).finite


# ---------------------------------------------------------------------------
# Scheme file format


def parse_scheme(text):
    """Parse the text scheme format: `rank N` then `i j m` lines, 1-based."""
    lines = text.splitlines()
    rank = None
    labels = {}
    declared = {}
    for num, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if rank is None:
            if len(parts) != 2 or parts[0] != "rank":
                raise SchemeParseError("expected `rank N` header", line=num)
            try:
                rank = int(parts[1])
            except ValueError:
                raise SchemeParseError(f"bad rank {parts[1]!r}", line=num) from None
            if rank < 1:
                raise SchemeParseError("rank must be positive", line=num)
            continue
        if len(parts) != 3:
            raise SchemeParseError(f"expected `i j m`, got {line!r}", line=num)
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise SchemeParseError(f"bad indices in {line!r}", line=num) from None
        if parts[2] == "inf":
            m = INF
        else:
            try:
                m = int(parts[2])
            except ValueError:
                raise SchemeParseError(f"bad label {parts[2]!r}", line=num) from None
            if m < 2:
                raise SchemeParseError(f"label {m} < 2", line=num)
        if not (1 <= i <= rank and 1 <= j <= rank):
            raise SchemeParseError(f"indices {i} {j} out of range 1..{rank}", line=num)
        if i == j:
            raise SchemeParseError("diagonal pairs are not declarable", line=num)
        key = (min(i, j) - 1, max(i, j) - 1)
        if key in declared and declared[key] != m:
            raise SchemeParseError(
                f"pair {i} {j} already declared with label {declared[key]}", line=num)
        declared[key] = m
        labels[key] = m
    if rank is None:
        raise SchemeParseError("missing `rank N` header", line=len(lines) or 1)
    return CoxeterMatrix(rank, labels)


def serialize_scheme(matrix):
    """Inverse of parse_scheme; edges sorted lexicographically, bit-exact."""
    out = [f"rank {matrix.rank}"]
    for i, j, m in matrix.edges():
        label = "inf" if m == INF else str(m)
        out.append(f"{i + 1} {j + 1} {label}")
    return "\n".join(out) + "\n"
