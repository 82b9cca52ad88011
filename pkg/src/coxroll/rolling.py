"""Rolling schemes and the combinatorial development tree.

The rolling scheme is the Coxeter scheme with even and infinite bonds
removed; a chamber may roll over a hyperedge exactly when its label is odd.
Unfolding a component produces the universal cover as a tree of reduced
edge words; for a tree component that is the component itself.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field

from .reduction import oracle_reduce
from .roots import generate_roots
from .scheme import CoxeterMatrix, CoxeterType, SchemeError, classify

INF = math.inf


def _is_odd_label(m):
    return m != INF and m % 2 == 1


@dataclass(frozen=True)
class RollingScheme:
    """Facet graph keeping only odd bonds; removed bonds are even or infinite."""

    n: int
    kept: dict      # frozenset {i, j} -> odd label
    removed: dict   # frozenset {i, j} -> even or infinite label

    def neighbors(self, v):
        out = []
        for pair, m in self.kept.items():
            if v in pair:
                (w,) = pair - {v}
                out.append((w, m))
        return sorted(out)


def rolling_scheme(matrix):
    """Drop even and infinite scheme edges; odd edges are never dropped."""
    kept, removed = {}, {}
    for i, j, m in matrix.edges():
        (kept if _is_odd_label(m) else removed)[frozenset((i, j))] = m
    return RollingScheme(matrix.rank, kept, removed)


def scheme_from_adjacency(n, adjacency):
    """Rolling scheme of a general chamber: adjacency maps facet pairs to labels."""
    kept, removed = {}, {}
    for pair, m in adjacency.items():
        pair = frozenset(pair)
        if m >= 3 or m == INF:
            (kept if _is_odd_label(m) else removed)[pair] = m
        elif m == 2:
            removed[pair] = m
    return RollingScheme(n, kept, removed)


@dataclass(frozen=True)
class Component:
    """Connected piece of the rolling scheme; cycle_rank = E - V + 1."""

    nodes: tuple
    edges: dict  # frozenset {i, j} -> label

    @property
    def cycle_rank(self):
        return len(self.edges) - len(self.nodes) + 1

    @property
    def is_tree(self):
        return self.cycle_rank == 0

    def neighbors(self, v):
        out = []
        for pair, m in self.edges.items():
            if v in pair:
                (w,) = pair - {v}
                out.append((w, m))
        return sorted(out)


def components(rs):
    """Connected components, ordered by smallest facet."""
    seen = set()
    out = []
    for start in range(rs.n):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            for w, _ in rs.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        edges = {pair: m for pair, m in rs.kept.items() if pair <= comp}
        out.append(Component(tuple(sorted(comp)), edges))
    return out


def component_of(rs, facet):
    for comp in components(rs):
        if facet in comp.nodes:
            return comp
    raise SchemeError(f"facet {facet} not in the scheme")


@dataclass(frozen=True)
class TreeNode:
    id: int
    facet: int
    depth: int
    word: tuple  # reduced sequence of hyperedges from the root


@dataclass(frozen=True)
class TreeEdge:
    parent: int
    child: int
    hyperedge: tuple  # (i, j), i < j
    label: int


@dataclass(frozen=True)
class DevelopmentTree:
    root: int
    nodes: tuple  # TreeNode, BFS order, ids are positions
    edges: tuple  # TreeEdge, BFS order
    complete: bool

    def node_facets(self):
        return [n.facet for n in self.nodes]

    def to_json(self):
        payload = {
            "complete": self.complete,
            "root": self.root,
            "nodes": [{"id": n.id, "facet": n.facet + 1, "depth": n.depth}
                      for n in self.nodes],
            "edges": [{"from": e.parent, "to": e.child,
                       "hyperedge": [e.hyperedge[0] + 1, e.hyperedge[1] + 1],
                       "label": e.label}
                      for e in self.edges],
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def unfold(component, start, max_nodes=5000):
    """Breadth-first prefix of the universal cover of the component.

    Node identity is (facet, reduced edge word): extending a word by the
    edge it just used would backtrack, so such steps are skipped.  For a
    tree component the walk terminates and is marked complete.
    """
    if start not in component.nodes:
        raise SchemeError(f"start facet {start} not in component {component.nodes}")
    if max_nodes < 1:
        raise SchemeError("max_nodes must be >= 1")
    nodes = [TreeNode(0, start, 0, ())]
    edges = []
    queue = deque([0])
    truncated = False
    while queue:
        cur = queue.popleft()
        node = nodes[cur]
        for other, m in component.neighbors(node.facet):
            pair = (min(node.facet, other), max(node.facet, other))
            if node.word and node.word[-1] == pair:
                continue
            if len(nodes) >= max_nodes:
                truncated = True
                break
            child = TreeNode(len(nodes), other, node.depth + 1, node.word + (pair,))
            nodes.append(child)
            edges.append(TreeEdge(cur, child.id, pair, m))
            queue.append(child.id)
        if truncated:
            break
    complete = not truncated
    if truncated and component.is_tree:
        raise RuntimeError("tree component truncated; raise max_nodes")
    return DevelopmentTree(0, tuple(nodes), tuple(edges), complete)


@dataclass(frozen=True)
class MirrorGroupData:
    """Order bookkeeping for the group preserving one mirror.

    For a finite ambient group the identity
    |W| / orbit_size == 2 * deck_order * |Delta| holds integer-exactly.
    """

    generator: int
    delta_type: CoxeterType
    deck_rank: int
    deck_order: int
    orbit_size: int
    group_order: int

    @property
    def delta_order(self):
        return self.delta_type.order()

    @property
    def identity_holds(self):
        return self.group_order == 2 * self.deck_order * self.delta_order \
            * self.orbit_size


def mirror_group_data(matrix, generator):
    """Delta type, deck data and the order identity inputs for one mirror.

    deck_order counts the copies of the starting color in the complete
    development tree; components of finite schemes are trees, so it is the
    multiplicity of the facet in its own universal cover.
    """
    t = classify(matrix)
    if not t.finite:
        raise SchemeError(f"mirror group data needs a finite type, got {t}")
    rs = generate_roots(matrix)
    k = rs.simple_root_index(generator)
    delta = oracle_reduce(matrix, k, rs=rs)
    comp = component_of(rolling_scheme(matrix), generator)
    tree = unfold(comp, generator, max_nodes=max(64, 4 * matrix.rank))
    if not tree.complete:
        raise RuntimeError("finite scheme produced a cyclic rolling component")
    deck_order = sum(1 for f in tree.node_facets() if f == generator)
    return MirrorGroupData(
        generator=generator,
        delta_type=delta,
        deck_rank=comp.cycle_rank,
        deck_order=deck_order,
        orbit_size=len(rs.orbit_of(k)),
        group_order=t.order(),
    )
