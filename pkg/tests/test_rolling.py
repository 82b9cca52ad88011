import json
import math

import pytest

from coxroll import scheme as S
from coxroll.rolling import (components, component_of, mirror_group_data,
                             rolling_scheme, scheme_from_adjacency, unfold)
from coxroll.roots import generate_roots
from coxroll.scheme import CoxeterMatrix, TypeFactor, standard_diagram


def test_rolling_scheme_keeps_odd_edges():
    m = CoxeterMatrix.path([5, 3, 3])  # H4: all odd
    rs = rolling_scheme(m)
    assert len(rs.kept) == 3 and not rs.removed
    comps = components(rs)
    assert len(comps) == 1 and comps[0].cycle_rank == 0


def test_rolling_scheme_removes_even_and_infinite():
    m = CoxeterMatrix.path([3, 4, 3])  # F4
    rs = rolling_scheme(m)
    assert frozenset((1, 2)) in rs.removed
    comps = components(rs)
    assert [c.nodes for c in comps] == [(0, 1), (2, 3)]

    m = CoxeterMatrix(3, {(0, 1): S.INF, (1, 2): 5})
    rs = rolling_scheme(m)
    assert frozenset((0, 1)) in rs.removed
    assert frozenset((1, 2)) in rs.kept


def test_rolling_scheme_bc3():
    m = CoxeterMatrix.path([4, 3])
    comps = components(rolling_scheme(m))
    assert [c.nodes for c in comps] == [(0,), (1, 2)]


def test_rolling_scheme_cycle():
    m = CoxeterMatrix.cycle([3] * 5)
    comps = components(rolling_scheme(m))
    assert len(comps) == 1
    assert comps[0].cycle_rank == 1
    assert not comps[0].is_tree


def test_singleton_components():
    m = CoxeterMatrix(3)  # A1+A1+A1
    comps = components(rolling_scheme(m))
    assert [c.nodes for c in comps] == [(0,), (1,), (2,)]


def test_unfold_path_complete():
    m = CoxeterMatrix.path([3, 3])
    comp = component_of(rolling_scheme(m), 0)
    tree = unfold(comp, 0, max_nodes=100)
    assert tree.complete
    assert sorted(tree.node_facets()) == [0, 1, 2]
    assert len(tree.edges) == len(tree.nodes) - 1


def test_unfold_cycle_truncates_to_a_line():
    m = CoxeterMatrix.cycle([3] * 5)
    comp = component_of(rolling_scheme(m), 0)
    tree = unfold(comp, 0, max_nodes=21)
    assert not tree.complete
    assert len(tree.nodes) == 21
    # universal cover of a cycle is a line: at most two children anywhere
    degree = {n.id: 0 for n in tree.nodes}
    for e in tree.edges:
        degree[e.parent] += 1
        degree[e.child] += 1
    assert max(degree.values()) <= 2


def test_unfold_singleton():
    m = CoxeterMatrix(1)
    comp = component_of(rolling_scheme(m), 0)
    tree = unfold(comp, 0, max_nodes=5)
    assert tree.complete and len(tree.nodes) == 1


def test_unfold_words_are_reduced():
    m = CoxeterMatrix.cycle([3] * 4)
    comp = component_of(rolling_scheme(m), 0)
    tree = unfold(comp, 0, max_nodes=64)
    for node in tree.nodes:
        for a, b in zip(node.word, node.word[1:]):
            assert a != b


def test_complete_tree_covers_component_once():
    for labels in ([3, 3, 3], [5, 3, 3], [5, 3]):
        m = CoxeterMatrix.path(labels)
        comp = component_of(rolling_scheme(m), 0)
        tree = unfold(comp, 0, max_nodes=100)
        assert tree.complete
        assert sorted(tree.node_facets()) == list(comp.nodes)


def test_unfold_validates_input():
    m = CoxeterMatrix.path([4, 3])
    comp = component_of(rolling_scheme(m), 1)
    with pytest.raises(S.SchemeError):
        unfold(comp, 0, max_nodes=10)  # facet 0 not in the {1,2} component
    with pytest.raises(S.SchemeError):
        unfold(comp, 1, max_nodes=0)


def test_tree_json_deterministic():
    m = CoxeterMatrix.path([5, 3])
    comp = component_of(rolling_scheme(m), 0)
    a = unfold(comp, 0, max_nodes=10).to_json()
    b = unfold(comp, 0, max_nodes=10).to_json()
    assert a == b
    payload = json.loads(a)
    assert payload["complete"] is True
    assert {n["facet"] for n in payload["nodes"]} == {1, 2, 3}


@pytest.mark.parametrize("factor,delta_order,orbit,total", [
    (TypeFactor("A", 3), 2, 6, 24),
    (TypeFactor("H", 3), 4, 15, 120),
    (TypeFactor("H", 4), 120, 60, 14400),
])
def test_mirror_group_data_examples(factor, delta_order, orbit, total):
    m = standard_diagram(factor)
    data = mirror_group_data(m, 0)
    assert data.delta_order == delta_order
    assert data.orbit_size == orbit
    assert data.group_order == total
    assert data.deck_order == 1
    assert data.identity_holds


def test_mirror_group_data_needs_finite():
    with pytest.raises(S.SchemeError):
        mirror_group_data(CoxeterMatrix.path([5, 3, 3, 3]), 0)


def test_order_identity_over_generators():
    for factor in [TypeFactor("A", 4), TypeFactor("BC", 4), TypeFactor("D", 4),
                   TypeFactor("F", 4), TypeFactor("G", 2, 6),
                   TypeFactor("G", 2, 9), TypeFactor("H", 4)]:
        m = standard_diagram(factor)
        for g in range(m.rank):
            data = mirror_group_data(m, g)
            assert data.identity_holds, (factor, g)


def test_scheme_from_adjacency():
    adjacency = {frozenset((0, 1)): 3, frozenset((1, 2)): 4,
                 frozenset((0, 2)): 2}
    rs = scheme_from_adjacency(3, adjacency)
    assert frozenset((0, 1)) in rs.kept
    assert frozenset((1, 2)) in rs.removed
    assert frozenset((0, 2)) in rs.removed


def test_rank3_strata_never_block_rolling():
    # every finite rank-3 stratum has an even bond or an orthogonal mirror,
    # so developments never pinch at codimension-3 strata
    schemes = [CoxeterMatrix.path([5, 3, 3, 3]), CoxeterMatrix.path([5, 3, 3, 5]),
               standard_diagram(TypeFactor("E", 6)),
               CoxeterMatrix.cycle([3] * 5)]
    for m in schemes:
        n = m.rank
        for a in range(n):
            for b in range(a + 1, n):
                for c in range(b + 1, n):
                    sub = m.submatrix([a, b, c])
                    if not S.classify(sub).finite:
                        continue
                    labels = [sub.label(0, 1), sub.label(0, 2), sub.label(1, 2)]
                    has_even = any(x != S.INF and x % 2 == 0 for x in labels)
                    if has_even:
                        continue
                    rs = generate_roots(sub)
                    assert all(rs.orthogonal_set(k)
                               for k in range(rs.positive_count))
