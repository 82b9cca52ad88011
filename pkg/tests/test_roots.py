import json

import numpy as np
import pytest

from coxroll import scheme as S
from coxroll.roots import (AngleUnrecognizedError, NotFiniteError, RootSystem,
                           generate_roots)
from coxroll.scheme import CoxeterMatrix, TypeFactor, standard_diagram


def _rs(factor):
    return generate_roots(standard_diagram(factor))


ROOT_COUNTS = [
    (TypeFactor("A", 1), 2), (TypeFactor("A", 2), 6), (TypeFactor("A", 4), 20),
    (TypeFactor("A", 8), 72),
    (TypeFactor("BC", 2), 8), (TypeFactor("BC", 5), 50),
    (TypeFactor("D", 4), 24), (TypeFactor("D", 6), 60),
    (TypeFactor("H", 3), 30), (TypeFactor("H", 4), 120),
    (TypeFactor("F", 4), 48),
    (TypeFactor("E", 6), 72), (TypeFactor("E", 7), 126),
    (TypeFactor("E", 8), 240),
    (TypeFactor("G", 2, 5), 10), (TypeFactor("G", 2, 12), 24),
]


@pytest.mark.parametrize("factor,count", ROOT_COUNTS)
def test_root_counts(factor, count):
    rs = _rs(factor)
    assert rs.root_count == count
    assert rs.mirror_count == count // 2


def test_simple_roots_lead_the_list():
    rs = _rs(TypeFactor("H", 3))
    assert np.allclose(rs.roots[:3], np.eye(3))
    assert rs.simple_root_index(2) == 2
    with pytest.raises(IndexError):
        rs.simple_root_index(3)


def test_not_finite_raises():
    with pytest.raises(NotFiniteError):
        generate_roots(CoxeterMatrix.path([5, 3, 3, 3]))
    with pytest.raises(NotFiniteError):
        generate_roots(CoxeterMatrix.cycle([3, 3, 3]))


@pytest.mark.parametrize("factor", [
    TypeFactor("A", 3), TypeFactor("BC", 3), TypeFactor("H", 3),
    TypeFactor("F", 4), TypeFactor("G", 2, 7), TypeFactor("D", 4),
])
def test_reflection_closure(factor):
    assert _rs(factor).check_closure(tol=1e-8)


def test_orthogonal_set_examples():
    # A2: no perpendicular mirror pairs
    rs = _rs(TypeFactor("A", 2))
    for k in range(rs.positive_count):
        assert rs.orthogonal_set(k) == []
    # A1+A1: the two mirrors are perpendicular
    rs = generate_roots(CoxeterMatrix(2))
    assert rs.orthogonal_set(0) == [1]
    # H3: every mirror sees exactly two orthogonal mirrors forming A1+A1
    rs = _rs(TypeFactor("H", 3))
    for k in range(rs.positive_count):
        sub = rs.orthogonal_set(k)
        assert len(sub) == 2
        assert rs.subsystem_type(sub) == S.A(1) + S.A(1)


def test_orthogonal_set_index_error():
    rs = _rs(TypeFactor("A", 2))
    with pytest.raises(IndexError):
        rs.orthogonal_set(99)


def test_simple_system_of_whole_positive_system():
    rs = _rs(TypeFactor("A", 2))
    simples = rs.simple_system(range(rs.positive_count))
    assert len(simples) == 2
    assert {tuple(np.round(s, 9)) for s in simples} == {(1.0, 0.0), (0.0, 1.0)}


def test_simple_system_obtuse_and_independent():
    for factor in [TypeFactor("BC", 4), TypeFactor("H", 4), TypeFactor("D", 5)]:
        rs = _rs(factor)
        for k in (0, rs.positive_count - 1):
            sub = rs.orthogonal_set(k)
            simples = rs.simple_system(sub)
            prods = simples @ rs.form @ simples.T
            off = prods - np.diag(np.diag(prods))
            assert off.max() <= 1e-8
            assert np.linalg.matrix_rank(simples) == len(simples)


def test_e8_orthogonal_set_is_e7():
    rs = _rs(TypeFactor("E", 8))
    sub = rs.orthogonal_set(0)
    assert len(sub) == 63
    simples = rs.simple_system(sub)
    assert len(simples) == 7
    assert rs.subsystem_type(sub) == S.E(7)


def test_rank3_finite_types_always_have_orthogonal_mirrors():
    # the engine behind the no-codim-3-strata lemma
    seen = set()
    for a in range(2, 7):
        for b in range(2, 7):
            m = CoxeterMatrix.path([a, b])
            t = S.classify(m)
            if not t.finite or t in seen:
                continue
            seen.add(t)
            rs = generate_roots(m)
            for k in range(rs.positive_count):
                assert rs.orthogonal_set(k), (t, k)
    rs = _rs(TypeFactor("H", 3))
    for k in range(rs.positive_count):
        assert rs.orthogonal_set(k)


def test_orbits():
    assert len(_rs(TypeFactor("A", 4)).orbits()) == 1
    assert len(_rs(TypeFactor("D", 4)).orbits()) == 1
    assert len(_rs(TypeFactor("H", 4)).orbits()) == 1
    assert [len(o) for o in _rs(TypeFactor("BC", 3)).orbits()] == [6, 3]
    assert [len(o) for o in _rs(TypeFactor("F", 4)).orbits()] == [12, 12]
    assert [len(o) for o in _rs(TypeFactor("G", 2, 6)).orbits()] == [3, 3]
    assert [len(o) for o in _rs(TypeFactor("G", 2, 7)).orbits()] == [7]


def test_orbit_sizes_partition_positive_roots():
    for factor in [TypeFactor("BC", 4), TypeFactor("E", 6), TypeFactor("H", 3)]:
        rs = _rs(factor)
        assert sum(len(o) for o in rs.orbits()) == rs.positive_count


def test_subsystem_padding():
    rs = _rs(TypeFactor("A", 3))
    sub = rs.orthogonal_set(0)
    assert rs.subsystem_type(sub, pad_to=2) == S.A(1) + S.R()


def test_json_dump():
    rs = _rs(TypeFactor("A", 2))
    payload = json.loads(rs.to_json())
    assert payload["type"] == "A2"
    assert len(payload["positive_roots"]) == 3
    assert rs.to_json() == generate_roots(CoxeterMatrix.path([3])).to_json()
