import json
import math

import numpy as np
import pytest

from coxroll.geomkernel import (GeometryError, SpaceModel,
                                UnsupportedSignatureError, UltraparallelError,
                                dihedral_angle, realize_simplex, reflection)
from coxroll.scheme import INF, CoxeterMatrix


def test_all_right_spherical_triangle():
    ch = realize_simplex(CoxeterMatrix(3))
    assert ch.space.kind == "spherical" and ch.space.dim == 2
    assert np.allclose(ch.normals, np.eye(3))
    assert np.allclose(ch.vertices, np.eye(3))


def test_h3_chamber():
    ch = realize_simplex(CoxeterMatrix.path([5, 3]))
    assert ch.space.kind == "spherical"
    assert abs(dihedral_angle(ch.space, ch.normals[0], ch.normals[1])
               - math.pi / 5) < 1e-9


def test_hyperbolic_simplex_signature():
    ch = realize_simplex(CoxeterMatrix.path([5, 3, 3, 3]))
    assert ch.space.kind == "hyperbolic" and ch.space.dim == 4
    assert ch.compact
    J = ch.space.form_matrix()
    # normals realize the cosine matrix exactly
    G = ch.normals @ J @ ch.normals.T
    assert np.abs(G - CoxeterMatrix.path([5, 3, 3, 3]).cosine_matrix()).max() < 1e-12
    # vertices on the upper sheet
    for v in ch.vertices:
        assert abs(ch.space.dot(v, v) + 1) < 1e-9
        assert v[-1] > 0


def test_kind_mismatch_raises():
    with pytest.raises(UnsupportedSignatureError):
        realize_simplex(CoxeterMatrix.path([5, 3]), kind="hyperbolic")


def test_euclidean_simplex():
    ch = realize_simplex(CoxeterMatrix.cycle([3] * 5))
    assert ch.space.kind == "euclidean" and ch.space.dim == 4
    G = CoxeterMatrix.cycle([3] * 5).cosine_matrix()
    lin = ch.normals[:, :-1]
    assert np.abs(lin @ lin.T - G).max() < 1e-9
    # vertices are honest affine points with homogeneous 1
    assert np.allclose(ch.vertices[:, -1], 1.0)
    # inward orientation: each vertex strictly inside its opposite wall
    for j in range(5):
        assert ch.space.eval(ch.normals[j], ch.vertices[j]) > 1e-9


def test_unsupported_signature_corank_two():
    m = CoxeterMatrix(4, {(0, 1): INF, (2, 3): INF})
    with pytest.raises(UnsupportedSignatureError):
        realize_simplex(m)


def test_noncompact_flagged():
    # [3,3,6] has a Euclidean vertex link: ideal vertex, not fatal
    ch = realize_simplex(CoxeterMatrix.path([3, 3, 6]))
    assert ch.space.kind == "hyperbolic"
    assert not ch.compact


def test_reflection_fixes_mirror_and_involutes():
    ch = realize_simplex(CoxeterMatrix.path([5, 3]))
    space = ch.space
    R = reflection(space, ch.normals[0])
    # vertices on the mirror are fixed
    for j in (1, 2):
        assert np.abs(R @ ch.vertices[j] - ch.vertices[j]).max() < 1e-12
    assert np.abs(R @ R - np.eye(3)).max() < 1e-12


def test_reflection_requires_unit_normal():
    space = SpaceModel("spherical", 2)
    with pytest.raises(GeometryError):
        reflection(space, np.array([2.0, 0.0, 0.0]))


def test_a2_rotation_order_three():
    ch = realize_simplex(CoxeterMatrix(3, {(0, 1): 3}))
    space = ch.space
    rot = reflection(space, ch.normals[0]) @ reflection(space, ch.normals[1])
    assert np.abs(np.linalg.matrix_power(rot, 3) - np.eye(3)).max() < 1e-12
    assert np.abs(np.linalg.matrix_power(rot, 6) - np.eye(3)).max() < 1e-12


@pytest.mark.parametrize("labels", [[3, 3], [4, 3], [5, 3], [5, 3, 3],
                                    [5, 3, 3, 5], [3, 3, 6]])
def test_coxeter_relations(labels):
    m = CoxeterMatrix.path(labels)
    ch = realize_simplex(m)
    space = ch.space
    refs = [reflection(space, u) for u in ch.normals]
    for i in range(m.rank):
        for j in range(i + 1, m.rank):
            order = m.label(i, j)
            power = np.linalg.matrix_power(refs[i] @ refs[j], order)
            assert np.abs(power - np.eye(space.ambient)).max() < 1e-7


def test_coxeter_relations_euclidean():
    m = CoxeterMatrix.cycle([3] * 5)
    ch = realize_simplex(m)
    refs = [reflection(ch.space, u) for u in ch.normals]
    for i in range(5):
        for j in range(i + 1, 5):
            power = np.linalg.matrix_power(refs[i] @ refs[j], m.label(i, j))
            assert np.abs(power - np.eye(5)).max() < 1e-7


def test_isometry_drift_over_thousand_products():
    ch = realize_simplex(CoxeterMatrix.path([5, 3, 3]))
    space = ch.space
    refs = [reflection(space, u) for u in ch.normals]
    g = np.eye(space.ambient)
    for step in range(1000):
        g = refs[step % 4] @ g
    assert space.is_isometry(g, tol=1e-8)


def test_dihedral_angle_basics():
    space = SpaceModel("spherical", 2)
    assert abs(dihedral_angle(space, np.eye(3)[0], np.eye(3)[1])
               - math.pi / 2) < 1e-15


def test_ultraparallel():
    space = SpaceModel("hyperbolic", 2)
    u1 = np.array([1.0, 0.0, 0.0])
    b = math.sqrt(1.2 ** 2 - 1.0)
    u2 = np.array([-1.2, 0.0, b])
    assert abs(space.dot(u2, u2) - 1.0) < 1e-12
    assert abs(space.dot(u1, u2) + 1.2) < 1e-12
    with pytest.raises(UltraparallelError):
        dihedral_angle(space, u1, u2)


def test_round_trip_dihedral_angles():
    for labels in ([3, 3], [4, 3, 3], [5, 3, 3], [5, 3, 3, 5]):
        m = CoxeterMatrix.path(labels)
        ch = realize_simplex(m)
        for i in range(m.rank):
            for j in range(i + 1, m.rank):
                angle = dihedral_angle(ch.space, ch.normals[i], ch.normals[j])
                assert abs(angle - math.pi / m.label(i, j)) < 1e-9


def test_vertex_incidence():
    for labels in ([5, 3, 3], [5, 3, 3, 5]):
        ch = realize_simplex(CoxeterMatrix.path(labels))
        for i, u in enumerate(ch.normals):
            for j, v in enumerate(ch.vertices):
                val = ch.space.eval(u, v)
                if i == j:
                    assert val > 1e-9
                else:
                    assert abs(val) < 1e-9


def test_euclidean_isometry_check():
    space = SpaceModel("euclidean", 2)
    shift = np.array([[1.0, 0, 2.5], [0, 1.0, -1.0], [0, 0, 1.0]])
    assert space.is_isometry(shift)
    shear = np.array([[1.0, 0.5, 0], [0, 1.0, 0], [0, 0, 1.0]])
    assert not space.is_isometry(shear)


def test_chamber_json():
    ch = realize_simplex(CoxeterMatrix.path([5, 3]))
    payload = json.loads(ch.to_json())
    assert payload["kind"] == "spherical" and payload["dim"] == 2
    assert payload["labels"]["1,2"] == 5
    assert ch.to_json() == realize_simplex(CoxeterMatrix.path([5, 3])).to_json()
