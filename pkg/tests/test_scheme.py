import math

import numpy as np
import pytest

from coxroll import scheme as S
from coxroll.scheme import (INF, CoxeterMatrix, SchemeParseError, TypeFactor,
                            classify, decompose, parse_scheme, serialize_scheme,
                            standard_diagram)


def test_parse_basic():
    m = parse_scheme("rank 3\n1 2 3\n2 3 3\n")
    assert m.rank == 3
    assert m.label(0, 1) == 3 and m.label(1, 2) == 3 and m.label(0, 2) == 2


def test_parse_inf():
    m = parse_scheme("rank 2\n1 2 inf")
    assert m.label(0, 1) == INF


def test_parse_simplex_scheme():
    m = parse_scheme("rank 5\n1 2 5\n2 3 3\n3 4 3\n4 5 3")
    assert m == CoxeterMatrix.path([5, 3, 3, 3])
    assert not classify(m).finite


def test_parse_comments_and_blank_lines():
    m = parse_scheme("# header\nrank 2\n\n1 2 4  # BC2\n")
    assert m.label(0, 1) == 4


@pytest.mark.parametrize("text,fragment", [
    ("1 2 3", "rank"),
    ("rank 2\n1 2 1", "< 2"),
    ("rank 2\n1 3 3", "out of range"),
    ("rank 2\n1 1 3", "diagonal"),
    ("rank 3\n1 2 3\n2 1 4", "already declared"),
    ("rank 2\n1 2 x", "bad label"),
    ("rank 2\nfoo bar baz", "bad indices"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(SchemeParseError) as err:
        parse_scheme(text)
    assert fragment in str(err.value)


def test_parse_error_carries_line_number():
    with pytest.raises(SchemeParseError) as err:
        parse_scheme("rank 3\n1 2 3\n2 3 1\n")
    assert err.value.line == 3


def test_duplicate_same_label_is_idempotent():
    m = parse_scheme("rank 2\n1 2 3\n2 1 3\n")
    assert m.label(0, 1) == 3


def test_serialize_round_trip_bit_exact():
    m = CoxeterMatrix(4, {(0, 1): 5, (2, 3): INF, (1, 2): 3})
    text = serialize_scheme(m)
    assert text == "rank 4\n1 2 5\n2 3 3\n3 4 inf\n"
    assert parse_scheme(text) == m
    assert serialize_scheme(parse_scheme(text)) == text


def test_decompose_examples():
    # all labels 2: three singletons
    parts = decompose(CoxeterMatrix(3))
    assert [nodes for nodes, _ in parts] == [(0,), (1,), (2,)]
    # A3 chain: one component
    assert len(decompose(CoxeterMatrix.path([3, 3]))) == 1
    # H3 + A1: two components
    m = CoxeterMatrix(4, {(0, 1): 5, (1, 2): 3})
    parts = decompose(m)
    assert [nodes for nodes, _ in parts] == [(0, 1, 2), (3,)]


@pytest.mark.parametrize("labels,expected", [
    ([3, 3], "A3"),
    ([5, 3, 3], "H4"),
    ([5, 3], "H3"),
    ([3, 4, 3], "F4"),
    ([4, 3, 3, 3], "BC5"),
    ([6], "G2(6)"),
    ([3], "A2"),
    ([4], "BC2"),
    ([5], "G2(5)"),
    ([12], "G2(12)"),
])
def test_classify_paths(labels, expected):
    assert str(classify(CoxeterMatrix.path(labels))) == expected


def test_classify_exceptional_diagrams():
    for fam, rank in [("E", 6), ("E", 7), ("E", 8), ("D", 4), ("D", 8)]:
        t = classify(standard_diagram(TypeFactor(fam, rank)))
        assert str(t) == f"{fam}{rank}"


def test_classify_non_finite():
    assert str(classify(CoxeterMatrix.path([5, 3, 3, 3]))) == "Ind(5)"
    assert str(classify(CoxeterMatrix.cycle([3] * 5))) == "Euc(5)"
    assert str(classify(CoxeterMatrix.path([3, 3, 3, 3, 3, 3, 3], ))) == "A8"
    assert str(classify(parse_scheme("rank 2\n1 2 inf"))) == "Ind(2)"
    # affine families
    assert str(classify(CoxeterMatrix.path([4, 3, 4]))) == "Euc(4)"
    assert str(classify(CoxeterMatrix.path([6, 3]))) == "Euc(3)"


def test_classify_direct_sum_sorted():
    m = CoxeterMatrix(5, {(3, 4): 5, (0, 1): 3, (1, 2): 3})
    assert str(classify(m)) == "A3+G2(5)"


def test_low_rank_conventions():
    assert S.D(2) == S.A(1) + S.A(1)
    assert S.D(3) == S.A(3)
    assert S.D(1) == S.A(1)
    assert S.BC(1) == S.A(1)
    assert S.G2(3) == S.A(2)
    assert S.G2(4) == S.BC(2)
    assert S.A(0) == S.empty_type()
    assert str(S.A(1) + S.D(2)) == "A1+A1+A1"


def test_orders():
    assert S.A(3).order() == 24
    assert S.BC(4).order() == 384
    assert S.D(4).order() == 192
    assert S.H(3).order() == 120
    assert S.H(4).order() == 14400
    assert S.F4().order() == 1152
    assert S.G2(7).order() == 14
    assert S.E(8).order() == 696729600
    assert (S.A(1) + S.R()).order() == 2
    with pytest.raises(S.SchemeError):
        S.euclidean(3).order()


def _random_matrix(rng, rank, max_label=6):
    labels = {}
    for i in range(rank):
        for j in range(i + 1, rank):
            m = int(rng.integers(2, max_label + 1))
            if m > 2 and rng.random() < 0.6:
                labels[(i, j)] = m
    return CoxeterMatrix(rank, labels)


def test_classify_invariant_under_relabeling():
    rng = np.random.default_rng(7)
    diagrams = [CoxeterMatrix.path([3, 3]), CoxeterMatrix.path([5, 3, 3]),
                standard_diagram(TypeFactor("E", 7)),
                standard_diagram(TypeFactor("D", 6)),
                CoxeterMatrix.cycle([3] * 4)]
    for _ in range(20):
        diagrams.append(_random_matrix(rng, int(rng.integers(2, 7))))
    for m in diagrams:
        t = classify(m)
        for _ in range(6):
            perm = rng.permutation(m.rank).tolist()
            assert classify(m.permuted(perm)) == t


def test_finite_iff_positive_definite():
    # exhaustive on rank <= 3, labels <= 6; sampled on rank 4..5;
    # classify() itself raises if pattern match and definiteness disagree
    for a in range(2, 7):
        for b in range(2, 7):
            for c in range(2, 7):
                m = CoxeterMatrix(3, {(0, 1): a, (1, 2): b, (0, 2): c})
                t = classify(m)
                eig = np.linalg.eigvalsh(m.cosine_matrix())[0]
                assert t.finite == (eig > S.EIG_TOL)
    rng = np.random.default_rng(11)
    for _ in range(300):
        m = _random_matrix(rng, int(rng.integers(4, 6)))
        t = classify(m)
        eig = np.linalg.eigvalsh(m.cosine_matrix())[0]
        assert t.finite == (eig > S.EIG_TOL)
    for fam, rank in [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("H", 3), ("H", 4)]:
        assert classify(standard_diagram(TypeFactor(fam, rank))).finite


def test_decompose_then_classify_matches_whole():
    rng = np.random.default_rng(3)
    for _ in range(40):
        m = _random_matrix(rng, int(rng.integers(2, 8)))
        whole = classify(m)
        parts = S.CoxeterType(
            [f for _, sub in decompose(m) for f in classify(sub).factors])
        assert whole == parts


def test_submatrix_and_permuted():
    m = CoxeterMatrix.path([5, 3, 3])
    sub = m.submatrix([1, 2, 3])
    assert str(classify(sub)) == "A3"
    perm = [3, 2, 1, 0]
    assert classify(m.permuted(perm)) == classify(m)


def test_cosine_matrix_values():
    m = CoxeterMatrix(2, {(0, 1): INF})
    B = m.cosine_matrix()
    assert B[0, 1] == -1.0
    m = CoxeterMatrix.path([4])
    assert abs(m.cosine_matrix()[0, 1] + math.cos(math.pi / 4)) < 1e-15
