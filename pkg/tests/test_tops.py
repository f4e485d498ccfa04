import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from codetops import MatrixGF, field_of_order, make_field
from codetops.errors import DimMismatch, EmptyWPrime, ProportionalToColumn, RankDeficient, ZeroW
from codetops.fixtures import example1, example2, example3
from codetops.grassmann import line, q_integer
from codetops.matspace import projective_points, row_space
from codetops.tops import (
    TopKind,
    analyze,
    c_of_w,
    classify,
    common_from_w_perp,
    common_intersection,
    corollary_check,
    expected_member_count,
    line_members,
    top_nondegenerate,
    wprime_reps,
)

from _brute import as_set, dot


def _c_of_w_by_definition(M, w):
    F = M.spec
    out = set()
    from itertools import product
    for a in product(range(F.q), repeat=M.rows):
        if dot(F, a, w) == 0:
            v = np.zeros(M.cols, dtype=np.int64)
            for ai, row in zip(a, M.entries):
                v = F.add(v, F.mul(ai, row))
            out.add(tuple(int(x) for x in v))
    return frozenset(out)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_c_of_w_matches_definition(q, rng):
    F = field_of_order(q)
    M = MatrixGF(F, [[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1]])
    for w in projective_points(F, 3):
        if w in {(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)}:
            with pytest.raises(ProportionalToColumn):
                c_of_w(M, w)
            continue
        C = c_of_w(M, w)
        assert C.dim == 2
        assert as_set(C) == _c_of_w_by_definition(M, w)
        # any nonzero multiple gives the same subspace
        assert c_of_w(M, F.mul(q - 1, np.array(w))) == C


def test_c_of_w_errors():
    fx = example1()
    with pytest.raises(ZeroW):
        c_of_w(fx.M, [0, 0, 0])
    with pytest.raises(DimMismatch):
        c_of_w(fx.M, [1, 1])
    with pytest.raises(ProportionalToColumn) as info:
        c_of_w(fx.M, [2, 0, 0])
    assert info.value.index == 0


def test_example1():
    fx = example1()
    a = analyze(fx.M)
    assert a.classification.kind is TopKind.SINGLE_POINT
    assert a.members == (row_space(fx.data["member"]),)
    # number of lines through one vertex of G(12,2)_3
    assert a.classification.line_count == q_integer(2, 3) * q_integer(10, 3)


def test_example2_line():
    fx = example2()
    a = analyze(fx.M)
    assert a.classification.kind is TopKind.LINE_CONTAINED
    S, U = a.classification.line
    assert U == a.U and S == a.common and S.dim == 4
    assert set(line_members(a)) == set(a.members) == set(line(S, U))
    assert a.wprime_full_count == 8


def test_example3():
    fx = example3()
    a = analyze(fx.M)
    assert (a.classification.kind, a.dim_w, len(a.members), a.common.dim) == (TopKind.MAXIMAL_TOP, 3, 5, 3)
    with pytest.raises(DimMismatch):
        line_members(a)


def test_degenerate_is_empty():
    F = make_field(3)
    a = analyze(MatrixGF(F, [[1, 0, 1], [0, 0, 1]]))
    assert a.degenerate and a.classification.kind is TopKind.EMPTY
    assert a.members == () and a.dim_w == 0 and a.W_perp.dim == 2
    assert expected_member_count(a) == 0


def test_all_points_used_is_empty():
    F = make_field(2)
    cols = list(projective_points(F, 3))
    M = MatrixGF(F, np.array(cols).T)
    a = analyze(M)
    assert a.classification.kind is TopKind.EMPTY and not a.degenerate
    assert wprime_reps(M) == []
    with pytest.raises(EmptyWPrime):
        common_intersection(a)


def test_rank_deficient():
    F = make_field(3)
    with pytest.raises(RankDeficient):
        analyze(MatrixGF(F, [[1, 1, 1], [2, 2, 2]]))
    with pytest.raises(DimMismatch):
        analyze(MatrixGF(F, [[1, 0, 1], [0, 1, 1]]), 2)


def test_classification_thresholds():
    # columns all points but a chosen set; dim W follows the missing set's span
    F = make_field(2)
    pts = list(projective_points(F, 3))
    for missing, kind in [
        ([(1, 1, 1)], TopKind.SINGLE_POINT),
        ([(1, 1, 1), (1, 1, 0)], TopKind.LINE_CONTAINED),
        ([(1, 1, 1), (1, 1, 0), (0, 0, 1)], TopKind.LINE_CONTAINED),
        ([(1, 1, 1), (1, 1, 0), (1, 0, 1)], TopKind.MAXIMAL_TOP),
    ]:
        cols = [p for p in pts if p not in missing]
        M = MatrixGF(F, np.array(cols).T)
        assert analyze(M).classification.kind is kind, missing
        assert classify(row_space(M), 2).kind is kind


def test_corollary_check():
    assert corollary_check(10, 3, 2)      # 15 > 13
    assert not corollary_check(12, 3, 2)  # 15 > 15 fails
    assert corollary_check(8, 2, make_field(3))


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([2, 3, 4]), st.integers(2, 4), st.integers(0, 2**32))
def test_w_dims_and_common(q, d, seed):
    import random
    rng = random.Random(seed)
    F = field_of_order(q)
    n = rng.randint(d, d + 5)
    M = MatrixGF(F, np.array([[rng.randrange(q) for _ in range(n)] for _ in range(d)]))
    if row_space(M).dim < d:
        return
    a = analyze(M)
    assert a.dim_w + a.W_perp.dim == d
    if a.wprime_reps:
        assert a.common == common_from_w_perp(a)
        assert len(a.members) == expected_member_count(a) == len(set(a.members))
        assert set(a.members) == set(top_nondegenerate(a.U, d - 1))
