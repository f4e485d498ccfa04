import numpy as np
import pytest

from codetops import MatrixGF, Subspace, field_of_order, make_field
from codetops.codes import column_classes, coordinate_hyperplane, enumerate_nondegenerate, is_nondegenerate
from codetops.errors import ZeroColumn
from codetops.grassmann import gaussian_binomial
from codetops.matspace import enumerate_subspaces, row_space


def test_nondegenerate_matches_hyperplanes():
    F = make_field(2)
    n = 4
    hyper = [coordinate_hyperplane(F, n, i) for i in range(n)]
    for S in enumerate_subspaces(Subspace.full(F, n), 2):
        assert is_nondegenerate(S) == (not any(S <= H for H in hyper))


def test_nondegenerate_count_inclusion_exclusion():
    # subspaces avoiding every coordinate hyperplane, counted by inclusion-exclusion
    F = make_field(2)
    n, k, q = 4, 2, 2
    from math import comb
    expected = sum((-1) ** j * comb(n, j) * gaussian_binomial(n - j, k, q) for j in range(n - k + 1))
    assert len(list(enumerate_nondegenerate(n, k, F))) == expected == 13


def test_column_classes():
    F = make_field(3)
    M = MatrixGF(F, [[1, 2, 0, 1, 1], [0, 0, 1, 2, 1]])
    cc = column_classes(M)
    assert cc.classes == ((0, 1), (2,), (3,), (4,))
    assert cc.representatives[0] == (1, 0)
    assert cc.s == 4 and cc.sizes == (2, 1, 1, 1)
    assert cc.class_of(1) == 0 and cc.label()[4] == 3


def test_zero_column():
    F = make_field(3)
    with pytest.raises(ZeroColumn) as info:
        column_classes(MatrixGF(F, [[1, 0, 1], [0, 0, 1]]))
    assert info.value.index == 1


def test_classes_basis_independent(rng):
    # same partition for any generator of the same code
    F = field_of_order(4)
    for _ in range(20):
        M = MatrixGF(F, np.array([[rng.randrange(4) for _ in range(6)] for _ in range(2)]))
        if any(not np.any(M.entries[:, j]) for j in range(6)) or row_space(M).dim < 2:
            continue
        R = row_space(M).matrix()
        assert column_classes(M).classes == column_classes(R).classes
