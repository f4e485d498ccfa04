"""Non-degenerate parts of tops and their classification.

For a generator matrix M of a (k+1)-dimensional code U with rows v_1..v_{k+1},
every k-dimensional subspace of U has the form

    C(w) = { sum a_i v_i : sum a_i w_i = 0 }

for a nonzero w in GF(q)^{k+1}, and C(w) is non-degenerate exactly when w is
not proportional to a column of M.  The analysis below lists those w (one per
projective point), the subspaces C(w), the span W of the admissible w, and
from dim W decides whether the non-degenerate part of the top is empty, a
single code, contained in a unique line, or a maximal clique.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .codes import ColumnClasses, column_classes
from .errors import DimMismatch, EmptyWPrime, ProportionalToColumn, RankDeficient, ZeroColumn, ZeroW
from .field import FieldSpec
from .grassmann import gaussian_binomial, line, q_integer
from .matspace import (
    EchelonAccumulator,
    MatrixGF,
    Subspace,
    intersect_all,
    normalize,
    orthogonal_complement,
    projective_points,
    rank,
    row_space,
)


class TopKind(str, enum.Enum):
    EMPTY = "Empty"
    SINGLE_POINT = "SinglePoint"
    LINE_CONTAINED = "LineContained"
    MAXIMAL_TOP = "MaximalTop"


@dataclass(frozen=True)
class Classification:
    kind: TopKind
    dim_w: int
    # SinglePoint: number of lines of G_k(V) containing the single member
    line_count: int | None = None
    # LineContained: the unique line, as its (k-1)- and (k+1)-dimensional ends
    line: tuple[Subspace, Subspace] | None = None


@dataclass(frozen=True)
class TopAnalysis:
    U: Subspace
    M: MatrixGF
    k: int
    classes: ColumnClasses | None
    wprime_reps: tuple[tuple[int, ...], ...]
    W: Subspace
    W_perp: Subspace
    members: tuple[Subspace, ...]
    common: Subspace | None
    classification: Classification

    @property
    def spec(self) -> FieldSpec:
        return self.U.spec

    @property
    def n(self) -> int:
        return self.U.ambient_dim

    @property
    def dim_w(self) -> int:
        return self.W.dim

    @property
    def degenerate(self) -> bool:
        return self.classes is None

    @property
    def top_size(self) -> int:
        return q_integer(self.k + 1, self.spec.q)

    @property
    def wprime_full_count(self) -> int:
        """|W'| counting every nonzero multiple, as the set is originally defined."""
        return len(self.wprime_reps) * (self.spec.q - 1)

    def member_for(self, w) -> Subspace:
        """The member C(w) for an admissible w (any nonzero multiple)."""
        rep = normalize(self.spec, w)
        if rep is None:
            raise ZeroW("w is zero")
        if rep not in self.wprime_reps:
            raise ProportionalToColumn(_matching_column(self.M, rep))
        return self.members[self.wprime_reps.index(rep)]


def _matching_column(M: MatrixGF, rep) -> int:
    for j in range(M.cols):
        if normalize(M.spec, M.entries[:, j]) == tuple(rep):
            return j
    return -1


def _check_generator(M: MatrixGF):
    if rank(M) != M.rows:
        raise RankDeficient(f"generator has rank {rank(M)} < {M.rows} rows")


def wprime_reps(M: MatrixGF) -> list[tuple[int, ...]]:
    """Normalized representatives of the projective points not hit by any column."""
    _check_generator(M)
    classes = column_classes(M)
    taken = set(classes.representatives)
    return [w for w in projective_points(M.spec, M.rows) if w not in taken]


def _c_of_w_unchecked(M: MatrixGF, w) -> Subspace:
    spec = M.spec
    w = np.asarray(w, dtype=np.int64)
    i = int(np.flatnonzero(w)[0])
    wi_inv = int(spec.inv(int(w[i])))
    V = M.entries
    rows = []
    for l in range(M.rows):
        if l == i:
            continue
        coef = spec.mul(wi_inv, int(w[l]))
        rows.append(spec.sub(V[l], spec.mul(coef, V[i])))
    return Subspace.span(spec, np.vstack(rows) if rows else np.zeros((0, M.cols), dtype=np.int64),
                         M.cols)


def c_of_w(M: MatrixGF, w) -> Subspace:
    """C(w) built from the basis {v_l - w_i^{-1} w_l v_i : l != i}, i the first index with w_i != 0."""
    w = np.asarray(w, dtype=np.int64)
    if M.spec.prime_mode:
        w = w % M.spec.p
    rep = normalize(M.spec, w)
    if rep is None:
        raise ZeroW("w must be nonzero")
    if len(rep) != M.rows:
        raise DimMismatch(f"w has length {len(rep)}, generator has {M.rows} rows")
    for j in range(M.cols):
        if normalize(M.spec, M.entries[:, j]) == rep:
            raise ProportionalToColumn(j)
    return _c_of_w_unchecked(M, w)


def analyze(M: MatrixGF, k: int | None = None) -> TopAnalysis:
    """Full analysis of the top spanned by the rows of M (k defaults to rows - 1)."""
    spec = M.spec
    if k is None:
        k = M.rows - 1
    if M.rows != k + 1:
        raise DimMismatch(f"generator has {M.rows} rows, expected k+1 = {k + 1}")
    _check_generator(M)
    U = row_space(M)
    try:
        classes = column_classes(M)
    except ZeroColumn:
        return _degenerate_analysis(U, M, k)
    taken = set(classes.representatives)
    acc = EchelonAccumulator(spec, k + 1)
    reps, members = [], []
    for w in projective_points(spec, k + 1):
        if w in taken:
            continue
        reps.append(w)
        members.append(_c_of_w_unchecked(M, w))
        if not acc.full:
            acc.add(w)
    W = acc.subspace()
    W_perp = orthogonal_complement(W)
    common = intersect_all(members) if members else None
    cls = _classify(U, k, W.dim, common)
    return TopAnalysis(U, M, k, classes, tuple(reps), W, W_perp, tuple(members), common, cls)


def _degenerate_analysis(U: Subspace, M: MatrixGF, k: int) -> TopAnalysis:
    W = Subspace.zero(M.spec, k + 1)
    return TopAnalysis(U, M, k, None, (), W, orthogonal_complement(W), (), None,
                       Classification(TopKind.EMPTY, 0))


def _classify(U: Subspace, k: int, dim_w: int, common: Subspace | None) -> Classification:
    q, n = U.spec.q, U.ambient_dim
    if dim_w == 0:
        return Classification(TopKind.EMPTY, 0)
    if dim_w == 1:
        return Classification(TopKind.SINGLE_POINT, 1, line_count=q_integer(k, q) * q_integer(n - k, q))
    if dim_w == 2:
        return Classification(TopKind.LINE_CONTAINED, 2, line=(common, U))
    return Classification(TopKind.MAXIMAL_TOP, dim_w)


def analyze_subspace(U: Subspace, k: int) -> TopAnalysis:
    """Analysis using the canonical RREF basis of U as generator matrix."""
    if U.dim != k + 1:
        raise DimMismatch(f"dim U = {U.dim}, expected k+1 = {k + 1}")
    return analyze(U.matrix(), k)


def top_nondegenerate(U: Subspace, k: int) -> list[Subspace]:
    return list(analyze_subspace(U, k).members)


def classify(U: Subspace, k: int) -> Classification:
    return analyze_subspace(U, k).classification


def common_intersection(analysis: TopAnalysis) -> Subspace:
    """Intersection of all members; requires at least one admissible w."""
    if not analysis.wprime_reps:
        raise EmptyWPrime("no admissible w: the non-degenerate part of the top is empty")
    return analysis.common


def common_from_w_perp(analysis: TopAnalysis) -> Subspace:
    """{sum a_i v_i : a in W^perp}, computed without touching the members."""
    A = analysis.W_perp.basis
    if A.shape[0] == 0:
        return Subspace.zero(analysis.spec, analysis.n)
    return Subspace.span(analysis.spec, analysis.spec.matmul(A, analysis.M.entries), analysis.n)


def line_members(analysis: TopAnalysis) -> list[Subspace]:
    """Members of the unique line for a LineContained analysis."""
    cls = analysis.classification
    if cls.kind is not TopKind.LINE_CONTAINED:
        raise DimMismatch(f"classification is {cls.kind.value}, not LineContained")
    S, U = cls.line
    return line(S, U)


def corollary_check(n: int, k: int, spec_or_q) -> bool:
    """Whether [k+1]_q > n + q + 1, which forces every top to be maximal."""
    q = spec_or_q.q if isinstance(spec_or_q, FieldSpec) else int(spec_or_q)
    return q_integer(k + 1, q) > n + q + 1


def expected_member_count(analysis: TopAnalysis) -> int:
    if analysis.degenerate:
        return 0
    return gaussian_binomial(analysis.k + 1, 1, analysis.spec.q) - analysis.classes.s
