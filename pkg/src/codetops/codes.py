"""Non-degeneracy and projective column classes of generator matrices."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import TooLarge, ZeroColumn
from .grassmann import gaussian_binomial, max_vertices
from .matspace import MatrixGF, Subspace, enumerate_subspaces, normalize


def is_nondegenerate(S: Subspace) -> bool:
    """True iff S lies in no coordinate hyperplane (no all-zero basis column)."""
    if S.dim == 0:
        return S.ambient_dim == 0
    return bool(np.all(np.any(S.basis != 0, axis=0)))


def coordinate_hyperplane(spec, n: int, i: int) -> Subspace:
    """C_i: the kernel of the i-th coordinate functional."""
    rows = np.zeros((n - 1, n), dtype=np.int64)
    for r, j in enumerate(c for c in range(n) if c != i):
        rows[r, j] = 1
    return Subspace.span(spec, rows, n)


@dataclass(frozen=True)
class ColumnClasses:
    """Partition of column indices into proportionality classes.

    ``classes[c]`` lists the column indices of class c in increasing order and
    ``representatives[c]`` is its normalized column.  Classes are ordered by
    their first column.
    """

    matrix_cols: int
    classes: tuple[tuple[int, ...], ...]
    representatives: tuple[tuple[int, ...], ...]

    @property
    def s(self) -> int:
        return len(self.classes)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def class_of(self, j: int) -> int:
        for c, members in enumerate(self.classes):
            if j in members:
                return c
        raise IndexError(j)

    def label(self) -> dict[int, int]:
        return {j: c for c, members in enumerate(self.classes) for j in members}


def column_classes(M: MatrixGF) -> ColumnClasses:
    spec = M.spec
    groups: dict[tuple[int, ...], list[int]] = {}
    for j in range(M.cols):
        rep = normalize(spec, M.entries[:, j])
        if rep is None:
            raise ZeroColumn(j)
        groups.setdefault(rep, []).append(j)
    reps = list(groups)
    return ColumnClasses(M.cols, tuple(tuple(groups[r]) for r in reps), tuple(reps))


def enumerate_nondegenerate(n: int, k: int, spec, cap: int | None = None):
    """Stream the non-degenerate k-subspaces of GF(q)^n in enumeration order."""
    cap = max_vertices() if cap is None else cap
    total = gaussian_binomial(n, k, spec.q)
    if total > cap:
        raise TooLarge("subspace count", total, cap)
    for S in enumerate_subspaces(Subspace.full(spec, n), k):
        if is_nondegenerate(S):
            yield S
