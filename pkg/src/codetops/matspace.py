"""Matrices and canonical subspaces over GF(q).

A :class:`Subspace` always stores the reduced row echelon basis, so equality
and hashing reduce to comparing arrays.
"""
from __future__ import annotations

from itertools import combinations, product
from typing import Iterable, Iterator

import numpy as np

from . import kernels
from .errors import AmbientMismatch, BadArgs, BadDimension, FieldMismatch
from .field import FieldElement, FieldSpec


def _as_codes(spec: FieldSpec, rows, cols: int | None = None) -> np.ndarray:
    if isinstance(rows, np.ndarray):
        arr = rows.astype(np.int64, copy=True)
    else:
        rows = [list(r) for r in rows]
        conv = []
        for r in rows:
            line = []
            for x in r:
                if isinstance(x, FieldElement):
                    if x.spec != spec:
                        raise FieldMismatch(f"{x.spec!r} vs {spec!r}")
                    line.append(x.value)
                else:
                    line.append(int(x))
            conv.append(line)
        if not conv:
            if cols is None:
                raise BadArgs("cannot infer the width of an empty matrix")
            return np.zeros((0, cols), dtype=np.int64)
        if len({len(r) for r in conv}) != 1:
            raise BadArgs("ragged rows")
        arr = np.array(conv, dtype=np.int64)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.size and (arr.min() < 0 or arr.max() >= spec.q):
        if spec.prime_mode:
            arr %= spec.p
        else:
            raise BadArgs(f"entries must be codes in [0, {spec.q})")
    if cols is not None and arr.shape[1] != cols:
        raise AmbientMismatch(f"expected {cols} columns, got {arr.shape[1]}")
    return arr


class MatrixGF:
    """Dense matrix of element codes over a fixed field."""

    __slots__ = ("spec", "entries")

    def __init__(self, spec: FieldSpec, entries, cols: int | None = None):
        self.spec = spec
        arr = _as_codes(spec, entries, cols)
        arr.setflags(write=False)
        self.entries = arr

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self):
        return self.entries.shape

    def __getitem__(self, idx):
        val = self.entries[idx]
        if np.ndim(val) == 0:
            return FieldElement(self.spec, int(val))
        return val

    def column(self, j: int) -> np.ndarray:
        return self.entries[:, j]

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()

    def transpose(self) -> "MatrixGF":
        return MatrixGF(self.spec, self.entries.T.copy())

    def __matmul__(self, other: "MatrixGF") -> "MatrixGF":
        if other.spec != self.spec:
            raise FieldMismatch("matrix fields differ")
        return MatrixGF(self.spec, self.spec.matmul(self.entries, other.entries))

    def __eq__(self, other):
        return (isinstance(other, MatrixGF) and other.spec == self.spec
                and other.shape == self.shape and np.array_equal(other.entries, self.entries))

    def __hash__(self):
        return hash((self.spec, self.shape, self.entries.tobytes()))

    def __repr__(self):
        body = "\n".join(" ".join(self.spec.format_code(x) for x in row) for row in self.entries)
        return f"MatrixGF({self.spec!r}, {self.rows}x{self.cols})\n{body}"

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> "MatrixGF":
        return cls(spec, np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, spec: FieldSpec, rows: int, cols: int) -> "MatrixGF":
        return cls(spec, np.zeros((rows, cols), dtype=np.int64))


def _rref_array(spec: FieldSpec, arr: np.ndarray):
    A = np.ascontiguousarray(arr, dtype=np.int64).copy()
    if A.shape[0] == 0:
        return A, 0, []
    rank, pivots = kernels.rref_inplace(A, spec)
    return A, rank, list(pivots)


def rref(M: MatrixGF) -> tuple[MatrixGF, int, list[int]]:
    A, rank, pivots = _rref_array(M.spec, M.entries)
    return MatrixGF(M.spec, A), rank, pivots


def rank(M) -> int:
    if isinstance(M, MatrixGF):
        return _rref_array(M.spec, M.entries)[1]
    raise BadArgs("rank expects a MatrixGF")


class Subspace:
    """Subspace of GF(q)^n held by its canonical RREF basis.

    ``basis`` is a read-only ``(dim, n)`` int64 array of element codes and
    ``pivots`` the pivot column of each basis row.
    """

    __slots__ = ("spec", "ambient_dim", "basis", "pivots", "_hash")

    def __init__(self, spec: FieldSpec, basis: np.ndarray, pivots, ambient_dim: int):
        # trusted constructor: basis must already be canonical
        basis.setflags(write=False)
        self.spec = spec
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = tuple(pivots)
        self._hash = None

    @classmethod
    def span(cls, spec: FieldSpec, rows, n: int | None = None) -> "Subspace":
        arr = rows.entries if isinstance(rows, MatrixGF) else _as_codes(spec, rows, n)
        if n is None:
            n = arr.shape[1]
        A, rk, pivots = _rref_array(spec, arr)
        return cls(spec, A[:rk].copy(), pivots, n)

    @classmethod
    def zero(cls, spec: FieldSpec, n: int) -> "Subspace":
        return cls(spec, np.zeros((0, n), dtype=np.int64), (), n)

    @classmethod
    def full(cls, spec: FieldSpec, n: int) -> "Subspace":
        return cls(spec, np.eye(n, dtype=np.int64), range(n), n)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def n(self) -> int:
        return self.ambient_dim

    def matrix(self) -> MatrixGF:
        return MatrixGF(self.spec, self.basis.copy(), self.ambient_dim)

    @property
    def key(self):
        return (self.ambient_dim, self.dim, self.basis.tobytes())

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.spec == other.spec
                and self.ambient_dim == other.ambient_dim
                and self.basis.shape == other.basis.shape
                and np.array_equal(self.basis, other.basis))

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.spec, self.key))
        return self._hash

    def __lt__(self, other: "Subspace"):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (self.dim, self.pivots, tuple(self.basis.ravel().tolist()))

    def __repr__(self):
        rows = ["[" + " ".join(self.spec.format_code(x) for x in r) + "]" for r in self.basis]
        return f"Subspace(dim={self.dim}, n={self.ambient_dim}, {', '.join(rows) or '0'})"

    def reduce(self, v) -> np.ndarray:
        """Remainder of v after elimination against the RREF basis."""
        v = np.array(v, dtype=np.int64).reshape(-1)
        if v.shape[0] != self.ambient_dim:
            raise AmbientMismatch(f"vector of length {v.shape[0]} in F^{self.ambient_dim}")
        for row, p in zip(self.basis, self.pivots):
            c = int(v[p])
            if c:
                v = self.spec.sub(v, self.spec.mul(c, row))
        return v

    def __contains__(self, v) -> bool:
        return not np.any(self.reduce(v))

    def coordinates(self, v) -> np.ndarray:
        """Coefficients of v against the canonical basis (v must lie in self)."""
        v = np.asarray(v, dtype=np.int64)
        if v not in self:
            raise BadArgs("vector is not in the subspace")
        return v[list(self.pivots)].copy()

    def from_coordinates(self, coeffs) -> np.ndarray:
        c = np.asarray(coeffs, dtype=np.int64).reshape(1, -1)
        return self.spec.matmul(c, self.basis)[0]

    def __le__(self, other: "Subspace") -> bool:
        _check_pair(self, other)
        return all(row in other for row in self.basis)

    def issubspace(self, other: "Subspace") -> bool:
        return self <= other


def _check_pair(A: Subspace, B: Subspace):
    if A.spec != B.spec:
        raise FieldMismatch(f"{A.spec!r} vs {B.spec!r}")
    if A.ambient_dim != B.ambient_dim:
        raise AmbientMismatch(f"ambient {A.ambient_dim} vs {B.ambient_dim}")


def row_space(M: MatrixGF) -> Subspace:
    return Subspace.span(M.spec, M.entries, M.cols)


def _null_basis(spec: FieldSpec, R: np.ndarray, rank_: int, pivots, n: int) -> np.ndarray:
    free = [c for c in range(n) if c not in set(pivots)]
    out = np.zeros((len(free), n), dtype=np.int64)
    for t, f in enumerate(free):
        out[t, f] = 1
        for i, p in enumerate(pivots):
            out[t, p] = spec.neg(int(R[i, f]))
    return out


def kernel(M: MatrixGF) -> Subspace:
    """{x : M x = 0}, the rows of M read as linear equations."""
    R, rk, pivots = _rref_array(M.spec, M.entries)
    return Subspace.span(M.spec, _null_basis(M.spec, R, rk, pivots, M.cols), M.cols)


def orthogonal_complement(S: Subspace) -> Subspace:
    """Complement under the standard dot product."""
    if S.dim == 0:
        return Subspace.full(S.spec, S.ambient_dim)
    return Subspace.span(S.spec, _null_basis(S.spec, S.basis, S.dim, S.pivots, S.ambient_dim),
                         S.ambient_dim)


def subspace_sum(A: Subspace, B: Subspace) -> Subspace:
    _check_pair(A, B)
    if A.dim == 0:
        return B
    if B.dim == 0:
        return A
    return Subspace.span(A.spec, np.vstack([A.basis, B.basis]), A.ambient_dim)


def intersect(A: Subspace, B: Subspace) -> Subspace:
    _check_pair(A, B)
    if A == B:
        return A
    return orthogonal_complement(subspace_sum(orthogonal_complement(A), orthogonal_complement(B)))


def intersect_all(spaces: Iterable[Subspace]) -> Subspace:
    it = iter(spaces)
    acc = next(it)
    for S in it:
        acc = intersect(acc, S)
    return acc


def contains(A: Subspace, v) -> bool:
    return v in A


def map_coordinates(U: Subspace, coeff_rows) -> Subspace:
    """Span of the vectors whose coordinates against U's canonical basis are given."""
    C = _as_codes(U.spec, coeff_rows, U.dim)
    return Subspace.span(U.spec, U.spec.matmul(C, U.basis), U.ambient_dim)


def rref_templates(spec: FieldSpec, d: int, k: int) -> Iterator[np.ndarray]:
    """All k x d RREF matrices of rank k: pivot sets lexicographic, then free entries."""
    q = spec.q
    for pivots in combinations(range(d), k):
        pset = set(pivots)
        free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, d) if j not in pset]
        base = np.zeros((k, d), dtype=np.int64)
        for i, p in enumerate(pivots):
            base[i, p] = 1
        if not free:
            yield base.copy()
            continue
        rows_idx = np.array([f[0] for f in free])
        cols_idx = np.array([f[1] for f in free])
        for vals in product(range(q), repeat=len(free)):
            M = base.copy()
            M[rows_idx, cols_idx] = vals
            yield M


def enumerate_subspaces(ambient: Subspace, k: int) -> Iterator[Subspace]:
    """Every k-dimensional subspace of ``ambient``, each exactly once."""
    d = ambient.dim
    if not 0 <= k <= d:
        raise BadDimension(f"k={k} outside [0, {d}]")
    spec, n = ambient.spec, ambient.ambient_dim
    if k == 0:
        yield Subspace.zero(spec, n)
        return
    is_standard = d == n
    for C in rref_templates(spec, d, k):
        if is_standard:
            pivots = [int(np.flatnonzero(row)[0]) for row in C]
            yield Subspace(spec, C, pivots, n)
        else:
            yield Subspace.span(spec, spec.matmul(C, ambient.basis), n)


def projective_points(spec: FieldSpec, d: int) -> Iterator[tuple[int, ...]]:
    """Normalized representatives (first nonzero entry 1) of the points of PG(d-1, q)."""
    for lead in range(d):
        for tail in product(range(spec.q), repeat=d - lead - 1):
            yield (0,) * lead + (1,) + tail


def normalize(spec: FieldSpec, v) -> tuple[int, ...] | None:
    """Scale v so its first nonzero entry is 1; None for the zero vector."""
    v = np.asarray(v, dtype=np.int64)
    nz = np.flatnonzero(v)
    if nz.size == 0:
        return None
    lead = int(v[nz[0]])
    if lead != 1:
        v = spec.mul(int(spec.inv(lead)), v)
    return tuple(int(x) for x in v)


class EchelonAccumulator:
    """Incremental span builder: add vectors, track rank, stop early when full."""

    def __init__(self, spec: FieldSpec, n: int):
        self.spec = spec
        self.n = n
        self.rows: list[np.ndarray] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def full(self) -> bool:
        return self.rank == self.n

    def add(self, v) -> bool:
        """Insert v; return True if it increased the rank."""
        spec = self.spec
        v = np.array(v, dtype=np.int64)
        for row, p in zip(self.rows, self.pivots):
            c = int(v[p])
            if c:
                v = spec.sub(v, spec.mul(c, row))
        nz = np.flatnonzero(v)
        if nz.size == 0:
            return False
        p = int(nz[0])
        v = spec.mul(int(spec.inv(int(v[p]))), v)
        self.rows.append(v)
        self.pivots.append(p)
        return True

    def subspace(self) -> Subspace:
        if not self.rows:
            return Subspace.zero(self.spec, self.n)
        return Subspace.span(self.spec, np.vstack(self.rows), self.n)
