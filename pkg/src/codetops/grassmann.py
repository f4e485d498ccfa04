"""Grassmann graph structure: counting, adjacency, lines, tops and stars."""
from __future__ import annotations

import os
from collections import defaultdict

import numpy as np

from .errors import BadArgs, DimMismatch, NotIncident, TooLarge
from .field import FieldSpec
from .matspace import (
    Subspace,
    enumerate_subspaces,
    intersect,
    subspace_sum,
)

DEFAULT_MAX_VERTICES = 5000


def max_vertices() -> int:
    return int(os.environ.get("CODETOPS_MAX_VERTICES", DEFAULT_MAX_VERTICES))


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n."""
    if q < 2 or not 0 <= k <= n:
        raise BadArgs(f"gaussian_binomial needs 0 <= k <= n and q >= 2, got n={n} k={k} q={q}")
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def q_integer(n: int, q: int) -> int:
    """[n]_q = (q^n - 1)/(q - 1)."""
    return gaussian_binomial(n, 1, q) if n >= 1 else 0


def adjacent(A: Subspace, B: Subspace) -> bool:
    if A.dim != B.dim:
        raise DimMismatch(f"dims {A.dim} and {B.dim}")
    return intersect(A, B).dim == A.dim - 1


def complement_coordinates(S: Subspace) -> Subspace:
    """Span of the standard vectors at the non-pivot positions of S."""
    free = [c for c in range(S.ambient_dim) if c not in set(S.pivots)]
    rows = np.zeros((len(free), S.ambient_dim), dtype=np.int64)
    for i, c in enumerate(free):
        rows[i, c] = 1
    if not free:
        return Subspace.zero(S.spec, S.ambient_dim)
    return Subspace(S.spec, rows, free, S.ambient_dim)


def interval(S: Subspace, U: Subspace, k: int) -> list[Subspace]:
    """[S, U]_k: all k-dimensional K with S <= K <= U."""
    if not S <= U:
        raise NotIncident("S is not contained in U")
    if not S.dim <= k <= U.dim:
        raise DimMismatch(f"k={k} outside [{S.dim}, {U.dim}]")
    # choose a complement of S inside U
    comp_rows = []
    acc = S
    for row in U.basis:
        if row not in acc:
            comp_rows.append(row)
            acc = subspace_sum(acc, Subspace.span(U.spec, [row], U.ambient_dim))
    if not comp_rows:
        return [S]
    C = Subspace.span(U.spec, np.vstack(comp_rows), U.ambient_dim)
    return [subspace_sum(S, T) for T in enumerate_subspaces(C, k - S.dim)]


def line(S: Subspace, U: Subspace) -> list[Subspace]:
    """The q+1 members of the line [S, U]_k, k = dim S + 1."""
    if U.dim - S.dim != 2:
        raise NotIncident(f"a line needs dim U - dim S = 2, got {U.dim} - {S.dim}")
    return interval(S, U, S.dim + 1)


def top_members(U: Subspace, k: int) -> list[Subspace]:
    if U.dim != k + 1:
        raise DimMismatch(f"top needs dim U = k+1 = {k + 1}, got {U.dim}")
    return list(enumerate_subspaces(U, k))


def star_members(S: Subspace, k: int) -> list[Subspace]:
    """[S>_k: all k-subspaces of the ambient space containing S."""
    if S.dim != k - 1:
        raise DimMismatch(f"star needs dim S = k-1 = {k - 1}, got {S.dim}")
    return [subspace_sum(S, T) for T in enumerate_subspaces(complement_coordinates(S), 1)]


def supersets(K: Subspace, d: int) -> list[Subspace]:
    """All d-dimensional subspaces of the ambient space containing K."""
    if d < K.dim:
        raise DimMismatch(f"d={d} < dim K={K.dim}")
    return [subspace_sum(K, T) for T in enumerate_subspaces(complement_coordinates(K), d - K.dim)]


class GrassmannGraph:
    """Materialised Gamma_k(V), optionally restricted to non-degenerate codes.

    ``adjacency[i]`` is a Python int used as a bitset of neighbours of vertex i.
    """

    def __init__(self, spec: FieldSpec, n: int, k: int, vertices: list[Subspace],
                 adjacency: list[int], restricted_to_nondegenerate: bool):
        self.spec = spec
        self.n = n
        self.k = k
        self.vertices = vertices
        self.adjacency = adjacency
        self.restricted_to_nondegenerate = restricted_to_nondegenerate
        self.index = {v: i for i, v in enumerate(vertices)}

    def __len__(self):
        return len(self.vertices)

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i] >> j & 1)

    def neighbors(self, i: int) -> list[int]:
        return bits(self.adjacency[i])

    def degree(self, i: int) -> int:
        return self.adjacency[i].bit_count()

    def edges(self):
        for i, mask in enumerate(self.adjacency):
            for j in bits(mask >> (i + 1) << (i + 1)):
                yield i, j

    def vertex_index(self, S: Subspace) -> int:
        return self.index[S]


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def build_graph(n: int, k: int, spec: FieldSpec, restrict_nondegenerate: bool = False,
                cap: int | None = None) -> GrassmannGraph:
    """Materialise the graph.

    Adjacency is built from stars: two distinct k-subspaces are adjacent
    exactly when they share a (k-1)-subspace, and then they share only one.
    """
    from .codes import is_nondegenerate

    cap = max_vertices() if cap is None else cap
    if not 0 <= k <= n:
        raise BadArgs(f"k={k} outside [0, {n}]")
    total = gaussian_binomial(n, k, spec.q)
    if total > cap and not restrict_nondegenerate:
        raise TooLarge("vertex count", total, cap)
    full = Subspace.full(spec, n)
    vertices = []
    for S in enumerate_subspaces(full, k):
        if restrict_nondegenerate and not is_nondegenerate(S):
            continue
        vertices.append(S)
        if len(vertices) > cap:
            raise TooLarge("vertex count", len(vertices), cap)
    adjacency = [0] * len(vertices)
    if k >= 1:
        stars: dict[Subspace, int] = defaultdict(int)
        for i, V in enumerate(vertices):
            for S in enumerate_subspaces(V, k - 1):
                stars[S] |= 1 << i
        for mask in stars.values():
            for i in bits(mask):
                adjacency[i] |= mask
        for i in range(len(vertices)):
            adjacency[i] &= ~(1 << i)
    return GrassmannGraph(spec, n, k, vertices, adjacency, restrict_nondegenerate)
