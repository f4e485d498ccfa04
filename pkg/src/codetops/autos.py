"""Monomial (semi)linear maps acting on codes and tops.

A map f = (delta, scales, frob) sends x to y with

    y[delta[i]] = scales[i] * sigma(x[i]),   sigma = Frobenius ** frob,

so f(e_i) = scales[i] * e_{delta[i]}.  As a matrix acting on row vectors
(x -> x A) this is the monomial matrix with A[i, delta[i]] = scales[i].
Coordinates are 0-based throughout.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator

import numpy as np

from .codes import column_classes
from .errors import BadArgs, NotInStabilizer, SizeMismatch, TooLarge
from .field import FieldSpec
from .matspace import MatrixGF, Subspace, normalize, row_space
from .tops import top_nondegenerate

DEFAULT_MAX_GROUP = 200_000
DEFAULT_MAX_SEARCH = 5_000_000


def max_group() -> int:
    return int(os.environ.get("CODETOPS_MAX_GROUP", DEFAULT_MAX_GROUP))


@dataclass(frozen=True)
class MonomialMap:
    spec: FieldSpec
    delta: tuple[int, ...]
    scales: tuple[int, ...]
    frob: int = 0

    def __post_init__(self):
        n = len(self.delta)
        if sorted(self.delta) != list(range(n)):
            raise BadArgs(f"delta {self.delta} is not a permutation of 0..{n - 1}")
        if len(self.scales) != n:
            raise SizeMismatch("delta and scales differ in length")
        if any(not 0 < int(s) < self.spec.q for s in self.scales):
            raise BadArgs("scales must be nonzero field elements")
        if not 0 <= self.frob < self.spec.m:
            raise BadArgs(f"frob must lie in [0, {self.spec.m})")
        object.__setattr__(self, "delta", tuple(int(d) for d in self.delta))
        object.__setattr__(self, "scales", tuple(int(s) for s in self.scales))

    @property
    def n(self) -> int:
        return len(self.delta)

    @property
    def is_linear(self) -> bool:
        return self.frob == 0

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> "MonomialMap":
        return cls(spec, tuple(range(n)), (1,) * n, 0)

    @classmethod
    def from_matrix(cls, spec: FieldSpec, A, frob: int = 0) -> "MonomialMap":
        A = np.asarray(A.entries if isinstance(A, MatrixGF) else A, dtype=np.int64)
        n = A.shape[0]
        if A.shape != (n, n):
            raise SizeMismatch("monomial matrix must be square")
        delta, scales = [], []
        for i in range(n):
            nz = np.flatnonzero(A[i])
            if nz.size != 1:
                raise BadArgs(f"row {i} of a monomial matrix needs exactly one nonzero entry")
            delta.append(int(nz[0]))
            scales.append(int(A[i, nz[0]]))
        return cls(spec, tuple(delta), tuple(scales), frob)

    def to_matrix(self) -> MatrixGF:
        A = np.zeros((self.n, self.n), dtype=np.int64)
        A[np.arange(self.n), list(self.delta)] = self.scales
        return MatrixGF(self.spec, A)

    def apply_rows(self, X) -> np.ndarray:
        X = np.asarray(X, dtype=np.int64)
        if X.shape[-1] != self.n:
            raise SizeMismatch(f"vectors of length {X.shape[-1]}, map on {self.n} coordinates")
        X2 = np.atleast_2d(X)
        Y = np.empty_like(X2)
        Y[:, list(self.delta)] = self.spec.mul(np.array(self.scales, dtype=np.int64)[None, :],
                                               self.spec.frob(X2, self.frob))
        return Y if X.ndim == 2 else Y[0]

    def apply_vector(self, x) -> np.ndarray:
        return self.apply_rows(x)

    def __call__(self, S):
        return apply(self, S)

    def __repr__(self):
        return (f"MonomialMap(delta={list(self.delta)}, scales="
                f"{[self.spec.format_code(s) for s in self.scales]}, frob={self.frob})")


def _check(f: MonomialMap, spec: FieldSpec, n: int):
    if f.spec != spec or f.n != n:
        raise SizeMismatch(f"map on GF({f.spec.q})^{f.n} applied in GF({spec.q})^{n}")


def apply(f: MonomialMap, S: Subspace) -> Subspace:
    _check(f, S.spec, S.ambient_dim)
    if S.dim == 0:
        return S
    return Subspace.span(S.spec, f.apply_rows(S.basis), S.ambient_dim)


def compose(f: MonomialMap, g: MonomialMap) -> MonomialMap:
    """f after g: apply(compose(f, g), S) == apply(f, apply(g, S))."""
    _check(f, g.spec, g.n)
    spec = f.spec
    delta = tuple(f.delta[g.delta[i]] for i in range(g.n))
    scales = tuple(int(spec.mul(f.scales[g.delta[i]], int(spec.frob(g.scales[i], f.frob))))
                   for i in range(g.n))
    return MonomialMap(spec, delta, scales, (f.frob + g.frob) % spec.m)


def inverse(f: MonomialMap) -> MonomialMap:
    spec = f.spec
    back = -f.frob % spec.m
    delta_inv = [0] * f.n
    for i, j in enumerate(f.delta):
        delta_inv[j] = i
    scales = tuple(int(spec.frob(int(spec.inv(f.scales[delta_inv[j]])), back)) for j in range(f.n))
    return MonomialMap(spec, tuple(delta_inv), scales, back)


def group_order(n: int, spec: FieldSpec, semilinear: bool = False) -> int:
    order = math.factorial(n) * (spec.q - 1) ** n
    return order * spec.m if semilinear else order


def all_monomial_maps(spec: FieldSpec, n: int, semilinear: bool = False) -> Iterator[MonomialMap]:
    frobs = range(spec.m) if semilinear else (0,)
    nonzero = range(1, spec.q)
    for e in frobs:
        for delta in permutations(range(n)):
            for scales in product(nonzero, repeat=n):
                yield MonomialMap(spec, delta, scales, e)


# -- orbit labels -------------------------------------------------------------

def _solve_inverse(spec: FieldSpec, B: np.ndarray) -> np.ndarray | None:
    from .matspace import _rref_array

    r = B.shape[0]
    aug = np.hstack([B, np.eye(r, dtype=np.int64)])
    R, rk, pivots = _rref_array(spec, aug)
    if pivots[:r] != list(range(r)):
        return None
    return R[:, r:]


def orbit_canonical_form(M: MatrixGF, semilinear: bool = False, cap: int | None = None):
    """Label that is equal for two generator matrices iff their codes share an orbit.

    The label is the lexicographically least sorted multiset of normalized
    column points over all re-bases of the code that send an ordered choice of
    independent column points to scaled standard vectors (and, in the
    semilinear case, over all Frobenius powers).
    """
    spec = M.spec
    classes = column_classes(M)
    r = M.rows
    reps = np.array(classes.representatives, dtype=np.int64).T  # r x s
    mult = classes.sizes
    s = classes.s
    frobs = range(spec.m) if semilinear else (0,)
    cap = max_group() * 10 if cap is None else cap
    work = math.perm(s, r) * (spec.q - 1) ** max(r - 1, 0) * len(frobs)
    if work > cap:
        raise TooLarge("canonical-form search", work, cap)
    best = None
    for e in frobs:
        P = spec.frob(reps, e)
        for choice in permutations(range(s), r):
            Binv = _solve_inverse(spec, P[:, list(choice)])
            if Binv is None:
                continue
            base = spec.matmul(Binv, P)
            for diag in product(range(1, spec.q), repeat=r - 1):
                D = np.array((1,) + diag, dtype=np.int64)
                X = spec.mul(D[:, None], base)
                pts = sorted((normalize(spec, X[:, c]), mult[c]) for c in range(s))
                cand = tuple(pts)
                if best is None or cand < best:
                    best = cand
    return (M.cols, r, best)


# -- stabilizers ----------------------------------------------------------------

class _StabilizerSearch:
    """Enumerate stabilizer elements of U via the re-basing matrix S.

    f fixes U iff sigma(R) A = S R for some invertible S, R the RREF basis of U
    and A the monomial matrix of f.  At the pivot columns R is the identity, so
    the columns of S are scaled columns of sigma(R); they are chosen one at a
    time and every column of S R that is already determined is checked to be a
    point of the right class.  Each surviving S contributes every class-wise
    bijection of columns.
    """

    def __init__(self, U: Subspace, semilinear: bool, budget: int):
        self.U = U
        self.spec = U.spec
        self.R = U.basis
        self.r, self.n = self.R.shape
        self.semilinear = semilinear
        self.budget = budget
        self.nodes = 0
        R = self.R
        nonzero_cols = [j for j in range(self.n) if np.any(R[:, j])]
        self.zero_cols = [j for j in range(self.n) if not np.any(R[:, j])]
        groups: dict[tuple, list[int]] = {}
        for j in nonzero_cols:
            groups.setdefault(normalize(self.spec, R[:, j]), []).append(j)
        self.points = list(groups)
        self.classes = [groups[p] for p in self.points]
        self.class_of = {j: c for c, cols in enumerate(self.classes) for j in cols}
        # columns become checkable once the rows of their support are chosen
        self.ready_at = [[] for _ in range(self.r + 1)]
        for j in nonzero_cols:
            self.ready_at[int(np.flatnonzero(R[:, j])[-1]) + 1].append(j)

    def solutions(self):
        """Yield (e, S, T, class_map) for each valid re-basing."""
        for e in (range(self.spec.m) if self.semilinear else (0,)):
            Rs = self.spec.frob(self.R, e)
            pts = [tuple(int(x) for x in self.spec.frob(np.array(p), e)) for p in self.points]
            pt_index = {p: c for c, p in enumerate(pts)}
            yield from self._extend(e, Rs, pt_index, [], {}, set())

    def _extend(self, e, Rs, pt_index, cols, cmap, used):
        spec, r = self.spec, self.r
        t = len(cols)
        if t == r:
            S = np.array(cols, dtype=np.int64).T
            from .matspace import _rref_array
            if _rref_array(spec, S)[1] < r:
                return
            yield e, S, spec.matmul(S, self.R), dict(cmap)
            return
        piv = self.U.pivots[t]
        src_class = self.class_of[piv]
        size = len(self.classes[src_class])
        for c in range(len(self.points)):
            if c in used or len(self.classes[c]) != size:
                continue
            rep = np.array(self._class_point(Rs, c), dtype=np.int64)
            for lam in range(1, spec.q):
                self.nodes += 1
                if self.nodes > self.budget:
                    raise TooLarge("stabilizer search nodes", self.nodes, self.budget)
                col = spec.mul(lam, rep)
                new_cols = cols + [col]
                ok, new_map, new_used = self._check(new_cols, pt_index, cmap, used)
                if ok:
                    yield from self._extend(e, Rs, pt_index, new_cols, new_map, new_used)

    def _class_point(self, Rs, c):
        return normalize(self.spec, Rs[:, self.classes[c][0]])

    def _check(self, cols, pt_index, cmap, used):
        spec = self.spec
        t = len(cols)
        S_t = np.array(cols, dtype=np.int64).T  # r x t
        cmap = dict(cmap)
        used = set(used)
        check = self.ready_at[t]
        if check:
            T = spec.matmul(S_t, self.R[:t, check])
            for idx, j in enumerate(check):
                pt = normalize(spec, T[:, idx])
                if pt is None or pt not in pt_index:
                    return False, None, None
                src, dst = self.class_of[j], pt_index[pt]
                if len(self.classes[src]) != len(self.classes[dst]):
                    return False, None, None
                if src in cmap:
                    if cmap[src] != dst:
                        return False, None, None
                elif dst in used:
                    return False, None, None
                else:
                    cmap[src] = dst
                    used.add(dst)
        return True, cmap, used

    def per_solution_count(self) -> int:
        count = 1
        for cols in self.classes:
            count *= math.factorial(len(cols))
        z = len(self.zero_cols)
        return count * math.factorial(z) * (self.spec.q - 1) ** z

    def maps_for(self, e, T, cmap) -> Iterator[MonomialMap]:
        """All f with sigma^e(R) A = T for the given T = S R."""
        spec = self.spec
        Rs = spec.frob(self.R, e)
        # target class src (positions j of T) receives source columns i of class cmap[src]
        blocks = []
        for src, dst in cmap.items():
            blocks.append((self.classes[src], self.classes[dst]))
        z = self.zero_cols
        zero_scales = list(product(range(1, spec.q), repeat=len(z)))
        block_choices = [list(permutations(src_cols)) for src_cols, _ in blocks]
        for assignment in product(*block_choices):
            delta = [0] * self.n
            scales = [0] * self.n
            for (src_cols, dst_cols), targets in zip(blocks, assignment):
                for i, j in zip(dst_cols, targets):
                    delta[i] = j
                    col_i = Rs[:, i]
                    l = int(np.flatnonzero(col_i)[0])
                    scales[i] = int(spec.div(int(T[l, j]), int(col_i[l])))
            for zperm in permutations(z):
                for zs in zero_scales:
                    for i, j, s in zip(z, zperm, zs):
                        delta[i] = j
                        scales[i] = s
                    yield MonomialMap(spec, tuple(delta), tuple(scales), e)


def stabilizer_order(U: Subspace, semilinear: bool = False, budget: int = DEFAULT_MAX_SEARCH) -> int:
    search = _StabilizerSearch(U, semilinear, budget)
    return sum(1 for _ in search.solutions()) * search.per_solution_count()


def stabilizer(U: Subspace, semilinear: bool = False, cap: int | None = None,
               budget: int = DEFAULT_MAX_SEARCH) -> list[MonomialMap]:
    """Every monomial map f with f(U) = U."""
    cap = max_group() if cap is None else cap
    search = _StabilizerSearch(U, semilinear, budget)
    sols = list(search.solutions())
    order = len(sols) * search.per_solution_count()
    if order > cap:
        raise TooLarge("stabilizer order", order, cap)
    out = []
    for e, _S, T, cmap in sols:
        out.extend(search.maps_for(e, T, cmap))
    return out


def orbit_size(U: Subspace, semilinear: bool = False) -> int:
    order = group_order(U.ambient_dim, U.spec, semilinear)
    stab = stabilizer_order(U, semilinear)
    assert order % stab == 0
    return order // stab


def remark_counts(M: MatrixGF) -> tuple[int, int]:
    """(automorphisms of M itself, matrices with the same columns up to proportionality)."""
    sizes = column_classes(M).sizes
    prod_fact = math.prod(math.factorial(k) for k in sizes)
    n = M.cols
    return prod_fact, math.factorial(n) // prod_fact * (M.spec.q - 1) ** n


def acts_identically_on_top(f: MonomialMap, U: Subspace, k: int) -> bool:
    if apply(f, U) != U:
        raise NotInStabilizer("map does not fix U")
    return all(apply(f, C) == C for C in top_nondegenerate(U, k))


def member_permutation(f: MonomialMap, U: Subspace, k: int) -> tuple[int, ...]:
    """How a stabilizer element permutes the members of the top (by index)."""
    if apply(f, U) != U:
        raise NotInStabilizer("map does not fix U")
    members = top_nondegenerate(U, k)
    index = {C: i for i, C in enumerate(members)}
    return tuple(index[apply(f, C)] for C in members)


def code_automorphisms_of_matrix(M: MatrixGF) -> int:
    """Count linear monomial A with M A == M exactly, by class-internal bijections."""
    return remark_counts(M)[0]


def stabilizer_of_matrix(M: MatrixGF, semilinear: bool = False, **kw) -> list[MonomialMap]:
    return stabilizer(row_space(M), semilinear, **kw)
