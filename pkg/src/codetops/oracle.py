"""Brute-force verifiers, deliberately independent of the W'/C(w) machinery."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

import numpy as np

from .autos import MonomialMap, all_monomial_maps, apply, group_order, max_group
from .codes import is_nondegenerate
from .errors import DimMismatch, TooLarge, UnknownVertex
from .field import FieldSpec
from .grassmann import GrassmannGraph, bits, gaussian_binomial, max_vertices
from .matspace import MatrixGF, Subspace, enumerate_subspaces, intersect_all, subspace_sum

DEFAULT_CLIQUE_CAP = 400
# 6! * 2^6 * 2: the whole group at n = 6, q = 3, with headroom
BRUTE_MAX_MAPS = 92_160


@dataclass(frozen=True)
class CliqueReport:
    clique: tuple[int, ...]
    is_clique: bool
    is_maximal: bool
    witnesses: tuple[int, ...] | None = None


def brute_top_members(U: Subspace, k: int, cap: int | None = None) -> list[Subspace]:
    """All non-degenerate k-subspaces of U by direct enumeration."""
    if U.dim != k + 1:
        raise DimMismatch(f"dim U = {U.dim}, expected {k + 1}")
    cap = max_vertices() if cap is None else cap
    size = gaussian_binomial(k + 1, k, U.spec.q)
    if size > cap:
        raise TooLarge("top size", size, cap)
    return [K for K in enumerate_subspaces(U, k) if is_nondegenerate(K)]


def _resolve(G: GrassmannGraph, members) -> list[int]:
    out = []
    for m in members:
        if isinstance(m, Subspace):
            if m not in G.index:
                raise UnknownVertex(m)
            out.append(G.index[m])
        else:
            if not 0 <= int(m) < len(G):
                raise UnknownVertex(m)
            out.append(int(m))
    return out


def check_maximal_clique(G: GrassmannGraph, members) -> CliqueReport:
    idx = _resolve(G, members)
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            if not G.adjacent(idx[a], idx[b]):
                return CliqueReport(tuple(idx), False, False, (idx[a], idx[b]))
    common = (1 << len(G)) - 1
    for i in idx:
        common &= G.adjacency[i]
    for i in idx:
        common &= ~(1 << i)
    if common:
        return CliqueReport(tuple(idx), True, False, (bits(common & -common)[0],))
    return CliqueReport(tuple(idx), True, True, None)


def all_maximal_cliques(G: GrassmannGraph, cap: int = DEFAULT_CLIQUE_CAP) -> list[tuple[int, ...]]:
    """Bron-Kerbosch with Tomita pivoting over bitset adjacency."""
    if len(G) > cap:
        raise TooLarge("clique search vertices", len(G), cap)
    adj = G.adjacency
    out = []
    stack = [((), (1 << len(G)) - 1, 0)]
    while stack:
        R, P, X = stack.pop()
        if not P and not X:
            out.append(tuple(sorted(R)))
            continue
        if not P:
            continue
        best, best_cnt = -1, -1
        for u in bits(P | X):
            cnt = (P & adj[u]).bit_count()
            if cnt > best_cnt:
                best, best_cnt = u, cnt
        for v in bits(P & ~adj[best]):
            stack.append((R + (v,), P & adj[v], X & adj[v]))
            P &= ~(1 << v)
            X |= 1 << v
    return sorted(out)


def clique_span(G: GrassmannGraph, clique) -> Subspace:
    acc = G.vertices[clique[0]]
    for i in clique[1:]:
        acc = subspace_sum(acc, G.vertices[i])
    return acc


def clique_meet(G: GrassmannGraph, clique) -> Subspace:
    return intersect_all(G.vertices[i] for i in clique)


def clique_type(G: GrassmannGraph, clique) -> set[str]:
    """{'top'} if inside a (k+1)-space, {'star'} if through a (k-1)-space, or both."""
    kinds = set()
    if len(clique) == 1 or clique_span(G, clique).dim == G.k + 1:
        kinds.add("top")
    if len(clique) == 1 or clique_meet(G, clique).dim == G.k - 1:
        kinds.add("star")
    return kinds


def brute_stabilizer(U: Subspace, semilinear: bool = False, max_maps: int | None = None) -> list[MonomialMap]:
    """Filter the whole monomial group by f(U) = U."""
    max_maps = BRUTE_MAX_MAPS if max_maps is None else max_maps
    order = group_order(U.ambient_dim, U.spec, semilinear)
    if order > max_maps:
        raise TooLarge("monomial group order", order, max_maps)
    return [f for f in all_monomial_maps(U.spec, U.ambient_dim, semilinear) if apply(f, U) == U]


def brute_orbit(U: Subspace, semilinear: bool = False, max_maps: int | None = None) -> set[Subspace]:
    max_maps = max_group() if max_maps is None else max_maps
    order = group_order(U.ambient_dim, U.spec, semilinear)
    if order > max_maps:
        raise TooLarge("monomial group order", order, max_maps)
    return {apply(f, U) for f in all_monomial_maps(U.spec, U.ambient_dim, semilinear)}


def brute_orbits(spaces, semilinear: bool = False) -> list[set[Subspace]]:
    """Partition a group-invariant collection of subspaces into orbits."""
    remaining = set(spaces)
    orbits = []
    for S in spaces:
        if S not in remaining:
            continue
        orb = brute_orbit(S, semilinear)
        orbits.append(orb)
        remaining -= orb
    return orbits


def brute_subspace_count(n: int, k: int, spec: FieldSpec) -> int:
    """Count k-subspaces as distinct vector sets, grown one vector at a time.

    Vectors are integers in [0, q^n) and a subspace is the frozenset of its
    members; no echelon forms are involved.
    """
    q = spec.q
    N = q**n
    weights = q ** np.arange(n, dtype=np.int64)
    digits = (np.arange(N)[:, None] // weights[None, :]) % q
    add = np.array([spec.add(digits, digits[v][None, :]) @ weights for v in range(N)])
    scal = np.array([spec.mul(c, digits) @ weights for c in range(q)])
    layer = {frozenset([0])}
    for _ in range(k):
        nxt = set()
        for members in layer:
            m = np.fromiter(members, dtype=np.int64)
            covered = np.zeros(N, dtype=bool)
            covered[m] = True
            for v in range(1, N):
                if covered[v]:
                    continue
                span = np.concatenate([add[scal[c, v]][m] for c in range(q)])
                covered[span] = True
                nxt.add(frozenset(span.tolist()))
        layer = nxt
    return len(layer)


def brute_remark_counts(M: MatrixGF) -> tuple[int, int]:
    """(#{A : M A = M}, #{M A}) over every linear monomial A, by enumeration."""
    spec = M.spec
    n = M.cols
    X = M.entries
    fixed = 0
    images = set()
    nonzero = list(range(1, spec.q))
    for delta in permutations(range(n)):
        Xp = np.empty_like(X)
        for scales in product(nonzero, repeat=n):
            Xp[:, list(delta)] = spec.mul(np.array(scales, dtype=np.int64)[None, :], X)
            key = Xp.tobytes()
            images.add(key)
            if np.array_equal(Xp, X):
                fixed += 1
    return fixed, len(images)


def distinct_linear_maps(spec: FieldSpec, n: int) -> int:
    """Number of distinct permutations of V induced by the linear monomial maps."""
    q = spec.q
    vectors = np.array(list(product(range(q), repeat=n)), dtype=np.int64)
    seen = set()
    for f in all_monomial_maps(spec, n, semilinear=False):
        seen.add(f.apply_rows(vectors).tobytes())
    return len(seen)
