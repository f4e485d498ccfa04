"""The ten acceptance checks, shared by ``codetops verify`` and the test suite.

Every check returns a :class:`CheckResult`; nothing here raises on a failed
comparison.  Randomised checks take a seed and are deterministic for it.
"""
from __future__ import annotations

import math
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import autos, oracle
from .codes import column_classes, enumerate_nondegenerate, is_nondegenerate
from .field import FieldSpec, field_of_order, make_field
from .fixtures import example1, example2, example3, example4, example5
from .grassmann import adjacent, build_graph, gaussian_binomial, line, q_integer, supersets
from .matspace import MatrixGF, Subspace, projective_points, rank, row_space
from .tops import (
    TopKind,
    analyze,
    analyze_subspace,
    common_from_w_perp,
    corollary_check,
    top_nondegenerate,
)

CENSUS_PARAMS = ((4, 2, 2), (5, 2, 2), (5, 2, 3))
CENSUS_CLIQUE_CAP = 1000


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    elapsed: float
    limit: float
    details: list[str] = field(default_factory=list)

    @property
    def in_time(self) -> bool:
        return self.elapsed < self.limit

    @property
    def ok(self) -> bool:
        return self.passed and self.in_time

    def line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        why = "" if self.passed else "  [" + "; ".join(self.details[:3]) + "]"
        return f"{tag} C{self.number:<2} {self.name:<34} {self.elapsed:7.2f}s / {self.limit:g}s{why}"


class _Checker:
    def __init__(self):
        self.failures: list[str] = []

    def expect(self, cond, message: str):
        if not cond:
            self.failures.append(message)
        return bool(cond)


def _run(number, name, limit, body, *args) -> CheckResult:
    chk = _Checker()
    t0 = time.perf_counter()
    try:
        body(chk, *args)
    except Exception as exc:  # a crash is a failure, reported like one
        chk.failures.append(f"{type(exc).__name__}: {exc}")
    return CheckResult(number, name, not chk.failures, time.perf_counter() - t0, limit, chk.failures)


def span_in(M: MatrixGF, coeff_rows) -> Subspace:
    """Subspace spanned by the combinations of M's rows given as coefficient rows."""
    C = np.array(coeff_rows, dtype=np.int64) % M.spec.p
    return Subspace.span(M.spec, M.spec.matmul(C, M.entries), M.cols)


# -- worked examples -------------------------------------------------------------------

def _c1(chk):
    fx = example1()
    a = analyze(fx.M, fx.k)
    chk.expect(a.classes.s == 12 and set(a.classes.sizes) == {1}, f"classes {a.classes.sizes}")
    chk.expect(a.dim_w == 1, f"dim W = {a.dim_w}")
    chk.expect(len(a.members) == 1, f"{len(a.members)} members")
    chk.expect(a.members and a.members[0] == row_space(fx.data["member"]), "member differs from reference")
    chk.expect(a.classification.kind is TopKind.SINGLE_POINT, a.classification.kind.value)


def _c2(chk):
    fx = example2()
    M, F = fx.M, fx.spec
    a = analyze(M, fx.k)
    chk.expect(M.shape == (6, 360), f"shape {M.shape}")
    chk.expect(a.classes.s == 360, f"{a.classes.s} classes")
    chk.expect(a.dim_w == 2, f"dim W = {a.dim_w}")
    chk.expect(a.W_perp == Subspace.span(F, fx.data["w_perp"], 6), "W_perp differs")
    common = span_in(M, fx.data["common"])
    chk.expect(a.common == common, "common intersection differs")
    chk.expect(common_from_w_perp(a) == common, "W_perp image differs from common")
    chk.expect(len(a.members) == 4, f"{len(a.members)} members")
    chk.expect(set(a.members) == set(line(common, a.U)), "members are not the line [common, U]")
    chk.expect(set(a.members) == {span_in(M, m) for m in fx.data["members"]}, "members differ from C(w_i)")
    chk.expect(a.classification.kind is TopKind.LINE_CONTAINED, a.classification.kind.value)


def _local_maximality(chk, a):
    """Clique, no missing members, no shared (k-1)-space: the obligations for a top."""
    k = a.k
    ms = a.members
    chk.expect(all(adjacent(ms[i], ms[j]) for i in range(len(ms)) for j in range(i + 1, len(ms))),
               "members are not pairwise adjacent")
    brute = oracle.brute_top_members(a.U, k)
    chk.expect(len(brute) == len(ms) == a.top_size - a.classes.s, "top count identity fails")
    chk.expect(a.common.dim < k - 1, f"common has dim {a.common.dim}, a star could extend")


def _c3(chk):
    fx = example3()
    M = fx.M
    a = analyze(M, fx.k)
    chk.expect(a.dim_w == 3, f"dim W = {a.dim_w}")
    chk.expect(a.classification.kind is TopKind.MAXIMAL_TOP, a.classification.kind.value)
    chk.expect(a.W_perp == Subspace.span(fx.spec, fx.data["w_perp"], 6), "W_perp differs")
    chk.expect(len(a.members) == 5, f"{len(a.members)} members")
    chk.expect(set(a.members) == {span_in(M, m) for m in fx.data["members"]}, "members differ")
    chk.expect(a.common.dim == 3, f"dim common = {a.common.dim}")
    _local_maximality(chk, a)


def shape_hits(f: autos.MonomialMap, shapes) -> set[tuple[int, int]]:
    """Pairs (shape index, a) for which the shape with scalar a equals f's matrix."""
    spec = f.spec
    A = f.to_matrix().entries
    hits = set()
    for si, s in enumerate(shapes):
        s = np.array(s)
        for a in spec.nonzero_codes():
            want = np.where(s == 1, a, np.where(s == -1, spec.neg(a), 0))
            if np.array_equal(want, A):
                hits.add((si, a))
    return hits


def _c4(chk):
    for q in (3, 5):
        fx = example4(q)
        U = row_space(fx.M)
        stab = autos.stabilizer(U)
        order = len(stab)
        chk.expect(order == 8 * (q - 1), f"q={q}: stabilizer {order}")
        chk.expect(autos.orbit_size(U) == 15 * (q - 1) ** 4, f"q={q}: orbit {autos.orbit_size(U)}")
        hits = [shape_hits(f, fx.data["shapes"]) for f in stab]
        chk.expect(all(len(h) == 1 for h in hits), f"q={q}: an element fits no shape")
        chk.expect(len(set().union(*hits)) == 8 * (q - 1), f"q={q}: shapes not covered")


def class_internal(f: autos.MonomialMap, classes) -> bool:
    return all(f.delta[i] in cls for cls in classes for i in cls)


def _c5(chk):
    fx = example5(2, 3)
    M, k = fx.M, fx.k
    U = row_space(M)
    a = analyze(M, k)
    chk.expect(len(a.wprime_reps) == 2 ** (k + 1) - (k + 2) == 4, f"|W'| = {len(a.wprime_reps)}")
    stab = autos.stabilizer(U)
    chk.expect(len(stab) == 48 == math.factorial(2) ** 3 * math.factorial(3), f"stabilizer {len(stab)}")
    chk.expect(autos.orbit_size(U) == 15, f"orbit {autos.orbit_size(U)}")
    classes = column_classes(M).classes
    T = [f for f in stab if class_internal(f, classes)]
    chk.expect(len(T) == 8, f"|T| = {len(T)}")
    chk.expect(all(autos.acts_identically_on_top(f, U, k) for f in T), "T moves a member")
    perms = {}
    for f in stab:
        perms.setdefault(autos.member_permutation(f, U, k), []).append(f)
    kernel = perms.get(tuple(range(len(a.members))), [])
    chk.expect({(f.delta, f.scales) for f in kernel} == {(f.delta, f.scales) for f in T},
               "kernel of the member action is not T")
    image = list(perms)
    chk.expect(len(image) == 6, f"quotient image has {len(image)} elements")
    abelian = all(tuple(p[i] for i in r) == tuple(r[i] for i in p) for p in image for r in image)
    chk.expect(not abelian, "quotient image is abelian, not S_3")


# -- census ------------------------------------------------------------------------------

@dataclass
class CensusEntry:
    U: Subspace
    kind: TopKind
    members: tuple[Subspace, ...]
    s: int


@dataclass
class Census:
    n: int
    k: int
    q: int
    graph: object
    entries: list[CensusEntry]
    cliques: list[tuple[int, ...]]


@lru_cache(maxsize=None)
def census(n: int, k: int, q: int) -> Census:
    spec = field_of_order(q)
    G = build_graph(n, k, spec, restrict_nondegenerate=True)
    entries = []
    for U in enumerate_nondegenerate(n, k + 1, spec):
        a = analyze_subspace(U, k)
        entries.append(CensusEntry(U, a.classification.kind, a.members, a.classes.s))
    cliques = oracle.all_maximal_cliques(G, cap=CENSUS_CLIQUE_CAP)
    return Census(n, k, q, G, entries, cliques)


def _c6(chk):
    for n, k, q in CENSUS_PARAMS:
        c = census(n, k, q)
        G = c.graph
        tops = {}
        for e in c.entries:
            rep = oracle.check_maximal_clique(G, e.members)
            chk.expect(rep.is_clique, f"({n},{k},{q}) {e.U!r}: members not a clique")
            maximal = bool(e.members) and rep.is_maximal
            chk.expect((e.kind is TopKind.MAXIMAL_TOP) == maximal,
                       f"({n},{k},{q}): {e.kind.value} but maximal={maximal}")
            tops[frozenset(G.index[m] for m in e.members)] = e.U
        for cl in c.cliques:
            if len(cl) < 2 or oracle.clique_span(G, cl).dim != k + 1:
                continue
            chk.expect(frozenset(cl) in tops, f"({n},{k},{q}): top-type clique {cl} is no <U]^c")


def _c7(chk, seed):
    rng = random.Random(seed)
    for i in range(200):
        q = (2, 3, 4)[i % 3]
        d = rng.choice((3, 4))
        n = rng.randint(d, 8)
        U = random_subspace(rng, field_of_order(q), n, d)
        got = set(top_nondegenerate(U, d - 1))
        want = set(oracle.brute_top_members(U, d - 1))
        chk.expect(got == want, f"sample {i} (q={q}, n={n}, k+1={d}) disagrees")
    fixtures = [example1(), example2(), example3(), example4(3), example5(2, 3)]
    for fx in fixtures:
        U = row_space(fx.M)
        a = analyze(fx.M, fx.k)
        chk.expect(set(a.members) == set(oracle.brute_top_members(U, fx.k)), f"{fx.name} disagrees")


def _c8(chk, seed):
    rng = random.Random(seed)
    done = 0
    tries = 0
    while done < 200 and tries < 5000:
        tries += 1
        q = rng.choice((2, 3, 4, 5))
        d = rng.randint(2, 4)
        F = field_of_order(q)
        M = random_generator_with_gap(rng, F, d)
        if M is None:
            continue
        a = analyze(M, d - 1)
        chk.expect(a.dim_w + a.W_perp.dim == d, "dim W + dim W_perp != k+1")
        if not a.wprime_reps:
            continue
        done += 1
        chk.expect(a.common.dim == a.W_perp.dim, f"dim common {a.common.dim} != dim W_perp {a.W_perp.dim}")
        chk.expect(a.common == common_from_w_perp(a), "common differs from the W_perp image")
    chk.expect(done == 200, f"only {done} instances with W' nonempty")
    # also on degenerate input, where W is zero
    F = make_field(3)
    a = analyze(MatrixGF(F, [[1, 0, 0], [0, 1, 0]]), 1)
    chk.expect(a.dim_w + a.W_perp.dim == 2, "degenerate: dim W + dim W_perp != k+1")


def _c9(chk, seed):
    rng = random.Random(seed)
    # |<U]^c_k| = [k+1]_q - s over the census, counted from the graph side
    for n, k, q in CENSUS_PARAMS:
        c = census(n, k, q)
        tally = Counter()
        for V in c.graph.vertices:
            for U in supersets(V, k + 1):
                tally[U] += 1
        for e in c.entries:
            chk.expect(tally[e.U] == q_integer(k + 1, q) - e.s, f"({n},{k},{q}) count mismatch")
    for q in (2, 3):
        F = make_field(q)
        for n in range(1, 6):
            for k in range(n + 1):
                chk.expect(oracle.brute_subspace_count(n, k, F) == gaussian_binomial(n, k, q),
                           f"[{n} {k}]_{q}")
    for q in (2, 3):
        F = make_field(q)
        for n in (4, 5, 6):
            for _ in range(2):
                M = random_repeated_columns(rng, F, 3, n)
                chk.expect(autos.remark_counts(M) == oracle.brute_remark_counts(M),
                           f"class-size counts n={n} q={q}")
    sampled = 0
    for q, d in ((2, 4), (3, 3), (4, 3), (2, 5)):
        F = field_of_order(q)
        for n in range(d + 1, 12):
            if not corollary_check(n, d - 1, q):
                continue
            for _ in range(3):
                U = random_subspace(rng, F, n, d, nondegenerate=True)
                if U is None:
                    continue
                sampled += 1
                kind = analyze_subspace(U, d - 1).classification.kind
                chk.expect(kind is TopKind.MAXIMAL_TOP, f"corollary fails at n={n} k={d - 1} q={q}")
    chk.expect(sampled >= 30, f"only {sampled} corollary samples")


def _c10(chk, seed):
    rng = random.Random(seed)
    plan = [(n, q) for n in (3, 4, 5) for q in (2, 3) for _ in range(3)] + [(6, 2), (6, 2), (6, 3)]
    for n, q in plan:
        F = make_field(q)
        d = rng.randint(1, n - 1)
        U = random_subspace(rng, F, n, d)
        brute = {(f.delta, f.scales) for f in oracle.brute_stabilizer(U)}
        fast = {(f.delta, f.scales) for f in autos.stabilizer(U)}
        chk.expect(brute == fast, f"stabilizer mismatch at n={n} q={q}")
        orbit = oracle.brute_orbit(U)
        chk.expect(len(orbit) * len(fast) == autos.group_order(n, F), f"orbit-stabilizer n={n} q={q}")
    for q in (2, 3):
        F = make_field(q)
        codes = list(enumerate_nondegenerate(4, 2, F))
        orbits = oracle.brute_orbits(codes)
        where = {U: i for i, orb in enumerate(orbits) for U in orb}
        labels = {U: autos.orbit_canonical_form(U.matrix()) for U in codes}
        for i, U in enumerate(codes):
            for V in codes[i:]:
                chk.expect((labels[U] == labels[V]) == (where[U] == where[V]),
                           f"q={q}: label/orbit disagree")
        by_label = Counter(labels.values())
        for U in codes:
            chk.expect(by_label[labels[U]] * autos.stabilizer_order(U) == autos.group_order(4, F),
                       f"q={q}: label census orbit-stabilizer")
    F = make_field(3)
    chk.expect(oracle.distinct_linear_maps(F, 4) == math.factorial(4) * 2 ** 4 == 384,
               "|Aut_L| at n=4, q=3")


# -- random instances -----------------------------------------------------------------------

def random_subspace(rng: random.Random, F: FieldSpec, n: int, d: int, nondegenerate: bool = False,
                    tries: int = 200) -> Subspace | None:
    for _ in range(tries):
        M = np.array([[rng.randrange(F.q) for _ in range(n)] for _ in range(d)], dtype=np.int64)
        U = Subspace.span(F, M, n)
        if U.dim == d and (not nondegenerate or is_nondegenerate(U)):
            return U
    return None


def random_generator_with_gap(rng: random.Random, F: FieldSpec, d: int) -> MatrixGF | None:
    """Full-rank d-row generator whose columns miss some projective points."""
    points = list(projective_points(F, d))
    if len(points) < d + 1:
        return None
    t = rng.randint(d, len(points) - 1)
    chosen = rng.sample(points, t)
    cols = []
    for p in chosen:
        for _ in range(rng.choice((1, 1, 1, 2))):
            c = rng.randrange(1, F.q)
            cols.append(F.mul(c, np.array(p, dtype=np.int64)))
    rng.shuffle(cols)
    M = MatrixGF(F, np.array(cols, dtype=np.int64).T)
    return M if rank(M) == d else None


def random_repeated_columns(rng: random.Random, F: FieldSpec, rows: int, n: int) -> MatrixGF:
    """Generator with some proportional columns, so class sizes exceed 1."""
    while True:
        base = [np.array([rng.randrange(F.q) for _ in range(rows)], dtype=np.int64) for _ in range(n)]
        for j in range(1, n):
            if rng.random() < 0.4:
                base[j] = F.mul(rng.randrange(1, F.q), base[rng.randrange(j)])
        M = MatrixGF(F, np.array(base).T)
        if all(np.any(M.entries[:, j]) for j in range(n)) and rank(M) == rows:
            return M


# -- suites --------------------------------------------------------------------------------

CRITERIA = {
    1: ("Example 1 reproduction", 1.0, _c1, False),
    2: ("Example 2 reproduction", 5.0, _c2, False),
    3: ("Example 3 reproduction", 1.0, _c3, False),
    4: ("Example 4 stabilizer and orbit", 30.0, _c4, False),
    5: ("Example 5 stabilizer and quotient", 10.0, _c5, False),
    6: ("maximal-top census", 60.0, _c6, False),
    7: ("top members vs brute force", 60.0, _c7, True),
    8: ("common intersection vs W_perp", 30.0, _c8, True),
    9: ("counting suite", 10.0, _c9, True),
    10: ("group-theory suite", 60.0, _c10, True),
}

SUITES = {
    "paper-examples": (1, 2, 3, 4, 5),
    "properties": (6, 7, 8, 9, 10),
    "all": tuple(range(1, 11)),
}


def run_criterion(number: int, seed: int = 42) -> CheckResult:
    name, limit, body, seeded = CRITERIA[number]
    args = (seed,) if seeded else ()
    return _run(number, name, limit, body, *args)


def run_suite(suite: str, seed: int = 42) -> list[CheckResult]:
    return [run_criterion(i, seed) for i in SUITES[suite]]
