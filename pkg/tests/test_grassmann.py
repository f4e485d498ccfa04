import pytest

from codetops import Subspace, field_of_order, make_field
from codetops.codes import enumerate_nondegenerate
from codetops.errors import BadArgs, DimMismatch, NotIncident, TooLarge
from codetops.grassmann import (
    adjacent,
    build_graph,
    gaussian_binomial,
    interval,
    line,
    q_integer,
    star_members,
    supersets,
    top_members,
)
from codetops.matspace import enumerate_subspaces, intersect, subspace_sum
from codetops.oracle import brute_subspace_count


def test_gaussian_values():
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(6, 3, 2) == 1395
    assert gaussian_binomial(5, 0, 3) == 1 == gaussian_binomial(5, 5, 3)
    assert q_integer(3, 3) == 13 and q_integer(0, 2) == 0
    with pytest.raises(BadArgs):
        gaussian_binomial(3, 4, 2)


@pytest.mark.parametrize("q", [2, 3])
def test_gaussian_against_vector_sets(q):
    F = make_field(q)
    for n in range(1, 5):
        for k in range(n + 1):
            assert brute_subspace_count(n, k, F) == gaussian_binomial(n, k, q)


def test_symmetry_and_pascal():
    for q in (2, 3, 4):
        for n in range(1, 7):
            for k in range(1, n):
                g = gaussian_binomial
                assert g(n, k, q) == g(n, n - k, q)
                assert g(n, k, q) == g(n - 1, k - 1, q) + q**k * g(n - 1, k, q)


def _graph_brute(G):
    for i, A in enumerate(G.vertices):
        for j, B in enumerate(G.vertices):
            if i != j:
                assert G.adjacent(i, j) == (intersect(A, B).dim == G.k - 1)


@pytest.mark.parametrize("n,k,q", [(4, 2, 2), (3, 1, 3), (4, 1, 2), (4, 3, 2)])
def test_graph_adjacency_matches_intersections(n, k, q):
    G = build_graph(n, k, field_of_order(q))
    assert len(G) == gaussian_binomial(n, k, q)
    _graph_brute(G)


def test_k1_complete():
    G = build_graph(3, 1, make_field(2))
    assert len(G) == 7
    assert all(G.degree(i) == 6 for i in range(7))
    assert len(list(G.edges())) == 21


def test_restricted_graph():
    F = make_field(2)
    G = build_graph(5, 2, F, restrict_nondegenerate=True)
    assert len(G) == len(list(enumerate_nondegenerate(5, 2, F)))
    _graph_brute(G)
    # degree in the full graph of G(4,2)_2: q(q+1)[2]_q = 2*3*3
    H = build_graph(4, 2, F)
    assert {H.degree(i) for i in range(len(H))} == {18}


def test_cap(monkeypatch):
    with pytest.raises(TooLarge):
        build_graph(6, 3, make_field(2), cap=100)
    monkeypatch.setenv("CODETOPS_MAX_VERTICES", "10")
    with pytest.raises(TooLarge):
        build_graph(4, 2, make_field(2))


def test_line_top_star():
    F = make_field(3)
    n = 4
    V = Subspace.full(F, n)
    U = next(iter(enumerate_subspaces(V, 3)))
    S = next(iter(enumerate_subspaces(U, 1)))
    L = line(S, U)
    assert len(L) == 4 == F.q + 1
    assert all(S <= K <= U and K.dim == 2 for K in L)
    top = top_members(U, 2)
    assert len(top) == q_integer(3, 3)
    assert all(adjacent(a, b) for a in top for b in top if a != b)
    star = star_members(S, 2)
    assert len(star) == q_integer(n - 1, 3)
    assert all(S <= K for K in star)
    assert all(adjacent(a, b) for a in star for b in star if a != b)
    assert len(interval(S, U, 3)) == 1
    assert len(supersets(S, 3)) == gaussian_binomial(3, 2, 3)


def test_line_errors():
    F = make_field(2)
    V = Subspace.full(F, 4)
    U = next(iter(enumerate_subspaces(V, 3)))
    S = next(iter(enumerate_subspaces(V, 2)))
    with pytest.raises(NotIncident):
        line(Subspace.zero(F, 4), U)
    outside = [T for T in enumerate_subspaces(V, 1) if not T <= U][0]
    with pytest.raises(NotIncident):
        interval(outside, U, 2)
    with pytest.raises(DimMismatch):
        top_members(S, 2)
    with pytest.raises(DimMismatch):
        adjacent(S, U)
    assert subspace_sum(S, S) == S
