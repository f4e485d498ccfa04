import pytest

from codetops import Subspace, field_of_order, make_field
from codetops.errors import TooLarge, UnknownVertex
from codetops.fixtures import example1, example3
from codetops.grassmann import GrassmannGraph, build_graph, star_members, top_members
from codetops.matspace import enumerate_subspaces, row_space
from codetops.oracle import (
    all_maximal_cliques,
    brute_stabilizer,
    brute_subspace_count,
    brute_top_members,
    check_maximal_clique,
    clique_type,
    distinct_linear_maps,
)
from codetops.tops import analyze, top_nondegenerate
from codetops.verify import random_subspace


def test_brute_top_example1():
    fx = example1()
    got = brute_top_members(row_space(fx.M), 2)
    assert got == [row_space(fx.data["member"])]


def test_brute_top_degenerate():
    F = make_field(3)
    U = Subspace.span(F, [[1, 0, 0, 0], [0, 1, 0, 0]], 4)
    assert brute_top_members(U, 1) == []


def test_brute_top_random_agreement(rng):
    F = make_field(3)
    for _ in range(100):
        U = random_subspace(rng, F, 6, 3)
        assert set(brute_top_members(U, 2)) == set(top_nondegenerate(U, 2))


def test_clique_reports():
    G = build_graph(4, 2, make_field(2))
    rep = check_maximal_clique(G, [0])
    assert rep.is_clique and not rep.is_maximal and G.adjacent(0, rep.witnesses[0])
    rep = check_maximal_clique(G, [])
    assert rep.is_clique and not rep.is_maximal
    far = next(j for j in range(1, len(G)) if not G.adjacent(0, j))
    rep = check_maximal_clique(G, [0, far])
    assert not rep.is_clique and set(rep.witnesses) == {0, far}
    with pytest.raises(UnknownVertex):
        check_maximal_clique(G, [len(G)])


def test_cliques_are_stars_or_tops():
    F = make_field(2)
    G = build_graph(4, 2, F)
    cliques = all_maximal_cliques(G)
    V = Subspace.full(F, 4)
    tops = {frozenset(G.index[K] for K in top_members(U, 2)) for U in enumerate_subspaces(V, 3)}
    stars = {frozenset(G.index[K] for K in star_members(S, 2)) for S in enumerate_subspaces(V, 1)}
    assert {frozenset(c) for c in cliques} == tops | stars
    assert len(cliques) == 30
    for c in cliques:
        assert check_maximal_clique(G, c).is_maximal
        assert clique_type(G, c) in ({"top"}, {"star"})


def test_complete_graph_clique():
    n = 6
    full = (1 << n) - 1
    G = GrassmannGraph(make_field(2), 0, 0, list(range(n)), [full & ~(1 << i) for i in range(n)], False)
    assert all_maximal_cliques(G) == [tuple(range(n))]


def test_clique_cap():
    G = build_graph(4, 2, make_field(2))
    with pytest.raises(TooLarge):
        all_maximal_cliques(G, cap=10)


def test_example3_members_form_clique_locally():
    # restrict to the top of U: members are a clique, nothing in the top extends it
    fx = example3()
    a = analyze(fx.M)
    assert set(brute_top_members(a.U, 5)) == set(a.members)


def test_brute_stabilizer_full_space():
    F = make_field(3)
    assert len(brute_stabilizer(Subspace.full(F, 3))) == 6 * 8
    with pytest.raises(TooLarge):
        brute_stabilizer(Subspace.full(make_field(5), 6))


def test_counts():
    assert brute_subspace_count(4, 2, make_field(2)) == 35
    assert distinct_linear_maps(make_field(3), 4) == 384
    assert distinct_linear_maps(field_of_order(4), 2) == 18
