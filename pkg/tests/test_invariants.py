import pytest
from hypothesis import given, settings, strategies as st

from oracles import bond_oracle, four_cycles, min_kcut_oracle
from partpoly import (
    GraphError,
    MalformedPolynomialError,
    UniPoly,
    dowling_wilson_check,
    invariants_from_q,
    make_family,
    min_kcut_from_qxy,
    q_brute,
    q_brute_xy,
)
from partpoly.families import random_tree

U = UniPoly.parse


def test_c4():
    r = invariants_from_q(U("x^4+4x^3+6x^2+x"), 4)
    assert (r.components, r.edges, r.triangles, r.girth, r.girth_cycle_count, r.bonds) == (1, 4, 0, 4, 1, 6)
    assert r.four_cycles == 1


def test_k3():
    r = invariants_from_q(U("x^3+3x^2+x"))
    assert r.edges == 3 and r.triangles == 1 and r.girth == 3 and r.girth_cycle_count == 1


def test_trees_are_acyclic():
    for seed in range(10):
        t = random_tree(8, seed=seed)
        r = invariants_from_q(q_brute(t))
        assert r.girth == "acyclic" and r.triangles == 0 and r.girth_cycle_count == 0


def test_to_dict():
    d = invariants_from_q(U("x^3+3x^2+x")).to_dict()
    assert set(d) == {"components", "edges", "triangles", "girth", "girth_cycle_count", "bonds", "four_cycles"}


@pytest.mark.parametrize("bad", ["x^3+x^2+x", "2x^3+x", "x^3-x^2+x", "x^4+x^3+x^2+x"])
def test_malformed(bad):
    with pytest.raises(MalformedPolynomialError):
        invariants_from_q(U(bad))


def test_dowling_wilson():
    assert dowling_wilson_check(U("x^3+3x^2+x"))
    assert dowling_wilson_check(U("x^4+4x^3+6x^2+x"))
    assert not dowling_wilson_check(UniPoly((0, 1, 0, 0, 5)))
    with pytest.raises(GraphError):
        dowling_wilson_check(U("x^2"))


def test_min_kcut_examples():
    c5 = make_family("cycle", 5)
    assert min_kcut_from_qxy(q_brute_xy(c5), 2, c5.m) == 2
    k4 = make_family("complete", 4)
    assert min_kcut_from_qxy(q_brute_xy(k4), 1, k4.m) == 0
    assert min_kcut_from_qxy(q_brute_xy(k4), 2, k4.m) == 3
    assert min_kcut_from_qxy(q_brute_xy(k4), 5, k4.m) is None
    assert min_kcut_from_qxy(q_brute_xy(make_family("empty", 3)), 1, 0) is None


def test_four_cycles_and_bonds_on_bipartite_graphs():
    for s, t in [(2, 2), (2, 3), (3, 3), (2, 4), (3, 4)]:
        g = make_family("complete_bipartite", s, t)
        r = invariants_from_q(q_brute(g))
        assert r.triangles == 0 and r.four_cycles == four_cycles(g)
        assert r.bonds == bond_oracle(g)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 7), st.integers(0, 10**6))
def test_min_kcut_random(n, seed):
    import random
    from itertools import combinations
    from partpoly import Graph
    rng = random.Random(seed)
    g = Graph(range(n), [e for e in combinations(range(n), 2) if rng.random() < 0.4])
    if g.m > 12:
        return
    oracle = min_kcut_oracle(g)
    b = q_brute_xy(g)
    for k in range(1, n + 1):
        assert min_kcut_from_qxy(b, k, g.m) == oracle.get(k)
