from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import small_graphs
from partpoly import (
    BiPoly,
    Graph,
    GraphError,
    UniPoly,
    components,
    contract,
    delete,
    make_family,
    q_auto,
    q_auto_xy,
    q_brute,
    q_brute_xy,
    q_bridge_split,
    q_minus_cut,
    q_minus_matching,
    q_neighborhood_ie,
    q_vertex_decomposition,
    q_vertex_decomposition_xy,
    reduce_pendant,
)
from partpoly.recurrences import STRATEGIES

U = UniPoly.parse
X, Y = BiPoly.x(), BiPoly.y()
TRI_PENDANT = Graph("abcd", ["ab", "bc", "ca", "cd"])


def test_reduce_pendant():
    for seed in range(5):
        t = make_family("random_tree", 7, seed=seed)
        factor, core = reduce_pendant(t)
        assert factor == (X + Y) ** 6 and core.n == 1
    c4 = make_family("cycle", 4)
    assert reduce_pendant(c4) == (BiPoly.one(), c4)
    factor, core = reduce_pendant(TRI_PENDANT)
    assert factor == X + Y and core.n == 3 and core.m == 3


def test_bridge_split():
    p2 = make_family("path", 2)
    assert q_bridge_split(p2, p2.edges[0]) == U("x^2+x")
    p3 = make_family("path", 3)
    for e in p3.edges:
        assert q_bridge_split(p3, e) == UniPoly.x() * UniPoly((1, 1)) ** 2
    assert q_bridge_split(TRI_PENDANT, ("c", "d")) == UniPoly((1, 1)) * U("x^3+3x^2+x")
    with pytest.raises(GraphError):
        q_bridge_split(TRI_PENDANT, ("a", "b"))


def test_decomposition_examples():
    assert q_vertex_decomposition(make_family("cycle", 4)) == U("x^4+4x^3+6x^2+x")
    assert str(q_vertex_decomposition_xy(make_family("cycle", 3))) == "x^3+3x^2y+xy^3"
    assert q_vertex_decomposition(make_family("complete", 1)) == UniPoly.x()


def test_ie_examples():
    k3 = make_family("complete", 3)
    for v in k3.vertices:
        assert q_neighborhood_ie(k3, v) == U("x^3+3x^2+x")
    g = Graph(range(4), [(0, 1), (1, 2)])
    assert q_neighborhood_ie(g, 3) == UniPoly.x() * q_brute(delete(g, [3]))
    p3 = make_family("path", 3)
    assert q_neighborhood_ie(p3, 0) == UniPoly((1, 1)) * q_brute(make_family("path", 2))


def test_minus_cut_examples():
    c4 = make_family("cycle", 4)
    assert q_minus_cut(c4, [(0, 1), (2, 3)]) == (UniPoly((0, 1, 1))) ** 2
    e = TRI_PENDANT.edge("c", "d")
    assert q_minus_cut(TRI_PENDANT, [e]) == q_brute(TRI_PENDANT) - q_brute(contract(TRI_PENDANT, [e]))
    star = make_family("complete_bipartite", 1, 2)
    assert q_minus_cut(star, star.edges) == U("x^3")
    with pytest.raises(GraphError):
        q_minus_cut(c4, [(0, 1)])


def test_minus_matching_examples():
    k4 = make_family("complete", 4)
    assert q_minus_matching(k4, [(0, 1), (2, 3)]) == U("x^4+4x^3+6x^2+x")
    assert q_minus_matching(k4, []) == q_brute(k4)
    assert q_minus_matching(make_family("complete", 2), [(0, 1)]) == U("x^2")
    with pytest.raises(GraphError, match="0-1"):
        q_minus_matching(make_family("cycle", 4), [(0, 1)])


def test_auto_examples():
    for seed in range(5):
        t = make_family("random_tree", 8, seed=seed)
        assert q_auto(t) == UniPoly((1, 1)) ** 7 * UniPoly.x()
    for s in STRATEGIES:
        assert q_auto(make_family("cycle", 5), s) == U("x^5+5x^4+10x^3+10x^2+x")
    g1, g2 = make_family("cycle", 4), make_family("complete", 3)
    union = Graph(list(range(4)) + ["a", "b", "c"], list(g1.edges) + [("a", "b"), ("b", "c"), ("a", "c")])
    assert q_auto(union) == q_auto(g1) * q_auto(g2)
    assert q_auto(Graph()) == UniPoly.one() and q_auto(make_family("empty", 1)) == UniPoly.x()
    with pytest.raises(ValueError):
        q_auto_xy(g1, "ie")
    with pytest.raises(ValueError):
        q_auto(g1, "nope")


def test_all_strategies_agree_up_to_six(graphs_upto6):
    for g in graphs_upto6:
        ref = q_brute(g)
        for s in STRATEGIES:
            assert q_auto(g, s) == ref
        assert q_neighborhood_ie(g) == q_vertex_decomposition(g) == ref
        b = q_brute_xy(g)
        for s in ("brute", "decomp", "auto"):
            assert q_auto_xy(g, s) == b
        # degree laws
        assert ref.degree == g.n and ref[g.n] == 1
        if g.n:
            assert ref.low_degree == len(components(g))
            assert ref[g.n - 1] == g.m or g.n == 1
            assert all(c >= 0 for c in ref)


def test_minus_cut_on_all_cuts_up_to_five():
    checked = 0
    for g in small_graphs(5):
        if g.m > 7:
            continue
        for r in range(1, g.m + 1):
            for s in combinations(g.edges, r):
                comp = components(delete(g, edges=s))
                if all(comp.block_of(u) != comp.block_of(w) for u, w in s):
                    checked += 1
                    assert q_minus_cut(g, s) == q_brute(delete(g, edges=s))
                else:
                    with pytest.raises(GraphError):
                        q_minus_cut(g, s)
    assert checked > 500


def test_minus_cut_rejects_edge_set_that_only_adds_a_component():
    # removing ab and cd isolates d, but ab stays inside the component {a, b, c}
    s = [("a", "b"), ("c", "d")]
    assert len(components(delete(TRI_PENDANT, edges=s))) == 2
    with pytest.raises(GraphError):
        q_minus_cut(TRI_PENDANT, s)


@pytest.mark.parametrize("n", range(2, 8))
def test_minus_matching_on_complete_graphs(n):
    k = make_family("complete", n)
    pairs = [(2 * i, 2 * i + 1) for i in range(n // 2)]
    for r in range(len(pairs) + 1):
        for m in combinations(pairs, r):
            assert q_minus_matching(k, m) == q_brute(delete(k, edges=m))


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 9), st.integers(0, 10**6))
def test_random_graphs_auto_vs_brute(n, seed):
    import random
    rng = random.Random(seed)
    g = Graph(range(n), [e for e in combinations(range(n), 2) if rng.random() < 0.4])
    assert q_auto(g) == q_brute(g)
    assert q_auto_xy(g) == q_brute_xy(g)
