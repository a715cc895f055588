import pytest

from partpoly import FamilySpec, GraphError, ResourceCapError, UniPoly, q_brute, q_brute_xy, q_closed, q_closed_xy
from partpoly import q_kn_xy_partition_sum, stirling2
from partpoly.closed_forms import integer_partitions, q_k1t, q_k2t
from partpoly.partition import bell

U = UniPoly.parse


def test_examples():
    assert q_closed(FamilySpec("cycle", (4,))) == U("x^4+4x^3+6x^2+x")
    assert q_closed(FamilySpec("complete_bipartite", (2, 2))) == U("x^4+4x^3+6x^2+x")
    assert q_closed(FamilySpec("complete_minus_matching", (4, 2))) == U("x^4+4x^3+6x^2+x")
    assert q_closed(FamilySpec("complete", (4,))) == U("x+7x^2+6x^3+x^4")
    assert str(q_closed_xy(FamilySpec("cycle", (3,)))) == "x^3+3x^2y+xy^3"
    assert str(q_closed_xy(FamilySpec("tree", (2,)))) == "x^2+xy"
    assert str(q_closed_xy(FamilySpec("complete", (3,)))) == "x^3+3x^2y+xy^3"
    assert str(q_kn_xy_partition_sum(0)) == "1"
    assert str(q_kn_xy_partition_sum(2)) == "x^2+xy"


def test_invalid_specs():
    for fam, params in [("cycle", (2,)), ("complete_minus_matching", (4, 3)), ("bogus", (1,)),
                        ("complete_bipartite", (2,)), ("tree", (0,)), ("empty", (-1,))]:
        with pytest.raises(GraphError):
            FamilySpec(fam, params)
    with pytest.raises(GraphError, match="no bivariate closed form"):
        q_closed_xy(FamilySpec("complete_bipartite", (2, 2)))
    with pytest.raises(ResourceCapError):
        q_kn_xy_partition_sum(41)


def test_bivariate_forms_match_brute():
    for n in range(1, 9):
        for fam in ("tree", "cycle", "complete"):
            if fam == "cycle" and n < 3:
                continue
            spec = FamilySpec(fam, (n,))
            for seed in range(3 if fam == "tree" else 1):
                assert q_closed_xy(spec) == q_brute_xy(spec.graph(seed))
            assert q_closed_xy(spec).set_y_to_one() == q_closed(spec)


def test_stirling_and_bell():
    for n in range(0, 12):
        q = q_closed(FamilySpec("complete", (n,)))
        assert list(q) == [stirling2(n, k) for k in range(n + 1)]
        assert sum(q) == bell(n)


def test_star_and_k2t_corollaries():
    for t in range(0, 7):
        assert q_k1t(t) == q_closed(FamilySpec("complete_bipartite", (1, t)))
        assert q_k2t(t) == q_closed(FamilySpec("complete_bipartite", (2, t)))


def test_integer_partitions():
    assert list(integer_partitions(4)) == [(1, 1, 1, 1), (1, 1, 2), (1, 3), (2, 2), (4,)]
    assert [sum(1 for _ in integer_partitions(n)) for n in range(10)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]


def test_partition_sum_beyond_brute_range():
    for n in range(0, 16):
        assert q_kn_xy_partition_sum(n) == q_closed_xy(FamilySpec("complete", (n,)))
        assert q_kn_xy_partition_sum(n).set_y_to_one() == q_closed(FamilySpec("complete", (n,)))
