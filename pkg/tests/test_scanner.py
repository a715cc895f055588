import random
from pathlib import Path

from partpoly import UniPoly, scan, to_graph6
from partpoly.formats import parse_graph6
from partpoly.scanner import compute_record, summarize

DATA = Path(__file__).parent / "data"
P5 = "x^5-7x^4+18x^3-20x^2+8x"


def lines(n):
    return (DATA / f"graphs{n}.g6").read_bytes().splitlines()


def test_corpus_sizes():
    assert [len(lines(n)) for n in (5, 6, 7)] == [34, 156, 1044]


def test_five_vertex_pair_verified_exactly():
    rep = scan(lines(5), mode="chrom-not-partition")
    assert rep["graphs"] == 34 and not rep["errors"]
    hits = [p for p in rep["pairs"] if p["p"] == P5]
    assert hits
    for pair in rep["pairs"]:
        a, b = (parse_graph6(g) for g in pair["g6"])
        ra, rb = compute_record((0, 0, "", a, "brute")), compute_record((0, 0, "", b, "brute"))
        assert ra.p == rb.p and ra.q != rb.q


def test_partition_not_chrom_pairs_verified():
    rep = scan(lines(6), mode="partition-not-chrom")
    for pair in rep["pairs"]:
        a, b = (parse_graph6(g) for g in pair["g6"])
        ra, rb = compute_record((1, 0, "", a, "decomp")), compute_record((1, 0, "", b, "decomp"))
        assert ra.q == rb.q and ra.p != rb.p


def test_permutation_invariance():
    corpus = lines(5)
    shuffled = corpus[:]
    random.Random(3).shuffle(shuffled)
    a = scan(corpus, mode="all-classes")
    b = scan(shuffled, mode="all-classes")

    def key(rep):
        return sorted((c["by"], c.get("q") or c.get("p"), len(c["graphs"])) for c in rep["classes"])

    assert key(a) == key(b)
    assert len(a["pairs"]) == len(b["pairs"])


def test_parallel_matches_serial():
    assert scan(lines(6), jobs=3) == scan(lines(6), jobs=1)


def test_bad_lines_reported_and_skipped():
    rep = scan([b"A_", b"not graph6 \x01", b"B?"], mode="all-classes")
    assert rep["graphs"] == 2 and len(rep["errors"]) == 1 and rep["errors"][0]["line"] == 2


def test_non_equivalent_corpus_gives_no_pairs():
    from partpoly import make_family
    corpus = [to_graph6(make_family("path", 4)), to_graph6(make_family("complete", 4))]
    rep = scan(corpus, mode="chrom-not-partition")
    assert rep["pairs"] == []
    assert "pairs: 0" in summarize(rep)


def test_records_are_consistent():
    rep = scan(lines(5))
    for r in rep["records"]:
        assert UniPoly.parse(r["q"]).degree == r["n"] == UniPoly.parse(r["p"]).degree
