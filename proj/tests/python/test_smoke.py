import pytest

import semitrans


EXAMPLE_1 = """n=8
(1)(2)(3](4](5](6](7](8]
(1,2)(3](4](5](6](7](8]
(1](2](3)(4)(5)(6)(7)(8)
(1](2](3,5,7](4,6,8]
(1](2](3,7](4,8](5](6]
(1](2](3,4)(5,6)(7,8)
(1](2](3,6,7](4,5,8]
(1](2](3,8](4,7](5](6]
(1,3](2,4](5](6](7](8]
(1,5](2,6](3](4](7](8]
(1,7](2,8](3](4](5](6]
(1,4](2,3](5](6](7](8]
(1,6](2,5](3](4](7](8]
(1,8](2,7](3](4](5](6]
0
"""


def test_partial_perm():
    a = semitrans.PartialPerm("(1,2](3]", 3)
    b = semitrans.PartialPerm("(1](2,3]", 3)
    assert str(a * b) == "(1,3](2]"
    assert a.rank == 1
    assert a(1) == 2
    assert a(2) is None
    assert a.inverse() == semitrans.PartialPerm("(2,1](3]", 3)
    assert a.is_nilpotent()
    assert not a.is_idempotent()
    assert len({a, semitrans.PartialPerm("(1,2]", 3)}) == 1


def test_parse_error():
    with pytest.raises(ValueError, match="repeated"):
        semitrans.PartialPerm("(1,6](2,7](3](4](7](8]", 8)


def test_analyze_example():
    s = semitrans.Semigroup.from_text(EXAMPLE_1)
    assert len(s) == 15
    report = semitrans.analyze(s)
    assert report["is_semitransitive"]
    assert not report["is_transitive"]
    assert report["bound"] == 13
    assert report["block_sizes"] == [2, 2, 2, 2]
    assert all(a["status"] == "pass" for a in report["audits"].values())


def test_build_matches_example():
    s = semitrans.build(1, 8, 2)
    assert s == semitrans.Semigroup.from_text(EXAMPLE_1)
    t = semitrans.build(4, 10, 2, 2, group=["(3,5,4,6)"])
    assert len(t) == 19
    assert semitrans.blocks(t) == [[1, 2], [3, 4, 5, 6], [7, 8, 9, 10]]
    assert semitrans.build(5, 10, 2, 2) == t.inverse()


def test_examples():
    for k, size in [(1, 15), (2, 19), (3, 15)]:
        c = semitrans.build_example(k)
        assert len(c["semigroup"]) == size
        assert c["confined"]
    assert semitrans.build_example(1)["flagged"][0]["likely_intended"] == (
        "(1,6](2,5](3](4](7](8]"
    )


def test_search():
    r = semitrans.minimal_search(3, classify=True, prune="none")
    assert r["complete"]
    assert r["minimal_cardinality"] == semitrans.bound(3) == 6
    assert len(r["classes"]) == 5
    assert all(c["matches"] for c in r["classes"])
    with pytest.raises(ValueError):
        semitrans.minimal_search(5)


def test_similarity_and_sweep():
    a = semitrans.build(1, 6, 2)
    sigma = semitrans.PartialPerm("(1,4,2,6)(3,5)", 6)
    b = a.conjugate(sigma)
    found = semitrans.are_similar(a, b)
    assert found is not None and a.conjugate(found) == b
    assert semitrans.are_similar(a, semitrans.build(3, 6, 3)) is None
    assert semitrans.gpd(12) == 6
    r = semitrans.sweep(2, 10)
    assert r["ok"] and r["instances"] > 0 and not r["failures"]


def test_reference_chain():
    s = semitrans.reference_chain(6, 3)
    assert len(s) == 7
    assert semitrans.is_semitransitive(s)
    assert not semitrans.is_transitive(s)
    assert not semitrans.is_singular(s)
