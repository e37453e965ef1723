"""Quiver connectivity, regular pairs and parsing.

Run:
    pytest python/tests/test_quiver.py -q
"""

import random

import pytest

from gmpath.errors import ParseError
from gmpath.quiver import (
    Quiver,
    cycle_facts,
    load_quiver,
    parse_edge_list,
    parse_quiver,
    reachable,
    regular_pairs,
    strong_components,
    unilateral_components,
    weak_components,
)
from gmpath.path_algebra import equivalence_report, random_quiver, regular_path_count


def one_arrow() -> Quiver:
    return Quiver(["1", "2"], [("x12", "1", "2")])


def test_one_arrow_has_two_strong_classes_and_a_regular_pair():
    q = one_arrow()
    assert strong_components(q) == (("1",), ("2",))
    assert weak_components(q) == (("1", "2"),)
    assert unilateral_components(q) == (("1", "2"),)
    assert regular_pairs(q) == (("1", "2"),)
    assert reachable(q, "1", "2") and not reachable(q, "2", "1")
    assert reachable(q, "2", "2")


def test_two_cycle_is_one_class_everywhere():
    q = Quiver(["1", "2"], [("a", "1", "2"), ("b", "2", "1")])
    assert strong_components(q) == weak_components(q) == unilateral_components(q) == (("1", "2"),)
    assert regular_pairs(q) == ()
    facts = cycle_facts(q)
    assert facts.has_cycle
    assert facts.related("2", "1")


def test_vee_has_two_unilateral_components():
    q = Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "3", "2")])
    assert unilateral_components(q) == (("1", "2"), ("2", "3"))
    assert len(weak_components(q)) == 1


def test_loop_counts_as_cycle_but_not_isolation():
    q = Quiver(["1", "2"], [("x", "1", "1")])
    assert not q.is_acyclic()
    assert q.has_loop("1")
    assert q.isolated_vertices() == ("2",)


def test_unknown_vertex_and_duplicates_rejected():
    with pytest.raises(ValueError):
        Quiver(["1"], [("a", "1", "2")])
    with pytest.raises(ValueError):
        Quiver(["1", "1"])
    with pytest.raises(KeyError):
        reachable(one_arrow(), "1", "9")


def test_parse_quiver_reports_line_numbers():
    text = "vertex 1\nvertex 2\narrow a 1 3\n"
    with pytest.raises(ParseError) as info:
        parse_quiver(text, path="bad.quiver")
    assert info.value.line == 3
    assert "bad.quiver:3:" in str(info.value)


def test_load_quiver_from_corpus(corpus):
    q = load_quiver(corpus / "chain.quiver")
    assert q.vertices == ("1", "2", "3")
    assert [a.name for a in q.arrows] == ["a", "b"]
    assert parse_quiver(q.to_text()) == q


def test_edge_list_keeps_parallel_arrows_and_reports_bad_lines():
    ingest = parse_edge_list("a b\na b\nb\nc a label\nx y z w\n")
    q = ingest.quiver
    assert len(q.arrows) == 3
    assert len(q.arrows_between("a", "b")) == 2
    assert q.has_arrow("label")
    assert [line for line, _ in ingest.problems] == [3, 5]


def test_empty_edge_list():
    ingest = parse_edge_list("# nothing\n")
    assert ingest.quiver.vertices == ()
    assert ingest.problems == ()


@pytest.mark.parametrize("seed", range(25))
def test_partitions_refine_each_other(seed):
    q = random_quiver(random.Random(seed))
    strong = [set(c) for c in strong_components(q)]
    uni = [set(c) for c in unilateral_components(q)]
    weak = [set(c) for c in weak_components(q)]
    assert all(any(s <= u for u in uni) for s in strong)
    assert all(any(u <= w for w in weak) for u in uni)
    assert sorted(v for s in strong for v in s) == sorted(q.vertices)
    for s, t in regular_pairs(q):
        assert reachable(q, s, t) and not reachable(q, t, s)


def test_renamed_duplicate_labels_never_collide():
    ingest = parse_edge_list("1 2 b\n1 2 b_3\n1 2 b\n2 3\n")
    assert [a.name for a in ingest.quiver.arrows] == ["b", "b_3", "b_4", "a4"]
    assert ingest.problems == ()


def test_default_labels_skip_user_labels():
    ingest = parse_edge_list("x y a2\nx y\n")
    assert [a.name for a in ingest.quiver.arrows] == ["a2", "a2_2"]


def layered(layers: int, width: int) -> Quiver:
    verts = [f"v{i}_{j}" for i in range(layers) for j in range(width)]
    arrows = [
        (f"e{i}_{j}_{k}", f"v{i}_{j}", f"v{i + 1}_{k}")
        for i in range(layers - 1)
        for j in range(width)
        for k in range(width)
    ]
    return Quiver(verts, arrows)


def test_small_layered_chains_are_enumerated():
    q = layered(3, 2)
    assert q.connectivity().chain_count == 8
    chains = unilateral_components(q)
    assert len(chains) == 8
    assert all(len(c) == 3 for c in chains)
    assert q.maximal_chains(limit=8) == chains
    assert q.maximal_chains(limit=7) is None


def test_deep_layered_quiver_is_counted_not_enumerated():
    q = layered(20, 10)
    rep = q.connectivity()
    assert rep.chain_count == 10**20
    assert rep.condensation_edges == 19 * 100
    assert q.maximal_chains(limit=200) is None
    eq = equivalence_report(q)
    assert eq.consistent
    assert not eq.semiprime
    # paths of length d start at 10 * (20 - d) vertices and fan out 10**d ways
    assert regular_path_count(q) == sum(10 * (20 - d) * 10**d for d in range(1, 20))
