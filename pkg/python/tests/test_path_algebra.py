"""Path algebras, their radicals and the closed-form descriptions.

Run:
    pytest python/tests/test_path_algebra.py -q
"""

import random

import pytest

from gmpath.errors import InfiniteDimensionError, NonUnitalError, OmegaRadicalWarning, RelationError
from gmpath.findim import FinDimAlgebra, jacobson_oracle, semiprime_bruteforce, truncated_polynomial
from gmpath.path_algebra import (
    PathAlgebra,
    RelationSet,
    draw_acyclic_quiver,
    equivalence_report,
    gamma_block_radical,
    is_prime,
    materialize,
    omega_radical_conjecture,
    radical_description,
    random_quiver,
    regular_path_count,
    regular_paths,
    vn_radical_description,
)
from gmpath.quiver import Quiver, load_quiver


def group_algebra_z2() -> FinDimAlgebra:
    products = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {0: 1}}
    return FinDimAlgebra(["1", "g"], products, unit={0: 1}, name="QZ2")


def test_chain_radical_is_all_positive_paths(corpus):
    q = load_quiver(corpus / "chain.quiver")
    quotient = materialize(q)
    assert quotient.dim == 6
    rad = jacobson_oracle(quotient)
    assert rad.dim == 3
    assert radical_description(q).span_in(quotient) == rad
    assert regular_path_count(q) == 3


def test_multiplication_concatenates_or_vanishes(corpus):
    pa = PathAlgebra(load_quiver(corpus / "chain.quiver"))
    ab = pa.arrow("a") * pa.arrow("b")
    assert ab == pa.parse_element("a.b")
    assert not pa.arrow("b") * pa.arrow("a")
    assert pa.vertex("1") * pa.arrow("a") == pa.arrow("a")
    assert pa.arrow("a") * pa.vertex("1") == pa.zero()


def test_literal_parses_back(corpus):
    pa = PathAlgebra(load_quiver(corpus / "chain.quiver"), conductor=3)
    x = pa.parse_element("2*a.b - e(1) + z3*b")
    assert pa.parse_element(pa.literal(x)) == x
    assert [p.length for p in x.support()] == [0, 1, 2]


@pytest.mark.parametrize(
    "name, count",
    [("chain", 3), ("onearrow", 1), ("star", 4), ("kronecker", 2), ("two_cycle", 0), ("loop", 0), ("cycle_tail", None)],
)
def test_regular_path_count_on_corpus(corpus, name, count):
    assert regular_path_count(load_quiver(corpus / f"{name}.quiver")) == count


def test_regular_paths_of_star_are_its_arrows(corpus):
    paths = regular_paths(load_quiver(corpus / "star.quiver"))
    assert [p.arrows for p in paths] == [("s1",), ("s2",), ("s3",), ("s4",)]


def test_regular_paths_refuses_a_cycle_in_the_middle(corpus):
    with pytest.raises(InfiniteDimensionError):
        regular_paths(load_quiver(corpus / "cycle_tail.quiver"))


@pytest.mark.parametrize("seed", range(15))
def test_acyclic_dimension_splits_into_vertices_and_regular_paths(seed):
    q, _ = draw_acyclic_quiver(random.Random(seed), max_paths=40)
    pa = PathAlgebra(q)
    assert len(pa.paths()) == len(q.vertices) + regular_path_count(q)
    positive = [p for p in pa.paths() if p.length > 0]
    assert regular_paths(q) == positive



def test_bounded_acyclic_draws_report_their_rejections():
    draws = [draw_acyclic_quiver(random.Random(seed), max_paths=1) for seed in range(20)]
    assert all(len(q.vertices) == 1 and not q.arrows for q, _ in draws)
    assert sum(rejected for _, rejected in draws) > 0
    q, rejected = draw_acyclic_quiver(random.Random(0))
    assert rejected == 0 and q.is_acyclic()

@pytest.mark.parametrize("seed", range(10))
def test_semiprime_formula_matches_oracle(seed):
    q, _ = draw_acyclic_quiver(random.Random(100 + seed), max_vertices=5, max_arrows=6, max_paths=30)
    quotient = materialize(q)
    assert semiprime_bruteforce(quotient) == radical_description(q).is_zero
    assert radical_description(q).span_in(quotient) == jacobson_oracle(quotient)


@pytest.mark.parametrize("seed", range(30))
def test_equivalent_forms_agree(seed):
    report = equivalence_report(random_quiver(random.Random(seed)))
    assert report.consistent, report.verdicts()


def test_cyclic_quiver_needs_a_bound(corpus):
    q = load_quiver(corpus / "two_cycle.quiver")
    with pytest.raises(InfiniteDimensionError):
        materialize(q)
    with pytest.raises(InfiniteDimensionError):
        PathAlgebra(q).paths()
    assert materialize(q, cap=3).dim == 6


def test_relations_cut_the_two_cycle_down(corpus):
    pa = PathAlgebra(load_quiver(corpus / "two_cycle.quiver"))
    rel = RelationSet((pa.parse_element("a.b"), pa.parse_element("b.a")), truncation=2)
    quotient = materialize(pa, relations=rel)
    assert quotient.dim == 4
    assert jacobson_oracle(quotient).dim == 2


def test_relations_are_validated(corpus):
    pa = PathAlgebra(load_quiver(corpus / "two_cycle.quiver"))
    with pytest.raises(RelationError):
        materialize(pa, relations=RelationSet((pa.arrow("a"),), truncation=2))
    with pytest.raises(RelationError):
        materialize(pa, relations=RelationSet((pa.parse_element("a.b"),), truncation=2))
    loop = PathAlgebra(load_quiver(corpus / "loop.quiver"))
    # x^2 - x^3 generates J^2 only after completion; in k[x] it is x^2(1 - x)
    with pytest.raises(RelationError, match="mixes path lengths"):
        materialize(loop, relations=RelationSet((loop.parse_element("x.x - x.x.x"),), truncation=2))
    assert materialize(loop, relations=RelationSet((loop.parse_element("x.x"),), truncation=2)).dim == 2
    with pytest.raises(ValueError):
        RelationSet((), truncation=0)


def test_primeness_is_a_single_strong_class(corpus):
    assert is_prime(load_quiver(corpus / "two_cycle.quiver"))
    assert is_prime(load_quiver(corpus / "loop.quiver"))
    assert not is_prime(load_quiver(corpus / "onearrow.quiver"))
    assert not is_prime(Quiver([]))


def test_vn_radical_is_spanned_by_isolated_vertices(corpus):
    assert vn_radical_description(load_quiver(corpus / "isolated.quiver")) == ("3",)
    assert vn_radical_description(load_quiver(corpus / "loop.quiver")) == ()


def test_block_radicals(corpus):
    q = load_quiver(corpus / "onearrow.quiver")
    assert gamma_block_radical(q, "1", "2") == "full"
    assert gamma_block_radical(q, "1", "1") == "zero"
    with pytest.raises(ValueError):
        gamma_block_radical(q, "2", "1")
    cyc = load_quiver(corpus / "two_cycle.quiver")
    assert gamma_block_radical(cyc, "1", "2") == "zero"
    assert gamma_block_radical(cyc, "1", "1", kind="vn") == "zero"
    assert gamma_block_radical(q, "1", "1", kind="vn") == "full"
    with pytest.raises(ValueError):
        radical_description(q, "brown-mccoy")


def test_generalized_paths_multiply_slots():
    q = Quiver(["1", "2"], [("x12", "1", "2")])
    pa = PathAlgebra(q, {"1": group_algebra_z2()})
    assert not pa.plain
    assert len(pa.paths()) == 5
    g = pa.vertex("1", "g")
    assert g * pa.parse_element("[g].x12") == pa.arrow("x12")
    assert pa.literal(pa.arrow("x12")) == "[1].x12"


def test_omega_radical_comparison_on_semisimple_vertex_algebra():
    q = Quiver(["1", "2"], [("x12", "1", "2")])
    cmp = omega_radical_conjecture(PathAlgebra(q, {"1": group_algebra_z2()}))
    assert cmp.algebra_dim == 5
    assert cmp.predicted_dim == cmp.oracle_dim == 2
    assert cmp.equal


def test_vertex_algebra_checks():
    q = Quiver(["1"])
    with pytest.warns(OmegaRadicalWarning):
        PathAlgebra(q, {"1": truncated_polynomial(2)})
    with pytest.raises(NonUnitalError):
        PathAlgebra(q, {"1": truncated_polynomial(2, with_unit=False)})
