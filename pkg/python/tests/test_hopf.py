"""Pointed Hopf algebras: construction, axioms, radicals and negative controls.

Run:
    pytest python/tests/test_hopf.py -q
"""

import pytest

from gmpath.errors import FormulaNotApplicableError, ParameterConstraintError, ParseError
from gmpath.hopf import (
    CORRUPTIONS,
    HopfAlgebra,
    check_hopf_axioms,
    classify_instance,
    corrupt,
    load_hopf,
    parse_hopf,
    radical_check,
    representation_to_module,
    truncated_a_t,
    truncation_evidence,
    validate,
    verify_smash_iso,
)


def hopf(corpus, name: str) -> HopfAlgebra:
    return HopfAlgebra(load_hopf(corpus / f"{name}.hopf"))


def test_sweedler_algebra_relations(corpus):
    H = hopf(corpus, "taft4")
    assert H.dim == 4
    assert H.literal(H.normal_form("g X")) == "-X*g"
    assert H.normal_form("X X") == {}
    x, one, g = H.index((1,), (0,)), H.index((0,), (0,)), H.index((0,), (1,))
    assert set(H.coproduct(H.x(0))) == {(x, one), (g, x)}
    assert H.counit(H.x(0)) == 0
    assert H.counit(H.grouplike((1,))) == 1


@pytest.mark.parametrize(
    "name, dim, radical_dim",
    [("taft4", 4, 2), ("taft9", 9, 6), ("two_generator_p2", 8, 6), ("two_generator_p3", 27, 24), ("group_z8", 8, 0)],
)
def test_radical_is_spanned_by_monomials_with_skew_part(corpus, name, dim, radical_dim):
    H = hopf(corpus, name)
    assert H.dim == dim
    check = radical_check(H)
    assert check.verified
    assert check.equal and check.baer_equal
    assert check.predicted.dim == radical_dim


def test_radical_check_without_oracle_above_bound(corpus):
    check = radical_check(hopf(corpus, "two_generator_p3"), max_dim=10)
    assert not check.verified
    assert check.predicted.dim == 24


@pytest.mark.parametrize("name", ["taft4", "taft9", "two_generator_p2", "linked_p3", "group_z8"])
def test_hopf_axioms_hold(corpus, name):
    report = check_hopf_axioms(hopf(corpus, name))
    assert report.passed, report.failures()


@pytest.mark.parametrize("name", ["taft4", "two_generator_p2", "two_generator_p3_i2"])
def test_smash_product_decomposition(corpus, name):
    assert verify_smash_iso(hopf(corpus, name))


def test_linked_family_refuses_the_plain_formulas(corpus):
    H = hopf(corpus, "linked_p3")
    assert H.dim == 27
    with pytest.raises(FormulaNotApplicableError):
        radical_check(H)
    with pytest.raises(FormulaNotApplicableError):
        verify_smash_iso(H)
    with pytest.raises(FormulaNotApplicableError):
        truncated_a_t(H.params, 4)


@pytest.mark.parametrize(
    "family, p, kwargs, dim",
    [
        ("group", 2, {"m": 3}, 8),
        ("taft", 3, {"k": 2}, 9),
        ("two-generator", 3, {"i": 2}, 27),
        ("linked", 3, {}, 27),
        ("nonabelian", 2, {}, 32),
    ],
)
def test_classification_families(family, p, kwargs, dim):
    H = classify_instance(family, p, **kwargs)
    assert H.dim == dim
    assert validate(H.params).ok


def test_lifted_nonabelian_family_has_a_nonzero_power_parameter():
    H = classify_instance("nonabelian-lifted", 2)
    assert H.dim == 64
    assert H.params.a == (1,)
    assert not H.params.is_plain


def test_classification_rejects_bad_parameters():
    with pytest.raises(ParameterConstraintError):
        classify_instance("taft", 4)
    with pytest.raises(ParameterConstraintError):
        classify_instance("taft", 3, k=3)
    with pytest.raises(ParameterConstraintError, match="b-grouplike"):
        classify_instance("linked", 2)
    with pytest.raises(ParameterConstraintError):
        classify_instance("nonabelian", 3)
    with pytest.raises(ValueError):
        classify_instance("quasitriangular", 2)


def test_corruptions_are_detected(corpus):
    taft = hopf(corpus, "taft4")
    two = hopf(corpus, "two_generator_p2")
    assert "antipode" in check_hopf_axioms(corrupt(taft, "antipode-sign")).failures()
    assert not check_hopf_axioms(corrupt(taft, "group-commutation")).passed
    assert not check_hopf_axioms(corrupt(two, "skew-commutation")).passed
    bad = corrupt(two, "parameter-xi")
    assert "b-antisymmetry" in validate(bad).conditions()
    with pytest.raises(ValueError):
        corrupt(taft, "skew-commutation")
    assert set(CORRUPTIONS) == {"group-commutation", "skew-commutation", "antipode-sign", "parameter-xi"}


def test_negative_fixture_fails_validation(corpus):
    params = load_hopf(corpus.parent / "negative" / "corrupt_xi.hopf")
    assert not validate(params).ok
    with pytest.raises(ParameterConstraintError):
        HopfAlgebra(params)


def test_truncation_evidence(corpus):
    params = load_hopf(corpus / "two_generator_p2.hopf")
    alg, basis = truncated_a_t(params, 4)
    assert len(basis) == 15 * params.group.order
    assert alg.check_associativity() is None
    ev = truncation_evidence(params, degree=6, samples=10, seed=0)
    assert ev.ok
    assert len(ev.records) == 10
    with pytest.raises(ValueError):
        truncation_evidence(params, degree=3)


def test_representations(corpus):
    H = hopf(corpus, "taft4")
    g = H.params.group.parse_element("g")
    block = representation_to_module(H, {g: [[1, 0], [0, -1]]}, [[[0, 0], [1, 0]]])
    assert block.ok
    assert set(block.action) == set(range(4))
    trivial = representation_to_module(H, {g: [[-1]]}, [[[0]]])
    assert trivial.ok
    commuting = representation_to_module(H, {g: [[1]]}, [[[1]]])
    assert not commuting.ok
    assert representation_to_module(H, {g: [[1]]}, []).violations


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_hopf("group Z2\nn 2\n")
    with pytest.raises(ParseError) as err:
        parse_hopf("group Z2\nt 1\nn 2 2\nc 1\ncstar 1\na 0\n")
    assert err.value.line == 3
    with pytest.raises(ParseError):
        parse_hopf("group Z2\nt 0\nlambda 3\n")
    with pytest.raises(ParseError):
        parse_hopf("t 0\n")
