"""Gamma_I-systems: assembly, gm units, divisors and the block radical formulas.

Run:
    pytest python/tests/test_gm_ring.py -q
"""

import pytest

from gmpath.errors import AssociativityError, FormulaNotApplicableError, ParseError
from gmpath.findim import (
    essential_element_check,
    ideal_closure,
    matrix_algebra,
    prime_bruteforce,
    radical,
    truncated_polynomial,
    vn_regular_element,
)
from gmpath.gm_ring import (
    block_radical,
    block_vn_radicals,
    corner_vn_radical,
    find_gm_unit,
    gm_nonzero_divisor,
    gm_radical_formula,
    has_gm_nonzero_divisors,
    homogeneous_parts,
    is_graded,
    load_system,
    matrix_system,
    parse_system,
    path_system,
    project,
    reassemble,
)
from gmpath.quiver import load_quiver


def test_upper_system_assembles_to_triangular_matrices(corpus):
    system = load_system(corpus / "upper12.gmring")
    alg = system.assembled
    assert alg.dim == 3
    assert alg.names == ("e1", "x12", "e2")
    assert radical(alg).dim == 1
    assert not prime_bruteforce(alg)


def test_jacobson_formula_is_sum_of_block_radicals(corpus):
    system = load_system(corpus / "upper12.gmring")
    ideal = gm_radical_formula(system, "jacobson")
    assert ideal.space == radical(system.assembled)
    assert ideal.literals() == {("1", "2"): ["x12"]}
    assert block_radical(system, "1", "1").is_zero()


def test_von_neumann_formula_is_refused_without_divisors(corpus):
    system = load_system(corpus / "upper12.gmring")
    verdicts = gm_nonzero_divisor(system)
    assert verdicts[("2", "1")].status == "none_possible"
    assert not has_gm_nonzero_divisors(system)
    with pytest.raises(FormulaNotApplicableError):
        gm_radical_formula(system, "vn")
    # the unchecked block sum overshoots the true radical
    assert sum(sub.dim for sub in block_vn_radicals(system).values()) == 2
    assert corner_vn_radical(system.assembled).is_zero()
    with pytest.raises(FormulaNotApplicableError, match="not an ideal"):
        gm_radical_formula(system, "vn", require_divisors=False)


def test_unequal_matrix_blocks_have_no_divisors(corpus):
    system = load_system(corpus / "m12.gmring")
    alg = system.assembled
    assert alg.dim == 9
    assert prime_bruteforce(alg)
    assert not has_gm_nonzero_divisors(system)
    assert corner_vn_radical(alg).dim == 9
    assert sum(sub.dim for sub in block_vn_radicals(system).values()) == 9


def test_equal_matrix_blocks_give_the_von_neumann_radical(corpus):
    system = load_system(corpus / "m11.gmring")
    assert has_gm_nonzero_divisors(system)
    ideal = gm_radical_formula(system, "vn", samples=30)
    assert ideal.dim == 4
    assert ideal.check is not None and ideal.check.verified


@pytest.mark.parametrize(
    "sizes, pattern",
    [((1, 1), "full"), ((2, 1), "full"), ((1, 2), "upper"), ((1, 1, 1), "upper"), ((2, 1), "diagonal")],
)
def test_matrix_system_formula_matches_oracle(sizes, pattern):
    system = matrix_system(sizes, pattern)
    assert gm_radical_formula(system).space == radical(system.assembled)


def test_matrix_system_over_dual_numbers():
    system = matrix_system((1, 1), ring=truncated_polynomial(2))
    assert system.assembled.dim == 8
    ideal = gm_radical_formula(system)
    assert ideal.dim == 4
    assert ideal.space == radical(system.assembled)


def test_path_system_matches_path_algebra(corpus):
    system = path_system(load_quiver(corpus / "chain.quiver"))
    assert system.total_dim == 6
    assert gm_radical_formula(system).dim == 3
    assert system.dim_of("3", "1") == 0


def test_gm_unit_is_a_family_of_idempotents(corpus):
    system = load_system(corpus / "upper12.gmring")
    unit = find_gm_unit(system)
    alg = system.assembled
    assert unit is not None
    for i in range(alg.dim):
        b = alg.basis_vector(i)
        assert alg.mul(unit.total(), b) == b == alg.mul(b, unit.total())
    assert find_gm_unit(matrix_system((1, 1), "upper", ring=truncated_polynomial(2, with_unit=False))) is None


def test_single_block_algebra_file(corpus):
    system = load_system(corpus / "dual_numbers.algebra")
    assert system.index == ("1",)
    alg = system.assembled
    assert alg.unit == alg.element({"e": 1})
    assert radical(alg).dim == 1


def test_projection_and_reassembly_of_an_ideal(corpus):
    system = load_system(corpus / "upper12.gmring")
    whole = system.assembled.whole()
    assert project(system, whole, "1", "2").dim == 1
    assert project(system, whole, "2", "1").dim == 0
    assert reassemble(system, whole) == whole


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as err:
        parse_system("gmring bad\nindex 1\nblock 1 2 dim=1 basis=a\n")
    assert err.value.line == 3
    with pytest.raises(ParseError) as err:
        parse_system("gmring bad\nindex 1\nblock 1 1 dim=2 basis=a\n")
    assert err.value.line == 3
    with pytest.raises(ParseError) as err:
        parse_system("gmring bad\nindex 1\nblock 1 1 dim=1 basis=a\nmu 1 1 1 : a b -> a\n")
    assert err.value.line == 4
    with pytest.raises(ParseError):
        parse_system("ring bad\n")
    with pytest.raises(ParseError):
        parse_system("gmring bad\nblock\n")


def test_non_associative_system_is_rejected(write):
    text = "algebra broken\nbasis a b\nmu : a a -> b\nmu : b a -> a\n"
    with pytest.raises(AssociativityError):
        load_system(write("broken.algebra", text))


def test_block_radicals_of_full_matrices_vanish():
    system = matrix_system((2, 2))
    assert system.assembled.dim == matrix_algebra(4).dim
    assert gm_radical_formula(system).space.is_zero()


def test_proper_ideals_reassemble_from_their_projections(corpus):
    system = load_system(corpus / "upper12.gmring")
    alg = system.assembled
    rad = radical(alg)
    assert reassemble(system, rad) == rad
    ideal = ideal_closure(alg, alg.span([alg.element({"e2": 1})]))
    assert ideal.dim == 2
    assert reassemble(system, ideal) == ideal
    # a subspace that is not an ideal need not reassemble
    line = alg.span([alg.element({"e1": 1, "e2": 1})])
    assert reassemble(system, line) != line


def test_radicals_are_graded_by_the_index_group(corpus):
    system = load_system(corpus / "upper12.gmring")
    alg = system.assembled
    rad = radical(alg)
    assert is_graded(system, rad)
    parts = homogeneous_parts(system, rad)
    assert parts[1] == rad and parts[0].is_zero()
    assert not is_graded(system, alg.span([alg.element({"e1": 1, "x12": 1})]))
    tri = matrix_system((1, 1, 1), "upper", ring=truncated_polynomial(2))
    assert is_graded(tri, radical(tri.assembled))
    letters = parse_system("gmring letters\nindex p q\nblock p p dim=1 basis=e\nmu p p p : e e -> e\n")
    with pytest.raises(ValueError, match="not integers"):
        is_graded(letters, letters.assembled.whole())


def test_corner_of_upper12_is_essential_but_not_regular(corpus):
    alg = load_system(corpus / "upper12.gmring").assembled
    x12 = alg.element({"x12": 1})
    assert essential_element_check(alg, x12, samples=50) is None
    assert vn_regular_element(alg, x12) is None
    assert essential_element_check(alg, alg.element({"e1": 1}), samples=0) == x12


@pytest.mark.parametrize("n", [1, 2, 3])
def test_matrices_over_dual_numbers(n):
    system = matrix_system((1,) * n, ring=truncated_polynomial(2))
    alg = system.assembled
    assert alg.dim == 2 * n * n
    rad = radical(alg)
    assert rad.dim == n * n
    assert rad == alg.coordinate_span(i for i, name in enumerate(alg.names) if name.startswith("x"))
    assert gm_radical_formula(system).space == rad
    assert reassemble(system, rad) == rad
    simple = matrix_algebra(n)
    assert corner_vn_radical(simple) == simple.whole()
