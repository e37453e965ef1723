"""Finite-dimensional algebras and the brute-force oracles.

Run:
    pytest python/tests/test_findim.py -q
"""

import pytest

from gmpath.errors import (
    AssociativityError,
    DimensionBoundError,
    NonUnitalError,
    NotAnIdealError,
    OracleInconsistencyError,
)
from gmpath.findim import (
    FinDimAlgebra,
    annihilator,
    center,
    direct_sum,
    ideal_closure,
    jacobson_oracle,
    largest_nilpotent_check,
    matrix_algebra,
    prime_analysis,
    prime_bruteforce,
    radical,
    regular_witness_in_ideal,
    semiprime_bruteforce,
    tensor_product,
    truncated_polynomial,
    upper_triangular,
    vn_regular_element,
    vn_regular_ideal_check,
)
from gmpath.scalar import zeta


def group_algebra_z3(conductor: int = 1) -> FinDimAlgebra:
    names = ["1", "g", "g^2"]
    products = {(i, j): {(i + j) % 3: 1} for i in range(3) for j in range(3)}
    return FinDimAlgebra(names, products, conductor=conductor, unit={0: 1}, name="kZ3")


def test_matrix_algebra_is_simple():
    m = matrix_algebra(3)
    assert m.dim == 9
    assert jacobson_oracle(m).is_zero()
    assert center(m).dim == 1
    assert prime_bruteforce(m)
    assert semiprime_bruteforce(m)


def test_upper_triangular_radical_is_strict_part():
    t = upper_triangular(3)
    rad = jacobson_oracle(t)
    assert rad.dim == 3
    assert t.literals(rad) == ["E12", "E13", "E23"]
    verdict = largest_nilpotent_check(t, rad)
    assert verdict.nilpotent and verdict.index == 3
    assert not prime_bruteforce(t)


def test_truncated_polynomial_radical_and_nilpotency_index():
    a = truncated_polynomial(4)
    rad = jacobson_oracle(a)
    assert rad.dim == 3
    assert largest_nilpotent_check(a, rad).index == 4


def test_non_unital_radical_goes_through_unitization():
    aug = truncated_polynomial(3, with_unit=False)
    assert aug.unit is None
    assert radical(aug).dim == 2
    with pytest.raises(NonUnitalError):
        jacobson_oracle(aug)


def test_asymmetric_trace_form_is_rejected():
    # a b = 1 but b a = 0: the trace form has a right kernel the left side does not share
    products = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (0, 2): {2: 1}, (2, 0): {2: 1}, (1, 2): {0: 1}}
    a = FinDimAlgebra(["1", "a", "b"], products, unit={0: 1}, name="lopsided")
    with pytest.raises(OracleInconsistencyError, match="degenerate"):
        jacobson_oracle(a)


def test_group_algebra_over_q_is_not_prime_but_semiprime():
    a = group_algebra_z3()
    verdict = prime_analysis(a)
    assert semiprime_bruteforce(a)
    assert not verdict.prime
    x, y = verdict.witness
    for i in range(a.dim):
        assert not a.mul(a.mul(x, a.basis_vector(i)), y)


def test_field_extension_centre_is_prime():
    # Q(zeta_3) over itself: centre has Q-dimension 2 but is a field
    k = FinDimAlgebra.field(conductor=3)
    assert prime_bruteforce(k)
    assert prime_bruteforce(direct_sum(matrix_algebra(2), matrix_algebra(2))) is False


def test_tensor_and_direct_sum_dimensions():
    t = tensor_product(matrix_algebra(2), truncated_polynomial(2))
    assert t.dim == 8
    assert jacobson_oracle(t).dim == 4
    s = direct_sum(upper_triangular(2), truncated_polynomial(2))
    assert s.dim == 5
    assert jacobson_oracle(s).dim == 2


def test_declared_unit_is_checked():
    with pytest.raises(NonUnitalError):
        FinDimAlgebra(["a"], {(0, 0): {0: 1}}, unit={0: 2})


def test_non_associative_table_is_caught():
    bad = FinDimAlgebra(["a", "b"], {(0, 0): {1: 1}, (1, 0): {0: 1}})
    assert bad.check_associativity() is not None
    with pytest.raises(AssociativityError):
        bad.require_associative()


def test_annihilator_and_ideal_closure():
    t = upper_triangular(2)
    rad = jacobson_oracle(t)
    assert annihilator(t, rad) == rad
    e12 = t.coordinate_span([t.index("E12")])
    assert ideal_closure(t, e12) == rad
    with pytest.raises(NotAnIdealError):
        largest_nilpotent_check(t, t.coordinate_span([t.index("E11")]))


def test_von_neumann_regularity_and_witness_inside_ideal():
    m = matrix_algebra(2)
    x = m.element({"E11": 1, "E12": 1})
    y = vn_regular_element(m, x)
    assert y is not None
    assert m.mul(m.mul(x, y), x) == x
    w = regular_witness_in_ideal(m, x, y)
    assert m.mul(m.mul(x, w), x) == x
    t = upper_triangular(2)
    assert vn_regular_element(t, t.element({"E12": 1})) is None


def test_regularity_sampling_finds_counterexample():
    t = upper_triangular(2)
    check = vn_regular_ideal_check(t, t.whole(), samples=20, seed=0)
    assert check.status == "counterexample"
    ok = vn_regular_ideal_check(matrix_algebra(2), matrix_algebra(2).whole(), samples=20, seed=0)
    assert ok.verified


def test_cyclotomic_structure_constants():
    # quantum plane corner: yx = zeta_3 xy truncated at degree 2
    q = zeta(3)
    names = ["1", "x", "y", "xy"]
    products = {
        (0, 0): {0: 1}, (0, 1): {1: 1}, (0, 2): {2: 1}, (0, 3): {3: 1},
        (1, 0): {1: 1}, (2, 0): {2: 1}, (3, 0): {3: 1},
        (1, 2): {3: 1}, (2, 1): {3: q},
    }
    a = FinDimAlgebra(names, products, unit={0: 1})
    assert a.conductor == 3
    assert a.check_associativity() is None
    assert jacobson_oracle(a).dim == 3


def test_oracle_bound_is_enforced():
    with pytest.raises(DimensionBoundError):
        semiprime_bruteforce(matrix_algebra(3), max_dim=4)
