"""Exact cyclotomic arithmetic.

Run:
    pytest python/tests/test_scalar.py -q
"""

from fractions import Fraction

import pytest

from gmpath.errors import ParseError
from gmpath.scalar import (
    Cyclotomic,
    field_degree,
    format_scalar,
    parse_combination,
    parse_scalar,
    primitive_root_order,
    zeta,
)


def test_field_degrees_follow_euler_phi():
    assert [field_degree(n) for n in (1, 2, 3, 4, 5, 8, 12)] == [1, 1, 2, 2, 4, 4, 4]


def test_roots_of_unity_multiply_exactly():
    z = zeta(3)
    assert z**3 == 1
    assert 1 + z + z**2 == 0
    assert zeta(4) ** 2 == -1
    assert zeta(2) == -1


def test_mixed_conductors_align():
    # zeta_3 = zeta_6^2 inside Q(zeta_6)
    assert zeta(6) ** 2 == zeta(3)
    s = zeta(4) + zeta(3)
    assert s.conductor == 12


def test_inverse_and_division():
    x = 2 + zeta(5)
    assert x * x.inverse() == 1
    assert (Cyclotomic(3) / Fraction(3, 2)) == 2
    assert zeta(7, -1) == zeta(7) ** -1
    with pytest.raises(ZeroDivisionError):
        Cyclotomic(0, 5).inverse()


def test_immutable():
    x = zeta(3)
    with pytest.raises(AttributeError):
        x.conductor = 6


def test_primitive_root_order():
    assert primitive_root_order(zeta(6)) == 6
    assert primitive_root_order(zeta(6, 2)) == 3
    assert primitive_root_order(Cyclotomic(-1)) == 2
    assert primitive_root_order(Cyclotomic(2)) is None
    assert primitive_root_order(1 + zeta(4)) is None


def test_parse_scalar_grammar():
    assert parse_scalar("z3^2") == zeta(3, 2)
    assert parse_scalar("-z3^2") == -zeta(3, 2)
    assert parse_scalar("1 - z3^2") == 1 - zeta(3, 2)
    assert parse_scalar("(1 + z4)*(1 - z4)") == 2
    assert parse_scalar("3/4") == Fraction(3, 4)
    assert parse_scalar("1", conductor=5).conductor == 5
    for bad in ("", "z", "1 +", "(1", "x"):
        with pytest.raises(ParseError):
            parse_scalar(bad)


def test_format_roundtrip_on_a_few_values():
    for value in (zeta(3), 2 - zeta(8, 3), Cyclotomic(Fraction(-1, 2)), Cyclotomic(0)):
        assert parse_scalar(format_scalar(value)) == value


def test_parse_combination_terms():
    terms = parse_combination("2*x12.y23 - (1 + z3)*e(1) + a")
    assert [atom for _, atom in terms] == ["x12.y23", "e(1)", "a"]
    assert terms[0][0] == 2
    assert terms[1][0] == -(1 + zeta(3))
    assert parse_combination("0") == []
