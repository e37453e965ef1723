"""Exact subspaces over Q.

Run:
    pytest python/tests/test_linalg.py -q
"""

from fractions import Fraction as F

from gmpath.linalg import Subspace, nullspace, rank, rref, solve


def test_rref_and_rank():
    rows = [{0: F(1), 1: F(2)}, {0: F(2), 1: F(4)}, {2: F(3)}]
    reduced, pivots = rref(rows, 3)
    assert pivots == (0, 2)
    assert reduced[1] == {2: F(1)}
    assert rank(rows, 3) == 2


def test_nullspace_is_annihilated():
    rows = [{0: F(1), 1: F(1), 2: F(1)}]
    basis = nullspace(rows, 3)
    assert len(basis) == 2
    for v in basis:
        assert sum(v.get(k, F(0)) for k in range(3)) == 0


def test_solve_consistent_and_inconsistent():
    rows = [{0: F(1), 1: F(1)}, {0: F(1), 1: F(-1)}]
    sol = solve(rows, 2, {0: F(2)})
    assert sol == {0: F(1), 1: F(1)}
    assert solve([{0: F(1)}, {0: F(1)}], 1, {0: F(1), 1: F(2)}) is None


def test_subspace_equality_is_canonical():
    a = Subspace.span([{0: F(1), 1: F(1)}, {1: F(1)}], 3)
    b = Subspace.coordinates([0, 1], 3)
    assert a == b
    assert a.qdim == 2 and a.dim == 2


def test_sum_intersection_and_containment():
    xy = Subspace.coordinates([0, 1], 3)
    yz = Subspace.coordinates([1, 2], 3)
    assert (xy + yz).qdim == 3
    assert xy.intersection(yz) == Subspace.coordinates([1], 3)
    assert Subspace.coordinates([1], 3) <= xy
    assert {0: F(1), 2: F(1)} not in xy


def test_k_dimension_counts_field_degree():
    # a Q(zeta_3)-line seen as a 2-dimensional Q-subspace
    line = Subspace.coordinates([2, 3], 6, degree=2)
    assert line.qdim == 2
    assert line.dim == 1


def test_restrict_and_embed_are_inverse_on_blocks():
    sub = Subspace.span([{2: F(1), 3: F(2)}], 5)
    coords = [2, 3]
    assert sub.restrict(coords).embed(coords, 5) == sub
