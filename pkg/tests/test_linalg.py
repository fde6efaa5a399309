import random
from fractions import Fraction

import pytest

from liecohom.errors import PreconditionError
from liecohom.linalg import (
    Matrix,
    Subspace,
    column_space_basis,
    kernel_basis,
    quotient_representatives,
    rank,
    rref,
    solve,
    vec,
)
from liecohom.scalars import I, ONE, ZERO, Scalar


def test_rref_canonical():
    m = Matrix([[0, 2], [1, 1]])
    reduced, pivots = rref(m)
    assert pivots == [0, 1]
    assert reduced == Matrix.identity(2)


def test_rref_over_gaussian_rationals():
    m = Matrix([[I, 1], [1, -I]])  # second row = -i * first
    reduced, pivots = rref(m)
    assert pivots == [0]
    assert reduced.rows[0] == (ONE, Scalar(0, -1))
    assert reduced.rows[1] == (ZERO, ZERO)


def test_kernel_and_rank():
    m = Matrix([[1, 2, 3], [2, 4, 6]])
    assert rank(m) == 1
    kb = kernel_basis(m)
    assert len(kb) == 2
    for v in kb:
        assert all(not x for x in m.apply(v))


def test_kernel_of_empty_shapes():
    assert kernel_basis(Matrix.zeros(3, 0)) == []
    kb = kernel_basis(Matrix.zeros(0, 2))
    assert len(kb) == 2


def test_solve_consistent_and_inconsistent():
    m = Matrix([[1, 1], [0, 1]])
    x = solve(m, vec([3, 2]))
    assert m.apply(x) == vec([3, 2])
    m2 = Matrix([[1, 1], [2, 2]])
    assert solve(m2, vec([1, 3])) is None


def test_solve_random_roundtrip():
    rng = random.Random(7)
    for _ in range(20):
        rows = [
            [Scalar(rng.randint(-3, 3), rng.randint(-2, 2)) for _ in range(4)]
            for _ in range(3)
        ]
        m = Matrix(rows)
        x = vec([Scalar(rng.randint(-2, 2), rng.randint(-1, 1)) for _ in range(4)])
        b = m.apply(x)
        sol = solve(m, b)
        assert sol is not None and m.apply(sol) == b


def test_column_space():
    m = Matrix([[1, 2], [1, 2], [0, 0]])
    cs = column_space_basis(m)
    assert len(cs) == 1


def test_subspace_membership_and_equality():
    s = Subspace(3, [vec([1, 0, 1]), vec([0, 1, 0])])
    assert s.dim == 2
    assert s.contains(vec([2, 3, 2]))
    assert not s.contains(vec([1, 0, 0]))
    t = Subspace(3, [vec([1, 1, 1]), vec([1, -1, 1])])
    assert s == t  # same span, same canonical echelon rows


def test_subspace_containment_witness():
    big = Subspace(2, [vec([1, 0]), vec([0, 1])])
    small = Subspace(2, [vec([1, 1])])
    ok, witness = big.contains_subspace(small)
    assert ok and witness is None
    ok, witness = small.contains_subspace(big)
    assert not ok and witness is not None


def test_quotient_representatives():
    numerator = Subspace(3, [vec([1, 0, 0]), vec([0, 1, 0]), vec([0, 0, 1])])
    denominator = Subspace(3, [vec([1, 0, 0]), vec([0, 1, 0])])
    reps = quotient_representatives(numerator, denominator)
    assert reps == [vec([0, 0, 1])]
    assert quotient_representatives(numerator, numerator) == []


def test_quotient_containment_enforced():
    numerator = Subspace(2, [vec([1, 0])])
    denominator = Subspace(2, [vec([0, 1])])
    with pytest.raises(PreconditionError):
        quotient_representatives(numerator, denominator)


def test_matmul_and_shapes():
    a = Matrix([[1, I], [0, 1]])
    b = Matrix([[1], [Fraction(1, 2)]])
    prod = a @ b
    assert prod.shape == (2, 1)
    assert prod.rows[0][0] == Scalar(1, Fraction(1, 2))
    with pytest.raises(ValueError):
        b @ a
