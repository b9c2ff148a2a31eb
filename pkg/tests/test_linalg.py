"""
Tests for the exact linear algebra layer.
"""
import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.errors import (EigenvalueOutsideField, NotCommuting, NotInSpan, NotNilpotent,
                        NotSelfConjugate, NotSemisimpleOperator, SizeMismatch, ZeroVector)
from src.exactnum import ONE, ZERO, GaussRat, I
from src.linalg import (CoordinateFrame, EchelonBuilder, Mat, Poly, Subspace, char_poly, contains,
                        exp_nilpotent, gauss_rational_roots, joint_nullspace, linearly_dependent,
                        nullspace, rank, real_points, rref, simultaneous_eigenspaces, subspace_intersect,
                        subspace_sum, vector)


def test_matrix_arithmetic():
    """Products, transposes, traces and inverses."""
    a = Mat([[1, 2], [3, 4]])
    b = Mat([[0, 1], [1, 0]])
    assert a @ b == Mat([[2, 1], [4, 3]])
    assert a.transpose() == Mat([[1, 3], [2, 4]])
    assert a.trace() == 5
    assert a @ a.inverse() == Mat.identity(2)
    assert a.apply(vector([1, 1])) == vector([3, 7])
    assert b.kron(Mat.identity(1)) == b
    with pytest.raises(SizeMismatch):
        a @ Mat([[1, 2, 3]])
    with pytest.raises(ZeroDivisionError):
        Mat([[1, 2], [2, 4]]).inverse()


def test_rref_and_rank():
    """Leftmost pivots, zero rows last."""
    m = Mat([[0, 2, 4], [1, 1, 1], [1, 2, 3]])
    assert rref(m) == Mat([[1, 0, -1], [0, 1, 2], [0, 0, 0]])
    assert rank(m) == 2
    assert rank(Mat.zeros(3, 3)) == 0


def test_nullspace():
    """Kernel vectors are annihilated and span the right dimension."""
    m = Mat([[1, 2, 3], [2, 4, 6]])
    kernel = nullspace(m)
    assert kernel.dim == 2
    for v in kernel.vectors:
        assert m.apply(v) == vector([0, 0])
    assert nullspace(Mat.identity(3)).dim == 0
    both = joint_nullspace([Mat([[1, 0, 0]]), Mat([[0, 1, 0]])], 3)
    assert both == Subspace(3, [[0, 0, 1]])


def test_subspace_equality_is_basis_equality():
    """Two spanning sets of one space give identical bases."""
    s = Subspace(3, [[1, 1, 0], [0, 1, 1]])
    t = Subspace(3, [[1, 2, 1], [1, 0, -1]])
    assert s == t
    assert s.dim == 2
    assert s.contains_vector(vector([2, 3, 1]))
    assert not s.contains_vector(vector([0, 0, 1]))
    with pytest.raises(NotInSpan):
        s.coordinates(vector([0, 0, 1]))
    v = vector([2, 3, 1])
    assert s.lift(s.coordinates(v)) == v


def test_echelon_builder():
    """Incremental insertion reports new directions only."""
    builder = EchelonBuilder(3)
    assert builder.add(vector([1, 1, 0]))
    assert builder.add(vector([0, 1, 1]))
    assert not builder.add(vector([1, 2, 1]))
    copy = builder.copy()
    assert copy.add(vector([0, 0, 1]))
    assert len(builder) == 2
    assert builder.subspace() == Subspace(3, [[1, 1, 0], [0, 1, 1]])


def test_sum_and_intersection():
    s = Subspace(3, [[1, 0, 0], [0, 1, 0]])
    t = Subspace(3, [[0, 1, 0], [0, 0, 1]])
    assert subspace_sum(s, t) == Subspace.full(3)
    assert subspace_intersect(s, t) == Subspace(3, [[0, 1, 0]])
    assert contains(s, Subspace(3, [[1, 1, 0]]))
    assert not contains(s, t)


def test_coordinate_frame():
    """Coordinates against a non-echelon frame."""
    frame = CoordinateFrame([vector([1, 1]), vector([1, -1])])
    coords = frame.coordinates(vector([3, 1]))
    assert coords == vector([2, 1])
    assert frame.combine(coords) == vector([3, 1])
    with pytest.raises(ValueError):
        CoordinateFrame([vector([1, 1]), vector([2, 2])])


def test_characteristic_polynomial():
    """det(t·I − m), coefficients lowest degree first."""
    test_cases = [
        (Mat([[0, -1], [1, 0]]), Poly([1, 0, 1])),
        (Mat([[2, 0], [0, 3]]), Poly([6, -5, 1])),
        (Mat([[0, 0, 0], [0, 0, -1], [0, 1, 0]]), Poly([0, 1, 0, 1])),
    ]
    for m, expected in test_cases:
        assert char_poly(m) == expected


def random_gauss(rng: random.Random, bound: int = 3) -> GaussRat:
    return GaussRat(Fraction(rng.randint(-bound, bound), rng.randint(1, 3)), rng.randint(-bound, bound))


def cofactor_det(rows):
    """Determinant by expansion along the first row."""
    if len(rows) == 1:
        return rows[0][0]
    total = ZERO
    for j, a in enumerate(rows[0]):
        if not a:
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = a * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def test_characteristic_polynomial_matches_determinant():
    """char_poly(m)(t) = det(t·I − m) on random Gaussian-rational matrices."""
    rng = random.Random(11)
    for n in range(1, 6):
        for _ in range(3):
            m = Mat([[random_gauss(rng) for _ in range(n)] for _ in range(n)])
            p = char_poly(m)
            assert p.degree == n
            assert p.coeffs[-1] == ONE
            for t in range(n + 1):
                shifted = [[(GaussRat(t) if i == j else ZERO) - m.data[i][j] for j in range(n)]
                           for i in range(n)]
                assert p(GaussRat(t)) == cofactor_det(shifted), f"n={n}, t={t}"


def test_dimension_formula_for_sum_and_intersection():
    """dim(U + W) + dim(U ∩ W) = dim U + dim W on random subspaces sharing some vectors."""
    rng = random.Random(5)
    n = 5
    for _ in range(25):
        shared = [[random_gauss(rng, 2) for _ in range(n)] for _ in range(rng.randint(0, 2))]
        u_extra = [[random_gauss(rng, 2) for _ in range(n)] for _ in range(rng.randint(0, 2))]
        w_extra = [[random_gauss(rng, 2) for _ in range(n)] for _ in range(rng.randint(0, 2))]
        u = Subspace(n, shared + u_extra)
        w = Subspace(n, shared + w_extra)
        both = subspace_intersect(u, w)
        assert subspace_sum(u, w).dim + both.dim == u.dim + w.dim
        assert contains(u, both) and contains(w, both)
        assert contains(both, Subspace(n, shared))


def test_gaussian_rational_roots():
    """Roots in Q(i) with multiplicities; full_degree flags leftovers."""
    search = gauss_rational_roots(Poly.from_roots([I, -I, GaussRat(Fraction(1, 2)), I]))
    assert search.full_degree
    assert dict(search.roots) == {I: 2, -I: 1, GaussRat(Fraction(1, 2)): 1}

    search = gauss_rational_roots(Poly([-2, 0, 1]))
    assert not search.full_degree
    assert search.roots == []

    search = gauss_rational_roots(Poly([0, 0, 1, 0, 1]))
    assert search.full_degree
    assert dict(search.roots) == {ZERO: 2, I: 1, -I: 1}


def test_simultaneous_eigenspaces():
    """Joint eigenspaces of commuting diagonalizable operators."""
    a = Mat([[0, -1, 0], [1, 0, 0], [0, 0, 0]])
    b = Mat([[1, 0, 0], [0, 1, 0], [0, 0, 2]])
    blocks = dict(simultaneous_eigenspaces([a, b]))
    assert set(blocks) == {(I, ONE), (-I, ONE), (ZERO, GaussRat(2))}
    assert blocks[(I, ONE)] == Subspace(3, [[1, -I, 0]])
    for values, space in blocks.items():
        for v in space.vectors:
            assert a.apply(v) == tuple(values[0] * x for x in v)


def test_eigenspace_failures():
    """Non-commuting, non-split and non-diagonalizable operators are rejected."""
    with pytest.raises(NotCommuting):
        simultaneous_eigenspaces([Mat([[0, 1], [0, 0]]), Mat([[0, 0], [1, 0]])])
    with pytest.raises(EigenvalueOutsideField):
        simultaneous_eigenspaces([Mat([[0, 2], [1, 0]])])
    with pytest.raises(NotSemisimpleOperator):
        simultaneous_eigenspaces([Mat([[1, 1], [0, 1]])])


def test_exp_nilpotent():
    """exp(m)·exp(−m) = I for nilpotent m."""
    m = Mat([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    e = exp_nilpotent(m)
    assert e == Mat([[1, 1, Fraction(1, 2)], [0, 1, 1], [0, 0, 1]])
    assert e @ exp_nilpotent(-m) == Mat.identity(3)
    with pytest.raises(NotNilpotent):
        exp_nilpotent(Mat([[1, 0], [0, 0]]))


def test_linear_dependence():
    assert linearly_dependent(vector([1, I]), vector([I, -1]))
    assert not linearly_dependent(vector([1, I]), vector([1, -I]))
    with pytest.raises(ZeroVector):
        linearly_dependent(vector([0, 0]), vector([1, 0]))


def test_real_points():
    """Real points of a conjugation-stable subspace."""
    s = Subspace(3, [[1, I, 0], [1, -I, 0]])
    assert real_points(s) == Subspace(3, [[1, 0, 0], [0, 1, 0]])
    with pytest.raises(NotSelfConjugate):
        real_points(Subspace(2, [[1, I]]))


if __name__ == "__main__":
    # Run tests
    print("Running linear algebra tests...")

    tests = [
        test_matrix_arithmetic,
        test_rref_and_rank,
        test_nullspace,
        test_subspace_equality_is_basis_equality,
        test_echelon_builder,
        test_sum_and_intersection,
        test_dimension_formula_for_sum_and_intersection,
        test_coordinate_frame,
        test_characteristic_polynomial,
        test_characteristic_polynomial_matches_determinant,
        test_gaussian_rational_roots,
        test_simultaneous_eigenspaces,
        test_eigenspace_failures,
        test_exp_nilpotent,
        test_linear_dependence,
        test_real_points,
    ]
    for test in tests:
        try:
            test()
            print(f"✓ {test.__name__} passed")
        except Exception as e:
            print(f"✗ {test.__name__} failed: {e}")
