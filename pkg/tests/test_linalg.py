"""Exact matrices: Bareiss determinants, minors, kernels."""

import random

import pytest

from twistalex.cyclotomic import field
from twistalex.errors import BadSize, NonSquare
from twistalex.laurent import (LaurentPoly, laurent_exact_div,
                               normalize_associate)
from twistalex.linalg import (Mat, MatL, det_laurent, gcd_of_minors,
                              in_column_space, kernel_basis, rank, solve)

K = field(12)
ONE = LaurentPoly.one(K)
ZERO = LaurentPoly.zero(K)


def t(k=1):
    return LaurentPoly.t_power(K, k)


def cofactor_det(M):
    """Independent determinant oracle (Laplace expansion)."""
    n = M.rows
    if n == 0:
        return LaurentPoly.one(M.field)
    if n == 1:
        return M[0, 0]
    acc = LaurentPoly.zero(M.field)
    for j in range(n):
        a = M[0, j]
        if a.is_zero():
            continue
        sub = M.submatrix(range(1, n), [c for c in range(n) if c != j])
        term = a * cofactor_det(sub)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def rand_poly(rng, span=2):
    return LaurentPoly(K, {e: K.element([rng.randint(-2, 2)
                                         for _ in range(4)])
                           for e in range(rng.randint(-span, 0),
                                          rng.randint(0, span) + 1)})


def rand_matl(rng, n):
    return MatL.from_rows(K, [[rand_poly(rng) for _ in range(n)]
                              for _ in range(n)])


def test_det_frozen_case():
    # [[1 + i t^3, 0], [s t^3, 1 - i t^3]] with i = zeta^3, s = 1
    i3 = K.zeta(3)
    M = MatL.from_rows(K, [[ONE + t(3) * i3, ZERO],
                           [t(3), ONE - t(3) * i3]])
    d = det_laurent(M)
    assert d == ONE + t(6)
    assert d == cofactor_det(M)


def test_det_identity_and_zero_row():
    assert det_laurent(MatL.identity(K, 4)) == ONE
    M = MatL.from_rows(K, [[ZERO, ZERO], [t(), ONE]])
    assert det_laurent(M) == ZERO


def test_det_nonsquare_raises():
    with pytest.raises(NonSquare):
        det_laurent(MatL.zero(K, 2, 3))


def test_bareiss_matches_cofactor():
    rng = random.Random(21)
    for n in (2, 3, 4):
        for _ in range(3):
            M = rand_matl(rng, n)
            assert det_laurent(M) == cofactor_det(M)


def test_det_multiplicative_and_alternating():
    rng = random.Random(22)
    for _ in range(4):
        A = rand_matl(rng, 3)
        B = rand_matl(rng, 3)
        assert det_laurent(A * B) == det_laurent(A) * det_laurent(B)
        # swapping two rows flips the sign
        swapped = MatL.from_rows(K, [A.row(1), A.row(0), A.row(2)])
        assert det_laurent(swapped) == -det_laurent(A)


def test_gcd_of_minors_frozen():
    M = MatL.from_rows(K, [[t(3) - ONE, t(2) - ONE]])
    assert gcd_of_minors(M, 1) == t() - ONE
    p, q = t(3) - ONE, t(2) + ONE
    D = MatL.from_rows(K, [[p, ZERO], [ZERO, q]])
    assert gcd_of_minors(D, 2) == normalize_associate(p * q)
    assert gcd_of_minors(MatL.zero(K, 2, 3), 2) == ZERO
    with pytest.raises(BadSize):
        gcd_of_minors(MatL.zero(K, 2, 3), 3)


def test_gcd_of_minors_divides_every_minor():
    import itertools
    rng = random.Random(23)
    M = MatL.from_rows(K, [[rand_poly(rng, 1) for _ in range(4)]
                           for _ in range(2)])
    g = gcd_of_minors(M, 2)
    if g.is_zero():
        return
    for rows in itertools.combinations(range(2), 2):
        for cols in itertools.combinations(range(4), 2):
            minor = det_laurent(M.submatrix(rows, cols))
            if not minor.is_zero():
                assert laurent_exact_div(minor, g) is not None


def test_kernel_basis():
    assert kernel_basis(Mat.identity(K, 3)) == []
    assert len(kernel_basis(Mat.zero(K, 2, 3))) == 3
    A = Mat.from_rows(K, [[K.one, K.one, K.zero],
                          [K.zero, K.one, K.one]])
    kb = kernel_basis(A)
    assert len(kb) == 1
    for v in kb:
        assert all(not e for e in A.apply(v))
    assert rank(A) == 2


def test_kernel_random_exactness():
    rng = random.Random(24)
    for _ in range(10):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 5)
        A = Mat.from_rows(K, [[K.element([rng.randint(-2, 2)
                                          for _ in range(4)])
                               for _ in range(cols)] for _ in range(rows)])
        kb = kernel_basis(A)
        assert len(kb) == cols - rank(A)
        for v in kb:
            assert all(not e for e in A.apply(v))


def test_solve_and_membership():
    A = Mat.from_rows(K, [[K.one, K.one], [K.zero, K.one], [K.one, K.zero]])
    b = [K.from_rational(3), K.from_rational(1), K.from_rational(2)]
    x = solve(A, b)
    assert x is not None and A.apply(x) == b
    assert in_column_space(A, b)
    assert not in_column_space(Mat.from_rows(K, [[K.one], [K.one]]),
                               [K.one, K.zero])


def test_field_matrix_ops():
    B = Mat.from_rows(K, [[K.zeta(3), K.zero], [K.one, -K.zeta(3)]])
    assert B * B.inverse() == Mat.identity(K, 2)
    assert B.det() == K.one
    assert B.transpose().transpose() == B
    assert (B - B) == Mat.zero(K, 2, 2)


def test_zero_dimensional_matrices():
    Z = Mat(K, 0, 0, [])
    assert rank(Z) == 0
    assert kernel_basis(Z) == []
    assert Z.inverse().rows == 0
    assert Z.det() == K.one
