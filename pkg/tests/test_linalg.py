import itertools
import random
from fractions import Fraction

import pytest

from liegcs.linalg import Matrix, GaussianRational, GAUSS_I, rref, pfaffian


def rand_fraction(rng, bound=5):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def rand_matrix(rng, rows, cols, bound=5):
    return Matrix([[rand_fraction(rng, bound) for _ in range(cols)]
                   for _ in range(rows)])


def rand_skew(rng, n, bound=5):
    M = Matrix.zero(n, n)
    for i in range(n):
        for j in range(i + 1, n):
            v = rand_fraction(rng, bound)
            M.data[i][j] = v
            M.data[j][i] = -v
    return M


def minor_rank(M):
    """Independent rank oracle: largest order of a nonvanishing minor.

    Skips column subsets containing an identically zero column before
    expanding any determinant.
    """
    rows, cols = M.rows, M.cols
    nonzero_cols = [j for j in range(cols) if any(M.data[i][j] for i in range(rows))]
    best = 0
    for order in range(1, min(rows, cols) + 1):
        found = False
        for cs in itertools.combinations(range(cols), order):
            if any(c not in nonzero_cols for c in cs):
                continue
            for rs in itertools.combinations(range(rows), order):
                sub = Matrix([[M.data[r][c] for c in cs] for r in rs])
                if laplace_det(sub):
                    found = True
                    break
            if found:
                break
        if found:
            best = order
        else:
            break
    return best


def laplace_det(M):
    n = M.rows
    if n == 1:
        return M.data[0][0]
    acc = Fraction(0)
    for j in range(n):
        a = M.data[0][j]
        if not a:
            continue
        sub = Matrix([[M.data[i][c] for c in range(n) if c != j]
                      for i in range(1, n)])
        term = a * laplace_det(sub)
        acc += term if j % 2 == 0 else -term
    return acc


def test_rref_identity():
    rank, R, kernel = rref(Matrix.identity(3))
    assert rank == 3
    assert kernel == []
    assert R == Matrix.identity(3)


def test_rref_zero_matrix():
    rank, R, kernel = rref(Matrix.zero(2, 5))
    assert rank == 0
    assert len(kernel) == 5


def test_rref_kernel_is_exact():
    rng = random.Random(7)
    for _ in range(20):
        M = rand_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
        rank, _, kernel = rref(M)
        assert rank + len(kernel) == M.cols
        for v in kernel:
            assert not any(M.apply(v))


def test_rank_equals_transpose_rank():
    rng = random.Random(11)
    for _ in range(25):
        M = rand_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
        assert M.rank() == M.transpose().rank()


def test_ce_d1_rank_against_minor_oracle():
    # first differential of the cotangent algebra of R x h3: rank 3, so
    # its b_1 is 8 - 3 = 5
    from liegcs.lie import LieAlgebra, cotangent
    from liegcs.cohomology import ce_differential
    rxh3 = LieAlgebra(4, {(1, 2): {3: Fraction(1)}}, name="R x h3")
    d1 = ce_differential(cotangent(rxh3).total, 1)
    assert d1.rank() == 3
    assert minor_rank(d1) == 3


def test_pfaffian_symplectic_2x2():
    M = Matrix([[0, 1], [-1, 0]])
    assert pfaffian(M) == 1


def test_pfaffian_block_diagonal_4x4():
    M = Matrix.zero(4, 4)
    M.data[0][1], M.data[1][0] = Fraction(1), Fraction(-1)
    M.data[2][3], M.data[3][2] = Fraction(1), Fraction(-1)
    assert pfaffian(M) == 1


def test_pfaffian_squares_to_determinant():
    rng = random.Random(3)
    for n in (2, 4, 6):
        for _ in range(8):
            M = rand_skew(rng, n)
            assert pfaffian(M) ** 2 == M.det()


def test_pfaffian_rejects_bad_input():
    with pytest.raises(ValueError):
        pfaffian(Matrix.zero(3, 3))
    with pytest.raises(ValueError):
        pfaffian(Matrix.identity(2))


def test_gaussian_field_axioms():
    rng = random.Random(5)
    for _ in range(40):
        a = GaussianRational(rand_fraction(rng), rand_fraction(rng))
        b = GaussianRational(rand_fraction(rng), rand_fraction(rng))
        assert (a + b).conjugate() == a.conjugate() + b.conjugate()
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()
        assert a.conjugate().conjugate() == a
        if a:
            assert a * a.inverse() == 1


def test_gaussian_i_squares_to_minus_one():
    assert GAUSS_I * GAUSS_I == -1


def test_inverse_round_trip():
    rng = random.Random(13)
    for _ in range(10):
        M = rand_matrix(rng, 4, 4)
        if not M.det():
            continue
        assert M * M.inverse() == Matrix.identity(4)
