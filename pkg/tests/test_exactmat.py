import random

import pytest
from oracles import charpoly_signature, cofactor_det, random_matrix, random_symmetric

from steincalc.exactmat import (
    IntMatrix,
    determinant,
    is_negative_definite,
    signature,
    smith_diagonal,
    smith_normal_form,
)


def snf_reconstructs(M):
    """left @ M @ right equals the diagonal form; transforms unimodular."""
    form = smith_normal_form(M)
    product = form.left @ M @ form.right
    assert product == form.diagonal_matrix(M.nrows, M.ncols)
    assert abs(determinant(form.left)) == 1
    assert abs(determinant(form.right)) == 1
    d = form.diagonal
    assert all(x >= 0 for x in d)
    nonzero = [x for x in d if x != 0]
    assert all(a <= b and b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    assert list(d) == sorted(d, key=lambda x: (x == 0, x)) or all(
        x == 0 for x in d[len(nonzero) :]
    )
    return form


class TestSmithNormalForm:
    def test_coprime_diagonal(self):
        form = smith_normal_form(IntMatrix.diagonal([2, 3]))
        assert form.diagonal == (1, 6)

    def test_zero_matrix(self):
        form = smith_normal_form(IntMatrix.zeros(2, 2))
        assert form.diagonal == (0, 0)

    def test_hyperbolic_block(self):
        # hand row-reduction: [[0,1],[1,2]] ~ diag(1,1)
        M = IntMatrix([[0, 1], [1, 2]])
        form = snf_reconstructs(M)
        assert form.diagonal == (1, 1)

    def test_random_reconstruction(self):
        rng = random.Random(20240)
        for _ in range(150):
            m = rng.randint(1, 8)
            n = rng.randint(1, 8)
            snf_reconstructs(random_matrix(rng, m, n))

    def test_rectangular(self):
        snf_reconstructs(IntMatrix([[2, 4, 6]]))
        snf_reconstructs(IntMatrix([[2], [4], [6]]))

    def test_deterministic(self):
        rng = random.Random(5)
        M = random_matrix(rng, 6, 6)
        assert smith_normal_form(M) == smith_normal_form(M)
        assert smith_diagonal(M) == smith_normal_form(M).diagonal

    def test_det_is_product_of_diagonal(self):
        rng = random.Random(77)
        for _ in range(80):
            n = rng.randint(1, 4)
            M = random_matrix(rng, n, n)
            d = smith_diagonal(M)
            prod = 1
            for x in d:
                prod *= x
            det = cofactor_det(M.to_lists())
            assert abs(det) == prod
            assert determinant(M) == det


class TestDeterminant:
    def test_identity(self):
        assert determinant(IntMatrix.identity(3)) == 1

    def test_hand_cofactors(self):
        assert determinant(IntMatrix([[0, 1], [1, 2]])) == -1
        assert determinant(IntMatrix([[-2, 1, 1], [1, -2, 0], [1, 0, -2]])) == -4

    def test_empty(self):
        assert determinant(IntMatrix([])) == 1

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            determinant(IntMatrix([[1, 2]]))

    def test_against_cofactor_oracle(self):
        rng = random.Random(99)
        for _ in range(120):
            n = rng.randint(1, 6)
            M = random_matrix(rng, n, n)
            assert determinant(M) == cofactor_det(M.to_lists())


class TestSignature:
    def test_diagonal(self):
        assert signature(IntMatrix.diagonal([-2, -2])) == -2

    def test_hyperbolic_pair(self):
        # congruence diagonalization: one positive, one negative
        assert signature(IntMatrix([[0, 1], [1, -2]])) == 0

    def test_three_by_three(self):
        assert signature(IntMatrix([[-2, 1, 1], [1, -2, 0], [1, 0, -2]])) == -3

    def test_non_symmetric_rejected(self):
        with pytest.raises(ValueError):
            signature(IntMatrix([[0, 1], [2, 0]]))

    def test_against_charpoly_oracle(self):
        rng = random.Random(1234)
        for _ in range(250):
            M = random_symmetric(rng, rng.randint(1, 7), bound=5)
            assert signature(M) == charpoly_signature(M.to_lists())

    def test_signature_bounded_by_rank(self):
        rng = random.Random(4321)
        for _ in range(100):
            M = random_symmetric(rng, rng.randint(1, 6))
            rank = sum(1 for d in smith_diagonal(M) if d != 0)
            assert abs(signature(M)) <= rank


class TestNegativeDefinite:
    def test_alternating_minors(self):
        # minors -2, 3, -4 alternate
        assert is_negative_definite(IntMatrix([[-2, 1, 1], [1, -2, 0], [1, 0, -2]]))

    def test_zero_diagonal_entry(self):
        assert not is_negative_definite(IntMatrix([[0, 1], [1, 2]]))

    def test_single_entry(self):
        assert is_negative_definite(IntMatrix.diagonal([-1]))

    def test_zero_leading_minor_fallback(self):
        assert not is_negative_definite(IntMatrix([[0, 1], [1, 0]]))
        assert not is_negative_definite(IntMatrix([[0, 0], [0, -1]]))

    def test_non_symmetric_rejected(self):
        with pytest.raises(ValueError):
            is_negative_definite(IntMatrix([[1, 2], [0, 1]]))

    def test_implies_signature_and_det_sign(self):
        rng = random.Random(2718)
        found = 0
        for _ in range(300):
            n = rng.randint(1, 5)
            M = random_symmetric(rng, n, bound=3)
            if is_negative_definite(M):
                found += 1
                assert signature(M) == -n
                det = determinant(M)
                assert det != 0 and (det > 0) == (n % 2 == 0)
        assert found > 5

    def test_agrees_with_signature_everywhere(self):
        rng = random.Random(606)
        for _ in range(200):
            n = rng.randint(1, 5)
            M = random_symmetric(rng, n, bound=3)
            assert is_negative_definite(M) == (signature(M) == -n)


class TestIntMatrix:
    def test_ragged_rejected(self):
        with pytest.raises(ValueError):
            IntMatrix([[1, 2], [3]])

    def test_matmul_shape_check(self):
        with pytest.raises(ValueError):
            IntMatrix([[1, 2]]) @ IntMatrix([[1, 2]])

    def test_transpose_roundtrip(self):
        M = IntMatrix([[1, 2, 3], [4, 5, 6]])
        assert M.transpose().transpose() == M
