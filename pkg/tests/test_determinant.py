import random

import pytest

from schubspec.determinant import det_cofactor, det_fraction_free
from schubspec.rings import CyclotomicInteger, euler_phi


def test_theorem_matrix_instance():
    # the even-case 2x2 path matrix at n = 6 has determinant C_2^2
    assert det_fraction_free([[0, -2], [2, 2]]) == 4


def test_identity():
    for n in (1, 2, 5):
        eye = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        assert det_fraction_free(eye) == 1


def test_zero_column():
    assert det_fraction_free([[0, 1], [0, 5]]) == 0


def test_swap_sign():
    assert det_fraction_free([[0, 1], [1, 0]]) == -1


def test_matches_cofactor_on_random_integers():
    rng = random.Random(1)
    for n in range(1, 5):
        for _ in range(80):
            m = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
            assert det_fraction_free(m) == det_cofactor(m)


def test_matches_cofactor_on_random_symmetric():
    rng = random.Random(2)
    for n in range(2, 6):
        for _ in range(60):
            m = [[0] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    m[i][j] = m[j][i] = rng.randint(-4, 4)
            assert det_fraction_free(m) == det_cofactor(m)


def test_matches_cofactor_over_cyclotomic_ring():
    rng = random.Random(3)
    for k in (3, 4, 6):
        size = euler_phi(k)
        for n in range(1, 5):
            for _ in range(25):
                m = [
                    [
                        CyclotomicInteger(k, [rng.randint(-3, 3) for _ in range(size)])
                        for _ in range(n)
                    ]
                    for _ in range(n)
                ]
                assert det_fraction_free(m) == det_cofactor(m)


def test_rejects_non_square():
    with pytest.raises(ValueError):
        det_fraction_free([[1, 2]])
    with pytest.raises(ValueError):
        det_fraction_free([])
