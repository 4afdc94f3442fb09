"""Matrix representation: construction fixtures, homomorphism, intertwiner."""

import itertools
import math
import random
from fractions import Fraction

import pytest

import sturmlab as sl
from sturmlab.matrep import identity_matrix, mat_mul
from conftest import make_slope

SIGMA_52314 = sl.FracPermutation(5, (5, 2, 3, 1, 4))

AUX_52314 = [
    [1, 1, 1, 1, 0, 0],
    [1, 1, 0, 0, 1, 1],
    [0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 1, 0],
    [1, 0, 0, 0, 0, 1],
]

MATRIX_52314 = (
    (1, 1, 1, 1, 0),
    (0, 0, -1, -1, 0),
    (0, 0, 1, 0, 0),
    (0, 0, 0, 1, 1),
    (0, -1, -1, -1, -1),
)

MATRIX_INV_E_6 = (
    (1, 1, 1, 0, 0, 0),
    (0, 0, 0, 1, 1, 0),
    (0, -1, -1, -1, -1, 0),
    (0, 1, 1, 1, 0, 0),
    (0, 0, 0, 0, 1, 1),
    (0, 0, -1, -1, -1, -1),
)

ADJ_43_S5 = (
    (1, 0, 0, 0, 0),
    (0, 1, 0, 0, 0),
    (0, 0, 1, 1, 0),
    (0, 0, 0, -1, 0),
    (0, 0, 0, 1, 1),
)

MATRIX_PHI_5 = (
    (1, 1, 1, 1, 0),
    (0, 0, -1, -1, 0),
    (0, 0, 1, 1, 1),
    (0, 0, 0, -1, -1),
    (0, -1, -1, 0, 0),
)

# a size-10 permutation whose column matrix shows three "snakes"; its
# diagonal sum is (first-column weight) - 1 + (number of fixed points)
SNAKE_SIGMA = sl.FracPermutation(10, (1, 4, 5, 8, 2, 3, 9, 6, 10, 7))

SNAKE_L = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 1],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 1, 1, 1, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0],
    [1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0],
]


def all_perms(n):
    return [sl.FracPermutation(n, line) for line in itertools.permutations(range(1, n + 1))]


def random_perm(rng, n):
    line = list(range(1, n + 1))
    rng.shuffle(line)
    return sl.FracPermutation(n, tuple(line))


def det_fraction_gauss(rows):
    """Independent determinant oracle: plain Gaussian elimination over Q."""
    a = [[Fraction(x) for x in row] for row in rows]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            factor = a[r][col] * inv
            if factor:
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    assert det.denominator == 1
    return det.numerator


def test_descent_sets():
    assert sl.descent_set(SIGMA_52314) == frozenset({1, 2, 5})
    assert sl.descent_set(sl.FracPermutation(6, (1, 3, 5, 4, 2, 6))) == frozenset({1, 3, 5})
    assert sl.descent_set(sl.FracPermutation.identity(4)) == frozenset({1})


def test_aux_matrix_fixture():
    aux = sl.aux_matrix(SIGMA_52314)
    assert aux.rows() == AUX_52314
    # first-column weight 3, minus 1, plus the 2 fixed points of [5,2,3,1,4]
    assert aux.trace() == 4


def test_factor_matrix_fixture():
    assert sl.factor_matrix(SIGMA_52314).entries == MATRIX_52314


def test_matrix_inv_e_6_both_routes():
    inv_e = sl.EulerEInv()
    via_perm = sl.m_from_alpha(inv_e, 6, via="perm")
    via_factors = sl.m_from_alpha(inv_e, 6, via="factors")
    assert via_perm.entries == MATRIX_INV_E_6
    assert via_factors.entries == MATRIX_INV_E_6


def test_m_from_alpha_routes_agree(named_slope):
    name, alpha = named_slope
    for n in (1, 2, 3, 7, 12):
        assert (
            sl.m_from_alpha(alpha, n, via="perm").entries
            == sl.m_from_alpha(alpha, n, via="factors").entries
        )


def test_m_from_alpha_rejects_unknown_route():
    with pytest.raises(ValueError):
        sl.m_from_alpha(sl.phi(), 4, via="magic")


def test_adjacent_transposition_is_identity_plus_v():
    adj = sl.FracPermutation(5, (1, 2, 4, 3, 5))
    assert sl.factor_matrix(adj).entries == ADJ_43_S5


def test_matrix_phi_5_fixture():
    assert sl.factor_matrix(sl.pi_direct(sl.phi(), 5)).entries == MATRIX_PHI_5


def test_worked_product():
    adj = sl.FracPermutation(5, (1, 2, 4, 3, 5))
    pi5 = sl.pi_direct(sl.phi(), 5)
    composed = adj.compose(pi5)
    assert composed.one_line == (5, 2, 3, 1, 4)
    prod = mat_mul(ADJ_43_S5, MATRIX_PHI_5)
    assert prod == sl.factor_matrix(composed).rows()


def test_homomorphism_s3_exhaustive():
    for tau in all_perms(3):
        for sigma in all_perms(3):
            prod = mat_mul(sl.factor_matrix(tau).rows(), sl.factor_matrix(sigma).rows())
            assert prod == sl.factor_matrix(tau.compose(sigma)).rows()


def test_perm_matrix_same_composition_direction():
    rng = random.Random(417)
    for _ in range(50):
        tau, sigma = random_perm(rng, 6), random_perm(rng, 6)
        prod = mat_mul(sl.perm_matrix(tau), sl.perm_matrix(sigma))
        assert prod == [list(r) for r in sl.perm_matrix(tau.compose(sigma))]


def test_perm_matrix_columns_are_images():
    sigma = sl.FracPermutation(4, (3, 1, 4, 2))
    p = sl.perm_matrix(sigma)
    for j in range(4):
        col = [p[i][j] for i in range(4)]
        assert col.index(1) + 1 == sigma(j + 1)
        assert sum(col) == 1


def test_trace_counts_fixed_points_s4():
    for sigma in all_perms(4):
        m_tr, _ = sl.char_trace(sigma)
        assert m_tr == len(sigma.fixed_points())


def test_snake_example_matrices_and_traces():
    aux = sl.aux_matrix(SNAKE_SIGMA)
    assert aux.rows() == SNAKE_L
    first_col_weight = sum(row[0] for row in SNAKE_L)
    m_tr, l_tr = sl.char_trace(SNAKE_SIGMA)
    assert l_tr == 3
    assert l_tr == first_col_weight - 1 + len(SNAKE_SIGMA.fixed_points())
    assert m_tr == len(SNAKE_SIGMA.fixed_points()) == 1


def test_det_is_sign_s4():
    for sigma in all_perms(4):
        assert sl.det_exact(sl.factor_matrix(sigma)) == sl.sign_direct(sigma)


def test_det_exact_against_gaussian_oracle():
    rng = random.Random(90125)
    for _ in range(60):
        n = rng.randint(1, 6)
        rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        assert sl.det_exact(rows) == det_fraction_gauss(rows)


def test_det_exact_rejects_non_square():
    with pytest.raises(ValueError):
        sl.det_exact([[1, 2, 3], [4, 5, 6]])


def test_reconstruct_roundtrip():
    rng = random.Random(2045)
    for _ in range(100):
        sigma = random_perm(rng, rng.randint(1, 10))
        back = sl.reconstruct_sigma(sl.factor_matrix(sigma))
        assert back.one_line == sigma.one_line


def test_reconstruct_rejects_tampered_matrix():
    sigma = sl.FracPermutation(5, (5, 2, 4, 1, 3))
    rows = [list(r) for r in sl.factor_matrix(sigma).entries]
    rows[0][0] += 1
    with pytest.raises(sl.NotInImage):
        sl.reconstruct_sigma(rows)
    with pytest.raises(sl.NotInImage):
        sl.reconstruct_sigma([[0] * 5 for _ in range(5)])


def test_intertwiner_conjugates_to_permutation_matrices():
    for a, b in ((Fraction(0), Fraction(1)), (Fraction(1), Fraction(1)), (Fraction(2), Fraction(-1))):
        q = sl.intertwiner(4, a, b)
        qm, qi = q.matrix(), q.inverse()
        for sigma in all_perms(4):
            conj = mat_mul(mat_mul(qi, sl.factor_matrix(sigma).rows()), qm)
            want = [[Fraction(x) for x in row] for row in sl.perm_matrix(sigma)]
            assert conj == want


def test_intertwiner_det_formula():
    for n in range(1, 11):
        for a, b in ((Fraction(0), Fraction(1)), (Fraction(3), Fraction(2)), (Fraction(-1), Fraction(5))):
            q = sl.IntertwinerQ(n, a, b)
            assert q.det() == (n * a + b) * b ** (n - 1)
            assert det_fraction_gauss(q.matrix()) == q.det()


def test_intertwiner_inverse_is_inverse():
    q = sl.intertwiner(5, Fraction(1), Fraction(2))
    prod = mat_mul(q.matrix(), q.inverse())
    assert prod == identity_matrix(5)


def test_intertwiner_rejects_singular_parameters():
    with pytest.raises(sl.SingularParameters):
        sl.intertwiner(3, Fraction(1), Fraction(0))
    with pytest.raises(sl.SingularParameters):
        sl.intertwiner(3, Fraction(-1, 3), Fraction(1))


def test_simplex_volume_small():
    alpha = make_slope("phi")
    for n in range(1, 7):
        assert sl.simplex_volume(alpha, n) == Fraction(1, math.factorial(n))


def test_factor_matrix_entries_bounded():
    rng = random.Random(7)
    for _ in range(30):
        sigma = random_perm(rng, 8)
        assert all(x in (-1, 0, 1) for row in sl.factor_matrix(sigma).entries for x in row)
        assert all(x in (0, 1) for row in sl.aux_matrix(sigma).columns for x in row)
