from fractions import Fraction
from math import comb

import numpy as np
import pytest
from hypothesis import given, strategies as st

from intsubdiv import (IntMatrix, UnsupportedMethod, f_interval, f_matrix, f_vector, h_from_f,
                       h_interval, h_matrix, h_matrix_inverse, interval_complex, is_reciprocal,
                       parse_facets, r_matrix)
from intsubdiv.linalg import det, kernel, rank

R4 = [
    [1, 0, 0, 0, 0],
    [61, 46, 32, 22, 15],
    [115, 124, 128, 124, 115],
    [15, 22, 32, 46, 61],
    [0, 0, 0, 0, 1],
]


def test_f_matrix_small():
    assert f_matrix(2).rows == ((1, 0, 0), (0, 1, 3), (0, 0, 4))
    assert f_matrix(2) @ (1, 3, 3) == (1, 12, 12)


def test_f_matrix_diagonal_and_triangular():
    F = f_matrix(4)
    assert [F[i, i] for i in range(5)] == [1, 1, 4, 24, 192]
    assert all(F[k, l] == 0 for k in range(5) for l in range(k))


def test_f_matrix_acts_like_closed_form():
    assert f_matrix(3) @ (1, 3, 3, 1) == (1, 19, 42, 24)
    assert f_matrix(4) @ (1, 5, 10, 6, 1) == (1, 92, 380, 480, 192)


def test_hollow_triangle_constructive():
    K = parse_facets("1 2\n2 3\n1 3")
    L, _ = interval_complex(K)
    assert f_vector(L) == (1, 12, 12)
    assert h_from_f(f_vector(L)) == h_interval((1, 1, 1)) == (1, 10, 1)


def test_h_matrices():
    assert h_matrix(1).rows == ((1, 0), (-1, 1))
    assert h_matrix(4) @ (1, 5, 10, 6, 1) == (1, 1, 1, -3, 1)
    assert h_matrix_inverse(4) @ (1, 1, 1, -3, 1) == (1, 5, 10, 6, 1)


@pytest.mark.parametrize("d", range(0, 11))
def test_h_inverse_pair(d):
    I = IntMatrix.identity(d + 1)
    assert h_matrix(d) @ h_matrix_inverse(d) == I
    assert h_matrix_inverse(d) @ h_matrix(d) == I


@pytest.mark.parametrize("d", range(0, 10))
def test_nested_f(d):
    assert f_matrix(d + 1).delete_last() == f_matrix(d)


def test_r4_printed():
    assert [list(r) for r in r_matrix(4).rows] == R4
    assert [list(r) for r in r_matrix(4, "algebraic").rows] == R4
    assert all(sum(R4[r][s] for r in range(5)) == 192 for s in range(5))


def test_r2():
    assert r_matrix(2).rows == ((1, 0, 0), (3, 4, 3), (0, 0, 1))


@pytest.mark.parametrize("d", range(0, 8))
def test_dual_characterization(d):
    assert r_matrix(d, "algebraic") == r_matrix(d, "eulerian")


@pytest.mark.parametrize("d", range(1, 9))
def test_r_unit_rows(d):
    R = r_matrix(d)
    assert R.rows[0] == tuple(int(i == 0) for i in range(d + 1))
    assert R.rows[d] == tuple(int(i == d) for i in range(d + 1))


def test_unknown_r_method():
    with pytest.raises(UnsupportedMethod):
        r_matrix(3, "guess")


@pytest.mark.parametrize("h, want", [
    ((1, 1, 1, -3, 1), (1, 88, 110, -8, 1)),
    ((1, 0, 0, 0), (1, 16, 7, 0)),
    ((1, 1, 1), (1, 10, 1)),
])
def test_h_interval_examples(h, want):
    assert h_interval(h) == want
    assert h_interval(h, "algebraic") == want


def test_monotonicity_counterexample():
    h = (1, 1, 1, -3, 1)
    hi = h_interval(h)
    assert hi[3] < h[3]


dims = st.integers(1, 8)


@given(dims.flatmap(lambda d: st.lists(st.integers(0, 10 ** 4), min_size=d, max_size=d)))
def test_commuting_square(tail):
    f = (1, *tail)
    assert h_from_f(f_interval(f)) == h_interval(h_from_f(f))


@given(dims.flatmap(lambda d: st.lists(st.integers(0, 50), min_size=d, max_size=d)))
def test_monotone_on_nonnegative(tail):
    h = (1, *tail)
    assert all(a >= b for a, b in zip(h_interval(h), h))


@given(dims.flatmap(lambda d: st.lists(st.integers(-20, 20), min_size=(d + 1) // 2, max_size=(d + 1) // 2)
                    .map(lambda half: (d, half))))
def test_reciprocity_preserved(arg):
    d, half = arg
    h = [1] + list(half)
    full = [0] * (d + 1)
    for i, x in enumerate(h[: d + 1]):
        full[i] = full[d - i] = x
    assert is_reciprocal(full)
    assert is_reciprocal(h_interval(full))


small_mats = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n))


@given(small_mats)
def test_det_and_rank_against_numpy(rows):
    M = IntMatrix(rows)
    a = np.array(rows, dtype=float)
    assert det(M) == round(np.linalg.det(a))
    assert rank(M) == np.linalg.matrix_rank(a)


@given(small_mats)
def test_kernel_vectors_annihilate(rows):
    M = IntMatrix(rows)
    basis = kernel(M)
    assert len(basis) == len(rows) - rank(M)
    for v in basis:
        assert all(x == 0 for x in M @ v)


def test_det_rational():
    assert det(IntMatrix([[Fraction(1, 2), 0], [0, 4]])) == 2
    assert comb(4, 2) == det(IntMatrix([[6]]))


def test_matrix_dumps():
    M = h_matrix(1)
    assert M.to_tsv() == "1\t0\n-1\t1\n"
    assert M.to_json() == {"dim": 1, "rows": [[1, 0], [-1, 1]]}
