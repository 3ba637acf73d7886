from functools import lru_cache
from itertools import permutations, product
from math import factorial

import pytest
from hypothesis import given, strategies as st

from intsubdiv import (IntPolynomial, SignedPermutation, UnsupportedMethod, a_poly, b_poly,
                       bminus_poly, bplus_poly, descent_count_B, e_r, enumerate_B, is_real_rooted,
                       t_poly)
from intsubdiv.signed import descent_count_A, eulerian, table_rows

T = IntPolynomial([0, 1])
ONE_MINUS_T = IntPolynomial([1, -1])


@lru_cache(maxsize=None)
def brute_B(d):
    """Independent oracle: (first, last>0) -> coefficient list, from itertools."""
    table = {}
    for perm in permutations(range(1, d + 1)):
        for signs in product((1, -1), repeat=d):
            w = [s * p for s, p in zip(signs, perm)]
            des = sum(1 for a, b in zip([0] + w, w) if a > b)
            row = table.setdefault((w[0], w[-1] > 0), [0] * (d + 1))
            row[des] += 1
    return table


def oracle_poly(d, j, positive):
    return IntPolynomial(brute_B(d).get((j, positive), ()))


def letters(d):
    return [x for x in range(-d, d + 1) if x]


@pytest.mark.parametrize("w, des", [((1, 2, 3), 0), ((-1, 2), 1), ((2, 1, 3), 1), ((-3, -2, -1), 1)])
def test_descent_count(w, des):
    assert descent_count_B(SignedPermutation(w)) == des


def test_signed_permutation_validation():
    with pytest.raises(ValueError):
        SignedPermutation((1, -1))
    with pytest.raises(ValueError):
        SignedPermutation((0, 1))


def test_enumerate_examples():
    assert list(enumerate_B(2, first=1, last_sign="+")) == [(1, 2)]
    assert list(enumerate_B(1, first=-1, last_sign="+")) == []
    assert sum(1 for _ in enumerate_B(3)) == 48


@pytest.mark.parametrize("d", range(1, 5))
def test_enumerate_counts_and_order(d):
    full = list(enumerate_B(d))
    assert len(full) == len(set(full)) == 2 ** d * factorial(d)
    assert full == sorted(full)
    for j in letters(d):
        assert sum(1 for _ in enumerate_B(d, first=j)) == 2 ** (d - 1) * factorial(d - 1)
        if d >= 2:
            for s in "+-":
                assert sum(1 for _ in enumerate_B(d, j, s)) == 2 ** (d - 2) * factorial(d - 1)


@pytest.mark.parametrize("j, want", [
    (1, [1, 16, 7]), (2, [0, 14, 10]), (3, [0, 10, 14]), (4, [0, 7, 16, 1])])
def test_bplus_listed_d4(j, want):
    assert bplus_poly(4, j).coeffs == tuple(want)


def test_small_examples():
    assert bplus_poly(3, 2).coeffs == (0, 4)
    assert bplus_poly(1, -1).poly.is_zero and bplus_poly(1, 1).coeffs == (1,)
    assert bminus_poly(1, 1).poly.is_zero
    assert bminus_poly(2, 1).coeffs == (0, 1)
    assert bminus_poly(4, 1).coeffs == (0, 7, 16, 1)
    assert b_poly(2, 1).coeffs == (1, 1)
    assert b_poly(1, 1).coeffs == (1,)
    assert sum(b_poly(4, 1).coeffs) == 48
    assert a_poly(2, 1).coeffs == (1,) and a_poly(2, 2).coeffs == (0, 1)
    assert a_poly(3, 1).coeffs == (1, 1)
    assert a_poly(4, 1).coeffs == (1, 4, 1) == a_poly(4, 1, "recurrence").coeffs
    assert t_poly(2, 1).coeffs == (1, 1)
    assert t_poly(1, 1).coeffs == (1,)
    assert t_poly(4, 1).coeffs == (1, 7, 16, 16, 7, 1)


def test_unsupported_methods():
    with pytest.raises(UnsupportedMethod):
        bplus_poly(3, -1, "e2")
    with pytest.raises(UnsupportedMethod):
        a_poly(3, 3, "recurrence")
    with pytest.raises(UnsupportedMethod):
        bplus_poly(3, 1, "magic")
    with pytest.raises(ValueError):
        bplus_poly(3, 4)
    with pytest.raises(ValueError):
        bplus_poly(3, 0)


@pytest.mark.parametrize("d", range(1, 8))
def test_methods_agree_with_oracle(d):
    for j in letters(d):
        want_p, want_m = oracle_poly(d, j, True), oracle_poly(d, j, False)
        assert bplus_poly(d, j, "recurrence").poly == want_p
        assert bplus_poly(d, j, "enumerate").poly == want_p
        assert bminus_poly(d, j, "reversal").poly == want_m
        assert bminus_poly(d, j, "enumerate").poly == want_m
        if j > 0:
            assert bplus_poly(d, j, "e2").poly == want_p
            assert bminus_poly(d, j, "e2").poly == want_m


@pytest.mark.parametrize("d", range(2, 9))
def test_row_sum_and_symmetry(d):
    for s in range(1, d + 1):
        p = bplus_poly(d, s).poly
        assert sum(p.coeffs) == 2 ** (d - 2) * factorial(d - 1)
        q = bplus_poly(d, d - s + 1).poly
        for r in range(d):
            assert p[r] == q[d - r - 1]
        assert sum(b_poly(d, s).coeffs) == 2 ** (d - 1) * factorial(d - 1)


@pytest.mark.parametrize("d", range(1, 8))
def test_reversal_identities(d):
    for j in letters(d):
        assert bminus_poly(d, j).poly == bplus_poly(d, -j).poly.reverse(d)
        assert bplus_poly(d, j).poly == bminus_poly(d, -j).poly.reverse(d)


@pytest.mark.parametrize("d", range(2, 9))
def test_bplus_bminus_recurrences_below_top_letter(d):
    for j in range(1, d):
        P1, M1 = bplus_poly(d - 1, j).poly, bminus_poly(d - 1, j).poly
        assert bplus_poly(d, j).poly == \
            2 * (d - 2) * T * P1 + 2 * T * ONE_MINUS_T * P1.derivative() + P1 + M1
        assert bminus_poly(d, j).poly == \
            2 * (d - 2) * T * M1 + 2 * T * ONE_MINUS_T * M1.derivative() + T * (P1 + M1)


def test_bplus_recurrence_breaks_at_top_letter():
    # at j = d the letter j does not exist in rank d-1, so the right side vanishes
    for d in range(2, 6):
        assert not bplus_poly(d, d).poly.is_zero


@pytest.mark.parametrize("d", range(2, 9))
def test_a_recurrence(d):
    for j in range(1, d):
        A1 = a_poly(d - 1, j).poly
        assert a_poly(d, j).poly == IntPolynomial([1, d - 2]) * A1 + T * ONE_MINUS_T * A1.derivative()


@pytest.mark.parametrize("d", range(1, 9))
def test_t_equals_shifted_a(d):
    for j in range(1, d + 1):
        assert IntPolynomial([1, 1]) ** (d - 1) * a_poly(d, j).poly == t_poly(d, j).poly


def _t_rhs(prev, quad):
    return IntPolynomial([1, 1, quad]) * prev + T * IntPolynomial([1, 0, -1]) * prev.derivative()


@pytest.mark.parametrize("d", range(2, 9))
def test_t_recurrence_with_quadratic_coefficient_2_d_minus_2(d):
    for j in range(1, d):
        assert t_poly(d, j).poly == _t_rhs(t_poly(d - 1, j).poly, 2 * (d - 2))


def test_t_recurrence_with_coefficient_d_minus_2_fails_from_d3():
    assert t_poly(2, 1).poly == _t_rhs(t_poly(1, 1).poly, 0)
    assert t_poly(3, 1).poly != _t_rhs(t_poly(2, 1).poly, 1)


@pytest.mark.parametrize("d", range(1, 9))
def test_real_rooted(d):
    for j in range(1, d + 1):
        for p in (bplus_poly(d, j).poly, bminus_poly(d, j).poly, a_poly(d, j).poly):
            if not p.is_zero:
                assert is_real_rooted(p)


@given(st.lists(st.integers(0, 6), min_size=1, max_size=7), st.integers(1, 4))
def test_e_r_preserves_real_rootedness(roots, r):
    p = IntPolynomial([1])
    for a in roots:
        p = p * IntPolynomial([a, 1])
    q = e_r(p, r)
    if not q.is_zero:
        assert is_real_rooted(q)


def test_type_a_descents():
    assert descent_count_A((3, 1, 2)) == 1
    counts = [0] * 4
    for w in permutations(range(1, 5)):
        counts[descent_count_A(w)] += 1
    assert counts == [1, 11, 11, 1]


def test_dispatch_and_table_rows():
    assert eulerian("b+", 4, 1).coeffs == (1, 16, 7)
    rows = list(table_rows("B+", 4, 1))
    assert rows == [(4, 1, 0, 1), (4, 1, 1, 16), (4, 1, 2, 7)]
    assert {r[1] for r in table_rows("T", 3)} == {1, 2, 3}
