from functools import lru_cache
from math import comb
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, strategies as st

from intsubdiv import (FVector, SimplicialComplex, chain_count_Q, enumerate_intervals,
                       euler_characteristic, f_interval, f_interval_stirling, f_vector,
                       interval_complex, parse_facets)
from intsubdiv.complex import random_complex
from intsubdiv.subdivision import Interval, hasse_covers
from intsubdiv.transforms import b_entry


def chain_f_vector(K):
    """f-vector of the order complex by dynamic programming on the raw containment order.

    Independent of the Hasse-diagram walk used by the library: counts all
    chains with ``k`` elements ending at each interval.
    """
    ivs = enumerate_intervals(K)
    d = K.d
    ivs.sort(key=lambda iv: iv.rank)
    ending = []
    for i, top in enumerate(ivs):
        row = [0] * (d + 1)
        row[1] = 1
        for j in range(i):
            if ivs[j] < top:
                for k in range(1, d):
                    row[k + 1] += ending[j][k]
        ending.append(row)
    f = [1] + [sum(r[k] for r in ending) for k in range(1, d + 1)]
    return tuple(f)


def subset_f_vector(K):
    """Brute force: test every subset of intervals for being a chain."""
    ivs = enumerate_intervals(K)
    f = [1] + [0] * K.d
    for k in range(1, K.d + 1):
        for S in combinations(ivs, k):
            if all(a < b or b < a for a, b in combinations(S, 2)):
                f[k] += 1
    return tuple(f)


def q_oracle(k, alpha):
    """Chains of length k ending at the top of the interval poset of an alpha-set."""
    ground = range(alpha)
    elems = [(frozenset(X), frozenset(Y)) for r in range(alpha + 1) for Y in combinations(ground, r)
             for s in range(len(Y) + 1) for X in combinations(Y, s)]

    def below(p, q):
        return p != q and q[0] <= p[0] and p[1] <= q[1]

    @lru_cache(maxsize=None)
    def count(top, length):
        if length == 0:
            return 1
        return sum(count(p, length - 1) for p in elems if below(p, top))

    return count((frozenset(), frozenset(ground)), k)


def test_interval_order():
    a = Interval((1, 2), (1, 2))
    b = Interval((1,), (1, 2, 3))
    assert a < b and not b < a
    assert str(b) == "[1,123]"
    with pytest.raises(ValueError):
        Interval((), (1,))
    with pytest.raises(ValueError):
        Interval((4,), (1, 2))


@pytest.mark.parametrize("text, count", [("1 2 3", 19), ("1 2", 5), ("7", 1)])
def test_interval_counts(text, count):
    assert len(enumerate_intervals(parse_facets(text))) == count


def test_edge_intervals_listed():
    ivs = [str(iv) for iv in enumerate_intervals(parse_facets("1 2"))]
    assert ivs == ["[1,1]", "[1,12]", "[12,12]", "[2,12]", "[2,2]"]


def test_edge_subdivides_to_path():
    L, lab = interval_complex(parse_facets("1 2"))
    assert f_vector(L) == (1, 5, 4)
    degrees = sorted(sum(v in F for F in L.facets) for v in L.vertices)
    assert degrees == [1, 1, 2, 2, 2]


def test_triangle_subdivision_figure():
    L, lab = interval_complex(parse_facets("1 2 3"))
    assert f_vector(L) == (1, 19, 42, 24)
    assert len(lab) == 19


def test_vertex_subdivides_to_vertex():
    L, _ = interval_complex(parse_facets("5"))
    assert f_vector(L) == (1, 1)


def test_labels_are_order_preserving_and_deterministic():
    K = parse_facets("1 2 3\n3 4")
    L1, lab1 = interval_complex(K)
    L2, lab2 = interval_complex(parse_facets("3 4\n2 1 3"))
    assert L1 == L2 and lab1 == lab2
    keys = [(iv.lower, iv.upper) for iv in lab1.intervals]
    assert keys == sorted(keys)
    for i, iv in enumerate(lab1.intervals, start=1):
        assert lab1.label(iv) == i and lab1.interval(i) == iv


def test_sidecar_format():
    _, lab = interval_complex(parse_facets("1 2"))
    lines = lab.sidecar().splitlines()
    assert lines[1] == "2\t1\t1 2"
    assert len(lines) == 5


def test_hasse_covers_are_rank_one_steps():
    ivs = enumerate_intervals(parse_facets("1 2 3"))
    for i, up in enumerate(hasse_covers(ivs)):
        for j in up:
            assert ivs[j].rank == ivs[i].rank + 1 and ivs[i] < ivs[j]


@pytest.mark.parametrize("text", ["1 2", "1 2\n2 3", "1 2 3", "1 2\n3"])
def test_oracles_agree_on_tiny_complexes(text):
    K = parse_facets(text)
    L, _ = interval_complex(K)
    assert subset_f_vector(K) == chain_f_vector(K) == f_vector(L) == f_interval(f_vector(K))


def test_q_examples():
    assert chain_count_Q(0, 5) == 1
    assert chain_count_Q(2, 1) == 0
    assert chain_count_Q(1, 1) == 2
    assert chain_count_Q(2, 2) == 8


@pytest.mark.parametrize("alpha", range(5))
def test_q_matches_enumeration(alpha):
    for k in range(alpha + 2):
        assert chain_count_Q(k, alpha) == q_oracle(k, alpha)


@pytest.mark.parametrize("f, g", [
    ((1, 3, 3, 1), (1, 19, 42, 24)),
    ((1, 5, 10, 6, 1), (1, 92, 380, 480, 192)),
    ((1,), (1,)),
    ((1, 3, 3), (1, 12, 12)),
])
def test_f_interval_examples(f, g):
    assert f_interval(f) == g
    assert f_interval_stirling(f) == g


@pytest.mark.parametrize("seed", range(40))
def test_oracle_equivalence_random(seed):
    K = random_complex(np.random.default_rng(seed))
    L, _ = interval_complex(K)
    assert f_vector(L) == f_interval(f_vector(K))


fvecs = st.integers(0, 10).flatmap(
    lambda d: st.lists(st.integers(0, 10 ** 6), min_size=d, max_size=d).map(lambda t: FVector((1, *t))))


@given(fvecs)
def test_forms_agree(f):
    assert f_interval(f) == f_interval_stirling(f)


@given(fvecs)
def test_vertex_count_identity(f):
    assert f_interval(f)[1 if len(f) > 1 else 0] == (
        sum((2 ** k - 1) * f[k] for k in range(len(f))) if len(f) > 1 else 1)


@given(fvecs)
def test_euler_characteristic_preserved(f):
    assert euler_characteristic(f_interval(f)) == euler_characteristic(f)


@pytest.mark.parametrize("d", range(2, 11))
def test_b_recurrence(d):
    for r in range(1, d):
        for l in range(1, d + 1):
            lhs = sum(2 ** i * comb(l, i) * b_entry(r, l - i) for i in range(1, l + 1))
            assert lhs == b_entry(r + 1, l)
