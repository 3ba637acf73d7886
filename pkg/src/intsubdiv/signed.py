"""Descent statistics on signed permutations and the j-Eulerian polynomials.

A signed permutation of rank ``d`` is written by its window ``(s_1, ..., s_d)``.
Its type-B descents are the positions ``i`` in ``0..d-1`` with ``s_i > s_{i+1}``
under the convention ``s_0 = 0``.

Polynomials are available by several independent routes so they can be
checked against each other:

* ``enumerate``: direct tallies over the group;
* ``recurrence``: removal of the first letter (B+), insertion of the largest
  letter (A);
* ``e2``: every other coefficient of ``(1 + t)^(d-1) A_{d,j}(t)``.

B- is obtained from B+ by the degree-``d`` reversal ``B-_{d,j}(t) = t^d B+_{d,-j}(1/t)``.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Dict, Iterator, Optional, Tuple

from .errors import UnsupportedMethod
from .polynomial import IntPolynomial, e_r

__all__ = [
    "SignedPermutation", "EulerianPolynomial", "descent_count_B", "descent_count_A",
    "enumerate_B", "descent_table", "bplus_poly", "bminus_poly", "b_poly", "a_poly",
    "t_poly", "e_r", "eulerian", "table_rows",
]


class SignedPermutation(tuple):
    """Window ``(s_1, ..., s_d)`` whose absolute values permute ``1..d``."""

    def __new__(cls, window):
        window = tuple(int(x) for x in window)
        if sorted(abs(x) for x in window) != list(range(1, len(window) + 1)):
            raise ValueError(f"{window} is not a signed permutation")
        return super().__new__(cls, window)

    @property
    def d(self) -> int:
        return len(self)


def descent_count_B(sigma) -> int:
    prev, des = 0, 0
    for x in sigma:
        if prev > x:
            des += 1
        prev = x
    return des


def descent_count_A(sigma) -> int:
    return sum(1 for a, b in zip(sigma, sigma[1:]) if a > b)


def _check_letter(d: int, j: int):
    if d < 1:
        raise ValueError("d must be a positive integer")
    if j == 0 or abs(j) > d:
        raise ValueError(f"first letter must satisfy 0 < |j| <= d, got j={j}, d={d}")


def enumerate_B(d: int, first: Optional[int] = None, last_sign: Optional[str] = None
                ) -> Iterator[SignedPermutation]:
    """Stream the elements of ``B_d`` with the given first letter and last sign.

    Windows come out in increasing lexicographic order, letters compared as
    integers (so at each position negatives precede positives).
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    if first is not None:
        _check_letter(d, first)
    if last_sign not in (None, "+", "-"):
        raise ValueError("last_sign must be '+', '-' or None")
    letters = sorted([-v for v in range(1, d + 1)] + list(range(1, d + 1)))
    window = []
    used = [False] * (d + 1)

    def rec():
        pos = len(window)
        if pos == d:
            if last_sign is None or (window[-1] > 0) == (last_sign == "+"):
                yield SignedPermutation(window)
            return
        choices = [first] if pos == 0 and first is not None else letters
        for x in choices:
            if used[abs(x)]:
                continue
            used[abs(x)] = True
            window.append(x)
            yield from rec()
            window.pop()
            used[abs(x)] = False

    yield from rec()


@lru_cache(maxsize=None)
def descent_table(d: int) -> Dict[Tuple[int, bool], Tuple[int, ...]]:
    """Counts ``{(first, last_positive): (n_0, ..., n_d)}`` over all of ``B_d``.

    A single depth-first pass with incremental descent counting; this is the
    enumeration oracle for every type-B polynomial.
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    table: Dict[Tuple[int, bool], list] = {}
    used = [False] * (d + 1)

    def rec(pos, prev, des, first):
        if pos == d:
            row = table.setdefault((first, prev > 0), [0] * (d + 1))
            row[des] += 1
            return
        for v in range(1, d + 1):
            if used[v]:
                continue
            used[v] = True
            for x in (-v, v):
                f = x if pos == 0 else first
                rec(pos + 1, x, des + (prev > x), f)
            used[v] = False

    rec(0, 0, 0, 0)
    return {k: tuple(v) for k, v in table.items()}


KINDS = ("A", "B", "B+", "B-", "T")


@dataclass(frozen=True)
class EulerianPolynomial:
    kind: str
    d: int
    j: int
    poly: IntPolynomial

    @property
    def coeffs(self):
        return self.poly.coeffs

    def __str__(self):
        return str(self.poly)


_memo_lock = threading.Lock()
_bplus_memo: Dict[Tuple[int, int], IntPolynomial] = {}


def _bplus_rec(d: int, j: int) -> IntPolynomial:
    key = (d, j)
    hit = _bplus_memo.get(key)
    if hit is not None:
        return hit
    if d == 1:
        p = IntPolynomial([1]) if j == 1 else IntPolynomial()
    else:
        t = IntPolynomial([0, 1])
        pos = [_bplus_rec(d - 1, i) for i in range(1, d)]
        neg = [_bplus_rec(d - 1, -i) for i in range(1, d)]
        s = abs(j)
        if j > 0:
            p = t * sum(pos[: s - 1], IntPolynomial()) + sum(pos[s - 1:], IntPolynomial()) \
                + sum(neg, IntPolynomial())
        else:
            p = t * (sum(pos, IntPolynomial()) + sum(neg[s - 1:], IntPolynomial())) \
                + sum(neg[: s - 1], IntPolynomial())
    with _memo_lock:
        _bplus_memo.setdefault(key, p)
    return _bplus_memo[key]


def bplus_poly(d: int, j: int, method: str = "recurrence") -> EulerianPolynomial:
    """Descent polynomial over ``{s in B_d : s_1 = j, s_d > 0}``."""
    _check_letter(d, j)
    if method == "recurrence":
        p = _bplus_rec(d, j)
    elif method == "enumerate":
        p = IntPolynomial(descent_table(d).get((j, True), ()))
    elif method == "e2":
        if j < 0:
            raise UnsupportedMethod("the E2 route covers positive first letters only")
        a = a_poly(d, j, "recurrence" if j < d else "enumerate").poly
        p = e_r(IntPolynomial([1, 1]) ** (d - 1) * a, 2)
    else:
        raise UnsupportedMethod(f"unknown method {method!r} for B+")
    return EulerianPolynomial("B+", d, j, p)


def bminus_poly(d: int, j: int, method: str = "reversal") -> EulerianPolynomial:
    """Descent polynomial over ``{s in B_d : s_1 = j, s_d < 0}``."""
    _check_letter(d, j)
    if method == "reversal":
        p = bplus_poly(d, -j).poly.reverse(d)
    elif method == "enumerate":
        p = IntPolynomial(descent_table(d).get((j, False), ()))
    elif method == "e2":
        if j < 0:
            raise UnsupportedMethod("the E2 route covers positive first letters only")
        a = a_poly(d, j, "recurrence" if j < d else "enumerate").poly
        p = e_r((IntPolynomial([1, 1]) ** (d - 1) * a).shift(1), 2)
    else:
        raise UnsupportedMethod(f"unknown method {method!r} for B-")
    return EulerianPolynomial("B-", d, j, p)


def b_poly(d: int, j: int) -> EulerianPolynomial:
    return EulerianPolynomial("B", d, j, bplus_poly(d, j).poly + bminus_poly(d, j).poly)


def _a_enum(d: int, j: int) -> IntPolynomial:
    counts = [0] * d
    rest = [v for v in range(1, d + 1) if v != j]
    for tail in permutations(rest):
        counts[descent_count_A((j,) + tail)] += 1
    return IntPolynomial(counts)


@lru_cache(maxsize=None)
def _a_rec(d: int, j: int) -> IntPolynomial:
    if d == j:
        # base of the insertion recurrence; it only runs while j < d
        return _a_enum(d, j)
    prev = _a_rec(d - 1, j)
    t = IntPolynomial([0, 1])
    return IntPolynomial([1, d - 2]) * prev + t * IntPolynomial([1, -1]) * prev.derivative()


def a_poly(d: int, j: int, method: str = "enumerate") -> EulerianPolynomial:
    """Descent polynomial over permutations of ``1..d`` with first letter ``j``."""
    if d < 1 or not 1 <= j <= d:
        raise ValueError(f"need 1 <= j <= d, got j={j}, d={d}")
    if method == "enumerate":
        p = _a_enum(d, j)
    elif method == "recurrence":
        if j == d:
            raise UnsupportedMethod("the insertion recurrence is only valid for j < d")
        p = _a_rec(d, j)
    else:
        raise UnsupportedMethod(f"unknown method {method!r} for A")
    return EulerianPolynomial("A", d, j, p)


def t_poly(d: int, j: int) -> EulerianPolynomial:
    """``B+_{d,j}(t^2) + B-_{d,j}(t^2) / t``."""
    if d < 1 or not 1 <= j <= d:
        raise ValueError(f"need 1 <= j <= d, got j={j}, d={d}")
    plus = bplus_poly(d, j).poly.subs_square()
    minus = bminus_poly(d, j).poly.subs_square().div_t()
    return EulerianPolynomial("T", d, j, plus + minus)


def eulerian(kind: str, d: int, j: int, method: Optional[str] = None) -> EulerianPolynomial:
    """Dispatch by kind name (``A``, ``B``, ``B+``, ``B-``, ``T``; case-insensitive)."""
    kind = kind.upper()
    if kind == "A":
        return a_poly(d, j, method or "enumerate")
    if kind == "B":
        if method is not None:
            raise UnsupportedMethod("type B polynomials take no method")
        return b_poly(d, j)
    if kind == "B+":
        return bplus_poly(d, j, method or "recurrence")
    if kind == "B-":
        return bminus_poly(d, j, method or "reversal")
    if kind == "T":
        return t_poly(d, j)
    raise ValueError(f"unknown kind {kind!r}")


def table_rows(kind: str, d: int, j: Optional[int] = None, method: Optional[str] = None):
    """Rows ``(d, j, k, count)`` for one first letter, or every admissible one."""
    kind_u = kind.upper()
    if j is not None:
        letters = [j]
    elif kind_u in ("A", "T"):
        letters = list(range(1, d + 1))
    else:
        letters = [x for x in range(-d, d + 1) if x]
    for jj in letters:
        p = eulerian(kind_u, d, jj, method).poly
        for k in range(max(len(p), 1)):
            yield d, jj, k, p[k]
