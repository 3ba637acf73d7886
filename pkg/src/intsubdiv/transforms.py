"""Transformation matrices between f- and h-vectors of a complex and its interval subdivision.

Vectors are columns and matrices act on the left: ``f(Int K) = F_d f(K)`` and
``h(Int K) = R_d h(K)``, rows and columns indexed ``0..d``.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb

from .complex import HVector
from .errors import UnsupportedMethod
from .linalg import IntMatrix
from .signed import bplus_poly


def b_entry(k: int, l: int) -> int:
    """Entry ``(k, l)`` of ``F_d``; independent of ``d``."""
    if k == 0:
        return int(l == 0)
    return sum((-1) ** j * comb(k - 1, j) * ((2 * k - 2 * j) ** l - (2 * k - 2 * j - 1) ** l)
               for j in range(k))


@lru_cache(maxsize=None)
def f_matrix(d: int) -> IntMatrix:
    if d < 0:
        raise ValueError("d must be non-negative")
    return IntMatrix([[b_entry(k, l) for l in range(d + 1)] for k in range(d + 1)])


@lru_cache(maxsize=None)
def h_matrix(d: int) -> IntMatrix:
    """``h = H_d f``: entry ``(k, i)`` is ``(-1)^(k-i) C(d-i, k-i)``."""
    if d < 0:
        raise ValueError("d must be non-negative")
    return IntMatrix([[(-1) ** (k - i) * comb(d - i, k - i) if k >= i else 0
                       for i in range(d + 1)] for k in range(d + 1)])


@lru_cache(maxsize=None)
def h_matrix_inverse(d: int) -> IntMatrix:
    """``f = H_d^{-1} h``: entry ``(j, i)`` is ``C(d-i, j-i)``."""
    if d < 0:
        raise ValueError("d must be non-negative")
    return IntMatrix([[comb(d - i, j - i) if j >= i else 0
                       for i in range(d + 1)] for j in range(d + 1)])


@lru_cache(maxsize=None)
def r_matrix(d: int, method: str = "eulerian") -> IntMatrix:
    """h-vector transformation; entry ``(r, s)`` is ``B+(d+1, s+1, r)`` under ``eulerian``."""
    if d < 0:
        raise ValueError("d must be non-negative")
    if method == "algebraic":
        return h_matrix(d) @ f_matrix(d) @ h_matrix_inverse(d)
    if method == "eulerian":
        cols = [bplus_poly(d + 1, s + 1).poly for s in range(d + 1)]
        return IntMatrix([[cols[s][r] for s in range(d + 1)] for r in range(d + 1)])
    raise UnsupportedMethod(f"unknown method {method!r} for R_d")


def h_interval(h, method: str = "eulerian") -> HVector:
    """h-vector of the interval subdivision."""
    return HVector(r_matrix(len(h) - 1, method) @ tuple(h))
