"""Spectra of the transformation matrices and limits of iterated subdivision.

Eigenvalue and eigenvector claims are checked with exact linear algebra.
Root trajectories of iterated f-polynomials are the only floating point
computation in the package.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy.optimize import linear_sum_assignment

from .complex import FVector
from .errors import NumericError
from .linalg import IntMatrix, det, kernel, rank
from .polynomial import IntPolynomial
from .subdivision import f_interval
from .transforms import f_matrix, h_interval, r_matrix


def expected_spectrum(d: int) -> Tuple[int, ...]:
    """``(1, 1, 2*2!, 2^2*3!, ..., 2^(d-1)*d!)``."""
    if d < 1:
        raise ValueError("d must be at least 1")
    return (1,) + tuple(2 ** (i - 1) * factorial(i) for i in range(1, d + 1))


def _matrix(kind: str, d: int) -> IntMatrix:
    kind = kind.upper()
    if kind == "F":
        return f_matrix(d)
    if kind == "R":
        return r_matrix(d)
    raise ValueError(f"unknown matrix kind {kind!r}")


@dataclass(frozen=True)
class SpectrumReport:
    kind: str
    d: int
    expected: Tuple[int, ...]
    verified: Tuple[bool, ...]
    multiplicity_of_one: int

    @property
    def ok(self) -> bool:
        return all(self.verified) and self.multiplicity_of_one == 2


def verify_spectrum(kind: str, d: int) -> SpectrumReport:
    """Check ``det(M - lam I) = 0`` for every claimed eigenvalue and ``rank(M - I) = d - 1``."""
    M = _matrix(kind, d)
    spectrum = expected_spectrum(d)
    verified = tuple(det(M.shift(lam)) == 0 for lam in spectrum)
    mult = (d + 1) - rank(M.shift(1))
    return SpectrumReport(kind.upper(), d, spectrum, verified, mult)


def eigenvectors(kind: str, d: int) -> Dict[int, List[tuple]]:
    """Exact kernel bases of ``M - lam I`` for each distinct claimed eigenvalue."""
    M = _matrix(kind, d)
    return {lam: kernel(M.shift(lam)) for lam in sorted(set(expected_spectrum(d)))}


@dataclass(frozen=True)
class EigenvectorReport:
    """Outcome of each eigenvector claim for dimension parameter ``d``.

    ``boundary_zero``: eigenvectors of ``R_d`` for eigenvalues above 1 have
    vanishing first and last coordinates.  ``top_interior_positive``: the top
    eigenvector of ``R_d`` has strictly positive interior after normalizing
    the sign.  ``sum_zero_R`` / ``sum_zero_F``: eigenvectors of ``R_d`` /
    ``F_d`` for every eigenvalue below the top one have coordinate sum 0.
    """

    d: int
    boundary_zero: bool
    top_interior_positive: bool
    top_vector: tuple
    sum_zero_R: bool
    sum_zero_F: bool
    failures: Tuple[str, ...] = field(default=())

    @property
    def all_claims_hold(self) -> bool:
        return self.boundary_zero and self.top_interior_positive and self.sum_zero_R and self.sum_zero_F


def _sum_zero(kind: str, d: int, failures: list) -> bool:
    top = expected_spectrum(d)[-1]
    ok = True
    for lam, basis in eigenvectors(kind, d).items():
        if lam == top:
            continue
        for v in basis:
            if sum(v) != 0:
                ok = False
                failures.append(f"{kind}_{d}: eigenvector {v} for {lam} has coordinate sum {sum(v)}")
    return ok


def eigenvector_structure_check(d: int) -> EigenvectorReport:
    if d < 2:
        raise ValueError("d must be at least 2")
    failures: List[str] = []
    vecs = eigenvectors("R", d)
    top = expected_spectrum(d)[-1]
    boundary = True
    for lam, basis in vecs.items():
        if lam == 1:
            continue
        if len(basis) != 1:
            boundary = False
            failures.append(f"R_{d}: eigenspace for {lam} has dimension {len(basis)}")
        for v in basis:
            if v[0] != 0 or v[-1] != 0:
                boundary = False
                failures.append(f"R_{d}: eigenvector {v} for {lam} has nonzero boundary entry")
    w = vecs[top][0] if vecs[top] else (0,) * (d + 1)
    sign = 1 if w[1] > 0 else -1
    w = tuple(sign * x for x in w)
    positive = all(x > 0 for x in w[1:-1])
    if not positive:
        failures.append(f"R_{d}: top eigenvector {w} has non-positive interior entries")
    sum_r = _sum_zero("R", d, failures)
    sum_f = _sum_zero("F", d, failures)
    return EigenvectorReport(d, boundary, positive, w, sum_r, sum_f, tuple(failures))


def iterate_f(f, n: int) -> FVector:
    if n < 0:
        raise ValueError("n must be non-negative")
    f = FVector(f)
    for _ in range(n):
        f = f_interval(f)
    return f


def iterate_h(h, n: int):
    for _ in range(n):
        h = h_interval(h)
    return h


def f_polynomial(f) -> IntPolynomial:
    """``sum_j f_{j-1} t^j``."""
    return IntPolynomial(f)


def numeric_roots(p: IntPolynomial, iteration: Optional[int] = None) -> np.ndarray:
    """Companion-matrix eigenvalues of ``p`` after dividing through by its leading coefficient."""
    if p.degree < 1:
        return np.empty(0, dtype=complex)
    lead = Fraction(p.leading)
    try:
        monic = [float(Fraction(c) / lead) for c in p.coeffs[:-1]]
    except OverflowError:
        raise NumericError("coefficient ratio exceeds double range", iteration) from None
    if not all(math.isfinite(x) for x in monic):
        raise NumericError("non-finite coefficient ratio", iteration)
    n = p.degree
    C = np.zeros((n, n))
    C[1:, :-1] = np.eye(n - 1)
    C[:, -1] = -np.asarray(monic)
    roots = np.linalg.eigvals(C)
    if not np.all(np.isfinite(roots)):
        raise NumericError("non-finite roots", iteration)
    return np.sort_complex(roots)


def root_set_distance(a, b) -> float:
    """Largest displacement under the assignment minimizing total displacement.

    For root multisets that are already close this equals the Hausdorff
    distance; sets of different size are at infinite distance.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        return math.inf
    if a.size == 0:
        return 0.0
    cost = np.abs(a[:, None] - b[None, :])
    r, c = linear_sum_assignment(cost)
    return float(cost[r, c].max())


@dataclass
class RootTrajectory:
    d: int
    kind: str
    ns: List[int]
    roots: List[np.ndarray]
    distances: List[Optional[float]]
    tol: float

    @property
    def final_distance(self) -> float:
        return self.distances[-1] if self.distances and self.distances[-1] is not None else math.inf

    @property
    def converged(self) -> bool:
        return self.final_distance < self.tol

    @property
    def limit(self) -> np.ndarray:
        return self.roots[-1]

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "iterations": [
                {"n": n,
                 "roots": [[float(z.real), float(z.imag)] for z in rs],
                 "hausdorffFromPrev": dist}
                for n, rs, dist in zip(self.ns, self.roots, self.distances)
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def limit_convergence_report(f, iters: int, tol: float = 1e-6, kind: str = "f") -> RootTrajectory:
    """Roots of the f-polynomials (or h-polynomials, ``kind='h'``) of iterates ``1..iters``.

    ``f`` is always the f-vector of the starting complex.
    """
    if iters < 2:
        raise ValueError("need at least two iterations")
    if tol <= 0:
        raise ValueError("tol must be positive")
    from .complex import h_from_f

    vec = FVector(f)
    d = len(vec) - 1
    step = f_interval
    if kind == "h":
        vec = h_from_f(vec)
        step = h_interval
    elif kind != "f":
        raise ValueError("kind must be 'f' or 'h'")
    ns, roots, dists = [], [], []
    prev = None
    for n in range(1, iters + 1):
        vec = step(vec)
        rs = numeric_roots(IntPolynomial(vec), n)
        ns.append(n)
        roots.append(rs)
        dists.append(None if prev is None else root_set_distance(prev, rs))
        prev = rs
    return RootTrajectory(d, kind, ns, roots, dists, tol)
