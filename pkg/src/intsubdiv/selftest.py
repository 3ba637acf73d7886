"""Formula-versus-oracle battery, one check per acceptance criterion.

Each check returns a :class:`CriterionResult`; a check passes only if every
exact comparison holds and it finishes inside its time budget.
"""
from __future__ import annotations

import time
from math import factorial
from dataclasses import dataclass
from typing import Callable, List, Optional

import numpy as np

from .analysis import CharneyDavis, charney_davis_check, charney_davis_value, is_log_concave, \
    is_real_rooted, is_unimodal
from .complex import euler_characteristic, f_vector, is_reciprocal, parse_facets, random_complex
from .linalg import det, rank
from .polynomial import IntPolynomial, e_r
from .signed import a_poly, bminus_poly, bplus_poly, t_poly
from .spectral import eigenvector_structure_check, expected_spectrum, limit_convergence_report, \
    root_set_distance, verify_spectrum
from .subdivision import f_interval, f_interval_stirling, interval_complex
from .transforms import f_matrix, h_interval, r_matrix

R4_PRINTED = (
    (1, 0, 0, 0, 0),
    (61, 46, 32, 22, 15),
    (115, 124, 128, 124, 115),
    (15, 22, 32, 46, 61),
    (0, 0, 0, 0, 1),
)

BPLUS_4_PRINTED = {
    1: (1, 16, 7),
    2: (0, 14, 10),
    3: (0, 10, 14),
    4: (0, 7, 16, 1),
}


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    elapsed: float
    budget: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number:2d}: {self.title} ({self.elapsed:.2f}s / {self.budget:g}s){': ' + self.detail if self.detail else ''}"


def _run(number: int, title: str, budget: float, fn: Callable[[], tuple]) -> CriterionResult:
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    if ok and elapsed >= budget:
        ok, detail = False, f"over time budget; {detail}"
    return CriterionResult(number, title, ok, detail, elapsed, budget)


def _random_h(rng, d: int, reciprocal: bool = False):
    h = [1] + [int(x) for x in rng.integers(0, 21, size=d)]
    if reciprocal:
        h = [h[min(i, d - i)] for i in range(d + 1)]
    return tuple(h)


# individual checks


def check_example_2simplex():
    f = f_interval((1, 3, 3, 1))
    C, _ = interval_complex(parse_facets("1 2 3"))
    fc = f_vector(C)
    ok = f == (1, 19, 42, 24) and fc == (1, 19, 42, 24)
    return ok, f"formula {tuple(f)}, constructive {tuple(fc)}"


def check_example_mixed():
    f = f_interval((1, 5, 10, 6, 1))
    h = h_interval((1, 1, 1, -3, 1))
    ok = f == (1, 92, 380, 480, 192) and h == (1, 88, 110, -8, 1)
    return ok, f"f(Int) {tuple(f)}, h(Int) {tuple(h)}"


def check_r4():
    alg = r_matrix(4, "algebraic").rows
    eul = r_matrix(4, "eulerian").rows
    return alg == R4_PRINTED and eul == R4_PRINTED, ""


def check_bplus_table():
    bad = []
    for j, want in BPLUS_4_PRINTED.items():
        for m in ("enumerate", "recurrence", "e2"):
            got = bplus_poly(4, j, m).coeffs
            if got != want:
                bad.append(f"j={j} {m}: {got}")
    return not bad, "; ".join(bad)


def check_oracle_equivalence(seed: int = 0, count: int = 50):
    rng = np.random.default_rng(seed)
    bad = []
    for n in range(count):
        K = random_complex(rng, max_vertices=6, max_dim=4)
        f = f_vector(K)
        C, _ = interval_complex(K)
        fc = f_vector(C)
        f2, f3 = f_interval(f), f_interval_stirling(f)
        if not (fc == f2 == f3):
            bad.append(f"#{n} {sorted(K.facets)}: constructive {tuple(fc)}, eq {tuple(f2)}, stirling {tuple(f3)}")
    return not bad, "; ".join(bad[:3]) or f"{count} complexes agree"


def check_euler_preserved(seed: int = 0, count: int = 50):
    rng = np.random.default_rng(seed)
    bad = []
    for n in range(count):
        K = random_complex(rng, max_vertices=6, max_dim=4)
        f = f_vector(K)
        C, _ = interval_complex(K)
        chis = {euler_characteristic(f), euler_characteristic(f_interval(f)), euler_characteristic(f_vector(C))}
        if len(chis) != 1:
            bad.append(f"#{n}: {chis}")
    return not bad, "; ".join(bad[:3])


def check_eulerian_cross(max_d: int = 7):
    bad = []
    for d in range(1, max_d + 1):
        for j in [x for x in range(-d, d + 1) if x]:
            if bplus_poly(d, j, "enumerate").poly != bplus_poly(d, j, "recurrence").poly:
                bad.append(f"B+ enum/rec d={d} j={j}")
            if bminus_poly(d, j, "enumerate").poly != bminus_poly(d, j, "reversal").poly:
                bad.append(f"B- reversal d={d} j={j}")
        if d >= 2:
            for s in range(1, d + 1):
                p = bplus_poly(d, s).poly
                if sum(p.coeffs) != 2 ** (d - 2) * factorial(d - 1):
                    bad.append(f"row sum d={d} s={s}")
                q = bplus_poly(d, d - s + 1).poly
                if any(p[r] != q[d - r - 1] for r in range(d)):
                    bad.append(f"symmetry d={d} s={s}")
    return not bad, "; ".join(bad[:5])


def _t_step(prev: IntPolynomial, d: int, quad: int) -> IntPolynomial:
    """RHS of the T recurrence with quadratic coefficient ``quad``."""
    t = IntPolynomial([0, 1])
    return IntPolynomial([1, 1, quad]) * prev + t * IntPolynomial([1, 0, -1]) * prev.derivative()


def check_identity_battery(max_d: int = 8):
    t = IntPolynomial([0, 1])
    one_minus_t = IntPolynomial([1, -1])
    failures = {k: [] for k in ("Arecurrence", "B+recurrence", "B-recurrence", "Trecurrence",
                                "AB", "E2")}
    corrected_t_ok = True
    for d in range(2, max_d + 1):
        for j in range(1, d + 1):
            A = a_poly(d, j, "enumerate").poly
            T = t_poly(d, j).poly
            if (IntPolynomial([1, 1]) ** (d - 1)) * A != T:
                failures["AB"].append((d, j))
            S = (IntPolynomial([1, 1]) ** (d - 1)) * A
            if e_r(S, 2) != bplus_poly(d, j).poly or e_r(S.shift(1), 2) != bminus_poly(d, j).poly:
                failures["E2"].append((d, j))
            if j == d:
                continue
            A1 = a_poly(d - 1, j, "enumerate").poly
            if IntPolynomial([1, d - 2]) * A1 + t * one_minus_t * A1.derivative() != A:
                failures["Arecurrence"].append((d, j))
            P1, M1 = bplus_poly(d - 1, j).poly, bminus_poly(d - 1, j).poly
            B1 = P1 + M1
            rhs_p = 2 * (d - 2) * t * P1 + 2 * t * one_minus_t * P1.derivative() + B1
            rhs_m = 2 * (d - 2) * t * M1 + 2 * t * one_minus_t * M1.derivative() + t * B1
            if rhs_p != bplus_poly(d, j).poly:
                failures["B+recurrence"].append((d, j))
            if rhs_m != bminus_poly(d, j).poly:
                failures["B-recurrence"].append((d, j))
            T1 = t_poly(d - 1, j).poly
            if _t_step(T1, d, d - 2) != T:
                failures["Trecurrence"].append((d, j))
            if _t_step(T1, d, 2 * (d - 2)) != T:
                corrected_t_ok = False
    ok = not any(failures.values())
    parts = []
    for name, bad in failures.items():
        if bad:
            parts.append(f"{name} fails at {len(bad)} (d,j) pairs, first {bad[0]}")
    if failures["Trecurrence"]:
        parts.append("with quadratic coefficient 2(d-2) instead of (d-2) the T recurrence "
                     + ("holds everywhere" if corrected_t_ok else "also fails"))
    return ok, "; ".join(parts)


def check_real_rooted(seed: int = 0, per_d: int = 200, max_d: int = 8):
    rng = np.random.default_rng(seed)
    bad = []
    for d in range(2, max_d + 1):
        for _ in range(per_d):
            h = _random_h(rng, d)
            p = IntPolynomial(h_interval(h))
            if not (is_real_rooted(p) and is_log_concave(p) and is_unimodal(p)):
                bad.append(h)
    return not bad, f"failures {bad[:3]}" if bad else ""


def check_charney_davis(seed: int = 0, per_d: int = 100, max_d: int = 8):
    rng = np.random.default_rng(seed)
    good = {CharneyDavis.HOLDS, CharneyDavis.HOLDS_TRIVIALLY}
    bad = []
    for d in range(2, max_d + 1):
        for _ in range(per_d):
            h = _random_h(rng, d, reciprocal=True)
            if charney_davis_check(h_interval(h)) not in good:
                bad.append(h)
    hi = h_interval((1, 1, 1))
    inst = hi == (1, 10, 1) and charney_davis_value(hi) == 8 and charney_davis_check(hi) is CharneyDavis.HOLDS
    if not inst:
        bad.append(("instance", tuple(hi)))
    return not bad, f"failures {bad[:3]}" if bad else ""


def check_spectral(max_d: int = 6):
    bad = []
    for d in range(1, max_d + 1):
        for kind in ("F", "R"):
            rep = verify_spectrum(kind, d)
            if not rep.ok:
                bad.append(f"{kind}_{d} spectrum {rep.verified} mult {rep.multiplicity_of_one}")
        F = f_matrix(d)
        for mu in (3, 5, 100):
            if mu not in expected_spectrum(d) and det(F.shift(mu)) == 0:
                bad.append(f"F_{d}: det(F - {mu}I) = 0")
        if rank(F.shift(1)) != d - 1 or rank(r_matrix(d).shift(1)) != d - 1:
            bad.append(f"rank(M - I) != {d - 1} at d={d}")
        if d >= 2:
            rep = eigenvector_structure_check(d)
            if not rep.all_claims_hold:
                bad.extend(rep.failures[:1])
    return not bad, "; ".join(bad[:6])


def check_reciprocity_monotonicity(seed: int = 0, max_d: int = 8, count: int = 50):
    rng = np.random.default_rng(seed)
    bad = []
    for d in range(2, max_d + 1):
        for _ in range(count):
            h = _random_h(rng, d, reciprocal=True)
            if not is_reciprocal(h_interval(h)):
                bad.append(f"reciprocity {h}")
            g = _random_h(rng, d)
            gi = h_interval(g)
            if any(x < y for x, y in zip(gi, g)):
                bad.append(f"monotonicity {g}")
    h = (1, 1, 1, -3, 1)
    hi = h_interval(h)
    violated = [r for r in range(len(h)) if hi[r] < h[r]]
    if hi != (1, 88, 110, -8, 1) or violated != [3]:
        bad.append(f"counterexample: violations at {violated}")
    return not bad, "; ".join(bad[:3])


def check_limit(iters: int = 12, tol: float = 1e-6):
    a = limit_convergence_report(f_vector(parse_facets("1 2 3")), iters, tol)
    b = limit_convergence_report(f_vector(parse_facets("1 2 3\n1 3 4")), iters, tol)
    mutual = root_set_distance(a.limit, b.limit)
    ok = a.converged and b.converged and mutual < tol
    return ok, f"successive {a.final_distance:.2e}/{b.final_distance:.2e}, mutual {mutual:.2e}"


def run_all(max_d: Optional[int] = None, seed: int = 0) -> List[CriterionResult]:
    """Run every criterion; ``max_d`` caps the dimension ranges (defaults follow each criterion)."""
    cap = (lambda default: default if max_d is None else min(default, max_d))
    return [
        _run(1, "2-simplex example, formula and construction", 1,
             check_example_2simplex),
        _run(2, "<1234,125,345> example, f and h of Int", 1, check_example_mixed),
        _run(3, "printed R_4 by both methods", 1, check_r4),
        _run(4, "printed B+_{4,j} by enumeration, recurrence and E2", 1, check_bplus_table),
        _run(5, "constructive f(Int) = closed form = Stirling form, 50 complexes", 60,
             lambda: check_oracle_equivalence(seed)),
        _run(6, "type B enumeration vs recurrence, reversal, row sums, symmetry", 60,
             lambda: check_eulerian_cross(cap(7))),
        _run(7, "A, B+, B-, T recurrences, (1+t)^(d-1)A = T, E2 extraction", 30,
             lambda: check_identity_battery(cap(8))),
        _run(8, "h(Int) real-rooted, log-concave, unimodal for non-negative h", 60,
             lambda: check_real_rooted(seed, max_d=cap(8))),
        _run(9, "Charney-Davis for non-negative reciprocal h", 30,
             lambda: check_charney_davis(seed, max_d=cap(8))),
        _run(10, "eigenvalues, ranks and eigenvector structure of F_d and R_d", 30,
             lambda: check_spectral(cap(6))),
        _run(11, "reciprocity preservation, monotonicity and its counterexample", 5,
             lambda: check_reciprocity_monotonicity(seed, cap(8))),
        _run(12, "root limits of iterated f-polynomials depend only on dimension", 10,
             check_limit),
        _run(13, "Euler characteristic preserved on the criterion 5 complexes", 60,
             lambda: check_euler_preserved(seed)),
    ]
