"""Exact real-root counting and coefficient-sequence tests.

Real-rootedness is decided with Sturm chains over the rationals; no floating
point is involved anywhere in this module.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import MalformedInput
from .polynomial import IntPolynomial, poly_gcd


def _as_poly(p) -> IntPolynomial:
    return p if isinstance(p, IntPolynomial) else IntPolynomial(p)


def square_free_part(p) -> IntPolynomial:
    """``p / gcd(p, p')`` as a primitive integer polynomial with positive leading coefficient."""
    p = _as_poly(p)
    if p.is_zero:
        raise ArithmeticError("square-free part of the zero polynomial")
    if p.degree == 0:
        return IntPolynomial([1])
    g = poly_gcd(p, p.derivative())
    return p.exact_div(g).primitive()


def sturm_chain(p) -> List[IntPolynomial]:
    """``p, p', -rem(p, p'), ...``; each remainder is rescaled by a positive constant."""
    p = _as_poly(p)
    chain = [p, p.derivative()]
    while not chain[-1].is_zero:
        r = -(chain[-2] % chain[-1])
        if r.is_zero:
            break
        # positive rescaling keeps signs and keeps coefficients integral
        chain.append(r * (1 / r.content()) if r.content() else r)
    if chain[-1].is_zero:
        chain.pop()
    return chain


def _sign_changes(values) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p) -> int:
    """Number of distinct real roots via sign variations at -inf and +inf."""
    p = _as_poly(p)
    if p.is_zero:
        raise ArithmeticError("the zero polynomial has no finite root count")
    chain = sturm_chain(p)
    at_pos = [q.leading for q in chain]
    at_neg = [q.leading * (-1) ** q.degree for q in chain]
    return _sign_changes(at_neg) - _sign_changes(at_pos)


def is_real_rooted(p) -> bool:
    """True iff every complex root of ``p`` is real; nonzero constants count as real-rooted."""
    p = _as_poly(p)
    if p.is_zero:
        raise ArithmeticError("real-rootedness of the zero polynomial is undefined")
    z = p.trailing_zeros()
    if z:
        p = IntPolynomial(p.coeffs[z:])
    if p.degree <= 0:
        return True
    sf = square_free_part(p)
    if count_real_roots(sf) != sf.degree:
        return False
    g = poly_gcd(p, p.derivative())
    return g.degree <= 0 or is_real_rooted(g)


def is_log_concave(p) -> bool:
    a = _as_poly(p).coeffs
    return all(a[i] * a[i] >= a[i - 1] * a[i + 1] for i in range(1, len(a) - 1))


def is_unimodal(p) -> bool:
    a = _as_poly(p).coeffs
    i = 0
    while i + 1 < len(a) and a[i] <= a[i + 1]:
        i += 1
    while i + 1 < len(a) and a[i] >= a[i + 1]:
        i += 1
    return i + 1 >= len(a)


class CharneyDavis(str, enum.Enum):
    HOLDS = "holds"
    HOLDS_TRIVIALLY = "holds_trivially_root_at_minus_one"
    FAILS = "fails"
    NOT_APPLICABLE = "not_applicable"


def charney_davis_value(h) -> int:
    """``(-1)^floor(d/2) h(-1)`` for ``h = (h_0, ..., h_d)``."""
    d = len(h) - 1
    return (-1) ** (d // 2) * IntPolynomial(h)(-1)


def charney_davis_check(h) -> CharneyDavis:
    h = tuple(h)
    if any(x < 0 for x in h) or h != h[::-1]:
        return CharneyDavis.NOT_APPLICABLE
    v = charney_davis_value(h)
    if v == 0:
        return CharneyDavis.HOLDS_TRIVIALLY
    return CharneyDavis.HOLDS if v > 0 else CharneyDavis.FAILS


def analysis_report(p) -> dict:
    """JSON-ready summary of one coefficient sequence."""
    p = _as_poly(p)
    seq = list(p.coeffs) or [0]
    return {
        "realRooted": is_real_rooted(p),
        "distinctRealRoots": count_real_roots(square_free_part(p)) if p.degree > 0 else 0,
        "logConcave": is_log_concave(p),
        "unimodal": is_unimodal(p),
        "charneyDavis": charney_davis_check(seq).value,
    }


@dataclass(frozen=True)
class ProbeReport:
    trials: int
    seed: int
    checked: int
    violation: Optional[Tuple[str, tuple, IntPolynomial]] = None

    @property
    def ok(self) -> bool:
        return self.violation is None

    def __str__(self):
        if self.ok:
            return f"no violation found in {self.checked} combinations ({self.trials} trials, seed {self.seed})"
        kind, c, q = self.violation
        return f"violation ({kind}) at coefficients {c}: {q} is not real-rooted"


def compatibility_probe(polys: Sequence, trials: int = 100, seed: int = 0) -> ProbeReport:
    """Randomized search for a non-negative combination that is not real-rooted.

    Each trial draws coefficients from ``{0, ..., 9}`` with its own child seed,
    so the report depends only on ``(polys, trials, seed)``.  Unit vectors and
    the all-ones vector are always tried first.  Besides the full combination
    ``sum c_i f_i``, every ordered pair ``i < j`` is checked as
    ``t f_i + c f_j``.  A clean report is evidence, not a proof.
    """
    polys = [_as_poly(p) for p in polys]
    if any(p.is_zero for p in polys):
        raise MalformedInput("compatibility probe input contains the zero polynomial")
    if trials < 1:
        raise ValueError("trials must be positive")
    k = len(polys)
    t = IntPolynomial([0, 1])
    fixed = [tuple(int(i == j) for j in range(k)) for i in range(k)] + [(1,) * k]
    children = np.random.SeedSequence(seed).spawn(trials)
    checked = 0

    def combos():
        for c in fixed:
            yield c, 1
        for child in children:
            rng = np.random.default_rng(child)
            yield tuple(int(x) for x in rng.integers(0, 10, size=k)), int(rng.integers(0, 10))

    for c, pair_c in combos():
        q = sum((ci * p for ci, p in zip(c, polys)), IntPolynomial())
        if not q.is_zero:
            checked += 1
            if not is_real_rooted(q):
                return ProbeReport(trials, seed, checked, ("combination", c, q))
        for i in range(k):
            for j in range(i + 1, k):
                q = t * polys[i] + pair_c * polys[j]
                checked += 1
                if not is_real_rooted(q):
                    return ProbeReport(trials, seed, checked, (f"pair t*f{i}+c*f{j}", (pair_c,), q))
    return ProbeReport(trials, seed, checked)
