"""The interval subdivision, built explicitly and counted in closed form.

The explicit construction enumerates the poset of intervals ``[A, B]`` with
``{} != A <= B`` in the complex, ordered by ``[A, B] <= [A', B']`` iff
``A' <= A <= B <= B'``, and takes its order complex.  The closed forms give the
same f-vector directly from ``f(K)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Dict, List, Tuple

from .complex import Face, FVector, SimplicialComplex


@dataclass(frozen=True)
class Interval:
    lower: Face
    upper: Face

    def __post_init__(self):
        if not self.lower:
            raise ValueError("interval lower face must be nonempty")
        if not set(self.lower) <= set(self.upper):
            raise ValueError(f"{self.lower} is not contained in {self.upper}")

    @property
    def rank(self) -> int:
        return len(self.upper) - len(self.lower)

    def __le__(self, other: "Interval") -> bool:
        """Interval containment ``self <= other``."""
        return (set(other.lower) <= set(self.lower)
                and set(self.upper) <= set(other.upper))

    def __lt__(self, other: "Interval") -> bool:
        return self != other and self <= other

    def __str__(self):
        return f"[{''.join(map(str, self.lower))},{''.join(map(str, self.upper))}]"


IntervalChain = Tuple[Interval, ...]


def enumerate_intervals(K: SimplicialComplex) -> List[Interval]:
    """All intervals of ``K``, sorted lexicographically on (lower, upper)."""
    out = []
    for B in K.faces:
        for k in range(1, len(B) + 1):
            for A in combinations(B, k):
                out.append(Interval(A, B))
    out.sort(key=lambda iv: (iv.lower, iv.upper))
    return out


@dataclass(frozen=True)
class IntervalLabeling:
    """Bijection between intervals and labels ``1..m`` in lexicographic order."""

    intervals: Tuple[Interval, ...]

    def label(self, iv: Interval) -> int:
        return self._index[iv]

    def interval(self, label: int) -> Interval:
        return self.intervals[label - 1]

    @cached_property
    def _index(self) -> Dict[Interval, int]:
        return {iv: i + 1 for i, iv in enumerate(self.intervals)}

    def __len__(self):
        return len(self.intervals)

    def sidecar(self) -> str:
        """Tab separated ``label lower upper`` lines; faces written as space separated labels."""
        rows = []
        for i, iv in enumerate(self.intervals, start=1):
            rows.append(f"{i}\t{' '.join(map(str, iv.lower))}\t{' '.join(map(str, iv.upper))}")
        return "\n".join(rows) + ("\n" if rows else "")


def hasse_covers(intervals: List[Interval]) -> List[List[int]]:
    """Upward cover lists, by index.  The poset is graded by ``|B| - |A|``."""
    by_rank: Dict[int, List[int]] = {}
    for i, iv in enumerate(intervals):
        by_rank.setdefault(iv.rank, []).append(i)
    covers: List[List[int]] = [[] for _ in intervals]
    for i, iv in enumerate(intervals):
        for j in by_rank.get(iv.rank + 1, ()):
            if iv <= intervals[j]:
                covers[i].append(j)
    return covers


def maximal_chains(intervals: List[Interval]) -> List[Tuple[int, ...]]:
    """Maximal chains as index tuples, by depth-first walks over the cover relation.

    Every maximal chain of a graded poset runs from a minimal element ``[A, A]``
    to a maximal element through covers, so no subset enumeration is needed.
    """
    covers = hasse_covers(intervals)
    chains = []
    stack = [(i,) for i, iv in enumerate(intervals) if iv.rank == 0]
    while stack:
        chain = stack.pop()
        up = covers[chain[-1]]
        if not up:
            chains.append(chain)
            continue
        for j in up:
            stack.append(chain + (j,))
    return chains


def interval_complex(K: SimplicialComplex) -> Tuple[SimplicialComplex, IntervalLabeling]:
    """Order complex of the interval poset, relabelled by :class:`IntervalLabeling`."""
    intervals = enumerate_intervals(K)
    labeling = IntervalLabeling(tuple(intervals))
    if not intervals:
        return SimplicialComplex(), labeling
    # index i in the sorted list has label i + 1
    facets = [tuple(sorted(i + 1 for i in ch)) for ch in maximal_chains(intervals)]
    return SimplicialComplex(facets), labeling


def chain_count_Q(k: int, alpha: int) -> int:
    """Number of strict chains of length ``k`` ending at a fixed interval with ``|B \\ A| = alpha``."""
    return sum((-1) ** i * comb(k, i) * (1 + 2 * (k - i)) ** alpha for i in range(k + 1))


def f_interval(f) -> FVector:
    """f-vector of the interval subdivision, summed from the chain-count closed form."""
    d = len(f) - 1
    out = [1]
    for k in range(d):
        total = 0
        for l in range(d + 1):
            coef = sum(
                (-1) ** i * comb(k, i) * ((2 + 2 * k - 2 * i) ** l - (1 + 2 * k - 2 * i) ** l)
                for i in range(k + 1)
            )
            total += coef * f[l]
        out.append(total)
    return FVector(out)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if n == 0 or k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def f_interval_stirling(f) -> FVector:
    """Same contract as :func:`f_interval`, computed through Stirling numbers of the second kind."""
    d = len(f) - 1
    out = [1]
    for k in range(d):
        kf = factorial(k)
        total = 0
        for l in range(d + 1):
            coef = sum(comb(l, j) * kf * stirling2(j, k) * (2 ** l - 2 ** j) for j in range(l + 1))
            total += coef * f[l]
        out.append(total)
    return FVector(out)
