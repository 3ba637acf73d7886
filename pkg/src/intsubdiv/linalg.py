"""Exact dense matrices over the integers and rationals."""
from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

from .polynomial import _normalize


class IntMatrix:
    """Square or rectangular exact matrix; rows and columns indexed from 0."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(_normalize(x) for x in r) for r in rows)
        if rows and len({len(r) for r in rows}) != 1:
            raise ValueError("ragged matrix")
        self.rows = rows

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    @property
    def dim(self) -> int:
        """``d`` for a ``(d+1) x (d+1)`` matrix."""
        return len(self.rows) - 1

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __eq__(self, other):
        if isinstance(other, IntMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def column(self, j: int):
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self.rows))

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            cols = list(zip(*other.rows))
            return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows])
        vec = tuple(other)
        if len(vec) != self.shape[1]:
            raise ValueError("dimension mismatch")
        return tuple(_normalize(sum(a * b for a, b in zip(r, vec))) for r in self.rows)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def shift(self, lam) -> "IntMatrix":
        """``M - lam * I``."""
        return IntMatrix([[x - lam if i == j else x for j, x in enumerate(r)]
                          for i, r in enumerate(self.rows)])

    def delete_last(self) -> "IntMatrix":
        return IntMatrix([r[:-1] for r in self.rows[:-1]])

    def to_tsv(self) -> str:
        return "\n".join("\t".join(str(x) for x in r) for r in self.rows) + "\n"

    def to_json(self) -> dict:
        return {"dim": self.dim, "rows": [list(r) for r in self.rows]}

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.rows]!r})"


def _bareiss_echelon(rows: Sequence[Sequence[int]]):
    """Fraction-free elimination; returns (rank, sign-adjusted last pivot)."""
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if a else 0
    prev = 1
    sign = 1
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, m) if a[i][col] != 0), None)
        if piv is None:
            continue
        if piv != rank:
            a[rank], a[piv] = a[piv], a[rank]
            sign = -sign
        p = a[rank][col]
        for i in range(rank + 1, m):
            for j in range(col + 1, n):
                a[i][j] = (a[i][j] * p - a[i][col] * a[rank][j]) // prev
            a[i][col] = 0
        prev = p
        rank += 1
        if rank == m:
            break
    return rank, sign * prev, a


def _integral(M: IntMatrix):
    # clear denominators row by row; rank and the zero test of det are unaffected
    from math import lcm

    rows = []
    for r in M.rows:
        den = lcm(*[Fraction(x).denominator for x in r]) if r else 1
        rows.append([int(Fraction(x) * den) for x in r])
    return rows


def det(M: IntMatrix):
    """Exact determinant by Bareiss elimination."""
    m, n = M.shape
    if m != n:
        raise ValueError("determinant of a non-square matrix")
    if m == 0:
        return 1
    if all(isinstance(x, int) for r in M.rows for x in r):
        rank, last, _ = _bareiss_echelon(M.rows)
        return last if rank == m else 0
    # rational entries: scale rows to integers and undo the scaling
    from math import lcm

    scale = Fraction(1)
    rows = []
    for r in M.rows:
        den = lcm(*[Fraction(x).denominator for x in r])
        scale *= den
        rows.append([int(Fraction(x) * den) for x in r])
    rank, last, _ = _bareiss_echelon(rows)
    return _normalize(Fraction(last if rank == m else 0) / scale)


def rank(M: IntMatrix) -> int:
    if not M.rows:
        return 0
    return _bareiss_echelon(_integral(M))[0]


def kernel(M: IntMatrix) -> List[tuple]:
    """Basis of the right null space, one vector per free column, over Q."""
    a = [[Fraction(x) for x in r] for r in M.rows]
    m, n = M.shape
    pivots = []
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, m) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        p = a[row][col]
        a[row] = [x / p for x in a[row]]
        for i in range(m):
            if i != row and a[i][col] != 0:
                c = a[i][col]
                a[i] = [x - c * y for x, y in zip(a[i], a[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -a[r][fc]
        basis.append(tuple(_normalize(x) for x in v))
    return basis
