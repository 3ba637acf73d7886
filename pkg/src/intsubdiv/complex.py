"""Finite abstract simplicial complexes and their face enumeration.

Faces are strictly increasing tuples of positive integer labels.  A complex is
stored by its facets together with the fully materialized face set, empty face
included.  Vectors carry ``f_{-1} = 1`` at index 0, so a complex of dimension
``d - 1`` has an f-vector (and h-vector) of length ``d + 1``.
"""
from __future__ import annotations

from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Tuple

from .errors import MalformedInput
from .polynomial import IntPolynomial

Face = Tuple[int, ...]


class FVector(tuple):
    """Face counts ``(f_{-1}, f_0, ..., f_{d-1})`` with ``f_{-1} = 1``."""

    def __new__(cls, counts: Iterable[int]):
        counts = tuple(int(c) for c in counts)
        if not counts or counts[0] != 1:
            raise ValueError("f-vector must start with f_{-1} = 1")
        if any(c < 0 for c in counts):
            raise ValueError("f-vector entries must be non-negative")
        return super().__new__(cls, counts)

    @property
    def d(self) -> int:
        return len(self) - 1

    def __repr__(self):
        return f"FVector({tuple(self)!r})"


class HVector(tuple):
    """The h-vector ``(h_0, ..., h_d)``; entries may be negative."""

    def __new__(cls, values: Iterable[int]):
        values = tuple(int(v) for v in values)
        if not values:
            raise ValueError("h-vector must be non-empty")
        return super().__new__(cls, values)

    @property
    def d(self) -> int:
        return len(self) - 1

    def __repr__(self):
        return f"HVector({tuple(self)!r})"


def _as_face(vertices) -> Face:
    raw = tuple(int(v) for v in vertices)
    face = tuple(sorted(set(raw)))
    if len(face) != len(raw):
        raise ValueError(f"repeated vertex in face {raw}")
    if face and face[0] < 1:
        raise ValueError("vertex labels must be positive integers")
    return face


class SimplicialComplex:
    """Complex generated by a family of faces (non-maximal generators are absorbed)."""

    def __init__(self, generators: Iterable[Iterable[int]] = ((),)):
        gens = {_as_face(g) for g in generators}
        if not gens:
            raise ValueError("a complex needs at least the empty face")
        faces = set()
        for g in gens:
            for k in range(len(g) + 1):
                faces.update(combinations(g, k))
        covered = set()
        for f in faces:
            if f:
                covered.update(combinations(f, len(f) - 1))
        self._faces = frozenset(faces)
        self._facets = frozenset(faces - covered)

    @property
    def facets(self) -> frozenset:
        return self._facets

    @property
    def faces(self) -> frozenset:
        return self._faces

    @cached_property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(sorted(v for f in self._faces if len(f) == 1 for v in f))

    @property
    def d(self) -> int:
        """Largest facet cardinality (dimension plus one)."""
        return max(len(f) for f in self._facets)

    @property
    def dim(self) -> int:
        return self.d - 1

    def sorted_facets(self):
        return sorted(self._facets)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._facets == other._facets

    def __hash__(self):
        return hash(self._facets)

    def __contains__(self, face):
        return tuple(sorted(face)) in self._faces

    def __repr__(self):
        shown = " ".join("".join(map(str, f)) if f else "{}" for f in self.sorted_facets()[:8])
        more = "" if len(self._facets) <= 8 else " ..."
        return f"<SimplicialComplex dim={self.dim} facets=[{shown}{more}]>"


def parse_facets(text: str) -> SimplicialComplex:
    """Parse the facet file format: one face per line, ``#`` comments, blank lines ignored."""
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        face = []
        for tok in line.split():
            try:
                v = int(tok)
            except ValueError:
                raise MalformedInput(f"line {lineno}: non-integer token {tok!r}") from None
            if v < 1:
                raise MalformedInput(f"line {lineno}: vertex labels must be positive, got {v}")
            face.append(v)
        if len(set(face)) != len(face):
            raise MalformedInput(f"line {lineno}: repeated vertex")
        gens.append(face)
    if not gens:
        raise MalformedInput("empty document: no facets")
    return SimplicialComplex(gens)


def serialize_facets(K: SimplicialComplex) -> str:
    """Inverse of :func:`parse_facets`; facets in lexicographic order."""
    lines = [" ".join(map(str, f)) for f in K.sorted_facets() if f]
    return "\n".join(lines) + ("\n" if lines else "")


def f_vector(K: SimplicialComplex) -> FVector:
    counts = [0] * (K.d + 1)
    for f in K.faces:
        counts[len(f)] += 1
    return FVector(counts)


def h_from_f(f) -> HVector:
    d = len(f) - 1
    return HVector(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 1)
    )


def f_from_h(h) -> FVector:
    d = len(h) - 1
    return FVector(sum(comb(d - i, j - i) * h[i] for i in range(j + 1)) for j in range(d + 1))


def h_polynomial(h) -> IntPolynomial:
    return IntPolynomial(h)


def euler_characteristic(f) -> int:
    """Unreduced Euler characteristic; the empty face is not counted."""
    return sum((-1) ** i * c for i, c in enumerate(f[1:]))


def is_reciprocal(h) -> bool:
    h = tuple(h)
    return h == h[::-1]


def random_complex(rng, max_vertices: int = 6, max_dim: int = 4, max_facets: int = 4) -> SimplicialComplex:
    """Seeded random complex used by the cross-validation suites.

    ``rng`` is a :class:`numpy.random.Generator`.
    """
    n = int(rng.integers(1, max_vertices + 1))
    k = int(rng.integers(1, max_facets + 1))
    gens = []
    for _ in range(k):
        size = int(rng.integers(1, min(max_dim + 1, n) + 1))
        gens.append(sorted(int(v) + 1 for v in rng.choice(n, size=size, replace=False)))
    return SimplicialComplex(gens)
