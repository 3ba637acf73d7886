"""Dense univariate polynomials with exact coefficients.

Coefficients are Python ints or :class:`fractions.Fraction` values, stored
lowest degree first.  Fractions with unit denominator are demoted to ints so
that combinatorial polynomials stay integer valued and print cleanly.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


def _normalize(c) -> Number:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _normalize(Fraction(c.numerator, c.denominator))
    raise TypeError(f"coefficient must be an exact rational, got {type(c).__name__}")


class IntPolynomial:
    """Immutable dense polynomial ``c0 + c1 t + ... + cn t^n``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_normalize(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> "IntPolynomial":
        return cls([0] * k + [c])

    @classmethod
    def constant(cls, c: Number) -> "IntPolynomial":
        return cls([c])

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self._c) - 1

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def leading(self) -> Number:
        if not self._c:
            raise ArithmeticError("zero polynomial has no leading coefficient")
        return self._c[-1]

    def __getitem__(self, k: int) -> Number:
        if k < 0:
            raise IndexError("negative coefficient index")
        return self._c[k] if k < len(self._c) else 0

    def __len__(self):
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == IntPolynomial([other])._c
        return NotImplemented

    def __hash__(self):
        return hash(("IntPolynomial", self._c))

    # arithmetic

    @staticmethod
    def _coerce(other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return IntPolynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self._c), len(other._c))
        return IntPolynomial(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self._c)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero or other.is_zero:
            return IntPolynomial()
        out = [0] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(other._c):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        out = IntPolynomial([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x):
        # Horner; exact for int/Fraction arguments
        acc = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return _normalize(acc) if isinstance(acc, (int, Fraction)) else acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(k * c for k, c in enumerate(self._c) if k)

    def reverse(self, n: int) -> "IntPolynomial":
        """Return ``t^n p(1/t)``; requires ``n >= degree``."""
        if n < self.degree:
            raise ValueError(f"cannot reverse degree {self.degree} polynomial at degree {n}")
        return IntPolynomial(self[n - k] for k in range(n + 1))

    def subs_square(self) -> "IntPolynomial":
        """Substitute ``t -> t^2``."""
        out = [0] * (2 * len(self._c))
        for k, c in enumerate(self._c):
            out[2 * k] = c
        return IntPolynomial(out)

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by ``t^k``."""
        return IntPolynomial([0] * k + list(self._c)) if self._c else self

    def div_t(self) -> "IntPolynomial":
        """Exact division by ``t``; raises ArithmeticError on a nonzero constant term."""
        if self[0] != 0:
            raise ArithmeticError("division by t is inexact: nonzero constant term")
        return IntPolynomial(self._c[1:])

    def trailing_zeros(self) -> int:
        """Multiplicity of the root at zero."""
        for k, c in enumerate(self._c):
            if c != 0:
                return k
        raise ArithmeticError("zero polynomial")

    def divmod(self, other: "IntPolynomial"):
        """Euclidean division over the rationals."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        r = [Fraction(c) for c in self._c]
        dv = other.degree
        lead = Fraction(other.leading)
        q = [Fraction(0)] * max(len(r) - dv, 0)
        for k in range(len(r) - 1, dv - 1, -1):
            c = r[k] / lead
            if c == 0:
                continue
            q[k - dv] = c
            for i, b in enumerate(other._c):
                r[k - dv + i] -= c * b
        return IntPolynomial(q), IntPolynomial(r[:dv])

    def __floordiv__(self, other):
        return self.divmod(self._coerce(other))[0]

    def __mod__(self, other):
        return self.divmod(self._coerce(other))[1]

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ArithmeticError("polynomial division is inexact")
        return q

    def content(self) -> Fraction:
        """Positive rational ``c`` with ``self / c`` primitive integral."""
        from math import gcd

        if self.is_zero:
            return Fraction(0)
        fr = [Fraction(c) for c in self._c]
        den = 1
        for f in fr:
            den = den * f.denominator // gcd(den, f.denominator)
        num = 0
        for f in fr:
            num = gcd(num, int(f * den))
        return Fraction(num, den)

    def primitive(self) -> "IntPolynomial":
        """Primitive integer polynomial with positive leading coefficient."""
        if self.is_zero:
            return self
        c = self.content()
        if self.leading < 0:
            c = -c
        return IntPolynomial(Fraction(x) / c for x in self._c)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._c)

    def __repr__(self):
        return f"IntPolynomial({list(self._c)!r})"

    def __str__(self):
        return format_poly(self._c)


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Q (positive leading coefficient); gcd(0, 0) = 0."""
    while not b.is_zero:
        a, b = b, a % b
        b = b.primitive()
    return a.primitive()


def format_poly(coeffs: Sequence, var: str = "t") -> str:
    """Render ``1 + 16t + 7t^2``; zero terms omitted, unit coefficients implicit."""
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = -c if c < 0 else c
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}{mono}"
            if isinstance(mag, Fraction):
                body = f"({mag}){mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def e_r(p: IntPolynomial, r: int) -> IntPolynomial:
    """Keep every ``r``-th coefficient: coefficient k of the result is ``p[r*k]``."""
    if r < 1:
        raise ValueError("r must be a positive integer")
    return IntPolynomial(p.coeffs[::r])
