"""Exact arithmetic in Q and in a fixed real quadratic field Q(sqrt(D)).

Coefficients of level-one eigenforms live either in Q (stored as int or
Fraction) or in Q(sqrt(D)) for a single squarefree D > 0 fixed per form
(stored as QuadNum).  Mixing two different discriminants is a bug in the
caller and is rejected.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

import mpmath
from mpmath import mp

Rational = int | Fraction


def is_squarefree(d: int) -> bool:
    if d <= 0:
        return False
    if d % 4 == 0:
        return False
    p = 3
    while p * p <= d:
        if d % (p * p) == 0:
            return False
        p += 2
    return True


class QuadNum:
    """a + b*sqrt(disc) with rational a, b and a fixed squarefree disc > 1."""

    __slots__ = ("a", "b", "disc")

    def __init__(self, a: Rational, b: Rational, disc: int):
        if disc <= 1:
            raise ValueError("disc must be a squarefree integer > 1")
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.disc = disc

    # -- helpers -----------------------------------------------------------

    def _coerce(self, other) -> "QuadNum | None":
        if isinstance(other, QuadNum):
            if other.disc != self.disc:
                raise ValueError(
                    f"mixed discriminants {self.disc} and {other.disc}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadNum(other, 0, self.disc)
        return None

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNum(self.a + o.a, self.b + o.b, self.disc)

    __radd__ = __add__

    def __neg__(self):
        return QuadNum(-self.a, -self.b, self.disc)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNum(self.a - o.a, self.b - o.b, self.disc)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNum(
            self.a * o.a + self.b * o.b * self.disc,
            self.a * o.b + self.b * o.a,
            self.disc,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        nrm = o.a * o.a - o.b * o.b * self.disc
        if nrm == 0:
            raise ZeroDivisionError("division by zero element")
        inv = QuadNum(o.a / nrm, -o.b / nrm, self.disc)
        return self * inv

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadNum):
            if other.disc != self.disc:
                return self.b == 0 and other.b == 0 and self.a == other.a
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.disc))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    # -- field structure ----------------------------------------------------

    def conjugate(self) -> "QuadNum":
        """Image under sqrt(disc) -> -sqrt(disc)."""
        return QuadNum(self.a, -self.b, self.disc)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.disc

    def trace(self) -> Fraction:
        return 2 * self.a

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def __repr__(self):
        if self.b == 0:
            return f"QuadNum({self.a})"
        return f"QuadNum({self.a} + {self.b}*sqrt({self.disc}))"


# -- generic operations on int | Fraction | QuadNum -------------------------


def disc_of(x) -> int:
    """Discriminant tag of a coefficient: 1 for rationals."""
    return x.disc if isinstance(x, QuadNum) else 1


def conj(x):
    """Galois conjugate; identity on rationals."""
    return x.conjugate() if isinstance(x, QuadNum) else x


def as_fraction(x) -> Fraction:
    """Rational value of a coefficient; raises if genuinely irrational."""
    if isinstance(x, QuadNum):
        if x.b != 0:
            raise ValueError(f"{x!r} is not rational")
        return x.a
    return Fraction(x)


def simplify(x):
    """Collapse a QuadNum with zero sqrt-part to int or Fraction."""
    if isinstance(x, QuadNum) and x.b == 0:
        x = x.a
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def to_mpf(x) -> mpmath.mpf:
    """Embed an exact coefficient into R at the current mpmath precision.

    The real embedding sends sqrt(disc) to the positive square root.
    """
    if isinstance(x, QuadNum):
        return (
            mp.mpf(x.a.numerator) / x.a.denominator
            + (mp.mpf(x.b.numerator) / x.b.denominator) * mp.sqrt(x.disc)
        )
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / x.denominator
    return mp.mpf(x)


def sqrt_disc_approx(disc: int) -> Fraction:
    """A rational approximation of sqrt(disc) good to ~1 part in 10^30."""
    scale = 10**30
    return Fraction(isqrt(disc * scale * scale), scale)
