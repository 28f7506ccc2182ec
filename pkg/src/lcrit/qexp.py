"""Truncated q-expansions with exact coefficients.

A QExpansion stores the coefficients of q^0..q^N exactly, each an int,
Fraction, or QuadNum over one fixed discriminant.  Ring operations
truncate to the shorter input, so the retained range is always fully
correct; nothing is ever rounded.
"""

from __future__ import annotations

from fractions import Fraction

from .exactnum import QuadNum, conj, disc_of, simplify


class QExpansion:
    __slots__ = ("weight", "coeffs", "disc")

    def __init__(self, weight: int, coeffs):
        if weight < 4:
            raise ValueError("weight must be an integer >= 4")
        coeffs = [simplify(c) for c in coeffs]
        if not coeffs:
            raise ValueError("need at least the constant coefficient")
        disc = 1
        for c in coeffs:
            d = disc_of(c)
            if d != 1:
                if disc != 1 and d != disc:
                    raise ValueError("mixed discriminants in one expansion")
                disc = d
        self.weight = weight
        self.coeffs = coeffs
        self.disc = disc

    @property
    def truncation(self) -> int:
        """Largest n with a_n known."""
        return len(self.coeffs) - 1

    def coeff(self, n: int):
        if n < 0:
            return 0
        if n > self.truncation:
            raise IndexError(f"coefficient {n} beyond truncation {self.truncation}")
        return self.coeffs[n]

    def valuation(self) -> int:
        """Order of vanishing at q = 0 (truncation+1 if identically 0)."""
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return self.truncation + 1

    def truncate(self, n: int) -> "QExpansion":
        if n >= self.truncation:
            return self
        return QExpansion(self.weight, self.coeffs[: n + 1])

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "QExpansion") -> "QExpansion":
        if self.weight != other.weight:
            raise ValueError("cannot add expansions of different weights")
        n = min(self.truncation, other.truncation)
        return QExpansion(
            self.weight,
            [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)],
        )

    def __sub__(self, other: "QExpansion") -> "QExpansion":
        if self.weight != other.weight:
            raise ValueError("cannot subtract expansions of different weights")
        n = min(self.truncation, other.truncation)
        return QExpansion(
            self.weight,
            [self.coeffs[i] - other.coeffs[i] for i in range(n + 1)],
        )

    def __mul__(self, other: "QExpansion") -> "QExpansion":
        n = min(self.truncation, other.truncation)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            s = 0
            for i in range(k + 1):
                ai = a[i]
                if ai:
                    s = s + ai * b[k - i]
            out.append(s)
        return QExpansion(self.weight + other.weight, out)

    def __pow__(self, e: int) -> "QExpansion":
        if e < 1:
            raise ValueError("exponent must be >= 1")
        result = self
        for _ in range(e - 1):
            result = result * self
        return result

    def scale(self, c) -> "QExpansion":
        """Multiply every coefficient by the exact scalar c."""
        return QExpansion(self.weight, [c * x for x in self.coeffs])

    def conjugate(self) -> "QExpansion":
        """Apply sqrt(D) -> -sqrt(D) to every coefficient."""
        return QExpansion(self.weight, [conj(c) for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, QExpansion):
            return NotImplemented
        return (
            self.weight == other.weight
            and self.truncation == other.truncation
            and all(x == y for x, y in zip(self.coeffs, other.coeffs))
        )

    def __hash__(self):
        return hash((self.weight, tuple(self.coeffs[: min(8, len(self.coeffs))])))

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:5])
        return f"QExpansion(weight={self.weight}, N={self.truncation}, [{head}, ...])"
