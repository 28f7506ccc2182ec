"""Dirichlet characters with exact root-of-unity values.

Characters mod N are built from the cyclic decomposition of (Z/NZ)^* via
primitive roots (with the usual <-1, 5> splitting at powers of 2).  A
value is stored as the exact exponent t in [0,1) with chi(a) = e^(2 pi i t),
so parity, conductors, and Gauss-sum inputs stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from mpmath import mp


def _factorize(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def _primitive_root(pe: int, p: int) -> int:
    """Primitive root modulo p^e for odd p."""
    phi = pe - pe // p
    factors = [q for q, _ in _factorize(phi)]
    for g in range(2, pe):
        if gcd(g, pe) != 1:
            continue
        if all(pow(g, phi // q, pe) != 1 for q in factors):
            return g
    raise ArithmeticError(f"no primitive root mod {pe}")


def _crt_lift(residue: int, modulus: int, total: int) -> int:
    """x == residue (mod modulus), x == 1 (mod total/modulus)."""
    other = total // modulus
    if other == 1:
        return residue % total
    inv = pow(other, -1, modulus)
    return (1 + other * inv * (residue - 1)) % total


def _unit_group(n: int) -> list[tuple[int, int]]:
    """Generators (g, order) of (Z/nZ)^*, CRT-lifted to be 1 elsewhere."""
    if n == 1:
        return []
    gens = []
    for p, e in _factorize(n):
        pe = p**e
        if p == 2:
            if e == 1:
                continue
            gens.append((_crt_lift(pe - 1, pe, n), 2))
            if e >= 3:
                gens.append((_crt_lift(5, pe, n), 2 ** (e - 2)))
        else:
            g = _primitive_root(pe, p)
            gens.append((_crt_lift(g, pe, n), pe - pe // p))
    return gens


@dataclass(frozen=True)
class DirichletCharacter:
    """A Dirichlet character mod N given by its exact value table.

    table[a] is the exponent t with chi(a) = e^(2 pi i t) for units a,
    and None when gcd(a, N) > 1.
    """

    modulus: int
    table: tuple

    @property
    def is_trivial(self) -> bool:
        return all(t is None or t == 0 for t in self.table)

    def exponent(self, n: int) -> Fraction | None:
        return self.table[n % self.modulus]

    def __call__(self, n: int):
        """chi(n) as an exact int for real characters, else an mpc."""
        t = self.table[n % self.modulus]
        if t is None:
            return 0
        if t == 0:
            return 1
        if 2 * t == 1:
            return -1
        return mp.expjpi(2 * mp.mpf(t.numerator) / t.denominator)

    def parity(self) -> int:
        """chi(-1), which is +1 (even) or -1 (odd)."""
        val = self(-1)
        if val not in (1, -1):
            raise ArithmeticError("chi(-1) must be a sign")
        return val

    @property
    def is_even(self) -> bool:
        return self.parity() == 1

    @property
    def is_real(self) -> bool:
        return all(t is None or t == 0 or 2 * t == 1 for t in self.table)

    def conductor(self) -> int:
        n = self.modulus
        for f in sorted(d for d in range(1, n + 1) if n % d == 0):
            ok = True
            for u in range(1, n):
                if gcd(u, n) == 1 and (u - 1) % f == 0 and self.table[u] != 0:
                    ok = False
                    break
            if ok:
                return f
        return n

    @property
    def is_primitive(self) -> bool:
        return self.conductor() == self.modulus

    def conjugate(self) -> "DirichletCharacter":
        tbl = tuple(
            None if t is None else (Fraction(0) if t == 0 else 1 - t)
            for t in self.table
        )
        return DirichletCharacter(self.modulus, tbl)

    def label(self) -> str:
        k = next(
            (i for i, t in enumerate(self.table) if t not in (None, 0)),
            1,
        )
        return f"chi{self.modulus}.{k}"


def _build_table(n: int, gens, exps) -> tuple:
    table = [None] * n
    if n == 1:
        return (Fraction(0),)
    table[1 % n] = Fraction(0)
    # breadth-first closure over the generators
    frontier = [1 % n]
    while frontier:
        new = []
        for a in frontier:
            for (g, order), k in zip(gens, exps):
                b = (a * g) % n
                if table[b] is None:
                    table[b] = (table[a] + Fraction(k, order)) % 1
                    new.append(b)
        frontier = new
    return tuple(table)


def dirichlet_group(n: int) -> list[DirichletCharacter]:
    """All Dirichlet characters mod n."""
    gens = _unit_group(n)
    chars = []

    def rec(i, exps):
        if i == len(gens):
            chars.append(DirichletCharacter(n, _build_table(n, gens, exps)))
            return
        for k in range(gens[i][1]):
            rec(i + 1, exps + [k])

    rec(0, [])
    return chars


def trivial_character(n: int = 1) -> DirichletCharacter:
    table = tuple(
        Fraction(0) if gcd(a, n) == 1 else None for a in range(n)
    ) or (Fraction(0),)
    return DirichletCharacter(n, table)


def quadratic_character(n: int) -> DirichletCharacter:
    """The primitive real character of conductor n, when one exists."""
    for chi in dirichlet_group(n):
        if chi.is_real and not chi.is_trivial and chi.is_primitive:
            return chi
    raise ValueError(f"no primitive quadratic character mod {n}")
