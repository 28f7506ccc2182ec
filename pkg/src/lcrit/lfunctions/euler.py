"""Exact Euler factors and Dirichlet coefficients.

Local factors are polynomials in T = p^(-s) with constant term 1 and
coefficients in Z, Q, or Q(sqrt(D)).  Symmetric powers are expanded via
Lucas power sums in (a_p, p^(k-1)); tensor products go through exact
companion matrices and Faddeev-LeVerrier characteristic polynomials, so
no floating point ever enters a coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

from ..exactnum import QuadNum, conj, disc_of, simplify
from ..modforms import Newform, SatakeData


@dataclass(frozen=True)
class LocalFactor:
    """det(1 - A p^(-s)) as the exact coefficient list [1, c_1, ..., c_d]."""

    p: int
    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("local factor must have constant term 1")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: "LocalFactor") -> "LocalFactor":
        if self.p != other.p:
            raise ValueError("local factors at different primes")
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = out[i + j] + x * y
        return LocalFactor(self.p, tuple(simplify(c) for c in out))

    def conjugate(self) -> "LocalFactor":
        return LocalFactor(self.p, tuple(conj(c) for c in self.coeffs))

    def inverse_series(self, nterms: int) -> list:
        """Coefficients of 1/P(T) up to T^nterms (Dirichlet a_{p^k})."""
        c = self.coeffs
        out = [1]
        for k in range(1, nterms + 1):
            s = 0
            for i in range(1, min(k, self.degree) + 1):
                if c[i]:
                    s = s + c[i] * out[k - i]
            out.append(simplify(-s) if s else 0)
        return out


def _power_sums(e1, e2, nmax: int) -> list:
    """s_k = alpha^k + beta^k for roots of X^2 - e1 X + e2, k = 0..nmax."""
    s = [2, e1]
    for _ in range(2, nmax + 1):
        s.append(simplify(e1 * s[-1] - e2 * s[-2]))
    return s[: nmax + 1]


def hecke_local_factor(s: SatakeData) -> LocalFactor:
    """1 - a_p T + p^(k-1) T^2."""
    return LocalFactor(s.p, (1, simplify(-1 * s.ap), s.det))


def sym_power_local_factor(s: SatakeData, n: int) -> LocalFactor:
    """prod_{i=0}^{n} (1 - alpha^i beta^(n-i) T), expanded exactly.

    Roots pair up as {alpha^i beta^(n-i), alpha^(n-i) beta^i} with sum
    e2^i s_{n-2i} and product e2^n, so the factor is a product of exact
    quadratics (times a linear middle factor when n is even).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return LocalFactor(s.p, (1, -1))
    e1, e2 = s.ap, s.det
    sums = _power_sums(e1, e2, n)
    out = LocalFactor(s.p, (1,))
    for i in range(n // 2 + 1):
        j = n - i
        if i == j:
            out = out * LocalFactor(s.p, (1, simplify(-(e2**i))))
        else:
            pair_sum = simplify(e2**i * sums[n - 2 * i])
            out = out * LocalFactor(
                s.p, (1, simplify(-1 * pair_sum), e2**n)
            )
    return out


def _companion(coeffs) -> list[list]:
    """Companion matrix whose eigenvalues are the reciprocal roots.

    For P(T) = prod(1 - g_i T) = 1 + c_1 T + ... + c_d T^d the monic
    polynomial with roots g_i is X^d + c_1 X^(d-1) + ... + c_d.
    """
    d = len(coeffs) - 1
    m = [[0] * d for _ in range(d)]
    for i in range(1, d):
        m[i][i - 1] = 1
    for i in range(d):
        m[i][d - 1] = simplify(-1 * coeffs[d - i])
    return m


def _mat_mul(a, b):
    n = len(a)
    return [
        [
            simplify(sum(a[i][k] * b[k][j] for k in range(n) if a[i][k]))
            if any(a[i][k] and b[k][j] for k in range(n))
            else 0
            for j in range(n)
        ]
        for i in range(n)
    ]


def _kronecker(a, b):
    na, nb = len(a), len(b)
    out = [[0] * (na * nb) for _ in range(na * nb)]
    for i in range(na):
        for j in range(na):
            if a[i][j]:
                for k in range(nb):
                    for l in range(nb):
                        if b[k][l]:
                            out[i * nb + k][j * nb + l] = simplify(a[i][j] * b[k][l])
    return out


def _charpoly(m) -> list:
    """Coefficients [1, c_1, ..., c_d] of det(X - M) = sum c_k X^(d-k).

    Faddeev-LeVerrier; exact over Q and Q(sqrt(D)).
    """
    d = len(m)
    c = [1]
    aux = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
    mk = None
    for k in range(1, d + 1):
        if k == 1:
            mk = m
        else:
            for i in range(d):
                aux[i][i] = simplify(aux[i][i] + c[-1])
            mk = _mat_mul(m, aux)
        tr = 0
        for i in range(d):
            tr = tr + mk[i][i]
        ck = simplify(Fraction(-1, k) * tr)
        c.append(ck)
        aux = mk
    return [simplify(x) for x in c]


def tensor_local_factor(params: list[SatakeData]) -> LocalFactor:
    """det(1 - (A_1 (x) ... (x) A_n) T), degree 2^n, exact."""
    if not params:
        raise ValueError("need at least one input")
    p = params[0].p
    if any(s.p != p for s in params):
        raise ValueError("all inputs must live at the same prime")
    if len(params) == 1:
        return hecke_local_factor(params[0])
    mat = _companion(hecke_local_factor(params[0]).coeffs)
    for s in params[1:]:
        mat = _kronecker(mat, _companion(hecke_local_factor(s).coeffs))
    return LocalFactor(p, tuple(_charpoly(mat)))


def rankin_selberg_local_factor(a: LocalFactor, b: LocalFactor) -> LocalFactor:
    """Tensor of two local parameter multisets, degree deg(a)*deg(b)."""
    if a.p != b.p:
        raise ValueError("local factors at different primes")
    if a.degree == 0 or b.degree == 0:
        return LocalFactor(a.p, (1,))
    if a.degree == 1 and a.coeffs[1] == -1:
        return b
    if b.degree == 1 and b.coeffs[1] == -1:
        return a
    mat = _kronecker(_companion(a.coeffs), _companion(b.coeffs))
    return LocalFactor(a.p, tuple(_charpoly(mat)))


def twist_local_factor(lf: LocalFactor, chi_p) -> LocalFactor:
    """Substitute T -> chi(p) T; chi(p) = 0 (ramified) gives the factor 1."""
    if chi_p == 0:
        return LocalFactor(lf.p, (1,))
    out = []
    power = 1
    for c in lf.coeffs:
        out.append(simplify(c * power))
        power = simplify(power * chi_p)
    return LocalFactor(lf.p, tuple(out))


def clebsch_gordan_identity(a: int, b: int, s: SatakeData) -> list[LocalFactor]:
    """Factor det(1 - Sym^a (x) Sym^b T) = prod_j det(1 - Sym^(a+b-2j) det^j T).

    Returns the factor list for j = 0..min(a,b); an inequality is a hard
    arithmetic error, never a soft failure.
    """
    if a < 0 or b < 0:
        raise ValueError("powers must be >= 0")
    lhs = rankin_selberg_local_factor(
        sym_power_local_factor(s, a), sym_power_local_factor(s, b)
    )
    factors = []
    rhs = LocalFactor(s.p, (1,))
    for j in range(min(a, b) + 1):
        f = twist_local_factor(
            sym_power_local_factor(s, a + b - 2 * j), s.det**j
        )
        factors.append(f)
        rhs = rhs * f
    if lhs.coeffs != rhs.coeffs:
        raise ArithmeticError(
            f"Clebsch-Gordan identity failed at p={s.p}, (a,b)=({a},{b})"
        )
    return factors


# -- Dirichlet coefficients ---------------------------------------------------


@dataclass(frozen=True)
class CoefficientTable:
    """Exact a_n for n <= nmax, with a provenance key."""

    key: str
    values: tuple  # index n, values[0] unused sentinel 0
    disc: int = 1

    @property
    def nmax(self) -> int:
        return len(self.values) - 1

    def a(self, n: int):
        return self.values[n]

    def conjugate(self) -> "CoefficientTable":
        return CoefficientTable(
            self.key + "|conj", tuple(conj(v) for v in self.values), self.disc
        )

    def check_multiplicative(self, upto: int | None = None) -> bool:
        n = min(self.nmax, upto or self.nmax)
        for m in range(2, n + 1):
            for k in range(2, n // m + 1):
                if gcd(m, k) == 1:
                    if self.values[m * k] != simplify(self.values[m] * self.values[k]):
                        return False
        return True


def _primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(2, n + 1) if sieve[i]]


def dirichlet_coefficients(local_factor, nmax: int, key: str = "") -> CoefficientTable:
    """Expand an Euler product prod_p local_factor(p)^(-1) to a_1..a_nmax."""
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    values = [0] * (nmax + 1)
    values[1] = 1
    disc = 1
    for p in _primes_upto(nmax):
        kmax = 0
        pk = p
        while pk <= nmax:
            kmax += 1
            pk *= p
        lf = local_factor(p)
        prime_powers = lf.inverse_series(kmax)
        for c in prime_powers:
            d = disc_of(c)
            if d != 1:
                disc = d
        # multiplicativity: fill n = p^k * m over p-free m already done
        pk = 1
        for k in range(1, kmax + 1):
            pk *= p
            apk = prime_powers[k]
            for m in range(1, nmax // pk + 1):
                if m % p:
                    v = values[m]
                    values[m * pk] = simplify(v * apk) if (v and apk) else 0
    return CoefficientTable(key=key, values=tuple(values), disc=disc)
