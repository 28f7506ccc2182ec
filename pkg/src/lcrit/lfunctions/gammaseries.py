"""Pole expansions of products of Gamma_R factors.

The completed-L archimedean factor is written as
gamma0(s) = prod_j Gamma_R(s + mu_j) with integer shifts mu_j
(a Gamma_C contributes the pair mu, mu+1 via the duplication formula).
Its inverse Mellin transform phi0 has the convergent expansion

    phi0(u) = sum over poles p of gamma0 of
              u^(-p) * sum_m d_{p,m} (log u)^m,

where d_{p,m} come from the principal part of gamma0 at p.  This module
computes the table of (p, [d_{p,0}, d_{p,1}, ...]) to any depth, using
truncated Laurent series stepped down the pole ladders with
Gamma(a-1+h) = Gamma(a+h)/(a-1+h); only one anchor series per ladder
needs polygamma values.
"""

from __future__ import annotations

from fractions import Fraction

from mpmath import mp


class Laurent:
    """Truncated Laurent series sum c[i] h^(lead+i) with fixed length."""

    __slots__ = ("lead", "c")

    def __init__(self, lead: int, c: list):
        self.lead = lead
        self.c = c

    def __mul__(self, other: "Laurent") -> "Laurent":
        L = max(len(self.c), len(other.c))
        out = [mp.mpf(0)] * L
        for i, x in enumerate(self.c):
            if x:
                top = min(L - i, len(other.c))
                for j in range(top):
                    out[i + j] += x * other.c[j]
        return Laurent(self.lead + other.lead, out)

    def div_linear(self, a) -> "Laurent":
        """Divide by (a + h); a == 0 shifts the leading exponent down."""
        if a == 0:
            return Laurent(self.lead - 1, list(self.c))
        inv = mp.mpf(1) / a
        out = []
        prev = mp.mpf(0)
        for x in self.c:
            prev = (x - prev) * inv
            out.append(prev)
        return Laurent(self.lead, out)

    def coeff(self, power: int):
        i = power - self.lead
        if 0 <= i < len(self.c):
            return self.c[i]
        return mp.mpf(0)


def _exp_series(poly: list, L: int) -> list:
    """exp of a series with zero constant term, to length L."""
    out = [mp.mpf(1)] + [mp.mpf(0)] * (L - 1)
    for k in range(1, L):
        s = mp.mpf(0)
        for m in range(1, k + 1):
            if m < len(poly) and poly[m]:
                s += m * poly[m] * out[k - m]
        out[k] = s / k
    return out


def _gamma_anchor(a: Fraction, L: int) -> Laurent:
    """Taylor series of Gamma(a + h) for a >= 2 via log-gamma derivatives."""
    af = mp.mpf(a.numerator) / a.denominator
    logpoly = [mp.mpf(0)] + [
        mp.psi(m - 1, af) / mp.factorial(m) for m in range(1, L)
    ]
    series = _exp_series(logpoly, L)
    g = mp.gamma(af)
    return Laurent(0, [g * x for x in series])


def _build_ladder(a_max: Fraction, a_min: Fraction, L: int) -> dict:
    """Series of Gamma(a + h) for a = a_max, a_max - 1, ..., a_min."""
    anchor = a_max
    while anchor < 2:
        anchor += 1
    cache = {anchor: _gamma_anchor(anchor, L)}
    a = anchor
    while a > a_min:
        nxt = a - 1
        arg = 0 if nxt == 0 else mp.mpf(nxt.numerator) / nxt.denominator
        cache[nxt] = cache[a].div_linear(arg)
        a = nxt
    return cache


class PoleData:
    """Expansion data of gamma0(s) = prod Gamma_R(s + mu_j).

    poles: descending list of pole positions p.
    dcoeffs: matching list of [d_{p,0}, d_{p,1}, ...] (length = order).
    """

    def __init__(self, mu: tuple[int, ...], kmax: int):
        self.mu = tuple(sorted(mu))
        self.kmax = kmax
        d = len(self.mu)
        pole_map: dict[int, int] = {}
        for m in self.mu:
            for k in range(kmax + 1):
                p = -m - 2 * k
                pole_map[p] = pole_map.get(p, 0) + 1
        self.max_order = max(pole_map.values())
        L = self.max_order + 2

        # one ladder of Gamma(a+h) series per fractional class of argument
        needed: set[Fraction] = set()
        for m in self.mu:
            for p in pole_map:
                needed.add(Fraction(p + m, 2))
        ranges: dict[Fraction, tuple[Fraction, Fraction]] = {}
        for a in needed:
            cls = a % 1
            lo, hi = ranges.get(cls, (a, a))
            ranges[cls] = (min(lo, a), max(hi, a))
        ladders = {
            cls: _build_ladder(hi, lo, L) for cls, (lo, hi) in ranges.items()
        }

        log_pi = mp.log(mp.pi)
        sum_mu = sum(self.mu)
        pi_exp = _exp_series([mp.mpf(0), -d * log_pi], L)

        self.poles: list[int] = []
        self.dcoeffs: list[list] = []
        for p in sorted(pole_map, reverse=True):
            series = Laurent(0, list(pi_exp))
            for m in self.mu:
                a = Fraction(p + m, 2)
                series = series * ladders[a % 1][a]
            const = mp.power(mp.pi, mp.mpf(-(d * p + sum_mu)) / 2)
            order = pole_map[p]
            ds = []
            fact = 1
            for mth in range(order):
                b = series.coeff(-mth - 1) * const * mp.mpf(2) ** (mth + 1)
                ds.append((-1) ** mth * b / fact)
                fact *= mth + 1
            self.poles.append(p)
            self.dcoeffs.append(ds)

    def phi0(self, u):
        """Direct evaluation of phi0(u); mostly for cross-checks."""
        lu = mp.log(u)
        total = mp.mpf(0)
        for p, ds in zip(self.poles, self.dcoeffs):
            powu = mp.power(u, -p)
            lpow = mp.mpf(1)
            acc = mp.mpf(0)
            for dcf in ds:
                acc += dcf * lpow
                lpow *= lu
            total += powu * acc
        return total


def gamma_r_shifts(gamma: tuple) -> tuple[int, ...]:
    """Flatten (kind, lam) factors into the Gamma_R shift multiset mu.

    Gamma_C(s+lam) = Gamma_R(s+lam) * Gamma_R(s+lam+1), exactly.
    """
    mu: list[int] = []
    for kind, lam in gamma:
        if kind == "R":
            mu.append(lam)
        elif kind == "C":
            mu.extend([lam, lam + 1])
        else:
            raise ValueError(f"unknown gamma factor kind {kind!r}")
    return tuple(sorted(mu))


def gamma0_value(mu: tuple[int, ...], s):
    """prod_j Gamma_R(s + mu_j) away from poles."""
    d = len(mu)
    val = mp.power(mp.pi, -(d * s + sum(mu)) / 2)
    for m in mu:
        val *= mp.gamma((s + m) / 2)
    return val
