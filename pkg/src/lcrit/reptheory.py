"""Combinatorics of weights, infinity types, and Hodge data.

Pure exact functions: the dominant-weight <-> infinity-type dictionary for
cohomological GL(n) parameters, minimal-coset (Kostant) representatives
with the length identity, critical-point sets in both the tempered-pair
and the Gamma-factor formulations, the balanced/interlaced condition, and
the sign-vector exponents entering tensor-product period formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

Num = int | Fraction


def rho(n: int) -> tuple[Fraction, ...]:
    """Half sum of positive roots: ((n-1)/2, (n-3)/2, ..., (1-n)/2)."""
    return tuple(Fraction(n - 1 - 2 * i, 2) for i in range(n))


def bottom_degree(n: int) -> int:
    """Least degree b_n = floor(n^2/4) of non-vanishing cohomology."""
    return n * n // 4


def is_weakly_decreasing(t) -> bool:
    return all(t[i] >= t[i + 1] for i in range(len(t) - 1))


def is_strictly_decreasing(t) -> bool:
    return all(t[i] > t[i + 1] for i in range(len(t) - 1))


@dataclass(frozen=True)
class InfinityType:
    """Parameter (kappa; w) of a cohomological GL(n) archimedean component.

    kappa is strictly decreasing with kappa_r >= 2 and has length
    floor(n/2); w has length floor((n+1)/2).  For odd n the last w-entry
    is even and sign_twist distinguishes the two members of the packet.
    """

    n: int
    kappa: tuple[int, ...]
    w: tuple[int, ...]
    sign_twist: bool = False

    def __post_init__(self):
        r = self.n // 2
        if len(self.kappa) != r:
            raise ValueError(f"kappa must have length {r}")
        if len(self.w) != (self.n + 1) // 2:
            raise ValueError(f"w must have length {(self.n + 1) // 2}")
        if not is_strictly_decreasing(self.kappa):
            raise ValueError("kappa must be strictly decreasing")
        if r > 0 and self.kappa[-1] < 2:
            raise ValueError("kappa entries must be >= 2")
        for i in range(r):
            if (self.kappa[i] - self.w[i] - self.n) % 2:
                raise ValueError(
                    f"parity violated: kappa_{i+1} == w_{i+1} + n (mod 2) fails"
                )
        if self.n % 2 and self.w[-1] % 2:
            raise ValueError("last w-entry must be even for odd n")
        if self.n % 2 == 0 and self.sign_twist:
            raise ValueError("sign twist only distinguishes odd-n packets")

    @property
    def essentially_tempered(self) -> bool:
        return all(x == self.w[0] for x in self.w)

    @property
    def scalar_w(self) -> int:
        if not self.essentially_tempered:
            raise ValueError("w-tuple is not constant")
        return self.w[0]


def signature(n: int, w_last: int, twisted: bool = False) -> int:
    """Sign attached to an odd-n packet member: (-1)^(r + w_last/2 [+1])."""
    if n % 2 == 0:
        raise ValueError("signature is defined for odd n only")
    if w_last % 2:
        raise ValueError("w_last must be even")
    r = n // 2
    e = r + w_last // 2 + (1 if twisted else 0)
    return -1 if e % 2 else 1


def infinity_type_to_weight(it: InfinityType) -> tuple[Fraction, ...]:
    """Highest weight mu with mu + rho_n carrying the (kappa; w) data."""
    r = it.n // 2
    shifted = [Fraction(it.kappa[i] - 1 - it.w[i], 2) for i in range(r)]
    if it.n % 2:
        shifted.append(Fraction(-it.w[r], 2))
    shifted += [Fraction(1 - it.kappa[i] - it.w[i], 2) for i in range(r - 1, -1, -1)]
    rh = rho(it.n)
    mu = tuple(shifted[i] - rh[i] for i in range(it.n))
    if any(x.denominator != 1 for x in mu):
        raise ValueError("non-integral weight; parity data inconsistent")
    if not is_weakly_decreasing(mu):
        raise ValueError("weight is not dominant")
    return tuple(int(x) for x in mu)


def weight_to_infinity_type(mu, sign_twist: bool = False) -> InfinityType:
    """Inverse of infinity_type_to_weight; rejects non-cohomological mu."""
    n = len(mu)
    if not is_weakly_decreasing(mu):
        raise ValueError("mu must be weakly decreasing")
    rh = rho(n)
    nu = [Fraction(mu[i]) + rh[i] for i in range(n)]
    r = n // 2
    kappa = []
    w = []
    for i in range(r):
        k = nu[i] - nu[n - 1 - i] + 1
        wi = -(nu[i] + nu[n - 1 - i])
        if k.denominator != 1 or wi.denominator != 1:
            raise ValueError("non-integral infinity type")
        kappa.append(int(k))
        w.append(int(wi))
    if n % 2:
        wm = -2 * nu[r]
        if wm.denominator != 1:
            raise ValueError("non-integral infinity type")
        w.append(int(wm))
    return InfinityType(
        n=n,
        kappa=tuple(kappa),
        w=tuple(w),
        sign_twist=sign_twist if n % 2 else False,
    )


# -- Kostant representatives -------------------------------------------------


@dataclass(frozen=True)
class KostantResult:
    """Sorting permutation data for a concatenated shifted weight.

    permutation maps sorted positions to input positions:
    sorted_lambda[i] == lam[permutation[i]].  length is the inversion
    count #{(a,b) : a < b, lam_a < lam_b}.
    """

    permutation: tuple[int, ...]
    mu: tuple[int, ...]
    length: int
    length_expected: int
    length_identity_holds: bool
    pattern_holds: bool
    mu_dominant: bool


def concatenated_lambda(blocks, exponents) -> list[Fraction]:
    """lam = (mu^(1) + rho_{n_1} + a_1, ..., mu^(k) + rho_{n_k} + a_k)."""
    lam = []
    for mu_i, a_i in zip(blocks, exponents):
        n_i = len(mu_i)
        rh = rho(n_i)
        if not is_weakly_decreasing(mu_i):
            raise ValueError("each block must be a dominant weight")
        lam.extend(Fraction(mu_i[j]) + rh[j] + Fraction(a_i) for j in range(n_i))
    return lam


def _interleaving_pattern_holds(lam, parts) -> bool:
    """Nested-pair pattern making each cross-block inversion count n_i*n_j/2.

    For blocks i < j, every top/bottom pair of block i must enclose or be
    enclosed by every pair of block j, and an odd block's middle entry
    must lie strictly inside every pair of the other block.
    """
    offsets = [0]
    for p in parts:
        offsets.append(offsets[-1] + p)
    k = len(parts)
    for i in range(k):
        ni, mi = parts[i], offsets[i]
        ri = ni // 2
        for j in range(i + 1, k):
            nj, mj = parts[j], offsets[j]
            rj = nj // 2
            for a in range(ri):
                ti, bi = lam[mi + a], lam[mi + ni - 1 - a]
                for b in range(rj):
                    tj, bj = lam[mj + b], lam[mj + nj - 1 - b]
                    if not (ti > tj > bj > bi or tj > ti > bi > bj):
                        return False
            if ni % 2:
                mid = lam[mi + ri]
                for b in range(rj):
                    tj, bj = lam[mj + b], lam[mj + nj - 1 - b]
                    if not (tj > mid > bj):
                        return False
            if nj % 2:
                mid = lam[mj + rj]
                for a in range(ri):
                    ti, bi = lam[mi + a], lam[mi + ni - 1 - a]
                    if not (ti > mid > bi):
                        return False
    return True


def kostant_representative(blocks, exponents) -> KostantResult:
    """Minimal-coset element sorting the concatenated shifted weight.

    blocks are per-factor dominant weights mu^(i); exponents are the
    half-sum twists a_i supplied by the caller.  The composition is read
    off the block lengths and may contain at most one odd part.
    """
    parts = tuple(len(b) for b in blocks)
    if len(blocks) != len(exponents):
        raise ValueError("need one exponent per block")
    if sum(1 for p in parts if p % 2) > 1:
        raise ValueError("at most one block of odd size is allowed")
    n = sum(parts)
    lam = concatenated_lambda(blocks, exponents)
    if len(set(lam)) != n:
        raise ValueError("entries of the shifted weight must be distinct")

    perm = tuple(sorted(range(n), key=lambda i: lam[i], reverse=True))
    sorted_lam = [lam[i] for i in perm]
    length = sum(
        1 for a in range(n) for b in range(a + 1, n) if lam[a] < lam[b]
    )
    expected = bottom_degree(n) - sum(bottom_degree(p) for p in parts)
    cross = sum(
        parts[i] * parts[j]
        for i in range(len(parts))
        for j in range(i + 1, len(parts))
    )
    assert 2 * expected == cross, "composition with more than one odd part"

    rh = rho(n)
    mu_frac = [sorted_lam[i] - rh[i] for i in range(n)]
    dominant = is_weakly_decreasing(mu_frac) and all(
        x.denominator == 1 for x in mu_frac
    )
    mu = tuple(int(x) if x.denominator == 1 else x for x in mu_frac)
    return KostantResult(
        permutation=perm,
        mu=mu,
        length=length,
        length_expected=expected,
        length_identity_holds=(length == expected),
        pattern_holds=_interleaving_pattern_holds(lam, parts),
        mu_dominant=dominant,
    )


# -- critical points ----------------------------------------------------------


def pair_distance(kappa, ell, n_prime_odd: bool) -> int:
    """min |kappa_i - ell_j|, including |kappa_i - 1| when n' is odd."""
    gaps = [abs(k - l) for k in kappa for l in ell]
    if n_prime_odd:
        gaps += [abs(k - 1) for k in kappa]
    if not gaps:
        raise ValueError("no archimedean exponents to compare")
    return min(gaps)


def critical_points(sigma: InfinityType, pi: InfinityType) -> list[Fraction]:
    """Critical points of the pair L-function, unitary normalization.

    Returns the half-integers m0 in Z + n'/2 with
    (2 - w - u - d)/2 <= m0 <= (-w - u + d)/2.  Requires even n and
    essentially tempered inputs.
    """
    if sigma.n % 2:
        raise ValueError("the first factor must have even degree")
    if not (sigma.essentially_tempered and pi.essentially_tempered):
        raise ValueError("both inputs must be essentially tempered")
    w = sigma.scalar_w
    u = pi.scalar_w
    d = pair_distance(sigma.kappa, pi.kappa, pi.n % 2 == 1)
    lo = Fraction(2 - w - u - d, 2)
    hi = Fraction(-w - u + d, 2)
    base = Fraction(pi.n, 2)
    first = base + ((lo - base).__ceil__())
    points = []
    m0 = first
    while m0 <= hi:
        points.append(m0)
        m0 += 1
    return points


def has_central_point(sigma: InfinityType, pi: InfinityType) -> bool:
    d = pair_distance(sigma.kappa, pi.kappa, pi.n % 2 == 1)
    w = sigma.scalar_w
    u = pi.scalar_w
    return d >= 1 and (w + u) % 2 == (sigma.n + pi.n + 1) % 2


def central_point(sigma: InfinityType, pi: InfinityType) -> Fraction:
    return Fraction(1 - sigma.scalar_w - pi.scalar_w, 2)


def unitary_to_classical(points, motivic_weight: int) -> list[int]:
    """Shift unitary critical points to classical integer ones."""
    out = []
    for m0 in points:
        m = Fraction(m0) + Fraction(motivic_weight, 2)
        if m.denominator != 1:
            raise ValueError(f"point {m0} does not shift to an integer")
        out.append(int(m))
    return out


def is_balanced(kappa, ell) -> bool:
    """Strict interleaving kappa_1 > ell_1 > kappa_2 > ... of GL(n)xGL(n-1)."""
    if len(ell) not in (len(kappa) - 1, len(kappa)):
        return False
    merged = []
    for i, k in enumerate(kappa):
        merged.append(k)
        if i < len(ell):
            merged.append(ell[i])
    return is_strictly_decreasing(merged)


def blasius_exponents(kappas) -> tuple[int, ...]:
    """t_i = #{sign vectors e with e_i = 1, 2(k_i - 1) < sum e_j (k_j - 1)}."""
    n = len(kappas)
    if n < 2 or any(k < 2 for k in kappas):
        raise ValueError("need n >= 2 weights, all >= 2")
    t = [0] * n
    for eps in product((1, -1), repeat=n):
        s = sum(e * (k - 1) for e, k in zip(eps, kappas))
        for i in range(n):
            if eps[i] == 1 and 2 * (kappas[i] - 1) < s:
                t[i] += 1
    return tuple(t)


# -- Hodge data ---------------------------------------------------------------


@dataclass(frozen=True)
class HodgeData:
    """Hodge numbers of a pure motive; middle split may be unresolved.

    pairs maps (p, q) with p < q to h^{p,q}; the reflected (q, p) is
    implied.  For even weight, middle_total is h^{w/2,w/2} and
    middle_plus/middle_minus are the eigenspace ranks, or None while the
    split is not yet pinned down.
    """

    weight: int
    pairs: tuple[tuple[int, int, int], ...]
    middle_total: int = 0
    middle_plus: int | None = None
    middle_minus: int | None = None

    def __post_init__(self):
        for p, q, h in self.pairs:
            if p >= q or p + q != self.weight or h <= 0:
                raise ValueError(f"bad Hodge datum ({p},{q},{h})")
        if self.middle_total and self.weight % 2:
            raise ValueError("middle type requires even weight")
        if self.middle_plus is not None:
            if self.middle_minus is None or (
                self.middle_plus + self.middle_minus != self.middle_total
            ):
                raise ValueError("middle split does not sum to middle_total")

    @property
    def rank(self) -> int:
        return 2 * sum(h for _, _, h in self.pairs) + self.middle_total

    @property
    def split_resolved(self) -> bool:
        return self.middle_total == 0 or self.middle_plus is not None

    def with_middle_split(self, plus: int, minus: int) -> "HodgeData":
        return HodgeData(self.weight, self.pairs, self.middle_total, plus, minus)

    def dual(self) -> "HodgeData":
        return HodgeData(
            weight=-self.weight,
            pairs=tuple(sorted((-q, -p, h) for p, q, h in self.pairs)),
            middle_total=self.middle_total,
            middle_plus=self.middle_plus,
            middle_minus=self.middle_minus,
        )


def hodge_rank2(kappa: int) -> HodgeData:
    """Hodge data of the rank-2 motive of a weight-kappa form: (0, k-1)."""
    return HodgeData(weight=kappa - 1, pairs=((0, kappa - 1, 1),))


def sym_power_hodge(kappa: int, n: int) -> HodgeData:
    """Hodge types (i(k-1), (n-i)(k-1)); the even-n middle split is left open."""
    if n < 1:
        raise ValueError("n must be >= 1")
    w = n * (kappa - 1)
    pairs = []
    for i in range(n + 1):
        p, q = i * (kappa - 1), (n - i) * (kappa - 1)
        if p < q:
            pairs.append((p, q, 1))
    middle = 1 if n % 2 == 0 else 0
    return HodgeData(weight=w, pairs=tuple(pairs), middle_total=middle)


def hodge_tensor(h1: HodgeData, h2: HodgeData) -> HodgeData:
    """Hodge data of a tensor product, tracking middle eigenspace ranks."""
    from collections import defaultdict

    w = h1.weight + h2.weight
    off = defaultdict(int)
    swap_count = 0

    def full_pairs(h):
        return [(p, q, m) for p, q, m in h.pairs] + [
            (q, p, m) for p, q, m in h.pairs
        ]

    for p1, q1, m1 in full_pairs(h1):
        for p2, q2, m2 in full_pairs(h2):
            p, q = p1 + p2, q1 + q2
            if p < q:
                off[(p, q)] += m1 * m2
            elif p == q:
                swap_count += m1 * m2

    # Middle classes from off-middle x off-middle come in F_infinity swap
    # pairs {A (x) B, Abar (x) Bbar}; each unordered pair carries one
    # eigenvector of each sign.  The ordered loop counted every pair twice.
    if swap_count % 2:
        raise ArithmeticError("middle swap count must be even")
    mid_plus = swap_count // 2
    mid_minus = swap_count // 2

    for hm, ho in ((h1, h2), (h2, h1)):
        if hm.middle_total:
            for p2, q2, m2 in ho.pairs:
                off[(hm.weight // 2 + p2, hm.weight // 2 + q2)] += (
                    hm.middle_total * m2
                )

    if h1.middle_total and h2.middle_total:
        if not (h1.split_resolved and h2.split_resolved):
            raise ValueError("tensor with unresolved middle splits")
        mid_plus += (
            h1.middle_plus * h2.middle_plus + h1.middle_minus * h2.middle_minus
        )
        mid_minus += (
            h1.middle_plus * h2.middle_minus + h1.middle_minus * h2.middle_plus
        )

    pairs = tuple(sorted((p, q, m) for (p, q), m in off.items()))
    total = mid_plus + mid_minus
    if total:
        return HodgeData(w, pairs, total, mid_plus, mid_minus)
    return HodgeData(w, pairs, 0)


def deligne_dims(n: int) -> tuple[int, int]:
    """(d+, d-) for the n-th symmetric power of the rank-2 motive."""
    if n % 2 == 0:
        return n // 2 + 1, n // 2
    return (n + 1) // 2, (n + 1) // 2


# -- archimedean pole bookkeeping ---------------------------------------------


def gamma_shifts(h: HodgeData) -> list[tuple[str, int]]:
    """Archimedean factor as (kind, a) for Gamma_R(s - a) / Gamma_C(s - a).

    Requires a resolved middle split when one is present.
    """
    if not h.split_resolved:
        raise ValueError("middle eigenvalue split is unresolved")
    out = []
    for p, q, m in h.pairs:
        out.extend([("C", p)] * m)
    if h.middle_total:
        a = h.weight // 2
        out.extend([("R", a)] * h.middle_plus)
        out.extend([("R", a - 1)] * h.middle_minus)
    return sorted(out)


def _archimedean_holomorphic_at(h: HodgeData, s: int) -> bool:
    """True iff L_infinity(M, s) has no pole at the integer s."""
    for kind, a in gamma_shifts(h):
        if kind == "C":
            if s <= a:
                return False
        else:
            if s <= a and (s - a) % 2 == 0:
                return False
    return True


def critical_points_from_gamma(h: HodgeData) -> list[int]:
    """Integers m where L_inf(M, s) and L_inf(M^dual, 1-s) are pole-free."""
    hd = h.dual()
    shifts = gamma_shifts(h)
    cs = [a for kind, a in shifts]
    lo = min(cs) - abs(h.weight) - 2
    hi = max(cs) + abs(h.weight) + 2
    out = []
    for m in range(lo, hi + 1):
        if _archimedean_holomorphic_at(h, m) and _archimedean_holomorphic_at(
            hd, 1 - m
        ):
            out.append(m)
    return out
