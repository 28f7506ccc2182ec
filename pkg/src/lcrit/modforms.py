"""Level-one modular forms from exact q-expansions.

Everything here is level SL2(Z) with trivial nebentypus: Eisenstein
generators E4/E6, the one-dimensional cuspidal spaces at weights
12,16,18,20,22,26, Hecke operators on monomial bases, the conjugate
eigenform pair of weight 24 over Q(sqrt(144169)), Satake parameters,
and the volume-normalized Petersson norm.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import mpmath
from mpmath import mp

from .exactnum import QuadNum, simplify, to_mpf
from .qexp import QExpansion

#: weights with dim S_k(SL2(Z)) = 1
ONE_DIM_WEIGHTS = (12, 16, 18, 20, 22, 26)

PAIR_WEIGHT = 24
PAIR_DISC = 144169


class TruncationError(Exception):
    """Raised when an operation needs more q-coefficients than retained."""


def dim_cusp_forms(weight: int) -> int:
    """dim S_k(SL2(Z)) for even weight k >= 4."""
    if weight % 2 or weight < 4:
        return 0
    if weight % 12 == 2:
        return weight // 12 - 1
    return weight // 12


def _divisor_power_sums(k: int, nterms: int) -> list[int]:
    """[sigma_k(1), ..., sigma_k(nterms)] by sieving over divisors."""
    sigma = [0] * (nterms + 1)
    for d in range(1, nterms + 1):
        dk = d**k
        for m in range(d, nterms + 1, d):
            sigma[m] += dk
    return sigma[1:]


def eisenstein_qexp(k: int, nterms: int) -> QExpansion:
    """Normalized Eisenstein series E4 or E6 to q^nterms."""
    if k == 4:
        const, sign, power = 240, 1, 3
    elif k == 6:
        const, sign, power = 504, -1, 5
    else:
        raise ValueError(f"unsupported Eisenstein weight {k}, need 4 or 6")
    if nterms < 0:
        raise ValueError("nterms must be >= 0")
    sigma = _divisor_power_sums(power, nterms)
    return QExpansion(k, [1] + [sign * const * s for s in sigma])


def delta_qexp(nterms: int) -> QExpansion:
    """The discriminant cusp form (E4^3 - E6^2)/1728."""
    e4 = eisenstein_qexp(4, nterms)
    e6 = eisenstein_qexp(6, nterms)
    diff = e4**3 - e6 * e6
    scaled = [Fraction(c, 1728) for c in diff.coeffs]
    return QExpansion(12, scaled)


def _monomial_basis(weight: int, basis_size: int, nterms: int) -> list[QExpansion]:
    """Echelon basis Delta^a * E4^b * E6^c, a = 1..basis_size, b maximal.

    The a-th element has q-valuation exactly a with leading coefficient 1,
    so coordinates in this basis are read off triangularly.
    """
    if weight % 2 or weight < 12:
        raise ValueError(f"no cusp forms of weight {weight} at level 1")
    if basis_size > dim_cusp_forms(weight):
        raise ValueError(
            f"basis_size {basis_size} exceeds dim {dim_cusp_forms(weight)}"
        )
    delta = delta_qexp(nterms)
    e4 = eisenstein_qexp(4, nterms)
    e6 = eisenstein_qexp(6, nterms)
    basis = []
    for a in range(1, basis_size + 1):
        rem = weight - 12 * a
        found = None
        for b in range(rem // 4, -1, -1):
            if (rem - 4 * b) % 6 == 0:
                found = (b, (rem - 4 * b) // 6)
                break
        if found is None:
            raise ValueError(f"no monomial of weight {weight} with Delta^{a}")
        b, c = found
        g = delta
        for _ in range(a - 1):
            g = g * delta
        for _ in range(b):
            g = g * e4
        for _ in range(c):
            g = g * e6
        basis.append(g)
    return basis


def hecke_operator_qexp(f: QExpansion, p: int) -> QExpansion:
    """T_p f for prime p; result retains floor(N/p) coefficients."""
    n_out = f.truncation // p
    if n_out < 1:
        raise TruncationError(f"need at least {p} coefficients to apply T_{p}")
    pk = p ** (f.weight - 1)
    out = []
    for n in range(n_out + 1):
        c = f.coeff(p * n)
        if n % p == 0:
            c = c + pk * f.coeff(n // p)
        out.append(c)
    return QExpansion(f.weight, out)


def hecke_operator_matrix(weight: int, p: int, basis_size: int) -> list[list[int]]:
    """Matrix of T_p on the echelon monomial basis; exact integer entries.

    Column j holds the coordinates of T_p(basis[j]).
    """
    nterms = 2 * p * basis_size
    basis = _monomial_basis(weight, basis_size, nterms)
    d = basis_size
    images = [hecke_operator_qexp(g, p) for g in basis]
    mat = [[0] * d for _ in range(d)]
    for j in range(d):
        t = images[j]
        for i in range(1, d + 1):
            val = t.coeff(i)
            for k in range(1, i):
                val = val - mat[k - 1][j] * basis[k - 1].coeff(i)
            val = simplify(Fraction(val))
            if not isinstance(val, int):
                raise ArithmeticError("Hecke matrix entry is not integral")
            mat[i - 1][j] = val
    return mat


@dataclass(frozen=True)
class Newform:
    """Normalized Hecke eigenform of level 1 with trivial nebentypus."""

    weight: int
    qexp: QExpansion
    hecke_field_disc: int = 1
    level: int = 1

    def __post_init__(self):
        if self.level != 1:
            raise ValueError("only level 1 is supported")
        if self.qexp.coeff(1) != 1:
            raise ValueError("eigenform must be normalized with a_1 = 1")

    def a(self, n: int):
        """Exact Fourier coefficient a_n."""
        return self.qexp.coeff(n)

    @property
    def truncation(self) -> int:
        return self.qexp.truncation

    def conjugate(self) -> "Newform":
        return Newform(self.weight, self.qexp.conjugate(), self.hecke_field_disc)

    def label(self) -> str:
        if self.hecke_field_disc == 1:
            return f"f{self.weight}"
        sign = "a" if to_mpf(self.a(2)) > to_mpf(self.a(2).conjugate()) else "b"
        return f"f{self.weight}{sign}"


def level_one_eigenform(weight: int, nterms: int) -> Newform:
    """The unique normalized eigenform of S_k(SL2(Z)) for dim-1 weights."""
    if weight not in ONE_DIM_WEIGHTS:
        raise ValueError(
            f"dim S_{weight}(SL2(Z)) != 1; supported weights: {ONE_DIM_WEIGHTS}"
        )
    f = _monomial_basis(weight, 1, nterms)[0]
    ints = []
    for c in f.coeffs:
        c = simplify(Fraction(c))
        if not isinstance(c, int):
            raise ArithmeticError("eigenform coefficient is not integral")
        ints.append(c)
    return Newform(weight, QExpansion(weight, ints))


def eigenform_pair_weight24(nterms: int) -> tuple[Newform, Newform]:
    """The two conjugate weight-24 eigenforms over Q(sqrt(144169)).

    They are the T_2 eigenvectors on the 2-dimensional cusp space,
    normalized to a_1 = 1; Galois conjugation swaps them.
    """
    if nterms < 4:
        raise ValueError("need nterms >= 4")
    mat = hecke_operator_matrix(PAIR_WEIGHT, 2, 2)
    tr = mat[0][0] + mat[1][1]
    det = mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]
    disc = tr * tr - 4 * det
    # disc = 4 * 144 * 144169 for weight 24
    sq = 1
    rem = disc
    f = 2
    while f * f <= rem:
        while rem % (f * f) == 0:
            rem //= f * f
            sq *= f
        f += 1
    if rem != PAIR_DISC:
        raise ArithmeticError(f"unexpected Hecke field discriminant {rem}")
    lam = QuadNum(Fraction(tr, 2), Fraction(sq, 2), rem)
    basis = _monomial_basis(PAIR_WEIGHT, 2, nterms)
    if mat[0][1] != 0:
        v2 = (lam - mat[0][0]) / QuadNum(mat[0][1], 0, rem)
    else:
        v2 = QuadNum(mat[1][0], 0, rem) / (lam - mat[1][1])
    coeffs = [
        basis[0].coeff(n) + v2 * basis[1].coeff(n)
        for n in range(nterms + 1)
    ]
    f1 = Newform(PAIR_WEIGHT, QExpansion(PAIR_WEIGHT, coeffs), rem)
    return f1, f1.conjugate()


@dataclass(frozen=True)
class SatakeData:
    """Roots of the Hecke polynomial X^2 - a_p X + p^(k-1) at a prime p."""

    p: int
    alpha: mpmath.mpc
    beta: mpmath.mpc
    ap: object
    det: int

    def check(self, tol=None) -> bool:
        tol = tol or mp.mpf(10) ** (-(mp.dps - 6))
        scale = abs(self.alpha) + abs(self.beta)
        return (
            abs(self.alpha + self.beta - to_mpf(self.ap)) <= tol * max(1, scale)
            and abs(self.alpha * self.beta - self.det) <= tol * max(1, self.det)
        )


def satake(f: Newform, p: int) -> SatakeData:
    """Satake parameters of f at p, at the current working precision."""
    if p > f.truncation:
        raise TruncationError(f"a_{p} not retained (truncation {f.truncation})")
    ap = f.a(p)
    det = p ** (f.weight - 1)
    a = to_mpf(ap)
    disc = a * a - 4 * det
    root = mp.sqrt(mp.mpc(disc))
    alpha = (a + root) / 2
    beta = (a - root) / 2
    return SatakeData(p=p, alpha=alpha, beta=beta, ap=ap, det=det)


# -- Petersson norm ----------------------------------------------------------


@dataclass(frozen=True)
class PeterssonNorm:
    """Volume-normalized Petersson norm with an error estimate."""

    value: mpmath.mpf
    error_bound: mpmath.mpf
    terms_used: int
    min_truncation_needed: int


def _upper_incomplete_gamma_int(k: int, x) -> mpmath.mpf:
    """Gamma(k, x) for integer k >= 1 via the finite exponential sum."""
    s = mp.mpf(1)
    term = mp.mpf(1)
    for j in range(1, k):
        term = term * x / j
        s += term
    return mp.factorial(k - 1) * mp.exp(-x) * s


def petersson_norm(f: Newform, digits: int = 15, split: float = 2.0) -> PeterssonNorm:
    """<f,f> = vol(F)^(-1) * int_F |f|^2 y^(k-2) dx dy, vol(F) = pi/3.

    Above y = split the x-integral collapses to the diagonal and the
    y-integral has a closed form in incomplete gammas; below, the double
    sum over coefficient pairs is integrated in x exactly and in y by
    quadrature on the two smooth pieces of the fundamental domain.
    """
    kappa = f.weight
    y0 = mp.sqrt(3) / 2
    # series truncation: e^{-2 pi (m+n) y0} below target for m+n > nq_pairs
    target = mp.mpf(10) ** (-(digits + 8))
    need = int(mp.ceil((digits + 8) * mp.log(10) / (2 * mp.pi * y0))) + kappa
    nq = min(f.truncation, need)
    if nq < 2:
        raise TruncationError("need at least 2 coefficients")

    with mp.workdps(digits + 12):
        a = [mp.mpf(0)] + [to_mpf(f.a(n)) for n in range(1, nq + 1)]
        pi = mp.pi

        # upper part: closed form sum of Gamma(kappa-1, 4 pi n split)
        upper = mp.mpf(0)
        for n in range(1, nq + 1):
            t = a[n] ** 2 * _upper_incomplete_gamma_int(kappa - 1, 4 * pi * n * split)
            t /= (4 * pi * n) ** (kappa - 1)
            upper += t
            if t < target * max(1, upper):
                break

        def x_integrated(y, x0):
            """int of |f|^2 over |x| in [x0, 1/2] at height y (both signs)."""
            e = [mp.exp(-2 * pi * m * y) for m in range(nq + 1)]
            s = (1 - 2 * x0) * mp.fsum(a[m] ** 2 * e[m] ** 2 for m in range(1, nq + 1))
            if x0 > 0:
                cross = mp.mpf(0)
                for m in range(1, nq + 1):
                    for n in range(m + 1, nq + 1):
                        k = n - m
                        cross += (
                            a[m] * a[n] * e[m] * e[n]
                            * mp.sin(2 * pi * k * x0) / (pi * k)
                        )
                s -= 2 * cross
            return s

        lower1 = mp.quad(
            lambda y: x_integrated(y, mp.sqrt(1 - y * y)) * y ** (kappa - 2),
            [y0, 1],
        )
        lower2 = mp.quad(
            lambda y: x_integrated(y, mp.mpf(0)) * y ** (kappa - 2),
            [1, mp.mpf(split)],
        )
        total = upper + lower1 + lower2
        norm = total * 3 / pi

        # tail of the q-series: geometric bound from the last coefficients
        tail = (
            max(abs(a[nq]), abs(a[nq - 1]))
            * mp.exp(-2 * pi * (nq + 1) * y0)
            / (1 - mp.exp(-2 * pi * y0))
        )
        err = tail + abs(total) * mp.mpf(10) ** (-(digits + 4))

    if nq < need and err > mp.mpf(10) ** (-digits) * abs(norm):
        raise TruncationError(
            f"retained {f.truncation} coefficients, need about {need}; "
            f"achieved bound {mp.nstr(err, 3)}"
        )
    return PeterssonNorm(
        value=norm, error_bound=err, terms_used=nq, min_truncation_needed=need
    )
