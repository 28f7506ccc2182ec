"""Constructors for the L-series the package ships.

All specs are in the classical normalization: integer Dirichlet
coefficients, functional equation s <-> w + 1 - s with w the motivic
weight.  The middle Gamma_R shift of even symmetric powers is not
derivable from the coefficients alone; build_sym_power tries both
candidates and keeps the one whose functional equation actually closes,
caching the answer per (weight, power).
"""

from __future__ import annotations

from ..characters import DirichletCharacter
from ..modforms import Newform, satake
from ..reptheory import hodge_rank2, hodge_tensor, sym_power_hodge
from .euler import (
    LocalFactor,
    hecke_local_factor,
    rankin_selberg_local_factor,
    sym_power_local_factor,
    twist_local_factor,
)
from .lseries import (
    GammaDataError,
    LSeriesSpec,
    archimedean_factor,
    get_evaluator,
)


def zeta_spec() -> LSeriesSpec:
    """Riemann zeta: degree 1, weight 0, completed poles at 0 and 1."""
    return LSeriesSpec(
        key="zeta",
        degree=1,
        weight=0,
        gamma=(("R", 0),),
        local_factor=lambda p: LocalFactor(p, (1, -1)),
        poles=((1, 1), (0, -1)),
    )


def build_hecke(f: Newform) -> LSeriesSpec:
    """Degree-2 L-function of an eigenform, Gamma_C(s)."""
    return LSeriesSpec(
        key=f"hecke@{f.label()}",
        degree=2,
        weight=f.weight - 1,
        gamma=archimedean_factor(hodge_rank2(f.weight)),
        local_factor=lambda p: hecke_local_factor(satake(f, p)),
        disc=f.hecke_field_disc,
    )


_SPLIT_CACHE: dict[tuple[int, int], int] = {}


def build_sym_power(f: Newform, n: int, digits: int = 40,
                    middle_delta: int | None = None) -> LSeriesSpec:
    """Symmetric n-th power L-function of f, degree n+1.

    For even n the middle Hodge class carries either Gamma_R(s - w/2) or
    Gamma_R(s - w/2 + 1); the choice is resolved by solving the root
    number with each candidate and keeping the consistent one.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return build_hecke(f)
    hodge = sym_power_hodge(f.weight, n)

    def local(p):
        return sym_power_local_factor(satake(f, p), n)

    def spec_for(delta: int | None) -> LSeriesSpec:
        h = hodge
        tag = ""
        if h.middle_total:
            h = h.with_middle_split(1 - delta, delta)
            tag = f"[d{delta}]"
        return LSeriesSpec(
            key=f"sym{n}@{f.label()}{tag}",
            degree=n + 1,
            weight=n * (f.weight - 1),
            gamma=archimedean_factor(h),
            local_factor=local,
            disc=f.hecke_field_disc,
        )

    if n % 2 == 1:
        return spec_for(None)
    if middle_delta is None:
        middle_delta = _SPLIT_CACHE.get((f.weight, n))
    if middle_delta is not None:
        return spec_for(middle_delta)
    last_err = None
    for delta in (1, 0):
        cand = spec_for(delta)
        try:
            get_evaluator(cand, digits).root_number()
        except GammaDataError as exc:
            last_err = exc
            continue
        _SPLIT_CACHE[(f.weight, n)] = delta
        return cand
    raise GammaDataError(
        f"no middle split closes the functional equation for sym{n}@{f.label()}"
    ) from last_err


def resolved_middle_split(weight: int, n: int) -> int | None:
    return _SPLIT_CACHE.get((weight, n))


def build_rankin_selberg(f: Newform, g: Newform) -> LSeriesSpec:
    """Rankin-Selberg convolution of two eigenforms, degree 4.

    Equal weights put a pole into the picture (the convolution of a form
    with itself); only distinct weights are built directly.
    """
    if f.weight == g.weight:
        raise ValueError(
            "direct degree-4 convolution needs distinct weights; "
            "use the symmetric-square factorization for equal forms"
        )
    hodge = hodge_tensor(hodge_rank2(f.weight), hodge_rank2(g.weight))

    def local(p):
        return rankin_selberg_local_factor(
            hecke_local_factor(satake(f, p)), hecke_local_factor(satake(g, p))
        )

    return LSeriesSpec(
        key=f"rs@{f.label()}x{g.label()}",
        degree=4,
        weight=f.weight + g.weight - 2,
        gamma=archimedean_factor(hodge),
        local_factor=local,
        disc=max(f.hecke_field_disc, g.hecke_field_disc),
    )


def build_twisted(f: Newform, chi: DirichletCharacter) -> LSeriesSpec:
    """L(s, f (x) chi) for a primitive real character; conductor N^2.

    The gamma data of the weight-kappa form is unchanged; the conductor
    enters the functional equation through the usual sqrt-scaling.
    """
    if not chi.is_primitive:
        raise ValueError("character must be primitive")
    if not chi.is_real:
        raise ValueError("only real characters keep the coefficients exact")
    N = chi.modulus

    def local(p):
        return twist_local_factor(hecke_local_factor(satake(f, p)), chi(p))

    return LSeriesSpec(
        key=f"twist@{f.label()}x{chi.label()}",
        degree=2,
        weight=f.weight - 1,
        gamma=archimedean_factor(hodge_rank2(f.weight)),
        local_factor=local,
        conductor=N * N,
        disc=f.hecke_field_disc,
    )
