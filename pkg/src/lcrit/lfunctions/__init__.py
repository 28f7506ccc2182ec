from .euler import (
    CoefficientTable,
    LocalFactor,
    clebsch_gordan_identity,
    dirichlet_coefficients,
    hecke_local_factor,
    rankin_selberg_local_factor,
    sym_power_local_factor,
    tensor_local_factor,
    twist_local_factor,
)
from .lseries import (
    EvalResult,
    Evaluator,
    GammaDataError,
    InsufficientCoefficients,
    LSeriesSpec,
    archimedean_factor,
    evaluate,
    fe_selfcheck,
    solve_root_number,
)
from . import builders

__all__ = [
    "CoefficientTable",
    "LocalFactor",
    "LSeriesSpec",
    "EvalResult",
    "Evaluator",
    "GammaDataError",
    "InsufficientCoefficients",
    "archimedean_factor",
    "builders",
    "clebsch_gordan_identity",
    "dirichlet_coefficients",
    "evaluate",
    "fe_selfcheck",
    "hecke_local_factor",
    "rankin_selberg_local_factor",
    "solve_root_number",
    "sym_power_local_factor",
    "tensor_local_factor",
    "twist_local_factor",
]
