"""First-order Marcum Q-function: reference evaluation and bound catalog.

The package provides a cross-validated oracle for Q1(a, b), eighteen
closed-form upper/lower bounds evaluated in overflow-safe scaled form,
error-table generation, and numeric certification scans for the
monotonicity and ordering facts the bounds rest on.
"""

from .bounds import (
    BoundEval,
    BoundId,
    Regime,
    compute_zeta,
    eval_all,
    evaluate,
    lb1jp,
    lb2jp,
    literature_bound,
    regime_of,
    ub1jp,
    ub2jp,
)
from .errors import (
    ConvergenceError,
    CrossValidationError,
    DomainError,
    OverflowDomainError,
    RegimeError,
    SingularityError,
    UnknownFigureError,
)
from .oracle import OracleResult, QArgs, q1_quadrature, q1_reference, q1_series, rice_pdf

__version__ = "0.1.0"

__all__ = [
    "BoundEval",
    "BoundId",
    "ConvergenceError",
    "CrossValidationError",
    "DomainError",
    "OracleResult",
    "OverflowDomainError",
    "QArgs",
    "Regime",
    "RegimeError",
    "SingularityError",
    "UnknownFigureError",
    "compute_zeta",
    "eval_all",
    "evaluate",
    "lb1jp",
    "lb2jp",
    "literature_bound",
    "q1_quadrature",
    "q1_reference",
    "q1_series",
    "regime_of",
    "rice_pdf",
    "ub1jp",
    "ub2jp",
    "__version__",
]
