from .checks import (
    NumericConfig,
    NumericReport,
    asymptotics_check,
    factorization_checks,
    li2,
    li2_factorization_residual,
    li2d_numeric,
    numeric_psi_log,
    product_factorization_residual,
    qdilog,
    qdilog_factorization_residual,
    roots_of_unity_checks,
    run_suite,
    split_residual,
    truncation_convergence,
)
from .kernels import use_numba

__all__ = [
    "NumericConfig",
    "NumericReport",
    "asymptotics_check",
    "factorization_checks",
    "li2",
    "li2_factorization_residual",
    "li2d_numeric",
    "numeric_psi_log",
    "product_factorization_residual",
    "qdilog",
    "qdilog_factorization_residual",
    "roots_of_unity_checks",
    "run_suite",
    "split_residual",
    "truncation_convergence",
    "use_numba",
]
