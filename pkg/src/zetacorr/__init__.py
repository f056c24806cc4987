"""Correlation sums over Riemann zeta zero ordinates.

Exact rational constants, certified Dirichlet series, two independent
evaluation routes for the correlation sum, and the repulsion-dip
analysis of the kernel profile.
"""

from .arithmetic import (
    MangoldtTable,
    MobiusTable,
    b_coefficient,
    nearest_int,
    sieve_mangoldt,
    sieve_mobius,
)
from .combinatorics import (
    alternating_multinomial_sum,
    balanced_coefficient,
    balanced_sinc_constant,
    cosh_product_identity,
    dip_depth_prediction,
    multinomial,
    signed_power_sum,
    sinc_power_integral,
)
from .correlation import (
    CorrelationReport,
    build_report,
    direct_correlation_sum,
    main_term,
    naive_correlation_sum,
    parse_tuple_text,
    routes_agree,
    spectral_correlation_sum,
)
from .dips import (
    DipRecord,
    kernel_pole_expansion,
    match_to_zeros,
    profile_grid,
    scan_minima,
)
from .errors import BudgetError, DataError, DomainError, ResourceError
from .quadrature import (
    QuadratureResult,
    adaptive_integrate,
    sinc_product_constant,
    weighted_profile_integral,
)
from .series import (
    SeriesConfig,
    correlation_kernel,
    kernel_expansion_residual,
    kernel_profile,
    kernel_profile_grid,
    log_derivative_series,
)
from .tuples import CoefficientTuple, coefficient_tuple
from .weights import GaussianTriplet, class_membership_report, gaussian_triplet
from .zeros import (
    ZeroTable,
    bundled_zeros_path,
    load_zeros,
    riemann_von_mangoldt_count,
    validate_zero_table,
    write_zeros,
    zeros_up_to,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "CoefficientTuple",
    "CorrelationReport",
    "DataError",
    "DipRecord",
    "DomainError",
    "GaussianTriplet",
    "MangoldtTable",
    "MobiusTable",
    "QuadratureResult",
    "ResourceError",
    "SeriesConfig",
    "ZeroTable",
    "adaptive_integrate",
    "alternating_multinomial_sum",
    "b_coefficient",
    "balanced_coefficient",
    "balanced_sinc_constant",
    "build_report",
    "bundled_zeros_path",
    "class_membership_report",
    "coefficient_tuple",
    "correlation_kernel",
    "cosh_product_identity",
    "dip_depth_prediction",
    "direct_correlation_sum",
    "gaussian_triplet",
    "kernel_expansion_residual",
    "kernel_pole_expansion",
    "kernel_profile",
    "kernel_profile_grid",
    "load_zeros",
    "log_derivative_series",
    "main_term",
    "match_to_zeros",
    "multinomial",
    "naive_correlation_sum",
    "nearest_int",
    "parse_tuple_text",
    "profile_grid",
    "riemann_von_mangoldt_count",
    "routes_agree",
    "scan_minima",
    "sieve_mangoldt",
    "sieve_mobius",
    "signed_power_sum",
    "sinc_power_integral",
    "sinc_product_constant",
    "spectral_correlation_sum",
    "validate_zero_table",
    "weighted_profile_integral",
    "write_zeros",
    "zeros_up_to",
]
