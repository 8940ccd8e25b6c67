"""Systems of max-T relational equations on [0, 1]: solve, check, and repair.

The library covers the minimum, product, and Lukasiewicz t-norms.  It
checks consistency, computes greatest solutions, and, for inconsistent
systems, the Chebyshev (sup-norm) distance from the right-hand side to the
nearest consistent one together with the greatest right-hand side attaining
it.  Closed-form distances exist for product and Lukasiewicz; an
independent numeric oracle (bisection and grid search) covers every kind
and cross-validates the formulas.
"""

from .algebra import (
    UNIT_SLACK,
    DomainError,
    TNorm,
    as_unit,
    clamp_down,
    clamp_up,
    lukasiewicz_slack,
    product_slack,
    residual,
    tnorm,
)
from .chebyshev import (
    ChebyshevReport,
    UnsupportedTNormError,
    approximate,
    column_deltas,
    distance,
    report_from_delta,
    row_delta,
    row_deltas,
)
from .oracle import (
    InstanceTooLargeError,
    OracleConfig,
    delta_by_bisection,
    delta_by_grid,
    lukasiewicz_inequality,
    product_inequality,
    random_instance,
    row_deltas_by_bisection,
    scan_lukasiewicz_slack,
    scan_product_slack,
    shift_feasible,
)
from .system import (
    ConsistencyVerdict,
    DimensionMismatchError,
    System,
    as_unit_matrix,
    as_unit_vector,
    attainable_rhs,
    check_consistency,
    greatest_potential_solution,
    max_t_compose,
    min_impl_compose,
)

__version__ = "0.1.0"

__all__ = [
    "UNIT_SLACK",
    "DomainError",
    "TNorm",
    "as_unit",
    "clamp_down",
    "clamp_up",
    "lukasiewicz_slack",
    "product_slack",
    "residual",
    "tnorm",
    "ConsistencyVerdict",
    "DimensionMismatchError",
    "System",
    "as_unit_matrix",
    "as_unit_vector",
    "attainable_rhs",
    "check_consistency",
    "greatest_potential_solution",
    "max_t_compose",
    "min_impl_compose",
    "ChebyshevReport",
    "UnsupportedTNormError",
    "approximate",
    "column_deltas",
    "distance",
    "report_from_delta",
    "row_delta",
    "row_deltas",
    "InstanceTooLargeError",
    "OracleConfig",
    "delta_by_bisection",
    "delta_by_grid",
    "lukasiewicz_inequality",
    "product_inequality",
    "random_instance",
    "row_deltas_by_bisection",
    "scan_lukasiewicz_slack",
    "scan_product_slack",
    "shift_feasible",
    "__version__",
]
