"""Chebyshev (sup-norm) distance of the right-hand side and its greatest repair.

For product and Lukasiewicz systems the distance comes from closed-form
per-row formulas built out of the scalar least-shift kernels; the repaired
right-hand side is the consistency projection of the rhs shifted up by the
distance, and it is the greatest vector attaining that distance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import TNorm, lukasiewicz_slack, product_slack
from .system import (
    System,
    attainable_rhs,
    check_consistency,
    min_impl_compose,
)


class UnsupportedTNormError(ValueError):
    """The closed-form distance covers only product and Lukasiewicz systems."""


def column_deltas(matrix: np.ndarray, rhs: np.ndarray, i: int, kind: TNorm) -> np.ndarray:
    """Per-column worst-case least shift for row ``i``.

    Entry j is the largest scalar slack over all rows k when row i leans on
    column j alone; the row distance is the minimum over j.  Columns are
    evaluated one by one (rows inside) so they can be reported as
    diagnostics showing which column realises the minimum.
    """
    n, m = matrix.shape
    if not 0 <= i < n:
        raise IndexError(f"row index {i} out of range for {n} rows")
    b_i = rhs[i]
    scores = np.empty(m)
    if kind is TNorm.PRODUCT:
        for j in range(m):
            u = matrix[i, j]
            scores[j] = max(product_slack(u, b_i, matrix[k, j], rhs[k]) for k in range(n))
    elif kind is TNorm.LUKASIEWICZ:
        for j in range(m):
            u = 1.0 - matrix[i, j]
            scores[j] = max(lukasiewicz_slack(u, b_i, matrix[k, j], rhs[k]) for k in range(n))
    else:
        raise UnsupportedTNormError(
            f"no closed form for the {kind.value} t-norm; use the numeric oracle"
        )
    return scores


def row_delta(matrix: np.ndarray, rhs: np.ndarray, i: int, kind: TNorm) -> float:
    """Least shift of rhs[i] that makes equation i satisfiable alongside the rest."""
    return float(column_deltas(matrix, rhs, i, kind).min())


def row_deltas(system: System) -> np.ndarray:
    """Per-row least shifts for the whole system (closed form)."""
    return np.array(
        [row_delta(system.matrix, system.rhs, i, system.tnorm) for i in range(system.shape[0])]
    )


def distance(system: System) -> float:
    """Chebyshev distance from the rhs to the nearest consistent rhs (closed form)."""
    return float(row_deltas(system).max())


@dataclass(frozen=True)
class ChebyshevReport:
    """Distance, per-row shifts, the repaired right-hand side, and its solution.

    ``greatest_approx`` is the greatest consistent right-hand side at
    distance ``delta`` from the original; ``greatest_solution`` is the
    greatest solution of the repaired system.
    """

    tnorm: TNorm
    delta: float
    row_deltas: np.ndarray
    greatest_approx: np.ndarray
    greatest_solution: np.ndarray

    def validate(self, system: System, tol: float = 1e-9) -> None:
        """Re-check the report invariants against ``system``; raises ValueError."""
        if abs(self.delta - float(self.row_deltas.max())) > tol:
            raise ValueError("distance does not equal the worst row shift")
        lower = np.maximum(system.rhs - self.delta, 0.0)
        upper = np.minimum(system.rhs + self.delta, 1.0)
        if np.any(self.greatest_approx < lower - tol) or np.any(self.greatest_approx > upper + tol):
            raise ValueError("repaired rhs leaves the distance band")
        attained = float(np.abs(system.rhs - self.greatest_approx).max())
        if abs(attained - self.delta) > tol:
            raise ValueError(
                f"repaired rhs attains {attained!r} instead of the distance {self.delta!r}"
            )
        repaired = System(system.matrix, self.greatest_approx, self.tnorm)
        verdict = check_consistency(repaired, tol)
        if not verdict.consistent:
            raise ValueError(f"repaired system is inconsistent (residual {verdict.residual:.3e})")


def report_from_delta(system: System, delta: float, row_shifts: np.ndarray) -> ChebyshevReport:
    """Assemble a report from an externally computed distance (e.g. bisection)."""
    upper = np.minimum(system.rhs + delta, 1.0)
    approx = attainable_rhs(system.matrix, system.tnorm, upper)
    solution = min_impl_compose(system.tnorm, system.matrix.T, approx)
    return ChebyshevReport(
        tnorm=system.tnorm,
        delta=float(delta),
        row_deltas=np.asarray(row_shifts, dtype=float),
        greatest_approx=approx,
        greatest_solution=solution,
    )


def approximate(system: System) -> ChebyshevReport:
    """Closed-form distance plus the greatest repaired rhs and its greatest solution."""
    shifts = row_deltas(system)
    return report_from_delta(system, float(shifts.max()), shifts)
