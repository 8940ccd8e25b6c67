"""Dense matrix machinery for max-T relational systems.

Compositions, the greatest potential solution, the projection onto
consistent right-hand sides, and the consistency check itself.  Matrices
and vectors are read-only numpy arrays with entries validated into [0, 1];
all operations are pure, so concurrent use is safe.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import UNIT_SLACK, DomainError, TNorm


class DimensionMismatchError(ValueError):
    """Operand shapes do not line up."""


def _validated(values, ndim: int, what: str) -> np.ndarray:
    arr = np.asarray(values, dtype=float)
    if arr.ndim != ndim or arr.size == 0:
        raise DimensionMismatchError(
            f"{what} must be a non-empty {ndim}-d array, got shape {arr.shape}"
        )
    if not (np.all(arr >= -UNIT_SLACK) and np.all(arr <= 1.0 + UNIT_SLACK)):
        raise DomainError(f"{what} entries must lie in [0, 1]")
    out = np.clip(arr, 0.0, 1.0)
    out.flags.writeable = False
    return out


def as_unit_vector(values) -> np.ndarray:
    """Copy ``values`` into a read-only float vector with entries in [0, 1]."""
    return _validated(values, 1, "vector")


def as_unit_matrix(values) -> np.ndarray:
    """Copy ``values`` into a read-only float matrix with entries in [0, 1]."""
    return _validated(values, 2, "matrix")


@dataclass(frozen=True)
class System:
    """A max-T relational system: ``matrix`` composed with an unknown x gives ``rhs``."""

    matrix: np.ndarray
    rhs: np.ndarray
    tnorm: TNorm

    def __post_init__(self) -> None:
        object.__setattr__(self, "matrix", as_unit_matrix(self.matrix))
        object.__setattr__(self, "rhs", as_unit_vector(self.rhs))
        if not isinstance(self.tnorm, TNorm):
            raise TypeError(f"tnorm must be a TNorm member, got {self.tnorm!r}")
        if self.matrix.shape[0] != self.rhs.shape[0]:
            raise DimensionMismatchError(
                f"matrix has {self.matrix.shape[0]} rows but rhs has "
                f"{self.rhs.shape[0]} entries"
            )

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape


@dataclass(frozen=True)
class ConsistencyVerdict:
    """Outcome of a consistency check.

    ``candidate`` is the greatest potential solution; when ``consistent`` is
    true it is the greatest solution of the system.  ``residual`` is the
    sup-norm gap between the recomposed candidate and the right-hand side.
    """

    consistent: bool
    candidate: np.ndarray
    residual: float


# Vectorised twins of algebra.tnorm / algebra.residual for whole tables.
# Kept in lockstep by tests comparing them entrywise against the scalar kernels.

def _tnorm_table(kind: TNorm, left, right):
    if kind is TNorm.MINIMUM:
        return np.minimum(left, right)
    if kind is TNorm.PRODUCT:
        return left * right
    return np.maximum(left + right - 1.0, 0.0)


def _residual_table(kind: TNorm, left, right):
    if kind is TNorm.MINIMUM:
        return np.where(left <= right, 1.0, right)
    if kind is TNorm.PRODUCT:
        # left = 0 is masked by the left <= right branch; silence the 0/0.
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            return np.where(left <= right, 1.0, right / left)
    return np.minimum(1.0 - left + right, 1.0)


def max_t_compose(kind: TNorm, matrix: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Row-wise max of T(matrix[i, j], x[j])."""
    if matrix.shape[1] != x.shape[0]:
        raise DimensionMismatchError(
            f"matrix has {matrix.shape[1]} columns but x has {x.shape[0]} entries"
        )
    return _tnorm_table(kind, matrix, x).max(axis=1)


def min_impl_compose(kind: TNorm, matrix: np.ndarray, c: np.ndarray) -> np.ndarray:
    """Row-wise min of the residual implicator of matrix[i, j] by c[j]."""
    if matrix.shape[1] != c.shape[0]:
        raise DimensionMismatchError(
            f"matrix has {matrix.shape[1]} columns but c has {c.shape[0]} entries"
        )
    return _residual_table(kind, matrix, c).min(axis=1)


def greatest_potential_solution(system: System) -> np.ndarray:
    """Residuate the right-hand side through the transposed matrix.

    The result is the greatest x whose composition stays below the
    right-hand side; if the system is consistent it is its greatest
    solution.  The transpose is a view, never a copy.
    """
    return min_impl_compose(system.tnorm, system.matrix.T, system.rhs)


def attainable_rhs(matrix: np.ndarray, kind: TNorm, c: np.ndarray) -> np.ndarray:
    """Greatest consistent right-hand side dominated by ``c``.

    Recomposes the residuation of ``c``.  The result never exceeds ``c``,
    applying the map twice changes nothing, and the map is monotone; ``c``
    is reproduced exactly when the system with right-hand side ``c`` is
    solvable.
    """
    if matrix.shape[0] != c.shape[0]:
        raise DimensionMismatchError(
            f"matrix has {matrix.shape[0]} rows but c has {c.shape[0]} entries"
        )
    return max_t_compose(kind, matrix, min_impl_compose(kind, matrix.T, c))


def check_consistency(system: System, tol: float = 1e-9) -> ConsistencyVerdict:
    """Decide consistency by recomposing the greatest potential solution.

    The verdict compares the sup-norm residual against ``tol``; exact
    equality is not meaningful in floating point.
    """
    if tol < 0.0:
        raise ValueError("tol must be >= 0")
    candidate = greatest_potential_solution(system)
    recomposed = max_t_compose(system.tnorm, system.matrix, candidate)
    residual = float(np.abs(recomposed - system.rhs).max())
    return ConsistencyVerdict(bool(residual <= tol), candidate, residual)
