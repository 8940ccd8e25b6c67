"""Independent numeric ground truth for the Chebyshev machinery.

Bisection of the monotone shift-feasibility predicate yields the distance
for any t-norm; an intentionally naive grid enumeration over candidate
right-hand sides bounds it on tiny instances; seeded generators produce
reproducible random systems for property tests.  The grid path and the
scalar shift scans share no code with the closed-form kernels.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import TNorm
from .system import System, attainable_rhs, max_t_compose

#: Fixed-point tolerance deciding whether a candidate rhs is consistent.
MEMBERSHIP_TOL = 1e-9

_GRID_BATCH = 1 << 18


class InstanceTooLargeError(ValueError):
    """Grid enumeration is guarded to n <= 3 rows and step >= 1e-2."""


@dataclass(frozen=True)
class OracleConfig:
    """Tolerances for the numeric paths.

    ``grid_step`` spaces the candidate-rhs grid, ``scan_step`` spaces the
    scalar shift scans.
    """

    bisection_tolerance: float = 1e-12
    grid_step: float = 1e-2
    scan_step: float = 1e-4
    max_iterations: int = 64

    def __post_init__(self) -> None:
        if min(self.bisection_tolerance, self.grid_step, self.scan_step) <= 0.0:
            raise ValueError("tolerances must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")


def shift_feasible(system: System, delta: float) -> bool:
    """Whether shifting the rhs down/up by ``delta`` brackets a consistent rhs.

    Monotone in ``delta``: the lower band shrinks while the reachable band
    grows.  Always true at delta = 1, where the lower band is zero.
    """
    lower = np.maximum(system.rhs - delta, 0.0)
    upper = np.minimum(system.rhs + delta, 1.0)
    return bool(np.all(lower <= attainable_rhs(system.matrix, system.tnorm, upper)))


def _row_shift_feasible(system: System, i: int, delta: float) -> bool:
    upper = np.minimum(system.rhs + delta, 1.0)
    reach = attainable_rhs(system.matrix, system.tnorm, upper)
    return bool(max(system.rhs[i] - delta, 0.0) <= reach[i])


def _bisect(predicate, tolerance: float, max_iterations: int) -> float:
    if predicate(0.0):
        return 0.0
    lo, hi = 0.0, 1.0
    for _ in range(max_iterations):
        if hi - lo <= tolerance:
            break
        mid = 0.5 * (lo + hi)
        if predicate(mid):
            hi = mid
        else:
            lo = mid
    return hi


def delta_by_bisection(system: System, config: OracleConfig | None = None) -> float:
    """Least feasible shift, bisected down to ``bisection_tolerance``.

    The minimum is attained, so the upper bracket endpoint is reported.
    Works for every t-norm kind, including minimum.
    """
    cfg = config or OracleConfig()
    return _bisect(
        lambda d: shift_feasible(system, d), cfg.bisection_tolerance, cfg.max_iterations
    )


def row_deltas_by_bisection(system: System, config: OracleConfig | None = None) -> np.ndarray:
    """Per-row least feasible shifts, each bisected independently.

    Their maximum equals the system-level distance; used to fill reports
    for kinds without a closed form.
    """
    cfg = config or OracleConfig()
    return np.array(
        [
            _bisect(
                lambda d, i=i: _row_shift_feasible(system, i, d),
                cfg.bisection_tolerance,
                cfg.max_iterations,
            )
            for i in range(system.shape[0])
        ]
    )


def _grid_axis(step: float) -> np.ndarray:
    count = int(np.floor(1.0 / step + 1e-9)) + 1
    axis = np.minimum(np.arange(count) * step, 1.0)
    if axis[-1] < 1.0:
        axis = np.append(axis, 1.0)
    return axis


def _image_batch(kind: TNorm, matrix: np.ndarray, solutions: np.ndarray) -> np.ndarray:
    """Compose a batch of candidate solutions through the matrix, coded flat."""
    a = matrix[None, :, :]          # (1, n, m)
    x = solutions[:, None, :]       # (B, 1, m)
    if kind is TNorm.PRODUCT:
        values = a * x
    elif kind is TNorm.MINIMUM:
        values = np.minimum(a, x)
    else:
        values = np.maximum(a + x - 1.0, 0.0)
    return values.max(axis=2)       # (B, n)


def _attainable_batch(kind: TNorm, matrix: np.ndarray, candidates: np.ndarray) -> np.ndarray:
    """Consistency projection of a batch of candidate rhs vectors.

    Deliberately re-derived from the implicator and t-norm definitions
    instead of reusing the composition helpers, so the grid search stays an
    independent check of the main path.
    """
    a = matrix[None, :, :]          # (1, n, m)
    c = candidates[:, :, None]      # (B, n, 1)
    if kind is TNorm.PRODUCT:
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            impl = np.where(a <= c, 1.0, c / a)
    elif kind is TNorm.MINIMUM:
        impl = np.where(a <= c, 1.0, c * np.ones_like(a))
    else:
        impl = np.minimum(1.0 - a + c, 1.0)
    return _image_batch(kind, matrix, impl.min(axis=1))


def _mesh(axis: np.ndarray, dims: int) -> np.ndarray:
    return np.stack(np.meshgrid(*([axis] * dims), indexing="ij"), axis=-1).reshape(-1, dims)


def delta_by_grid(system: System, config: OracleConfig | None = None) -> float:
    """Best distance over a grid-restricted subset of the consistent rhs set.

    Two enumerations feed the minimum.  Candidate right-hand sides on the
    grid {0, step, ..., 1}^n are kept when the consistency projection moves
    them by at most ``MEMBERSHIP_TOL``.  That subset alone can be very
    sparse (for generic matrices almost no grid point is exactly
    attainable), so when the solution side is also small the attained
    images of a solution grid are enumerated too; composition is
    1-Lipschitz in the solution, which caps the overshoot at about one
    grid step.  The zero vector is always consistent, so the minimum
    exists, and every candidate retained is consistent, so the result
    never undershoots the true distance by more than ``MEMBERSHIP_TOL``.
    """
    cfg = config or OracleConfig()
    n, m = system.shape
    if n > 3:
        raise InstanceTooLargeError(f"grid enumeration supports n <= 3, got n = {n}")
    if cfg.grid_step < 1e-2 - 1e-12:
        raise InstanceTooLargeError(f"grid_step must be >= 1e-2, got {cfg.grid_step}")
    axis = _grid_axis(cfg.grid_step)
    best = np.inf
    mesh = _mesh(axis, n)
    for start in range(0, mesh.shape[0], _GRID_BATCH):
        block = mesh[start : start + _GRID_BATCH]
        image = _attainable_batch(system.tnorm, system.matrix, block)
        member = np.abs(image - block).max(axis=1) <= MEMBERSHIP_TOL
        if member.any():
            gaps = np.abs(block[member] - system.rhs).max(axis=1)
            best = min(best, float(gaps.min()))
    if m <= 3:
        mesh = _mesh(axis, m)
        for start in range(0, mesh.shape[0], _GRID_BATCH):
            block = mesh[start : start + _GRID_BATCH]
            image = _image_batch(system.tnorm, system.matrix, block)
            gaps = np.abs(image - system.rhs).max(axis=1)
            best = min(best, float(gaps.min()))
    return best


def product_inequality(u, x, y, z, delta):
    """Feasibility of the product-system row inequality at shift ``delta``.

    (x - delta)+ <= u * goguen(y, min(z + delta, 1)), with the implication
    expanded from its branch definition.  Broadcasts over array arguments.
    """
    zbar = np.minimum(np.asarray(z, dtype=float) + delta, 1.0)
    y = np.asarray(y, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        impl = np.where(y <= zbar, 1.0, zbar / y)
    return np.maximum(np.asarray(x, dtype=float) - delta, 0.0) <= u * impl


def lukasiewicz_inequality(u, x, y, z, delta):
    """Feasibility of the Lukasiewicz-system row inequality at shift ``delta``.

    (x - delta)+ <= max(luka(y, min(z + delta, 1)) - u, 0), broadcasting
    over array arguments.
    """
    zbar = np.minimum(np.asarray(z, dtype=float) + delta, 1.0)
    impl = np.minimum(1.0 - np.asarray(y, dtype=float) + zbar, 1.0)
    return np.maximum(np.asarray(x, dtype=float) - delta, 0.0) <= np.maximum(impl - u, 0.0)


def scan_product_slack(u: float, x: float, y: float, z: float, step: float = 1e-4) -> float:
    """First grid shift satisfying the product row inequality (brute force)."""
    shifts = _grid_axis(step)
    feasible = product_inequality(u, x, y, z, shifts)
    return float(shifts[int(np.argmax(feasible))])


def scan_lukasiewicz_slack(u: float, x: float, y: float, z: float, step: float = 1e-4) -> float:
    """First grid shift satisfying the Lukasiewicz row inequality (brute force)."""
    shifts = _grid_axis(step)
    feasible = lukasiewicz_inequality(u, x, y, z, shifts)
    return float(shifts[int(np.argmax(feasible))])


def random_instance(n: int, m: int, kind: TNorm, seed: int, mode: str = "arbitrary") -> System:
    """Seed-deterministic random system (PCG64 behind ``numpy.random.default_rng``).

    ``consistent`` draws a matrix and a solution and composes them into the
    rhs; ``arbitrary`` draws the rhs independently of the matrix.
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    rng = np.random.default_rng(seed)
    matrix = rng.random((n, m))
    if mode == "consistent":
        rhs = max_t_compose(kind, matrix, rng.random(m))
    elif mode == "arbitrary":
        rhs = rng.random(n)
    else:
        raise ValueError(f"unknown mode {mode!r}; expected 'arbitrary' or 'consistent'")
    return System(matrix, rhs, kind)
