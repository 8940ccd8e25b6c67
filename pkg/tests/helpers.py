"""Shared test data: benchmark instances and deterministic instance streams."""

import numpy as np

from frel import System, TNorm, random_instance

# Classic 4x4 inconsistent benchmark from the relational-equations literature.
CLASSIC_MATRIX = np.array([
    [1.0, 0.4, 0.5, 0.7],
    [0.7, 0.5, 0.3, 0.5],
    [0.2, 1.0, 1.0, 0.6],
    [0.4, 0.5, 0.5, 0.8],
])
CLASSIC_RHS = np.array([0.4, 1.0, 0.2, 0.0])

# 3x3 instance consistent under both the product and Lukasiewicz t-norms.
CONSISTENT_MATRIX = np.array([
    [0.31, 0.49, 0.76],
    [0.34, 0.90, 0.15],
    [0.94, 0.47, 0.05],
])
CONSISTENT_RHS = np.array([0.73, 0.84, 0.61])

# Right-hand side reproduced exactly by the consistency projection of
# CONSISTENT_MATRIX under both closed-form t-norms.
FIXED_POINT_RHS = np.array([0.74, 0.66, 0.62])

# Verbatim file bodies for CLI tests.
CLASSIC_MATRIX_TEXT = "1,0.4,0.5,0.7\n0.7,0.5,0.3,0.5\n0.2,1,1,0.6\n0.4,0.5,0.5,0.8\n"
CLASSIC_RHS_TEXT = "0.4\n1\n0.2\n0\n"

ACCEPTANCE_SHAPE_SEED = 20240811


def classic_system(kind: TNorm) -> System:
    return System(CLASSIC_MATRIX, CLASSIC_RHS, kind)


def consistent_system(kind: TNorm) -> System:
    return System(CONSISTENT_MATRIX, CONSISTENT_RHS, kind)


def acceptance_instances(kind: TNorm, count: int = 1000, mode: str = "arbitrary"):
    """Deterministic stream of random instances with n, m in [1, 6].

    The shape stream is identical for every kind, so different criteria can
    replay exactly the same instances.
    """
    shape_rng = np.random.default_rng(ACCEPTANCE_SHAPE_SEED)
    base = 10_000 * (1 + list(TNorm).index(kind)) + (0 if mode == "arbitrary" else 500_000)
    for i in range(count):
        n, m = (int(v) for v in shape_rng.integers(1, 7, size=2))
        yield random_instance(n, m, kind, seed=base + i, mode=mode)
