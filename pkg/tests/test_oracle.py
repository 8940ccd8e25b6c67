import numpy as np
import pytest

from frel import (
    InstanceTooLargeError,
    OracleConfig,
    System,
    TNorm,
    check_consistency,
    delta_by_bisection,
    delta_by_grid,
    distance,
    lukasiewicz_slack,
    product_slack,
    random_instance,
    row_deltas_by_bisection,
    shift_feasible,
)
from frel.oracle import scan_lukasiewicz_slack, scan_product_slack
from helpers import classic_system, consistent_system


def test_config_validation():
    with pytest.raises(ValueError):
        OracleConfig(bisection_tolerance=0.0)
    with pytest.raises(ValueError):
        OracleConfig(max_iterations=0)


def test_bisection_matches_closed_form_on_benchmark():
    for kind, expected in ((TNorm.PRODUCT, 0.42), (TNorm.LUKASIEWICZ, 0.45)):
        system = classic_system(kind)
        got = delta_by_bisection(system)
        assert got == pytest.approx(expected, abs=5e-3)
        assert abs(got - distance(system)) <= 1e-9


def test_bisection_zero_on_consistent_instances():
    assert delta_by_bisection(consistent_system(TNorm.PRODUCT)) <= 1e-9
    inst = random_instance(4, 4, TNorm.LUKASIEWICZ, seed=7, mode="consistent")
    assert delta_by_bisection(inst) <= 1e-9


def test_shift_feasibility_is_monotone():
    rng = np.random.default_rng(3)
    for kind in TNorm:
        for _ in range(20):
            n, m = (int(v) for v in rng.integers(1, 6, size=2))
            inst = random_instance(n, m, kind, seed=int(rng.integers(1_000_000)))
            low, high = sorted(rng.random(2))
            if shift_feasible(inst, low):
                assert shift_feasible(inst, high)
    assert shift_feasible(classic_system(TNorm.PRODUCT), 1.0)


def test_row_shifts_max_equals_global_bisection():
    for kind in TNorm:
        system = classic_system(kind)
        rows = row_deltas_by_bisection(system)
        assert float(rows.max()) == pytest.approx(delta_by_bisection(system), abs=1e-9)


def test_grid_on_one_by_one_instances():
    # max attainable rhs is 0.5, so the best repair sits at distance 0.3
    capped = System(np.array([[0.5]]), np.array([0.8]), TNorm.PRODUCT)
    assert delta_by_grid(capped) == pytest.approx(0.3, abs=1e-9)
    for kind in TNorm:
        perfect = System(np.array([[1.0]]), np.array([0.8]), kind)
        assert delta_by_grid(perfect) <= 1e-12


def test_grid_finds_on_grid_consistent_rhs():
    assert delta_by_grid(consistent_system(TNorm.PRODUCT)) <= 1e-9


def test_grid_guards():
    with pytest.raises(InstanceTooLargeError):
        delta_by_grid(random_instance(4, 2, TNorm.PRODUCT, seed=1))
    with pytest.raises(InstanceTooLargeError):
        delta_by_grid(random_instance(2, 2, TNorm.PRODUCT, seed=1), OracleConfig(grid_step=1e-3))


def test_grid_brackets_bisection_quick():
    kinds = list(TNorm)
    for idx in range(12):
        n = 2 if idx < 6 else 3
        inst = random_instance(n, n, kinds[idx % 3], seed=4000 + idx, mode="arbitrary")
        grid = delta_by_grid(inst)
        bisect = delta_by_bisection(inst)
        assert bisect - 1e-9 <= grid <= bisect + n * 0.01, (idx, grid, bisect)


def test_random_instance_is_deterministic():
    first = random_instance(3, 3, TNorm.PRODUCT, seed=42, mode="arbitrary")
    second = random_instance(3, 3, TNorm.PRODUCT, seed=42, mode="arbitrary")
    assert np.array_equal(first.matrix, second.matrix)
    assert np.array_equal(first.rhs, second.rhs)
    other_seed = random_instance(3, 3, TNorm.PRODUCT, seed=43, mode="arbitrary")
    assert not np.array_equal(first.rhs, other_seed.rhs)


def test_random_instance_consistent_mode():
    inst = random_instance(3, 3, TNorm.PRODUCT, seed=42, mode="consistent")
    assert check_consistency(inst, tol=1e-12).consistent


def test_random_instance_rejects_bad_arguments():
    with pytest.raises(ValueError):
        random_instance(0, 3, TNorm.PRODUCT, seed=0)
    with pytest.raises(ValueError):
        random_instance(3, 3, TNorm.PRODUCT, seed=0, mode="bogus")


def test_scans_reproduce_closed_forms_in_bulk():
    rng = np.random.default_rng(2024)
    step = 1e-3  # coarser than default to keep the unit suite fast
    for _ in range(400):
        u, x, y, z = rng.random(4)
        assert abs(scan_product_slack(u, x, y, z, step) - product_slack(u, x, y, z)) <= step + 1e-12
        assert (
            abs(scan_lukasiewicz_slack(u, x, y, z, step) - lukasiewicz_slack(u, x, y, z))
            <= step + 1e-12
        )
