import numpy as np
import pytest
from numpy.testing import assert_allclose

from app.core.errors import DomainError, InvalidBenchmarkError, InvalidRangeError
from app.schemas import Family, Method, Metric
from app.services.benchmarks.functions import BENCHMARKS, benchmark, get_benchmark
from app.services.benchmarks.metrics import (
    cumulative_error,
    error_report,
    make_grid,
    max_error,
    partitioned_cumulative_error,
    round_samples,
    round_to_significant,
)
from app.services.benchmarks.reference import (
    EPSILONS,
    REFERENCE_MIN_DEGREES,
    REVERSED_CELLS,
    reference_degree,
)
from app.services.interpolation.methods import build_interpolant


def test_grid_is_symmetric_with_exact_landmarks(grid):
    assert grid.size == 2001
    assert grid[0] == -1.0 and grid[-1] == 1.0
    assert grid[1000] == 0.0
    assert grid[500] == -0.5 and grid[1500] == 0.5
    assert np.array_equal(grid, -grid[::-1])
    assert np.all(np.diff(grid) > 0)


@pytest.mark.parametrize("points", [1, 2, 10, 10000])
def test_grid_needs_odd_size(points):
    with pytest.raises(InvalidRangeError):
        make_grid(points)


def test_errors_of_a_constant_offset(grid):
    f = get_benchmark(2)
    shifted = lambda x: f(x) + 0.25
    assert max_error(f, shifted, grid) == pytest.approx(0.25)
    assert cumulative_error(f, shifted, grid) == pytest.approx(0.5)
    endpoint, central = partitioned_cumulative_error(f, shifted, grid)
    assert endpoint == pytest.approx(0.25)
    assert central == pytest.approx(0.25)


def test_error_of_exact_interpolant_is_zero(grid):
    f = get_benchmark(5)
    report = error_report(f, f, grid, partition=True)
    assert report.max_error == 0.0
    assert report.cumulative_error == 0.0
    assert report.endpoint_part == 0.0 and report.central_part == 0.0


def test_partition_adds_up(grid):
    f = get_benchmark(9)
    phi = lambda x: np.zeros_like(x)
    report = error_report(f, phi, grid, partition=True)
    assert report.endpoint_part + report.central_part == pytest.approx(report.cumulative_error, rel=1e-12)
    assert report.grid_size == grid.size


def test_metrics_accept_sampled_values(grid):
    f = get_benchmark(1)
    assert max_error(f(grid), np.zeros_like(grid), grid) == pytest.approx(1.0)


@pytest.mark.parametrize(
    "fid,method,n",
    [(1, Method.SWI1, 20), (3, Method.CI1, 60), (5, Method.CI2, 40), (9, Method.SWI2, 80)],
)
def test_cumulative_error_is_stable_under_grid_refinement(fid, method, n):
    f = get_benchmark(fid)
    phi = build_interpolant(method, f, n)
    coarse = cumulative_error(f, phi, make_grid(2001))
    fine = cumulative_error(f, phi, make_grid(4001))
    assert abs(fine - coarse) < 0.01 * fine


@pytest.mark.parametrize("fid", [1, 8])
@pytest.mark.parametrize("method", [Method.CI1, Method.CI2, Method.SWI1, Method.SWI2, Method.AVG_SWI])
@pytest.mark.parametrize("n", [9, 24])
def test_max_error_of_even_benchmarks_is_mirror_invariant(grid, fid, method, n):
    f = get_benchmark(fid)
    phi = build_interpolant(method, f, n)
    mirrored = lambda x: phi(-x)
    direct = max_error(f, phi, grid)
    assert max_error(lambda x: f(-x), mirrored, grid) == pytest.approx(direct, rel=1e-12)
    assert max_error(f, mirrored, grid) == pytest.approx(direct, rel=1e-12)


def test_partition_needs_half_points_on_grid():
    grid = make_grid(7)
    with pytest.raises(InvalidRangeError):
        partitioned_cumulative_error(np.zeros(7), np.ones(7), grid)


@pytest.mark.parametrize(
    "y,digits,expected",
    [
        (1 / 26, 2, 0.038),
        (0.125, 2, 0.13),
        (-0.125, 2, -0.13),
        (0.955, 2, 0.96),
        (1234.5, 2, 1200.0),
        (0.0, 3, 0.0),
        (0.95, 2, 0.95),
        (np.pi, 16, 3.141592653589793),
    ],
)
def test_round_to_significant(y, digits, expected):
    assert round_to_significant(y, digits) == expected


def test_round_samples_is_elementwise():
    assert round_samples([0.123456, -98765.0], 3).tolist() == [0.123, -98800.0]


def test_round_to_zero_digits():
    with pytest.raises(ValueError):
        round_to_significant(1.0, 0)


def test_benchmark_values():
    assert benchmark(1, 0.0) == 1.0
    assert benchmark(1, 1.0) == pytest.approx(1 / 26)
    assert benchmark(4, 0.5) == pytest.approx(0.5)
    assert benchmark(4, -0.5) == pytest.approx(0.0)
    assert benchmark(8, 0.0) == 1.0
    assert benchmark(3, 0.5) == pytest.approx(1.0 + 1 / 1001)
    assert benchmark(9, -0.2) == pytest.approx(1.0 + 1 / np.sqrt(161))
    assert benchmark(2, 0.3) == pytest.approx(-benchmark(2, -0.3))


def test_benchmarks_are_vectorized(grid):
    for f in BENCHMARKS.values():
        values = f(grid)
        assert values.shape == grid.shape
        assert np.all(np.isfinite(values))


def test_unknown_benchmark():
    with pytest.raises(InvalidBenchmarkError):
        get_benchmark(11)
    with pytest.raises(InvalidBenchmarkError):
        get_benchmark("runge")


def test_benchmarks_live_on_the_unit_interval():
    with pytest.raises(DomainError):
        benchmark(1, 1.5)


def test_reference_table_layout():
    assert len(REFERENCE_MIN_DEGREES) == 120
    assert reference_degree(1, Metric.MAX, 0.1, Family.CI) == 12
    assert reference_degree(1, "max", 0.1, "SWI") == 8
    assert reference_degree(4, Metric.MAX, 0.001, Family.CI) == 596
    assert reference_degree(2, Metric.CUMULATIVE, 0.01, Family.CI) == 28
    assert reference_degree(8, Metric.MAX, 0.01, Family.SWI) == 88


def test_reference_degrees_grow_as_epsilon_shrinks():
    for (fid, metric, eps, family), degree in REFERENCE_MIN_DEGREES.items():
        tighter = [e for e in EPSILONS if e < eps]
        for e in tighter:
            assert REFERENCE_MIN_DEGREES[(fid, metric, e, family)] >= degree


def test_reversed_cells():
    assert (6, Metric.MAX, 0.001, Family.SWI) in REVERSED_CELLS
    assert (7, Metric.MAX, 0.001, Family.SWI) in REVERSED_CELLS
    assert (10, Metric.CUMULATIVE, 0.1, Family.SWI) in REVERSED_CELLS
    assert not {key for key in REVERSED_CELLS if key[0] in (1, 2, 3, 5, 8, 9)}
