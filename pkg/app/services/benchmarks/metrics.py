"""Error metrics on a dense equispaced grid, and decimal rounding of sample data.

max_error        sup |f - phi| over the grid
cumulative_error composite trapezoid of |f - phi| over [-1, 1]
partition        the same integral split into |x| >= 0.5 (endpoint) and |x| <= 0.5 (central)
"""
from decimal import ROUND_HALF_UP, Decimal
from typing import Optional, Tuple

import numpy as np
from pydantic import BaseModel

from app.core.errors import InvalidRangeError


class ErrorReport(BaseModel):
    max_error: float
    cumulative_error: float
    endpoint_part: Optional[float] = None
    central_part: Optional[float] = None
    grid_size: int


def make_grid(points: int) -> np.ndarray:
    """Symmetric equispaced grid on [-1, 1]: -1 + 2i/(m-1), right half mirrored from the left."""
    if points < 3 or points % 2 == 0:
        raise InvalidRangeError(f"grid needs an odd number of points >= 3, got {points}")
    half = (points - 1) // 2
    left = -1.0 + 2.0 * np.arange(half) / (points - 1)
    return np.concatenate([left, [0.0], -left[::-1]])


def _check_grid(grid) -> np.ndarray:
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size < 2:
        raise InvalidRangeError("evaluation grid needs at least 2 points")
    return grid


def _values(fn, grid: np.ndarray) -> np.ndarray:
    if callable(fn):
        return np.broadcast_to(np.asarray(fn(grid), dtype=float), grid.shape)
    return np.asarray(fn, dtype=float)


def _abs_error(f, phi, grid) -> np.ndarray:
    return np.abs(_values(f, grid) - _values(phi, grid))


def max_error(f, phi, grid) -> float:
    """f and phi are callables on arrays, or their values already sampled on the grid."""
    grid = _check_grid(grid)
    return float(np.max(_abs_error(f, phi, grid)))


def cumulative_error(f, phi, grid) -> float:
    grid = _check_grid(grid)
    return float(np.trapezoid(_abs_error(f, phi, grid), grid))


def _split_indices(grid: np.ndarray) -> Tuple[int, int]:
    left = np.flatnonzero(grid == -0.5)
    right = np.flatnonzero(grid == 0.5)
    if left.size == 0 or right.size == 0:
        raise InvalidRangeError(
            f"partitioned error needs ±0.5 on the grid; use (points - 1) divisible by 4, got {grid.size}"
        )
    return int(left[0]), int(right[0])


def _partition(err: np.ndarray, grid: np.ndarray) -> Tuple[float, float]:
    i, j = _split_indices(grid)
    endpoint = np.trapezoid(err[: i + 1], grid[: i + 1]) + np.trapezoid(err[j:], grid[j:])
    central = np.trapezoid(err[i : j + 1], grid[i : j + 1])
    return float(endpoint), float(central)


def partitioned_cumulative_error(f, phi, grid) -> Tuple[float, float]:
    """(endpoint_part, central_part) over [-1,-0.5] ∪ [0.5,1] and [-0.5,0.5]."""
    grid = _check_grid(grid)
    return _partition(_abs_error(f, phi, grid), grid)


def error_report(f, phi, grid, partition: bool = False) -> ErrorReport:
    grid = _check_grid(grid)
    err = _abs_error(f, phi, grid)
    endpoint = central = None
    if partition:
        endpoint, central = _partition(err, grid)
    return ErrorReport(
        max_error=float(np.max(err)),
        cumulative_error=float(np.trapezoid(err, grid)),
        endpoint_part=endpoint,
        central_part=central,
        grid_size=grid.size,
    )


def round_to_significant(y: float, digits: int) -> float:
    """Decimal rounding to `digits` significant digits, ties away from zero."""
    if digits < 1:
        raise ValueError(f"digits must be >= 1, got {digits}")
    y = float(y)
    if y == 0.0 or not np.isfinite(y):
        return y
    d = Decimal(repr(y))
    quantum = Decimal(1).scaleb(d.adjusted() - digits + 1)
    return float(d.quantize(quantum, rounding=ROUND_HALF_UP))


def round_samples(values, digits: int) -> np.ndarray:
    return np.array([round_to_significant(v, digits) for v in np.asarray(values, dtype=float)])
