from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence

import numpy as np

from app.core.config import settings
from app.core.errors import InvalidRangeError
from app.schemas import Method, SweepRecord, TransformRecord
from app.services.benchmarks.functions import get_benchmark
from app.services.benchmarks.metrics import error_report, make_grid
from app.services.interpolation.methods import build_interpolant
from app.services.interpolation.nodes import map_rate
from app.services.interpolation.swi import g_transform
from app.workers import progress

DEFAULT_METHODS = (Method.CI1, Method.CI2, Method.SWI1, Method.SWI2)


def degree_range(n_from: int, n_to: int, step: int = 1) -> List[int]:
    if n_from < 1 or n_to < n_from or step < 1:
        raise InvalidRangeError(f"invalid n-range {n_from}..{n_to}:{step}")
    return list(range(n_from, n_to + 1, step))


def parallel_map(fn: Callable, items: Sequence) -> list:
    """Ordered map over items, on SWEEP_WORKERS threads when more than one."""
    if settings.SWEEP_WORKERS <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=settings.SWEEP_WORKERS) as pool:
        return list(pool.map(fn, items))


def run_sweep(
    function_id: int,
    methods: Sequence[Method] = DEFAULT_METHODS,
    n_from: int = 10,
    n_to: int = 40,
    step: int = 1,
    grid_points: Optional[int] = None,
    partition: bool = False,
) -> List[SweepRecord]:
    """Max and cumulative error of every (method, n); records ordered by method then n."""
    if not methods:
        raise InvalidRangeError("at least one method is required")
    methods = [Method(m) for m in methods]
    degrees = degree_range(n_from, n_to, step)
    f = get_benchmark(function_id)
    grid = make_grid(grid_points or settings.SWI_GRID_POINTS)
    exact = f(grid)

    tag = "PARTITION" if partition else "SWEEP"
    progress(tag, f"f_{function_id} methods={[m.value for m in methods]} n={n_from}..{n_to}:{step} grid={grid.size}")

    def measure(task):
        method, n = task
        report = error_report(exact, build_interpolant(method, f, n)(grid), grid, partition)
        return SweepRecord(
            function_id=function_id,
            method=method,
            n=n,
            max_error=report.max_error,
            cumulative_error=report.cumulative_error,
            endpoint_part=report.endpoint_part,
            central_part=report.central_part,
        )

    records = parallel_map(measure, [(m, n) for m in methods for n in degrees])
    progress(tag, f"f_{function_id} DONE records={len(records)}")
    return records


def transform_run(function_id: int, n: int, grid_points: Optional[int] = None) -> List[TransformRecord]:
    """(z, f(z), g1(z), g2(z)) on the z-grid; g1 is left empty where tau_1 leaves [-1, 1]."""
    f = get_benchmark(function_id)
    z = make_grid(grid_points or settings.SWI_GRID_POINTS)
    g2 = g_transform(2, n, f, z)

    g1 = np.full(z.shape, np.nan)
    inside = np.abs(z) <= np.sin(map_rate(1, n))
    g1[inside] = g_transform(1, n, f, z[inside])

    progress("TRANSFORM", f"f_{function_id} n={n} grid={z.size}")
    return [
        TransformRecord(
            z=float(zi), f=float(fi), g1=None if np.isnan(a) else float(a), g2=float(b)
        )
        for zi, fi, a, b in zip(z, f(z), g1, g2)
    ]
