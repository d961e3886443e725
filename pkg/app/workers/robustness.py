from typing import Callable, Optional

import numpy as np

from app.core.config import settings
from app.core.errors import InvalidDegreeError
from app.schemas import RobustnessRecord
from app.services.benchmarks.functions import get_benchmark
from app.services.benchmarks.metrics import make_grid, round_samples
from app.services.interpolation.methods import sample
from app.services.interpolation.nodes import NodeFamily, SampleSet
from app.services.interpolation.swi import swi_build, swi_lebesgue_constant
from app.workers import progress


def robustness_of(
    f: Callable,
    kind: int,
    n: int,
    digits: int,
    grid: np.ndarray,
    function_id: int = 0,
) -> RobustnessRecord:
    """Compare SWI built from exact samples with SWI built from samples rounded to `digits`."""
    if digits < 1:
        raise InvalidDegreeError(f"digits must be >= 1, got {digits}")
    exact = sample(f, NodeFamily.EQUIDISTANT, n)
    rounded = SampleSet(nodes=exact.nodes, values=round_samples(exact.values, digits))

    q = swi_build(kind, exact)(grid)
    q_rounded = swi_build(kind, rounded)(grid)
    return RobustnessRecord(
        function_id=function_id,
        kind=kind,
        n=n,
        digits=digits,
        max_deviation=float(np.max(np.abs(q - q_rounded))),
        max_data_perturbation=float(np.max(np.abs(exact.values - rounded.values))),
        lebesgue_constant=swi_lebesgue_constant(kind, n, grid),
    )


def robustness_run(
    function_id: int, kind: int, n: int, digits: int, grid_points: Optional[int] = None
) -> RobustnessRecord:
    f = get_benchmark(function_id)
    grid = make_grid(grid_points or settings.SWI_GRID_POINTS)
    record = robustness_of(f, kind, n, digits, grid, function_id=function_id)
    progress(
        "ROBUST",
        f"f_{function_id} kind={kind} n={n} digits={digits} "
        f"deviation={record.max_deviation:.3e} bound={record.max_data_perturbation * record.lebesgue_constant:.3e}",
    )
    return record
