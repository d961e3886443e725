from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from app.core.config import settings
from app.core.errors import InvalidRangeError, NotReachedError
from app.schemas import Family, Metric, MinimalDegreeRecord
from app.services.benchmarks.functions import BENCHMARKS, get_benchmark
from app.services.benchmarks.metrics import error_report, make_grid
from app.services.benchmarks.reference import EPSILONS, reference_degree
from app.services.interpolation.methods import build_interpolant, family_methods
from app.workers import progress
from app.workers.sweeps import parallel_map

Cell = Tuple[int, Metric, float, Family]

NOT_REACHED = "NR"


def family_best_errors(function_id: int, family: Family, n: int, grid: np.ndarray, exact=None) -> Dict[Metric, float]:
    """Smaller of the two kinds' errors, per metric."""
    f = get_benchmark(function_id)
    exact = f(grid) if exact is None else exact
    reports = [error_report(exact, build_interpolant(m, f, n)(grid), grid) for m in family_methods(family)]
    return {
        Metric.MAX: min(r.max_error for r in reports),
        Metric.CUMULATIVE: min(r.cumulative_error for r in reports),
    }


def _check_search(epsilons: Sequence[float], n_max: int) -> None:
    if not epsilons or any(e <= 0 for e in epsilons):
        raise InvalidRangeError("epsilon values must be positive")
    if n_max < 2:
        raise InvalidRangeError(f"n_max must be >= 2, got {n_max}")


def scan_family(
    function_id: int,
    family: Family,
    targets: Sequence[Tuple[Metric, float]],
    n_max: int,
    grid: np.ndarray,
) -> Tuple[Dict[Tuple[Metric, float], int], Dict[Metric, float]]:
    """Scan n = 1, 2, ... once; first n whose family-best error drops below each (metric, eps).

    Returns the degrees found and the best error seen per metric.
    """
    exact = get_benchmark(function_id)(grid)
    pending = list(targets)
    found: Dict[Tuple[Metric, float], int] = {}
    best = {Metric.MAX: np.inf, Metric.CUMULATIVE: np.inf}

    for n in range(1, n_max + 1):
        errors = family_best_errors(function_id, family, n, grid, exact)
        for metric, value in errors.items():
            best[metric] = min(best[metric], value)
        for target in list(pending):
            metric, eps = target
            if errors[metric] < eps:
                found[target] = n
                pending.remove(target)
        if not pending:
            break
    return found, best


def minimal_degree(
    function_id: int,
    family: Family,
    metric: Metric,
    epsilon: float,
    n_max: Optional[int] = None,
    grid_points: Optional[int] = None,
) -> MinimalDegreeRecord:
    family, metric = Family(family), Metric(metric)
    n_max = settings.MIN_DEGREE_N_MAX if n_max is None else n_max
    _check_search([epsilon], n_max)
    grid = make_grid(grid_points or settings.SWI_GRID_POINTS)

    progress("MINDEG", f"f_{function_id} {family.value} {metric.value} eps={epsilon:g} n_max={n_max}")
    found, best = scan_family(function_id, family, [(metric, epsilon)], n_max, grid)
    degree = found.get((metric, epsilon))
    if degree is None:
        raise NotReachedError(
            f"f_{function_id} {family.value} {metric.value} error never fell below {epsilon:g} "
            f"for n <= {n_max}; best {best[metric]:.3e}",
            best_error=best[metric],
            n_max=n_max,
        )
    progress("MINDEG", f"f_{function_id} {family.value} {metric.value} eps={epsilon:g} -> n={degree}")
    return MinimalDegreeRecord(
        function_id=function_id, metric=metric, epsilon=epsilon, family=family, degree=degree
    )


def table2(
    function_ids: Sequence[int] = tuple(BENCHMARKS),
    epsilons: Sequence[float] = EPSILONS,
    n_max: Optional[int] = None,
    grid_points: Optional[int] = None,
) -> Dict[Cell, Optional[int]]:
    """Every (function, metric, eps, family) cell; None marks a cell not reached within n_max.

    Each (function, family) is scanned once for all of its cells.
    """
    n_max = settings.MIN_DEGREE_N_MAX if n_max is None else n_max
    _check_search(epsilons, n_max)
    for function_id in function_ids:
        get_benchmark(function_id)
    grid = make_grid(grid_points or settings.SWI_GRID_POINTS)
    targets = [(metric, float(eps)) for metric in Metric for eps in epsilons]

    def scan(task):
        function_id, family = task
        found, _ = scan_family(function_id, family, targets, n_max, grid)
        progress("TABLE2", f"f_{function_id} {family.value} cells={len(found)}/{len(targets)}")
        return task, found

    progress("TABLE2", f"functions={list(function_ids)} eps={list(epsilons)} n_max={n_max} grid={grid.size}")
    results = dict(parallel_map(scan, [(fid, fam) for fid in function_ids for fam in Family]))

    cells: Dict[Cell, Optional[int]] = {}
    for function_id in function_ids:
        for metric, eps in targets:
            for family in Family:
                cells[(function_id, metric, eps, family)] = results[(function_id, family)].get((metric, eps))
    return cells


def cell_column(metric: Metric, epsilon: float, family: Family) -> str:
    return f"{metric.value}_{epsilon:g}_{family.value}"


def table2_rows(cells: Dict[Cell, Optional[int]], reference: bool = False) -> Tuple[List[str], List[list]]:
    """Table layout: one row per function, one column per (metric, eps, family) cell."""
    function_ids = sorted({key[0] for key in cells})
    columns = sorted(
        {key[1:] for key in cells},
        key=lambda c: (list(Metric).index(c[0]), -c[1], list(Family).index(c[2])),
    )

    header = ["function_id"]
    for column in columns:
        header.append(cell_column(*column))
        if reference:
            header.append(cell_column(*column) + "_ref")

    rows = []
    for function_id in function_ids:
        row: list = [function_id]
        for column in columns:
            degree = cells[(function_id, *column)]
            row.append(NOT_REACHED if degree is None else degree)
            if reference:
                row.append(reference_degree(function_id, *column))
        rows.append(row)
    return header, rows


def table2_records(cells: Dict[Cell, Optional[int]]) -> List[MinimalDegreeRecord]:
    return [
        MinimalDegreeRecord(function_id=f, metric=m, epsilon=e, family=fam, degree=d)
        for (f, m, e, fam), d in cells.items()
        if d is not None
    ]
