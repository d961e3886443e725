"""Reference minimal degrees for the ten benchmarks.

Keyed by (function_id, metric, epsilon, family). Each row lists, for the
maximal error then the cumulative error at eps = 0.1, 0.01, 0.001, the CI and
SWI degrees.
"""
from typing import Dict, Tuple

from app.schemas import Family, Metric

EPSILONS = (0.1, 0.01, 0.001)

# function_id: (max CI/SWI x3 eps, cumulative CI/SWI x3 eps)
_ROWS = {
    1: (12, 8, 24, 16, 34, 24, 9, 6, 21, 14, 33, 22),
    2: (17, 11, 31, 21, 45, 29, 12, 8, 28, 18, 42, 27),
    3: (66, 48, 129, 96, 192, 140, 20, 18, 80, 58, 140, 106),
    4: (6, 4, 60, 40, 596, 380, 5, 4, 15, 13, 49, 39),
    5: (25, 15, 29, 17, 33, 19, 25, 15, 29, 17, 33, 19),
    6: (59, 37, 69, 45, 81, 195, 56, 36, 68, 44, 80, 53),
    7: (45, 31, 59, 37, 65, 122, 45, 29, 54, 37, 65, 43),
    8: (98, 56, 140, 88, 182, 120, 83, 56, 131, 88, 165, 120),
    9: (78, 50, 147, 95, 218, 140, 22, 14, 93, 61, 157, 104),
    10: (44, 50, 89, 99, 133, 148, 13, 14, 56, 63, 96, 105),
}


def _expand() -> Dict[Tuple[int, Metric, float, Family], int]:
    table = {}
    for function_id, row in _ROWS.items():
        cells = iter(row)
        for metric in (Metric.MAX, Metric.CUMULATIVE):
            for eps in EPSILONS:
                table[(function_id, metric, eps, Family.CI)] = next(cells)
                table[(function_id, metric, eps, Family.SWI)] = next(cells)
    return table


REFERENCE_MIN_DEGREES = _expand()

# cells where CI needs fewer points than SWI
REVERSED_CELLS = {
    key
    for key in REFERENCE_MIN_DEGREES
    if key[3] is Family.SWI
    and REFERENCE_MIN_DEGREES[key] > REFERENCE_MIN_DEGREES[(key[0], key[1], key[2], Family.CI)]
}


def reference_degree(function_id: int, metric: Metric, epsilon: float, family: Family):
    return REFERENCE_MIN_DEGREES.get((function_id, Metric(metric), float(epsilon), Family(family)))
