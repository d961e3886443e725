"""The ten benchmark functions on [-1, 1]."""
from typing import Callable, Dict

import numpy as np
from pydantic import BaseModel, ConfigDict

from app.core.errors import DomainError, InvalidBenchmarkError


class BenchmarkFunction(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: int
    description: str
    evaluator: Callable[[np.ndarray], np.ndarray]

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        if np.any(np.isnan(x)) or np.any(np.abs(x) > 1.0):
            raise DomainError(f"f_{self.id} is defined on [-1, 1]")
        y = self.evaluator(x)
        return y if np.ndim(y) else float(y)


def _bumps(center: float):
    """Rational bump at -center plus reciprocal-square-root bump at +center."""
    def f(x):
        return 1.0 / (1.0 + 1000.0 * (x + center) ** 2) + 1.0 / np.sqrt(1.0 + 1000.0 * (x - center) ** 2)
    return f


def _runge(x):
    return 1.0 / (1.0 + 25.0 * x**2)


def _tanh(x):
    return np.tanh(10.0 * x)


def _asymmetric_hump(x):
    return np.abs(x) + 0.5 * x - x**2


def _gaussian_oscillation(x):
    return np.exp(-5.0 * x**2) * np.sin(20.0 * x)


def _high_frequency(x):
    return np.sin(50.0 * x) / (1.0 + 25.0 * x**2)


def _rational_oscillation(x):
    return np.sin(30.0 * x) / (1.0 + 10.0 * x**2) * np.sin(10.0 / (1.0 + 5.0 * x**2))


def _cosine_power(x):
    return np.cos(4.0 * np.pi * x) ** 19


BENCHMARKS: Dict[int, BenchmarkFunction] = {
    b.id: b
    for b in (
        BenchmarkFunction(id=1, description="The standard Runge function", evaluator=_runge),
        BenchmarkFunction(id=2, description="Hyperbolic tangent function", evaluator=_tanh),
        BenchmarkFunction(id=3, description="Bimodal function", evaluator=_bumps(0.5)),
        BenchmarkFunction(id=4, description="Asymmetric hump", evaluator=_asymmetric_hump),
        BenchmarkFunction(id=5, description="Gaussian-modulated oscillation", evaluator=_gaussian_oscillation),
        BenchmarkFunction(id=6, description="High-frequency oscillation", evaluator=_high_frequency),
        BenchmarkFunction(id=7, description="Rational oscillation", evaluator=_rational_oscillation),
        BenchmarkFunction(id=8, description="Higher-order polynomial of cosine", evaluator=_cosine_power),
        BenchmarkFunction(id=9, description="A contracting variant of f_3", evaluator=_bumps(0.2)),
        BenchmarkFunction(id=10, description="A dilating variant of f_3", evaluator=_bumps(0.8)),
    )
}


def get_benchmark(function_id: int) -> BenchmarkFunction:
    try:
        return BENCHMARKS[int(function_id)]
    except (KeyError, TypeError, ValueError):
        raise InvalidBenchmarkError(
            f"unknown benchmark function id {function_id!r}; expected 1..{len(BENCHMARKS)}"
        ) from None


def benchmark(function_id: int, x):
    return get_benchmark(function_id)(x)
